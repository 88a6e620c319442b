#include <catch2/catch_amalgamated.hpp>

#include "stirlab/oracle.hpp"

using namespace stirlab;
using namespace stirlab::oracle;

namespace {

Int sum(const std::vector<Int>& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace

// The expected counts below are frozen ground truth: small enough to check
// by hand (or against the classic triangles), independent of the engines.

TEST_CASE("unconstrained partitions reproduce Stirling and Bell numbers") {
    partition_constraint plain;
    auto c4 = count_partitions_by_blocks(4, plain);
    REQUIRE(c4 == std::vector<Int>{0, 1, 7, 6, 1});
    REQUIRE(sum(c4) == 15);

    auto c5 = count_partitions_by_blocks(5, plain);
    REQUIRE(c5[2] == 15);
    REQUIRE(c5[3] == 25);
    REQUIRE(sum(c5) == 52);

    REQUIRE(count_partitions_by_blocks(0, plain) == std::vector<Int>{1});
    REQUIRE(count_partitions_by_blocks(1, plain) == std::vector<Int>{0, 1});
}

TEST_CASE("ordered partitions carry the k! weight") {
    partition_constraint ordered;
    ordered.ordered = true;
    auto f3 = count_partitions_by_blocks(3, ordered);
    REQUIRE(f3 == std::vector<Int>{0, 1, 6, 6});
    REQUIRE(sum(f3) == 13);

    partition_constraint plain;
    auto u5 = count_partitions_by_blocks(5, plain);
    ordered.ordered = true;
    auto o5 = count_partitions_by_blocks(5, ordered);
    Int fact = 1;
    for (std::size_t k = 0; k < o5.size(); ++k) {
        if (k > 0) fact *= k;
        REQUIRE(o5[k] == u5[k] * fact);
    }
}

TEST_CASE("maximum block size") {
    partition_constraint c;
    c.max_block = 2;
    auto v = count_partitions_by_blocks(4, c);
    REQUIRE(v == std::vector<Int>{0, 0, 3, 6, 1});
    REQUIRE(sum(v) == 10);

    c.max_block = 1;
    auto singles = count_partitions_by_blocks(5, c);
    REQUIRE(singles[5] == 1);
    REQUIRE(sum(singles) == 1);
}

TEST_CASE("minimum block size") {
    partition_constraint c;
    c.min_block = 2;
    auto v6 = count_partitions_by_blocks(6, c);
    REQUIRE(v6[2] == 25);
    REQUIRE(v6[3] == 15);
    REQUIRE(v6[1] == 1);

    c.ordered = true;
    auto f5 = count_partitions_by_blocks(5, c);
    REQUIRE(sum(f5) == 21);
}

TEST_CASE("distinguished elements stay separated") {
    partition_constraint c;
    c.distinguished = 2;
    auto v = count_partitions_by_blocks(4, c);
    REQUIRE(v[3] == 5);
    REQUIRE(v[4] == 1);
    REQUIRE(v[1] == 0);

    // With every element distinguished only the all-singletons partition is
    // left.
    c.distinguished = 4;
    auto w = count_partitions_by_blocks(4, c);
    REQUIRE(sum(w) == 1);
    REQUIRE(w[4] == 1);
}

TEST_CASE("permutations by cycle count") {
    cycle_constraint plain;
    auto c4 = count_permutations_by_cycles(4, plain);
    REQUIRE(c4 == std::vector<Int>{0, 6, 11, 6, 1});
    REQUIRE(sum(c4) == 24);

    cycle_constraint c;
    c.max_cycle = 3;
    REQUIRE(sum(count_permutations_by_cycles(6, c)) == 276);

    c.max_cycle = 1;
    auto idonly = count_permutations_by_cycles(3, c);
    REQUIRE(idonly == std::vector<Int>{0, 0, 0, 1});

    c.max_cycle = 3;
    REQUIRE(count_permutations_by_cycles(3, c)[1] == 2);

    REQUIRE(count_permutations_by_cycles(0, plain) == std::vector<Int>{1});
}

TEST_CASE("guards and argument validation") {
    partition_constraint plain;
    REQUIRE_THROWS_AS(count_partitions_by_blocks(13, plain), cap_error);
    REQUIRE_THROWS_AS(count_permutations_by_cycles(10, {}), cap_error);

    partition_constraint bad;
    bad.min_block = 0;
    REQUIRE_THROWS_AS(count_partitions_by_blocks(3, bad), std::invalid_argument);

    bad = {};
    bad.min_block = 3;
    bad.max_block = 2;
    REQUIRE_THROWS_AS(count_partitions_by_blocks(3, bad), std::invalid_argument);

    bad = {};
    bad.distinguished = 4;
    REQUIRE_THROWS_AS(count_partitions_by_blocks(3, bad), std::invalid_argument);
}
