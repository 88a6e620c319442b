#pragma once

// Exhaustive equivalence checks between the engines and the brute-force
// enumerator on guard-sized instances: every triangle variant cell against
// raw counts, and every sequence family against oracle row sums. Partition
// checks run up to the requested bound; permutation checks are clamped to
// the enumerator's own guard of 9 elements.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/errors.hpp"
#include "stirlab/oracle.hpp"
#include "stirlab/sequences.hpp"
#include "stirlab/triangle.hpp"

namespace stirlab {

struct audit_check {
    std::string name;
    std::size_t comparisons = 0;
    bool pass = true;
    std::string detail;  // first mismatch, empty while passing
};

inline bool all_pass(const std::vector<audit_check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {

inline void compare_cell(audit_check& check, const Int& engine, const Int& oracle,
                         std::size_t n, std::size_t k) {
    ++check.comparisons;
    if (check.pass && engine != oracle)
        check = {check.name, check.comparisons, false,
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": engine " +
                     to_decimal(engine) + ", oracle " + to_decimal(oracle)};
}

inline audit_check audit_triangle_rows(const triangle_kind& kind, std::size_t n_from,
                                       std::size_t n_max,
                                       const std::function<std::vector<Int>(std::size_t)>& counts) {
    audit_check check;
    check.name = kind.display();
    triangle tri(kind);
    for (std::size_t n = n_from; n <= n_max; ++n) {
        const std::vector<Int> expected = counts(n);
        for (std::size_t k = 0; k <= n; ++k)
            compare_cell(check, tri.value(n, k), expected[k], n, k);
    }
    return check;
}

inline void compare_sum(audit_check& check, const Int& engine,
                        const std::vector<Int>& counts, std::size_t n) {
    Int sum = 0;
    for (const Int& v : counts) sum += v;
    ++check.comparisons;
    if (check.pass && engine != sum)
        check = {check.name, check.comparisons, false,
                 "n=" + std::to_string(n) + ": engine " + to_decimal(engine) +
                     ", oracle row sum " + to_decimal(sum)};
}

}  // namespace detail

// Every triangle variant against raw enumeration counts, parameters up to
// max_param. n_max bounds the partition checks and must stay within the
// enumeration guard; permutation checks run to min(n_max, 9).
inline std::vector<audit_check> audit_triangles(std::size_t n_max,
                                                std::size_t max_param = 4) {
    if (n_max > oracle::max_partition_elements)
        throw cap_error("audit: n_max " + std::to_string(n_max) +
                        " exceeds the enumeration guard of " +
                        std::to_string(oracle::max_partition_elements));
    const std::size_t perm_max = std::min(n_max, oracle::max_permutation_elements);

    std::vector<audit_check> checks;

    checks.push_back(detail::audit_triangle_rows(
        triangle_kind::second(), 0, n_max, [](std::size_t n) {
            return oracle::count_partitions_by_blocks(n, {});
        }));

    for (std::size_t r = 1; r <= max_param; ++r)
        checks.push_back(detail::audit_triangle_rows(
            triangle_kind::second_r(r), r, n_max, [r](std::size_t n) {
                oracle::partition_constraint c;
                c.distinguished = r;
                return oracle::count_partitions_by_blocks(n, c);
            }));

    for (std::size_t m = 1; m <= max_param; ++m)
        checks.push_back(detail::audit_triangle_rows(
            triangle_kind::second_max(m), 0, n_max, [m](std::size_t n) {
                oracle::partition_constraint c;
                c.max_block = m;
                return oracle::count_partitions_by_blocks(n, c);
            }));

    for (std::size_t m = 1; m <= max_param; ++m)
        checks.push_back(detail::audit_triangle_rows(
            triangle_kind::second_min(m), 0, n_max, [m](std::size_t n) {
                oracle::partition_constraint c;
                c.min_block = m;
                return oracle::count_partitions_by_blocks(n, c);
            }));

    checks.push_back(detail::audit_triangle_rows(
        triangle_kind::first(), 0, perm_max, [](std::size_t n) {
            return oracle::count_permutations_by_cycles(n, {});
        }));

    for (std::size_t m = 1; m <= max_param; ++m)
        checks.push_back(detail::audit_triangle_rows(
            triangle_kind::first_max(m), 0, perm_max, [m](std::size_t n) {
                oracle::cycle_constraint c;
                c.max_cycle = m;
                return oracle::count_permutations_by_cycles(n, c);
            }));

    return checks;
}

// Every sequence family against oracle row sums, parameters up to max_param.
inline std::vector<audit_check> audit_sequences(std::size_t n_max,
                                                std::size_t max_param = 4) {
    if (n_max > oracle::max_partition_elements)
        throw cap_error("audit: n_max " + std::to_string(n_max) +
                        " exceeds the enumeration guard of " +
                        std::to_string(oracle::max_partition_elements));
    const std::size_t perm_max = std::min(n_max, oracle::max_permutation_elements);

    sequence_engine eng;
    std::vector<audit_check> checks;

    auto partition_family = [&](family_spec f, oracle::partition_constraint base,
                                std::size_t shift, std::size_t bound) {
        audit_check check;
        check.name = f.label();
        for (std::size_t n = 0; n + shift <= bound; ++n)
            detail::compare_sum(check, eng.value(f, n),
                                oracle::count_partitions_by_blocks(n + shift, base), n);
        checks.push_back(std::move(check));
    };

    oracle::partition_constraint plain;
    partition_family(family_spec::bell(), plain, 0, n_max);
    plain.ordered = true;
    partition_family(family_spec::fubini(), plain, 0, n_max);

    for (std::size_t r = 1; r <= max_param; ++r) {
        oracle::partition_constraint c;
        c.distinguished = r;
        partition_family(family_spec::r_bell(r), c, r, n_max);
        c.ordered = true;
        partition_family(family_spec::r_fubini(r), c, r, n_max);
    }

    for (std::size_t m = 1; m <= max_param; ++m) {
        oracle::partition_constraint c;
        c.max_block = m;
        partition_family(family_spec::restricted_bell(m), c, 0, n_max);
        c.ordered = true;
        partition_family(family_spec::restricted_fubini(m), c, 0, n_max);

        oracle::partition_constraint a;
        a.min_block = m;
        partition_family(family_spec::associated_bell(m), a, 0, n_max);
        a.ordered = true;
        partition_family(family_spec::associated_fubini(m), a, 0, n_max);

        audit_check check;
        check.name = family_spec::restricted_factorial(m).label();
        for (std::size_t n = 0; n <= perm_max; ++n) {
            oracle::cycle_constraint cc;
            cc.max_cycle = m;
            detail::compare_sum(check,
                                eng.value(family_spec::restricted_factorial(m), n),
                                oracle::count_permutations_by_cycles(n, cc), n);
        }
        checks.push_back(std::move(check));
    }

    return checks;
}

}  // namespace stirlab
