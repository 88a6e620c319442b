#pragma once

// Brute-force ground truth. Everything here enumerates actual combinatorial
// objects (set partitions as restricted growth strings, permutations via
// std::next_permutation) and tallies them by block or cycle count. It is
// deliberately slow and deliberately independent of the triangle recurrences
// so the two can be compared cell by cell on small inputs.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/binomial.hpp"
#include "stirlab/errors.hpp"

namespace stirlab::oracle {

// Hard guards on the enumeration size. 12 elements means 4 213 597 set
// partitions, 9 elements means 362 880 permutations; both finish in well
// under a second. Anything above is refused rather than attempted.
inline constexpr std::size_t max_partition_elements = 12;
inline constexpr std::size_t max_permutation_elements = 9;

struct partition_constraint {
    std::size_t min_block = 1;                 // every block at least this large
    std::optional<std::size_t> max_block{};    // every block at most this large
    std::size_t distinguished = 0;             // elements 1..distinguished pairwise separated
    bool ordered = false;                      // count block orderings (multiplies by k!)
};

struct cycle_constraint {
    std::optional<std::size_t> max_cycle{};    // every cycle at most this long
};

// Number of set partitions of {1..n} satisfying the constraint, tallied by
// block count. Entry [k] of the result counts partitions with exactly k
// blocks; the vector has n+1 entries.
inline std::vector<Int> count_partitions_by_blocks(std::size_t n,
                                                   const partition_constraint& c) {
    if (n > max_partition_elements)
        throw cap_error("oracle: refusing to enumerate partitions of more than " +
                        std::to_string(max_partition_elements) + " elements");
    if (c.min_block < 1)
        throw std::invalid_argument("oracle: minimum block size must be at least 1");
    if (c.max_block && *c.max_block < c.min_block)
        throw std::invalid_argument("oracle: maximum block size below minimum");
    if (c.distinguished > n)
        throw std::invalid_argument("oracle: more distinguished elements than elements");

    std::vector<Int> counts(n + 1);
    if (n == 0) {
        // The empty partition has zero blocks and satisfies every constraint.
        counts[0] = 1;
        return counts;
    }

    // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    // Each string is one canonical set partition, a[i] naming the block of
    // element i+1.
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> block_size(n, 0);
    factorial_cache factorials;

    auto admissible = [&](std::size_t blocks) {
        for (std::size_t b = 0; b < blocks; ++b) {
            if (block_size[b] < c.min_block) return false;
            if (c.max_block && block_size[b] > *c.max_block) return false;
        }
        for (std::size_t i = 0; i < c.distinguished; ++i)
            for (std::size_t j = i + 1; j < c.distinguished; ++j)
                if (a[i] == a[j]) return false;
        return true;
    };

    while (true) {
        std::size_t blocks = 0;
        std::fill(block_size.begin(), block_size.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            blocks = std::max(blocks, a[i] + 1);
            ++block_size[a[i]];
        }
        if (admissible(blocks)) {
            if (c.ordered)
                counts[blocks] += factorials.at(blocks);
            else
                counts[blocks] += 1;
        }

        // Advance to the next restricted growth string: find the rightmost
        // position that may still grow, bump it, reset everything after it.
        bool advanced = false;
        for (std::size_t i = n; i-- > 1;) {
            std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= prefix_max) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) return counts;
    }
}

// Number of permutations of {1..n} satisfying the constraint, tallied by
// cycle count. Entry [k] counts permutations with exactly k cycles.
inline std::vector<Int> count_permutations_by_cycles(std::size_t n,
                                                     const cycle_constraint& c) {
    if (n > max_permutation_elements)
        throw cap_error("oracle: refusing to enumerate permutations of more than " +
                        std::to_string(max_permutation_elements) + " elements");

    std::vector<Int> counts(n + 1);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> seen(n);

    do {
        std::fill(seen.begin(), seen.end(), false);
        std::size_t cycles = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            ++cycles;
            if (c.max_cycle && len > *c.max_cycle) ok = false;
        }
        if (ok) counts[cycles] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return counts;
}

}  // namespace stirlab::oracle
