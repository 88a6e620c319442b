#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stirlab/bigint.hpp"

namespace stirlab {

// Pascal triangle grown row by row on demand. Rows can be truncated at a
// fixed column count: the block-size-bounded recurrences only ever read
// C(n-1, i-1) for i up to the size bound, so capping the width keeps the
// cache linear in n instead of quadratic.
class pascal_cache {
  public:
    explicit pascal_cache(std::size_t max_cols = static_cast<std::size_t>(-1))
        : max_cols_(max_cols == 0 ? 1 : max_cols) {
        rows_.push_back({Int(1)});
    }

    // C(n, k); zero for k > n. k must fall inside the configured width.
    const Int& choose(std::size_t n, std::size_t k) {
        if (k > n) return zero_;
        if (k >= max_cols_)
            throw std::invalid_argument("pascal_cache: column beyond configured width");
        grow_to(n);
        const auto& row = rows_[n];
        if (k >= row.size()) return zero_;
        return row[k];
    }

  private:
    void grow_to(std::size_t n) {
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::size_t m = rows_.size();
            std::size_t width = std::min(m + 1, max_cols_);
            std::vector<Int> row(width);
            row[0] = 1;
            for (std::size_t k = 1; k < width; ++k) {
                row[k] = prev[k - 1];
                if (k < prev.size()) row[k] += prev[k];
            }
            rows_.push_back(std::move(row));
        }
    }

    std::vector<std::vector<Int>> rows_;
    std::size_t max_cols_;
    inline static const Int zero_{};
};

class factorial_cache {
  public:
    factorial_cache() { values_.push_back(Int(1)); }

    const Int& at(std::size_t n) {
        while (values_.size() <= n) {
            values_.push_back(values_.back() * Int(values_.size()));
        }
        return values_[n];
    }

  private:
    std::vector<Int> values_;
};

// n * (n-1) * ... * (n-k+1); equals 1 for k == 0 and 0 for k > n.
inline Int falling_factorial(std::size_t n, std::size_t k) {
    if (k > n) return Int(0);
    Int out = 1;
    for (std::size_t i = 0; i < k; ++i) out *= Int(n - i);
    return out;
}

}  // namespace stirlab
