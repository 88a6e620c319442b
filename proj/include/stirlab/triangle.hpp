#pragma once

// Stirling-style triangles. One class covers the plain second and first
// kinds plus the three block-constrained variants:
//
//   r_distinct  second kind only; the first r elements lie in r distinct
//               blocks; indices are absolute (row n, column k count
//               partitions of n elements into k blocks)
//   max_size    blocks (or cycles, first kind) hold at most m elements
//   min_size    second kind only; blocks hold at least m elements
//
// Recurrences, all classic and all conditioning on the element with the
// largest label:
//
//   second plain      S(n,k) = k S(n-1,k) + S(n-1,k-1)
//   first  plain      c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
//   second r_distinct same as plain above the base row; row r is the unit
//                     vector at column r; rows below r are zero
//   second max_size   S(n,k) = sum_{i=1}^{min(m,n)} C(n-1,i-1) S(n-i,k-1)
//   first  max_size   c(n,k) = sum_{i=1}^{min(m,n)} C(n-1,i-1) (i-1)! c(n-i,k-1)
//   second min_size   S(n,k) = k S(n-1,k) + C(n-1,m-1) S(n-m,k-1)

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/binomial.hpp"
#include "stirlab/errors.hpp"

namespace stirlab {

enum class stirling_kind { second_kind, first_kind };
enum class block_rule { plain, r_distinct, max_size, min_size };

class triangle_kind {
  public:
    static triangle_kind second() {
        return {stirling_kind::second_kind, block_rule::plain, 0};
    }
    static triangle_kind first() {
        return {stirling_kind::first_kind, block_rule::plain, 0};
    }
    static triangle_kind second_r(std::size_t r) {
        return {stirling_kind::second_kind, block_rule::r_distinct, r};
    }
    static triangle_kind second_max(std::size_t m) {
        return {stirling_kind::second_kind, block_rule::max_size, m};
    }
    static triangle_kind first_max(std::size_t m) {
        return {stirling_kind::first_kind, block_rule::max_size, m};
    }
    static triangle_kind second_min(std::size_t m) {
        return {stirling_kind::second_kind, block_rule::min_size, m};
    }

    stirling_kind kind() const { return kind_; }
    block_rule rule() const { return rule_; }
    std::size_t param() const { return param_; }

    // Short stable identifier, e.g. "s2", "s1max4", "s2r2"; used as the
    // on-disk cache key and in CLI output.
    std::string key() const {
        std::string out = kind_ == stirling_kind::second_kind ? "s2" : "s1";
        switch (rule_) {
            case block_rule::plain: break;
            case block_rule::r_distinct: out += "r" + std::to_string(param_); break;
            case block_rule::max_size: out += "max" + std::to_string(param_); break;
            case block_rule::min_size: out += "min" + std::to_string(param_); break;
        }
        return out;
    }

    std::string display() const {
        const char* open = kind_ == stirling_kind::second_kind ? "{n k}" : "[n k]";
        switch (rule_) {
            case block_rule::plain: return open;
            case block_rule::r_distinct: return std::string(open) + "_" + std::to_string(param_);
            case block_rule::max_size: return std::string(open) + "_{<=" + std::to_string(param_) + "}";
            case block_rule::min_size: return std::string(open) + "_{>=" + std::to_string(param_) + "}";
        }
        return open;
    }

    friend bool operator==(const triangle_kind& a, const triangle_kind& b) {
        return a.kind_ == b.kind_ && a.rule_ == b.rule_ && a.param_ == b.param_;
    }
    friend bool operator<(const triangle_kind& a, const triangle_kind& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.rule_ != b.rule_) return a.rule_ < b.rule_;
        return a.param_ < b.param_;
    }

  private:
    triangle_kind(stirling_kind kind, block_rule rule, std::size_t param)
        : kind_(kind), rule_(rule), param_(param) {
        if (rule != block_rule::plain && param == 0)
            throw std::invalid_argument("triangle_kind: parameter must be at least 1");
        if (rule == block_rule::r_distinct && kind != stirling_kind::second_kind)
            throw std::invalid_argument("triangle_kind: distinguished elements need the second kind");
        if (rule == block_rule::min_size && kind != stirling_kind::second_kind)
            throw std::invalid_argument("triangle_kind: minimum block size needs the second kind");
    }

    stirling_kind kind_;
    block_rule rule_;
    std::size_t param_;
};

namespace detail {

// How many previous rows a row of this triangle depends on.
inline std::size_t lookback(const triangle_kind& kind) {
    switch (kind.rule()) {
        case block_rule::max_size:
        case block_rule::min_size: return kind.param();
        default: return 1;
    }
}

// Computes row n given access to the previous rows. fetch(d) must return
// row n-d for 1 <= d <= lookback (an empty row for d > n). When `ordered`
// is set the produced cells are k! times the plain ones; those are the
// counts of the corresponding ordered objects, and the factorial folds
// into the recurrence as one extra factor k on every term.
template <typename Fetch>
std::vector<Int> compute_row(const triangle_kind& kind, std::size_t n, bool ordered,
                             pascal_cache& binom, factorial_cache& factorials,
                             Fetch&& fetch) {
    std::vector<Int> row(n + 1);
    const std::size_t m = kind.param();

    auto cell = [](const std::vector<Int>& r, std::size_t k) -> const Int& {
        static const Int zero{};
        return k < r.size() ? r[k] : zero;
    };

    switch (kind.rule()) {
        case block_rule::plain:
        case block_rule::r_distinct: {
            const std::size_t r = kind.rule() == block_rule::r_distinct ? m : 0;
            if (n < r) return row;
            if (n == r) {
                row[r] = ordered ? factorials.at(r) : Int(1);
                return row;
            }
            const auto& prev = fetch(1);
            if (kind.kind() == stirling_kind::first_kind) {
                for (std::size_t k = 1; k <= n; ++k) {
                    row[k] = Int(n - 1) * cell(prev, k) + cell(prev, k - 1);
                }
            } else {
                for (std::size_t k = std::max<std::size_t>(1, r); k <= n; ++k) {
                    row[k] = Int(k) * cell(prev, k);
                    if (ordered)
                        row[k] += Int(k) * cell(prev, k - 1);
                    else
                        row[k] += cell(prev, k - 1);
                }
            }
            return row;
        }
        case block_rule::max_size: {
            if (n == 0) {
                row[0] = 1;
                return row;
            }
            const std::size_t imax = std::min(m, n);
            const bool first = kind.kind() == stirling_kind::first_kind;
            std::vector<Int> coef(imax + 1);
            for (std::size_t i = 1; i <= imax; ++i) {
                coef[i] = binom.choose(n - 1, i - 1);
                if (first) coef[i] *= factorials.at(i - 1);
            }
            for (std::size_t k = 1; k <= n; ++k) {
                Int acc = 0;
                for (std::size_t i = 1; i <= imax; ++i) {
                    const Int& sub = cell(fetch(i), k - 1);
                    if (sub == 0) continue;
                    acc += coef[i] * sub;
                }
                if (ordered && acc != 0) acc *= Int(k);
                row[k] = std::move(acc);
            }
            return row;
        }
        case block_rule::min_size: {
            if (n == 0) {
                row[0] = 1;
                return row;
            }
            const auto& prev = fetch(1);
            const Int coef = n >= m ? binom.choose(n - 1, m - 1) : Int(0);
            for (std::size_t k = 1; k <= n; ++k) {
                row[k] = Int(k) * cell(prev, k);
                if (n >= m) {
                    const Int& sub = cell(fetch(m), k - 1);
                    if (sub != 0) {
                        Int term = coef * sub;
                        if (ordered) term *= Int(k);
                        row[k] += term;
                    }
                }
            }
            return row;
        }
    }
    return row;
}

}  // namespace detail

// Fully memoized triangle. Grows on demand up to a configurable row cap;
// requests beyond the cap raise cap_error rather than quietly thrashing.
class triangle {
  public:
    static constexpr std::size_t default_row_cap = 5000;

    explicit triangle(triangle_kind kind, std::size_t row_cap = default_row_cap)
        : kind_(kind), row_cap_(row_cap), binom_(kind.param() + 2) {}

    const triangle_kind& kind() const { return kind_; }
    std::size_t row_cap() const { return row_cap_; }
    std::size_t rows_computed() const { return rows_.size(); }

    void ensure(std::size_t n) {
        if (n > row_cap_)
            throw cap_error("triangle: row " + std::to_string(n) + " exceeds cap " +
                            std::to_string(row_cap_));
        while (rows_.size() <= n) {
            std::size_t next = rows_.size();
            rows_.push_back(detail::compute_row(
                kind_, next, false, binom_, factorials_,
                [&](std::size_t d) -> const std::vector<Int>& {
                    return d <= next ? rows_[next - d] : empty_;
                }));
        }
    }

    // T(n, k); zero for k > n.
    const Int& value(std::size_t n, std::size_t k) {
        if (k > n) return zero_;
        ensure(n);
        return rows_[n][k];
    }

    // Copy of row n, entries k = 0..n.
    std::vector<Int> row(std::size_t n) {
        ensure(n);
        return rows_[n];
    }

    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // Adopt previously computed rows (e.g. from the on-disk cache). The
    // shape is validated; the values are the caller's responsibility.
    void seed(std::vector<std::vector<Int>> rows) {
        if (rows.size() > row_cap_ + 1)
            throw std::invalid_argument("triangle: seed exceeds row cap");
        for (std::size_t n = 0; n < rows.size(); ++n)
            if (rows[n].size() != n + 1)
                throw std::invalid_argument("triangle: seed row has wrong length");
        if (rows.size() > rows_.size()) rows_ = std::move(rows);
    }

  private:
    triangle_kind kind_;
    std::size_t row_cap_;
    pascal_cache binom_;
    factorial_cache factorials_;
    std::vector<std::vector<Int>> rows_;
    inline static const std::vector<Int> empty_{};
    inline static const Int zero_{};
};

// Forward-only row producer that retains just the rows the recurrence can
// still reach (one for the plain kinds, m for the size-bounded ones), so
// long sweeps run in constant memory. With `ordered` set it produces the
// k!-weighted rows described above compute_row.
class row_stream {
  public:
    explicit row_stream(triangle_kind kind, bool ordered = false)
        : kind_(kind), ordered_(ordered), keep_(detail::lookback(kind)),
          binom_(kind.param() + 2) {
        if (ordered && kind.kind() != stirling_kind::second_kind)
            throw std::invalid_argument("row_stream: ordered weighting needs the second kind");
    }

    // Index of the row the next call to next() will produce.
    std::size_t index() const { return next_n_; }

    // Produce the next row. The reference stays valid until the following
    // call on this stream.
    const std::vector<Int>& next() {
        std::size_t n = next_n_++;
        window_.push_back(detail::compute_row(
            kind_, n, ordered_, binom_, factorials_,
            [&](std::size_t d) -> const std::vector<Int>& {
                return d <= window_.size() ? window_[window_.size() - d] : empty_;
            }));
        if (window_.size() > keep_) window_.pop_front();
        return window_.back();
    }

  private:
    triangle_kind kind_;
    bool ordered_;
    std::size_t keep_;
    std::size_t next_n_ = 0;
    pascal_cache binom_;
    factorial_cache factorials_;
    std::deque<std::vector<Int>> window_;
    inline static const std::vector<Int> empty_{};
};

}  // namespace stirlab
