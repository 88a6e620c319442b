#pragma once

// Sequences derived from the triangles by (weighted) row sums:
//
//   bell(n)                  = sum_k {n k}
//   fubini(n)                = sum_k k! {n k}
//   r_bell(n; r)             = sum_k {n+r k}_r
//   r_fubini(n; r)           = sum_k k! {n+r k}_r
//   restricted_bell(n; m)    = sum_k {n k}_{<=m}
//   restricted_fubini(n; m)  = sum_k k! {n k}_{<=m}
//   restricted_factorial(n; m) = sum_k [n k]_{<=m}
//   associated_bell(n; m)    = sum_k {n k}_{>=m}
//   associated_fubini(n; m)  = sum_k k! {n k}_{>=m}
//
// For the r-families the sum runs over the absolute row n+r of the
// r-triangle, and the factorial weight uses the absolute block count, so
// r_fubini(n; 1) equals fubini(n+1).
//
// value_by_recurrence gives a second, row-sum-free route for four of the
// families; it exists so the two paths can be checked against each other
// and must stay independent of the triangle code.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/binomial.hpp"
#include "stirlab/errors.hpp"
#include "stirlab/triangle.hpp"

namespace stirlab {

enum class family_id {
    fubini,
    bell,
    r_fubini,
    r_bell,
    restricted_bell,
    restricted_fubini,
    restricted_factorial,
    associated_bell,
    associated_fubini,
};

class family_spec {
  public:
    static family_spec fubini() { return {family_id::fubini, 0}; }
    static family_spec bell() { return {family_id::bell, 0}; }
    static family_spec r_fubini(std::size_t r) { return {family_id::r_fubini, r}; }
    static family_spec r_bell(std::size_t r) { return {family_id::r_bell, r}; }
    static family_spec restricted_bell(std::size_t m) {
        return {family_id::restricted_bell, m};
    }
    static family_spec restricted_fubini(std::size_t m) {
        return {family_id::restricted_fubini, m};
    }
    static family_spec restricted_factorial(std::size_t m) {
        return {family_id::restricted_factorial, m};
    }
    static family_spec associated_bell(std::size_t m) {
        return {family_id::associated_bell, m};
    }
    static family_spec associated_fubini(std::size_t m) {
        return {family_id::associated_fubini, m};
    }

    family_id id() const { return id_; }
    std::size_t param() const { return param_; }

    // First index at which the sequence is defined. Zero for all of them.
    std::size_t index_offset() const { return 0; }

    bool has_param() const { return id_ != family_id::fubini && id_ != family_id::bell; }

    // Name of the parameter in the usual notation: "r" or "m".
    const char* param_letter() const {
        return (id_ == family_id::r_fubini || id_ == family_id::r_bell) ? "r" : "m";
    }

    triangle_kind triangle() const {
        switch (id_) {
            case family_id::fubini:
            case family_id::bell: return triangle_kind::second();
            case family_id::r_fubini:
            case family_id::r_bell: return triangle_kind::second_r(param_);
            case family_id::restricted_bell:
            case family_id::restricted_fubini: return triangle_kind::second_max(param_);
            case family_id::restricted_factorial: return triangle_kind::first_max(param_);
            case family_id::associated_bell:
            case family_id::associated_fubini: return triangle_kind::second_min(param_);
        }
        throw std::logic_error("family_spec: unreachable");
    }

    // Whether the row sum carries the k! ordering weight.
    bool ordered() const {
        return id_ == family_id::fubini || id_ == family_id::r_fubini ||
               id_ == family_id::restricted_fubini || id_ == family_id::associated_fubini;
    }

    // Row offset into the backing triangle: sequence index n reads row
    // n + shift. Nonzero only for the r-families.
    std::size_t shift() const {
        return (id_ == family_id::r_fubini || id_ == family_id::r_bell) ? param_ : 0;
    }

    std::string name() const {
        switch (id_) {
            case family_id::fubini: return "fubini";
            case family_id::bell: return "bell";
            case family_id::r_fubini: return "r-fubini";
            case family_id::r_bell: return "r-bell";
            case family_id::restricted_bell: return "restricted-bell";
            case family_id::restricted_fubini: return "restricted-fubini";
            case family_id::restricted_factorial: return "restricted-factorial";
            case family_id::associated_bell: return "assoc-bell";
            case family_id::associated_fubini: return "assoc-fubini";
        }
        throw std::logic_error("family_spec: unreachable");
    }

    // Name with the parameter filled in, e.g. "restricted-bell(m=3)".
    std::string label() const {
        if (!has_param()) return name();
        return name() + "(" + param_letter() + "=" + std::to_string(param_) + ")";
    }

    friend bool operator==(const family_spec& a, const family_spec& b) {
        return a.id_ == b.id_ && a.param_ == b.param_;
    }
    friend bool operator<(const family_spec& a, const family_spec& b) {
        if (a.id_ != b.id_) return a.id_ < b.id_;
        return a.param_ < b.param_;
    }

  private:
    family_spec(family_id id, std::size_t param) : id_(id), param_(param) {
        bool needs_param = id != family_id::fubini && id != family_id::bell;
        if (needs_param && param == 0)
            throw std::invalid_argument("family_spec: parameter must be at least 1");
        if (!needs_param && param != 0)
            throw std::logic_error("family_spec: unexpected parameter");
    }

    family_id id_;
    std::size_t param_;
};

struct family_info {
    family_id id;
    const char* name;
    const char* parameter;  // "" when the family takes none
    const char* description;
};

inline const std::vector<family_info>& family_catalog() {
    static const std::vector<family_info> catalog = {
        {family_id::fubini, "fubini", "", "ordered set partitions"},
        {family_id::bell, "bell", "", "set partitions"},
        {family_id::r_fubini, "r-fubini", "r",
         "ordered set partitions of n+r elements, first r pairwise separated"},
        {family_id::r_bell, "r-bell", "r",
         "set partitions of n+r elements, first r pairwise separated"},
        {family_id::restricted_bell, "restricted-bell", "m",
         "set partitions with blocks of at most m elements"},
        {family_id::restricted_fubini, "restricted-fubini", "m",
         "ordered set partitions with blocks of at most m elements"},
        {family_id::restricted_factorial, "restricted-factorial", "m",
         "permutations with cycles of at most m elements"},
        {family_id::associated_bell, "assoc-bell", "m",
         "set partitions with blocks of at least m elements"},
        {family_id::associated_fubini, "assoc-fubini", "m",
         "ordered set partitions with blocks of at least m elements"},
    };
    return catalog;
}

inline std::optional<family_id> family_by_name(const std::string& name) {
    for (const auto& f : family_catalog())
        if (name == f.name) return f.id;
    return std::nullopt;
}

inline family_spec make_family(family_id id, std::size_t param) {
    switch (id) {
        case family_id::fubini: return family_spec::fubini();
        case family_id::bell: return family_spec::bell();
        case family_id::r_fubini: return family_spec::r_fubini(param);
        case family_id::r_bell: return family_spec::r_bell(param);
        case family_id::restricted_bell: return family_spec::restricted_bell(param);
        case family_id::restricted_fubini: return family_spec::restricted_fubini(param);
        case family_id::restricted_factorial: return family_spec::restricted_factorial(param);
        case family_id::associated_bell: return family_spec::associated_bell(param);
        case family_id::associated_fubini: return family_spec::associated_fubini(param);
    }
    throw std::logic_error("make_family: unreachable");
}

struct sequence_window {
    family_spec family;
    std::size_t start;        // index of values.front()
    std::vector<Int> values;  // never negative; checked by the property suite
};

// Computes sequence values by streaming triangle rows and keeps every value
// ever produced, so repeated queries against the same family instance pay
// the row work once. Methods are serialized by an internal lock.
class sequence_engine {
  public:
    static constexpr std::size_t default_index_cap = 5000;

    explicit sequence_engine(std::size_t index_cap = default_index_cap)
        : cap_(index_cap) {}

    Int value(const family_spec& f, std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        return ensure(f, n).values[n];
    }

    // Values for indices start .. start+len-1.
    sequence_window window(const family_spec& f, std::size_t start, std::size_t len) {
        if (len == 0) return {f, start, {}};
        std::lock_guard<std::mutex> lock(mu_);
        const auto& values = ensure(f, start + len - 1).values;
        return {f, start, {values.begin() + start, values.begin() + start + len}};
    }

  private:
    struct entry {
        std::unique_ptr<row_stream> stream;
        std::vector<Int> values;
    };

    entry& ensure(const family_spec& f, std::size_t n) {
        if (n > cap_)
            throw cap_error("sequence_engine: index " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap_));
        auto it = memo_.find(f);
        if (it == memo_.end()) {
            entry e;
            e.stream = std::make_unique<row_stream>(f.triangle(), f.ordered());
            it = memo_.emplace(f, std::move(e)).first;
        }
        entry& e = it->second;
        const std::size_t shift = f.shift();
        while (e.values.size() <= n) {
            const auto& row = e.stream->next();
            if (e.stream->index() <= shift) continue;  // rows below the offset
            Int sum = 0;
            for (const Int& v : row) sum += v;
            e.values.push_back(std::move(sum));
        }
        return e;
    }

    std::size_t cap_;
    std::map<family_spec, entry> memo_;
    std::mutex mu_;
};

// Independent single-sequence recurrences, used as the second route in the
// dual-path checks. Each is a textbook recurrence on the sequence itself:
//
//   restricted_bell        B(n+1) = sum_{j=0}^{m-1} C(n,j) B(n-j)
//   restricted_fubini      F(n)   = sum_{k=1}^{min(m,n)} C(n,k) F(n-k)
//   restricted_factorial   A(n+1) = sum_{k=0}^{m-1} n(n-1)...(n-k+1) A(n-k)
//   associated_fubini      F(n)   = sum_{i=0}^{n-m} C(n,i) F(i) for n >= m
inline Int value_by_recurrence(const family_spec& f, std::size_t n) {
    const std::size_t m = f.param();
    pascal_cache binom;
    switch (f.id()) {
        case family_id::restricted_bell: {
            std::vector<Int> b{Int(1)};
            for (std::size_t i = 0; b.size() <= n; ++i) {
                Int next = 0;
                for (std::size_t j = 0; j < m && j <= i; ++j)
                    next += binom.choose(i, j) * b[i - j];
                b.push_back(std::move(next));
            }
            return b[n];
        }
        case family_id::restricted_fubini: {
            std::vector<Int> fv{Int(1)};
            for (std::size_t i = 1; fv.size() <= n; ++i) {
                Int next = 0;
                for (std::size_t k = 1; k <= std::min(m, i); ++k)
                    next += binom.choose(i, k) * fv[i - k];
                fv.push_back(std::move(next));
            }
            return fv[n];
        }
        case family_id::restricted_factorial: {
            std::vector<Int> a{Int(1), Int(1)};
            for (std::size_t i = 1; a.size() <= n; ++i) {
                Int next = 0;
                for (std::size_t k = 0; k < m && k <= i; ++k)
                    next += falling_factorial(i, k) * a[i - k];
                a.push_back(std::move(next));
            }
            return a[n];
        }
        case family_id::associated_fubini: {
            std::vector<Int> fv(n + 1);
            fv[0] = 1;
            for (std::size_t i = m; i <= n; ++i) {
                Int next = 0;
                for (std::size_t j = 0; j + m <= i; ++j)
                    next += binom.choose(i, j) * fv[j];
                fv[i] = std::move(next);
            }
            return fv[n];
        }
        default:
            throw std::invalid_argument(
                "value_by_recurrence: no independent recurrence registered for " + f.name());
    }
}

}  // namespace stirlab
