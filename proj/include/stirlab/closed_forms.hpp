#pragma once

// Closed-form expressions for individual triangle cells and sequence values,
// each paired with the engine lookup it must reproduce. Every expression is
// evaluated over exact rationals and asserted integral at the end, because
// several carry fractional coefficients that only cancel on the validity
// range. The registry is the surface behind `formulas list` and the
// formula-vs-engine check suite.
//
// Two expressions in the registry (assoc3_k3, assoc3_k4) do not reproduce
// the engines: the triangle recurrence and the brute-force enumerator agree
// with each other and the expressions come out a constant factor too large
// once nonzero cells appear. They are kept verbatim, marked quarantined,
// and the index where the disagreement starts is recorded and re-checked
// instead of being patched away.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/binomial.hpp"
#include "stirlab/errors.hpp"
#include "stirlab/sequences.hpp"
#include "stirlab/triangle.hpp"

namespace stirlab {

// A formula produced a value with a nonunit denominator, or an exact
// division left a remainder. Either means the recorded expression is being
// used outside its contract.
class non_integral_error : public std::runtime_error {
  public:
    explicit non_integral_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_pow(const Rat& base, long long exp) {
    if (exp < 0) {
        if (base == 0)
            throw std::invalid_argument("rat_pow: zero base with negative exponent");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat acc = 1;
    Rat b = base;
    for (long long e = exp; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

inline Rat rat_pow(long long base, long long exp) { return rat_pow(Rat(base), exp); }

inline Int to_int_exact(const Rat& v, const std::string& context) {
    if (boost::multiprecision::denominator(v) != 1)
        throw non_integral_error(context + ": non-integral result " + v.str());
    return boost::multiprecision::numerator(v);
}

// Bundles the engines a formula check reads from: lazily built triangles,
// one shared sequence engine, and the small caches.
class engine_context {
  public:
    explicit engine_context(std::size_t row_cap = triangle::default_row_cap)
        : row_cap_(row_cap), seq(row_cap) {}

    triangle& tri(const triangle_kind& kind) {
        auto it = triangles_.find(kind);
        if (it == triangles_.end())
            it = triangles_
                     .emplace(std::piecewise_construct, std::forward_as_tuple(kind),
                              std::forward_as_tuple(kind, row_cap_))
                     .first;
        return it->second;
    }

    std::size_t row_cap_;
    sequence_engine seq;
    pascal_cache binom;
    factorial_cache fact;

  private:
    std::map<triangle_kind, triangle> triangles_;
};

struct closed_form {
    std::string id;
    std::string statement;  // human-readable form of the identity
    char param;             // 'r', 'm', or 0 when the formula takes none
    std::vector<std::size_t> check_params;  // parameter sweep for the check suite
    // Validity window for a given parameter (0 for parameterless forms);
    // no_upper means the identity holds for every n >= first.
    std::function<std::size_t(std::size_t)> first_valid;
    std::function<std::optional<std::size_t>(std::size_t)> last_valid;
    bool quarantined;
    // For quarantined forms: first index where the expression is known to
    // differ from the engines, re-verified by the check suite.
    std::optional<std::size_t> expected_first_mismatch;
    std::string note;
    std::function<Int(engine_context&, std::size_t, std::size_t)> eval;
    std::function<Int(engine_context&, std::size_t, std::size_t)> reference;
};

namespace detail {

inline std::optional<std::size_t> no_upper(std::size_t) { return std::nullopt; }

}  // namespace detail

inline const std::vector<closed_form>& closed_form_registry() {
    using detail::no_upper;
    static const std::vector<closed_form> reg = [] {
        std::vector<closed_form> forms;

        auto add = [&forms](closed_form f) { forms.push_back(std::move(f)); };

        // Second-kind columns k = 2, 3, 4. The fractional powers at n = 1
        // (2^(n-2) and friends) still cancel, so the window starts at 1.
        add({"stirling2_k2", "{n,2} = 2^(n-1) - 1", 0, {},
             [](std::size_t) -> std::size_t { return 1; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 return to_int_exact(rat_pow(2, N - 1) - 1, "stirling2_k2");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second()).value(n, 2);
             }});
        add({"stirling2_k3", "{n,3} = (3^(n-1) - 2^n + 1)/2", 0, {},
             [](std::size_t) -> std::size_t { return 1; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 return to_int_exact((rat_pow(3, N - 1) - rat_pow(2, N) + 1) / 2,
                                     "stirling2_k3");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second()).value(n, 3);
             }});
        add({"stirling2_k4", "{n,4} = 4^(n-1)/6 - 3^(n-1)/2 + 2^(n-2) - 1/6", 0, {},
             [](std::size_t) -> std::size_t { return 1; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 return to_int_exact(rat_pow(4, N - 1) / 6 - rat_pow(3, N - 1) / 2 +
                                         rat_pow(2, N - 2) - Rat(1, 6),
                                     "stirling2_k4");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second()).value(n, 4);
             }});

        // r-distinct cells just above the base column, in absolute indices:
        // {n+r, r+j}_r for j = 0, 1, 2.
        add({"rstirling_r", "{n+r,r}_r = r^n", 'r', {1, 2, 3, 4},
             [](std::size_t) -> std::size_t { return 0; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t r) {
                 return to_int_exact(rat_pow(static_cast<long long>(r), n), "rstirling_r");
             },
             [](engine_context& ctx, std::size_t n, std::size_t r) {
                 return ctx.tri(triangle_kind::second_r(r)).value(n + r, r);
             }});
        add({"rstirling_rp1", "{n+r,r+1}_r = (r+1)^n - r^n", 'r', {1, 2, 3, 4},
             [](std::size_t) -> std::size_t { return 0; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t r) {
                 const long long R = static_cast<long long>(r);
                 return to_int_exact(rat_pow(R + 1, n) - rat_pow(R, n), "rstirling_rp1");
             },
             [](engine_context& ctx, std::size_t n, std::size_t r) {
                 return ctx.tri(triangle_kind::second_r(r)).value(n + r, r + 1);
             }});
        add({"rstirling_rp2", "{n+r,r+2}_r = (r+2)^n/2 - (r+1)^n + r^n/2", 'r',
             {1, 2, 3, 4}, [](std::size_t) -> std::size_t { return 0; }, no_upper, false,
             {}, "",
             [](engine_context&, std::size_t n, std::size_t r) {
                 const long long R = static_cast<long long>(r);
                 return to_int_exact(rat_pow(R + 2, n) / 2 - rat_pow(R + 1, n) +
                                         rat_pow(R, n) / 2,
                                     "rstirling_rp2");
             },
             [](engine_context& ctx, std::size_t n, std::size_t r) {
                 return ctx.tri(triangle_kind::second_r(r)).value(n + r, r + 2);
             }});

        // Cells of the minimum-block-size-2 triangle, k = 2, 3, 4.
        add({"assoc2_k2", "{n,2}_(>=2) = (2^n - 2n - 2)/2", 0, {},
             [](std::size_t) -> std::size_t { return 4; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 return to_int_exact((rat_pow(2, N) - 2 * N - 2) / 2, "assoc2_k2");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(2)).value(n, 2);
             }});
        add({"assoc2_k3",
             "{n,3}_(>=2) = (3^n - 3*2^n)/6 - n(2^(n-1) - 1)/2 + (n^2 + 1)/2", 0, {},
             [](std::size_t) -> std::size_t { return 6; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 const Rat v = (rat_pow(3, N) - 3 * rat_pow(2, N)) / 6 -
                               Rat(N) * (rat_pow(2, N - 1) - 1) / 2 +
                               Rat(N * N + 1) / 2;
                 return to_int_exact(v, "assoc2_k3");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(2)).value(n, 3);
             }});
        add({"assoc2_k4",
             "{n,4}_(>=2) = 4^n/24 - 3^n (n+3)/18 - (n^3 + 2n + 1)/6"
             " + 2^n (n^2 + 3n + 4)/16",
             0, {}, [](std::size_t) -> std::size_t { return 8; }, no_upper, false, {}, "",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 const Rat v = rat_pow(4, N) / 24 - rat_pow(3, N) * (N + 3) / 18 -
                               Rat(N * N * N + 2 * N + 1) / 6 +
                               rat_pow(2, N) * (N * N + 3 * N + 4) / 16;
                 return to_int_exact(v, "assoc2_k4");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(2)).value(n, 4);
             }});

        // Cells of the minimum-block-size-3 triangle. Only the k = 2 form
        // reproduces the engines; its window start was found by scanning
        // upward until the match began and is frozen here.
        add({"assoc3_k2", "{n,2}_(>=3) = (2^n - 2 - 2n - 2 C(n,2))/2", 0, {},
             [](std::size_t) -> std::size_t { return 5; }, no_upper, false, {}, "",
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 const Rat v =
                     (rat_pow(2, N) - 2 - 2 * N - 2 * Rat(ctx.binom.choose(n, 2))) / 2;
                 return to_int_exact(v, "assoc3_k2");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(3)).value(n, 2);
             }});
        add({"assoc3_k3",
             "{n,3}_(>=3) = (24 - 3*2^(n+3) + 8*3^n + 12n - 9*2^n n + 42n^2"
             " - 3*2^n n^2 - 12n^3 + 6n^4)/16",
             0, {}, [](std::size_t) -> std::size_t { return 7; }, no_upper, true,
             std::size_t{9},
             "disagrees with the triangle and the enumeration oracle (which agree):"
             " evaluates to 3x the engine value once nonzero cells start at n = 9,"
             " matching only the forced zeros at n = 7, 8",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 const Rat v = (24 - 3 * rat_pow(2, N + 3) + 8 * rat_pow(3, N) + 12 * N -
                                9 * rat_pow(2, N) * N + 42 * N * N -
                                3 * rat_pow(2, N) * N * N - 12 * N * N * N +
                                6 * N * N * N * N) /
                               16;
                 return to_int_exact(v, "assoc3_k3");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(3)).value(n, 3);
             }});
        add({"assoc3_k4",
             "{n,4}_(>=3) = -3^(n-2) (n^2 + 5n + 18) + (2^(2n+5)"
             " + 3*2^n (64 + 42n + 19n^2 + 2n^3 + n^4) - 16 (8 - 32n + 112n^2"
             " - 91n^3 + 43n^4 - 9n^5 + n^6))/64",
             0, {}, [](std::size_t) -> std::size_t { return 9; }, no_upper, true,
             std::size_t{12},
             "disagrees with the triangle and the enumeration oracle (which agree):"
             " evaluates to 12x the engine value once nonzero cells start at n = 12,"
             " matching only the forced zeros at n = 9..11",
             [](engine_context&, std::size_t n, std::size_t) {
                 const long long N = static_cast<long long>(n);
                 const Rat poly4 = 64 + 42 * N + 19 * N * N + 2 * N * N * N +
                                   rat_pow(N, 4);
                 const Rat poly6 = 8 - 32 * N + 112 * N * N - 91 * N * N * N +
                                   43 * rat_pow(N, 4) - 9 * rat_pow(N, 5) +
                                   rat_pow(N, 6);
                 const Rat v = -rat_pow(3, N - 2) * (N * N + 5 * N + 18) +
                               (rat_pow(2, 2 * N + 5) + 3 * rat_pow(2, N) * poly4 -
                                16 * poly6) /
                                   64;
                 return to_int_exact(v, "assoc3_k4");
             },
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.tri(triangle_kind::second_min(3)).value(n, 4);
             }});

        // Block-size-capped Bell values expressed through plain Bell numbers.
        add({"restbell_eq_bell", "B(n,<=m) = B(n) for n <= m", 'm',
             {1, 2, 3, 4, 5, 6, 7, 8}, [](std::size_t) -> std::size_t { return 0; },
             [](std::size_t m) -> std::optional<std::size_t> { return m; }, false, {}, "",
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return ctx.seq.value(family_spec::bell(), n);
             },
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return ctx.seq.value(family_spec::restricted_bell(m), n);
             }});
        add({"restbell_subtract",
             "B(n,<=m) = B(n) - sum_{k=1}^{n-m} C(n,m+k) B(n-m-k) for m < n <= 2m", 'm',
             {1, 2, 3, 4, 5, 6, 7, 8},
             [](std::size_t m) -> std::size_t { return m + 1; },
             [](std::size_t m) -> std::optional<std::size_t> { return 2 * m; }, false, {},
             "",
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 Int v = ctx.seq.value(family_spec::bell(), n);
                 for (std::size_t k = 1; k <= n - m; ++k)
                     v -= ctx.binom.choose(n, m + k) *
                          ctx.seq.value(family_spec::bell(), n - m - k);
                 return v;
             },
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return ctx.seq.value(family_spec::restricted_bell(m), n);
             }});
        add({"restbell_shift1", "B(m+1,<=m) = B(m+1) - 1", 'm',
             {2, 3, 4, 5, 6, 7, 8, 9, 10},
             [](std::size_t m) -> std::size_t { return m + 1; },
             [](std::size_t m) -> std::optional<std::size_t> { return m + 1; }, false, {},
             "",
             [](engine_context& ctx, std::size_t n, std::size_t) {
                 return Int(ctx.seq.value(family_spec::bell(), n) - 1);
             },
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return ctx.seq.value(family_spec::restricted_bell(m), n);
             }});
        add({"restbell_shift2", "B(m+2,<=m) = B(m+2) - 1 - (m+2)", 'm',
             {2, 3, 4, 5, 6, 7, 8, 9, 10},
             [](std::size_t m) -> std::size_t { return m + 2; },
             [](std::size_t m) -> std::optional<std::size_t> { return m + 2; }, false, {},
             "",
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return Int(ctx.seq.value(family_spec::bell(), n) - 1 - Int(m + 2));
             },
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return ctx.seq.value(family_spec::restricted_bell(m), n);
             }});

        // Cycle-size-capped factorial one step past the cap.
        add({"restfact_shift1", "A(m+1,<=m) = m * m!", 'm', {2, 3, 4, 5, 6, 7, 8, 9, 10},
             [](std::size_t m) -> std::size_t { return m + 1; },
             [](std::size_t m) -> std::optional<std::size_t> { return m + 1; }, false, {},
             "",
             [](engine_context& ctx, std::size_t, std::size_t m) {
                 return Int(Int(m) * ctx.fact.at(m));
             },
             [](engine_context& ctx, std::size_t n, std::size_t m) {
                 return ctx.seq.value(family_spec::restricted_factorial(m), n);
             }});

        return forms;
    }();
    return reg;
}

inline const closed_form* find_closed_form(const std::string& id) {
    for (const auto& f : closed_form_registry())
        if (f.id == id) return &f;
    return nullptr;
}

// Evaluates a registered formula at n, enforcing its validity window.
inline Int eval_closed_form(engine_context& ctx, const std::string& id, std::size_t n,
                            std::size_t param = 0) {
    const closed_form* f = find_closed_form(id);
    if (!f) throw std::invalid_argument("unknown formula id: " + id);
    if (f->param == 0 && param != 0)
        throw std::invalid_argument(id + " takes no parameter");
    if (f->param != 0 && param == 0)
        throw std::invalid_argument(id + " requires parameter " +
                                    std::string(1, f->param));
    const std::size_t lo = f->first_valid(param);
    const auto hi = f->last_valid(param);
    if (n < lo || (hi && n > *hi))
        throw std::invalid_argument(id + ": n = " + std::to_string(n) +
                                    " outside validity range");
    return f->eval(ctx, n, param);
}

// Sum over all cycle types with cycles of length at most m: for every
// solution of 1*a1 + 2*a2 + ... + m*am = n the type accounts for
// n! / (1^a1 a1! * 2^a2 a2! * ... * m^am am!) permutations.
inline Int eval_cycle_type_sum(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("eval_cycle_type_sum: n and m must be at least 1");
    if (n > 80)
        throw cap_error("eval_cycle_type_sum: n > 80 enumerates too many cycle types");

    factorial_cache fact;
    Rat sum = 0;
    // denom carries prod i^(a_i) a_i! for the choices made so far.
    std::function<void(std::size_t, std::size_t, Int)> walk =
        [&](std::size_t len, std::size_t remaining, Int denom) {
            if (len == 1) {
                sum += Rat(fact.at(n)) / (denom * fact.at(remaining));
                return;
            }
            Int power = 1;
            for (std::size_t count = 0; count * len <= remaining; ++count) {
                walk(len - 1, remaining - count * len,
                     denom * power * fact.at(count));
                power *= Int(len);
            }
        };
    walk(m, n, Int(1));
    return to_int_exact(sum, "eval_cycle_type_sum");
}

// Minimum-block-size cell via one step of the block-count recursion:
// {n,k}_(>=m) = (1/k) sum_{j=m}^{n-(k-1)m} C(n,j) {n-j,k-1}_(>=m).
// The j-sum peels off the block containing a distinguished element in all
// k rotations, hence the exact division.
inline Int eval_assoc_recursion(engine_context& ctx, std::size_t n, std::size_t k,
                                std::size_t m) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("eval_assoc_recursion: k and m must be at least 1");
    if (n < k * m)
        throw std::invalid_argument("eval_assoc_recursion: requires n >= k*m");

    triangle& tri = ctx.tri(triangle_kind::second_min(m));
    Int sum = 0;
    for (std::size_t j = m; j + (k - 1) * m <= n; ++j)
        sum += ctx.binom.choose(n, j) * tri.value(n - j, k - 1);

    Int q, r;
    boost::multiprecision::divide_qr(sum, Int(k), q, r);
    if (r != 0)
        throw non_integral_error("eval_assoc_recursion: sum not divisible by k");
    return q;
}

struct closed_form_report {
    std::string id;
    std::size_t param = 0;  // 0 when the form takes none
    std::size_t from = 0;
    std::size_t to = 0;
    bool quarantined = false;
    std::size_t checked = 0;
    std::size_t mismatched = 0;
    std::optional<std::size_t> first_mismatch;
    // Quarantined forms pass when the recorded divergence point still holds;
    // everything else passes only with zero mismatches.
    bool pass = false;
    std::string note;
};

inline closed_form_report check_closed_form(engine_context& ctx, const closed_form& f,
                                            std::size_t param, std::size_t span = 200) {
    closed_form_report rep;
    rep.id = f.id;
    rep.param = param;
    rep.quarantined = f.quarantined;
    rep.note = f.note;
    rep.from = f.first_valid(param);
    const auto hi = f.last_valid(param);
    rep.to = hi ? *hi : rep.from + span;

    for (std::size_t n = rep.from; n <= rep.to; ++n) {
        ++rep.checked;
        if (f.eval(ctx, n, param) != f.reference(ctx, n, param)) {
            ++rep.mismatched;
            if (!rep.first_mismatch) rep.first_mismatch = n;
        }
    }
    rep.pass = f.quarantined ? rep.first_mismatch == f.expected_first_mismatch
                             : rep.mismatched == 0;
    return rep;
}

inline std::vector<closed_form_report> check_all_closed_forms(engine_context& ctx,
                                                              std::size_t span = 200) {
    std::vector<closed_form_report> reports;
    for (const auto& f : closed_form_registry()) {
        if (f.check_params.empty()) {
            reports.push_back(check_closed_form(ctx, f, 0, span));
        } else {
            for (std::size_t p : f.check_params)
                reports.push_back(check_closed_form(ctx, f, p, span));
        }
    }
    return reports;
}

}  // namespace stirlab
