#pragma once

// Registry of modular claims about the sequence families, a pointwise
// verifier, and an eventual-period detector. Claims come in two shapes:
// periodic (seq(n + P) == seq(n) mod M from some index) and constant
// (seq(n) == c mod M on an index range). Each claim expands into concrete
// cases over its parameter sweep; the mod-p claims sweep the primes
// {2, 3, 5, 7, 11, 13} with every m < p.
//
// Verification reduces exact big-integer values, deliberately reusing the
// one tested computation path instead of a separate modular recurrence.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/sequences.hpp"

namespace stirlab {

// proven: the statement carries a proof; observed: recorded as an empirical
// observation only. Every claim currently registered is proven.
enum class claim_status { proven, observed };

inline const char* to_string(claim_status s) {
    return s == claim_status::proven ? "proven" : "observed";
}

// seq(n + period) == seq(n) (mod modulus) for all n >= from.
struct periodic_form {
    std::size_t period;
    std::uint64_t modulus;
    std::size_t from;
};

// seq(n) == residue (mod modulus) for all n >= from, or for n in
// [from, *to] when the range is closed.
struct constant_form {
    std::uint64_t residue;
    std::uint64_t modulus;
    std::size_t from;
    std::optional<std::size_t> to;
};

struct claim_case {
    family_spec family;
    std::string label;  // parameter instance, e.g. "m=3" or "p=7, m=4"
    std::variant<periodic_form, constant_form> form;
};

struct congruence_claim {
    std::string id;
    std::string statement;
    claim_status status;
    std::string note;
    std::vector<claim_case> cases;
};

namespace detail {

inline claim_case periodic_case(family_spec f, std::string label, std::size_t period,
                                std::uint64_t modulus, std::size_t from) {
    return {std::move(f), std::move(label), periodic_form{period, modulus, from}};
}

inline claim_case constant_case(family_spec f, std::string label, std::uint64_t residue,
                                std::uint64_t modulus, std::size_t from,
                                std::optional<std::size_t> to = std::nullopt) {
    return {std::move(f), std::move(label), constant_form{residue, modulus, from, to}};
}

inline const std::vector<std::size_t>& claim_primes() {
    static const std::vector<std::size_t> primes = {2, 3, 5, 7, 11, 13};
    return primes;
}

}  // namespace detail

inline const std::vector<congruence_claim>& claim_registry() {
    using detail::constant_case;
    using detail::periodic_case;
    static const std::vector<congruence_claim> reg = [] {
        std::vector<congruence_claim> claims;

        claims.push_back(
            {"fubini_period4_mod10", "F(n+4) == F(n) (mod 10) for n >= 1",
             claim_status::proven, "",
             {periodic_case(family_spec::fubini(), "", 4, 10, 1)}});

        {
            congruence_claim c{"rfubini_period4_mod10",
                               "F(n+4; r) == F(n; r) (mod 10) for n >= 1, r >= 1",
                               claim_status::proven,
                               "trivial for r >= 5, where 10 divides every value",
                               {}};
            for (std::size_t r = 1; r <= 6; ++r)
                c.cases.push_back(periodic_case(family_spec::r_fubini(r),
                                                "r=" + std::to_string(r), 4, 10, 1));
            claims.push_back(std::move(c));
        }

        claims.push_back({"restbell_m2_period5_mod10",
                          "B(n+5; <=2) == B(n; <=2) (mod 10) for n > 1",
                          claim_status::proven, "",
                          {periodic_case(family_spec::restricted_bell(2), "m=2", 5, 10, 2)}});
        claims.push_back({"restbell_m3_period5_mod10",
                          "B(n+5; <=3) == B(n; <=3) (mod 10) for n > 3",
                          claim_status::proven, "",
                          {periodic_case(family_spec::restricted_bell(3), "m=3", 5, 10, 4)}});

        claims.push_back({"restfubini_m1_factorial_mod10",
                          "F(n; <=1) = n! == 0 (mod 10) for n > 4", claim_status::proven,
                          "",
                          {constant_case(family_spec::restricted_fubini(1), "m=1", 0, 10, 5)}});

        {
            congruence_claim c{"restfubini_mod10",
                               "F(n; <=m) == 0 (mod 10) for n > 4, m = 2, 3, 4",
                               claim_status::proven,
                               "",
                               {}};
            for (std::size_t m = 2; m <= 4; ++m)
                c.cases.push_back(constant_case(family_spec::restricted_fubini(m),
                                                "m=" + std::to_string(m), 0, 10, 5));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restfubini_mod2",
                               "F(n; <=m) == 0 (mod 2) for n > m > 4",
                               claim_status::proven,
                               "checked for m = 5, 6, 7",
                               {}};
            for (std::size_t m = 5; m <= 7; ++m)
                c.cases.push_back(constant_case(family_spec::restricted_fubini(m),
                                                "m=" + std::to_string(m), 0, 2, m + 1));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restfact_period5_mod10",
                               "A(n+5; <=m) == A(n; <=m) (mod 10) for n > 2, m = 2, 3, 4",
                               claim_status::proven,
                               "",
                               {}};
            for (std::size_t m = 2; m <= 4; ++m)
                c.cases.push_back(periodic_case(family_spec::restricted_factorial(m),
                                                "m=" + std::to_string(m), 5, 10, 3));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"assocfub_parity",
                               "F(n; >=m) == 1 (mod 2) for n >= m",
                               claim_status::proven,
                               "checked for m = 1..5",
                               {}};
            for (std::size_t m = 1; m <= 5; ++m)
                c.cases.push_back(constant_case(family_spec::associated_fubini(m),
                                                "m=" + std::to_string(m), 1, 2, m));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"assocfub_period20_mod10",
                               "F(n+20; >=m) == F(n; >=m) (mod 10) for n >= 5, m = 2..5",
                               claim_status::proven,
                               "",
                               {}};
            for (std::size_t m = 2; m <= 5; ++m)
                c.cases.push_back(periodic_case(family_spec::associated_fubini(m),
                                                "m=" + std::to_string(m), 20, 10, 5));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restbell_prime_period",
                               "B(n+p; <=m) == B(n; <=m) (mod p) for primes p, m < p",
                               claim_status::proven,
                               "primes swept: 2, 3, 5, 7, 11, 13",
                               {}};
            for (std::size_t p : detail::claim_primes())
                for (std::size_t m = 1; m < p; ++m)
                    c.cases.push_back(periodic_case(
                        family_spec::restricted_bell(m),
                        "p=" + std::to_string(p) + ", m=" + std::to_string(m), p, p, 0));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restbell_period5_mod5",
                               "B(n+5; <=m) == B(n; <=m) (mod 5) for m = 2, 3, 4",
                               claim_status::proven,
                               "",
                               {}};
            for (std::size_t m = 2; m <= 4; ++m)
                c.cases.push_back(periodic_case(family_spec::restricted_bell(m),
                                                "m=" + std::to_string(m), 5, 5, 0));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restfact_prime_period",
                               "A(n+p; <=m) == A(n; <=m) (mod p) for primes p, m < p",
                               claim_status::proven,
                               "primes swept: 2, 3, 5, 7, 11, 13",
                               {}};
            for (std::size_t p : detail::claim_primes())
                for (std::size_t m = 1; m < p; ++m)
                    c.cases.push_back(periodic_case(
                        family_spec::restricted_factorial(m),
                        "p=" + std::to_string(p) + ", m=" + std::to_string(m), p, p, 0));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restfact_p_residue1",
                               "A(p; <=m) == 1 (mod p) for primes p, m < p",
                               claim_status::proven,
                               "primes swept: 2, 3, 5, 7, 11, 13",
                               {}};
            for (std::size_t p : detail::claim_primes())
                for (std::size_t m = 1; m < p; ++m)
                    c.cases.push_back(constant_case(
                        family_spec::restricted_factorial(m),
                        "p=" + std::to_string(p) + ", m=" + std::to_string(m), 1, p, p,
                        p));
            claims.push_back(std::move(c));
        }

        {
            congruence_claim c{"restfact_mod10",
                               "A(n; <=m) == 0 (mod 10) for n > m > 4",
                               claim_status::proven,
                               "checked for m = 5, 6, 7",
                               {}};
            for (std::size_t m = 5; m <= 7; ++m)
                c.cases.push_back(constant_case(family_spec::restricted_factorial(m),
                                                "m=" + std::to_string(m), 0, 10, m + 1));
            claims.push_back(std::move(c));
        }

        return claims;
    }();
    return reg;
}

inline const congruence_claim* find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

struct case_report {
    static constexpr std::size_t max_recorded_violations = 10;

    std::string label;
    std::string description;
    std::size_t from = 0;
    std::size_t to = 0;  // last index the case read
    std::size_t checked = 0;
    bool pass = true;
    std::vector<std::size_t> violations;  // first few offending indices
    std::size_t violation_count = 0;
};

struct claim_report {
    std::string id;
    claim_status status = claim_status::proven;
    bool pass = true;
    std::vector<case_report> cases;
};

namespace detail {

inline void record_violation(case_report& rep, std::size_t n) {
    rep.pass = false;
    ++rep.violation_count;
    if (rep.violations.size() < case_report::max_recorded_violations)
        rep.violations.push_back(n);
}

inline case_report verify_case(sequence_engine& eng, const claim_case& cc,
                               std::size_t n_max) {
    case_report rep;
    rep.label = cc.label.empty() ? cc.family.label() : cc.label;

    if (const auto* p = std::get_if<periodic_form>(&cc.form)) {
        rep.description = cc.family.label() + ": period " + std::to_string(p->period) +
                          " mod " + std::to_string(p->modulus) + " from n = " +
                          std::to_string(p->from);
        rep.from = p->from;
        rep.to = n_max;
        for (std::size_t n = p->from; n + p->period <= n_max; ++n) {
            ++rep.checked;
            if (residue(eng.value(cc.family, n + p->period), p->modulus) !=
                residue(eng.value(cc.family, n), p->modulus))
                record_violation(rep, n);
        }
    } else {
        const auto& c = std::get<constant_form>(cc.form);
        rep.description = cc.family.label() + ": value == " + std::to_string(c.residue) +
                          " mod " + std::to_string(c.modulus) + " from n = " +
                          std::to_string(c.from);
        if (c.to) rep.description += " to n = " + std::to_string(*c.to);
        rep.from = c.from;
        rep.to = c.to ? std::min(*c.to, n_max) : n_max;
        for (std::size_t n = c.from; n <= rep.to; ++n) {
            ++rep.checked;
            if (residue(eng.value(cc.family, n), c.modulus) != c.residue)
                record_violation(rep, n);
        }
    }
    return rep;
}

}  // namespace detail

inline claim_report verify_claim(sequence_engine& eng, const congruence_claim& claim,
                                 std::size_t n_max) {
    claim_report rep;
    rep.id = claim.id;
    rep.status = claim.status;
    for (const auto& cc : claim.cases) {
        rep.cases.push_back(detail::verify_case(eng, cc, n_max));
        if (!rep.cases.back().pass) rep.pass = false;
    }
    return rep;
}

inline claim_report verify_claim(sequence_engine& eng, const std::string& id,
                                 std::size_t n_max) {
    const congruence_claim* claim = find_claim(id);
    if (!claim) throw std::invalid_argument("unknown claim id: " + id);
    return verify_claim(eng, *claim, n_max);
}

struct period_report {
    family_spec family;
    std::uint64_t modulus = 0;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::size_t verified_up_to = 0;
    bool found = false;
};

// Finds the smallest period p <= max_period (and for it the smallest
// preperiod s) such that seq(n + p) == seq(n) (mod modulus) holds for all
// s <= n <= n_max - p, accepting only windows that provide at least two
// full periods of comparisons past the preperiod. A report says the
// residues repeat on the checked window; it proves nothing beyond n_max.
inline period_report detect_period(sequence_engine& eng, const family_spec& f,
                                   std::uint64_t modulus, std::size_t n_max,
                                   std::size_t max_period) {
    if (modulus < 2)
        throw std::invalid_argument("detect_period: modulus must be at least 2");
    if (max_period < 1)
        throw std::invalid_argument("detect_period: max_period must be at least 1");
    if (n_max < 3 * max_period)
        throw std::invalid_argument(
            "detect_period: window too small, need n_max >= 3 * max_period");

    std::vector<std::uint64_t> res;
    res.reserve(n_max + 1);
    for (const Int& v : eng.window(f, 0, n_max + 1).values)
        res.push_back(residue(v, modulus));

    period_report rep{f, modulus, 0, 0, n_max, false};

    for (std::size_t p = 1; p <= max_period; ++p) {
        std::size_t s = 0;
        for (std::size_t n = 0; n + p <= n_max; ++n)
            if (res[n + p] != res[n]) s = n + 1;
        const std::size_t comparisons = n_max - p >= s ? n_max - p - s + 1 : 0;
        if (comparisons >= 2 * p) {
            rep.found = true;
            rep.preperiod = s;
            rep.period = p;
            return rep;
        }
    }
    return rep;
}

}  // namespace stirlab
