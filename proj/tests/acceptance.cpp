// Acceptance gate: seven criteria, one [PASS]/[FAIL] line each with its
// runtime, details on the first mismatches, exit 0 only when every criterion
// holds. Runs against the library alone.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/binomial.hpp"
#include "stirlab/closed_forms.hpp"
#include "stirlab/congruences.hpp"
#include "stirlab/oracle_audit.hpp"
#include "stirlab/sequences.hpp"
#include "stirlab/triangle.hpp"

using namespace stirlab;

namespace {

struct checker {
    bool ok = true;
    std::size_t failures = 0;
    std::vector<std::string> details;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        ++failures;
        if (details.size() < 12) details.push_back(what);
    }
};

int criteria_failed = 0;

void criterion(int num, const std::string& name,
               const std::function<void(checker&)>& body) {
    checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name
              << " (" << ms << " ms)\n";
    for (const auto& d : c.details) std::cout << "       " << d << "\n";
    if (c.failures > c.details.size())
        std::cout << "       ... and " << c.failures - c.details.size() << " more\n";
    std::cout.flush();
    if (!c.ok) ++criteria_failed;
}

sequence_engine eng;

struct golden_table {
    family_spec f;
    std::size_t start;
    std::vector<long long> values;
};

// Rows as printed in the source tables; the assoc-bell m=4 row follows the
// exhaustive enumeration where the printed table shifts a column.
const std::vector<golden_table>& golden_tables() {
    static const std::vector<golden_table> tables = {
        {family_spec::fubini(), 1,
         {1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563}},
        {family_spec::r_fubini(2), 1,
         {10, 62, 466, 4142, 42610, 498542, 6541426, 95160302}},
        {family_spec::r_fubini(3), 1,
         {42, 342, 3210, 34326, 413322, 5544342, 82077450, 1330064406}},
        {family_spec::restricted_bell(2), 1,
         {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696}},
        {family_spec::restricted_bell(3), 1,
         {1, 2, 5, 14, 46, 166, 652, 2780, 12644, 61136, 312676}},
        {family_spec::restricted_bell(4), 1,
         {1, 2, 5, 15, 51, 196, 827, 3795, 18755, 99146, 556711}},
        {family_spec::restricted_factorial(3), 1,
         {1, 2, 6, 18, 66, 276, 1212, 5916, 31068, 171576, 1014696}},
        {family_spec::restricted_factorial(4), 1,
         {1, 2, 6, 24, 96, 456, 2472, 14736, 92304, 632736, 4661856}},
        {family_spec::associated_bell(2), 1,
         {0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253}},
        {family_spec::associated_bell(3), 1,
         {0, 0, 1, 1, 1, 11, 36, 92, 491, 2557, 11353}},
        {family_spec::associated_bell(4), 1,
         {0, 0, 0, 1, 1, 1, 1, 36, 127, 337, 793}},
        {family_spec::associated_fubini(2), 1,
         {0, 1, 1, 7, 21, 141, 743, 5699, 42241, 382153, 3586155}},
        {family_spec::associated_fubini(3), 1,
         {0, 0, 1, 1, 1, 21, 71, 183, 2101, 13513, 64285}},
        {family_spec::associated_fubini(4), 1,
         {0, 0, 0, 1, 1, 1, 1, 71, 253, 673, 1585}},
    };
    return tables;
}

void check_golden_tables(checker& c) {
    for (const auto& t : golden_tables())
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            const std::size_t n = t.start + i;
            const Int got = eng.value(t.f, n);
            c.expect(got == t.values[i],
                     t.f.label() + " at n=" + std::to_string(n) + ": got " +
                         to_decimal(got) + ", table says " +
                         std::to_string(t.values[i]));
        }

    c.expect(eng.value(family_spec::fubini(), 10) == 102247563, "F_10");
    c.expect(eng.value(family_spec::r_fubini(2), 8) == 95160302, "F_{8,2}");
    c.expect(eng.value(family_spec::restricted_factorial(4), 11) == 4661856,
             "A_{11,<=4}");
    c.expect(eng.value(family_spec::associated_fubini(2), 11) == 3586155,
             "F_{11,>=2}");
}

void check_congruence_sweep(checker& c) {
    for (const auto& claim : claim_registry()) {
        const claim_report rep = verify_claim(eng, claim, 1000);
        c.expect(rep.pass, "claim " + rep.id + " failed");
        for (const auto& cs : rep.cases)
            if (!cs.pass) {
                std::string where = cs.description + ": first violations at n =";
                for (std::size_t v : cs.violations) where += " " + std::to_string(v);
                c.expect(false, where);
            }
    }
}

void check_period_detection(checker& c) {
    struct detection_case {
        family_spec f;
        std::size_t stated;     // period as claimed
        std::size_t threshold;  // index the claim starts from
    };
    const std::vector<detection_case> cases = {
        {family_spec::fubini(), 4, 1},
        {family_spec::r_fubini(2), 4, 1},
        {family_spec::r_fubini(3), 4, 1},
        {family_spec::r_fubini(4), 4, 1},
        {family_spec::restricted_bell(2), 5, 2},
        {family_spec::restricted_bell(3), 5, 4},
        {family_spec::restricted_factorial(3), 5, 3},
        {family_spec::restricted_factorial(4), 5, 3},
        {family_spec::associated_fubini(2), 20, 5},
        {family_spec::associated_fubini(3), 20, 5},
        {family_spec::associated_fubini(4), 20, 5},
        {family_spec::associated_fubini(5), 20, 5},
    };

    const std::size_t n_max = 240;
    for (const auto& dc : cases) {
        const period_report rep = detect_period(eng, dc.f, 10, n_max, 60);
        c.expect(rep.found, dc.f.label() + ": no period found");
        if (!rep.found) continue;
        c.expect(dc.stated % rep.period == 0,
                 dc.f.label() + ": minimal period " + std::to_string(rep.period) +
                     " does not divide the stated " + std::to_string(dc.stated));
        c.expect(rep.preperiod <= dc.threshold,
                 dc.f.label() + ": preperiod " + std::to_string(rep.preperiod) +
                     " exceeds the stated threshold " + std::to_string(dc.threshold));
        for (std::size_t n = dc.threshold; n + dc.stated <= n_max; ++n)
            c.expect(residue(eng.value(dc.f, n), 10) ==
                         residue(eng.value(dc.f, n + dc.stated), 10),
                     dc.f.label() + ": stated period " + std::to_string(dc.stated) +
                         " broken at n=" + std::to_string(n));
    }
}

void check_negative_control(checker& c) {
    const period_report rep = detect_period(eng, family_spec::bell(), 10, 500, 100);
    c.expect(!rep.found, "Bell mod 10 reported a period " +
                             std::to_string(rep.period) + " with preperiod " +
                             std::to_string(rep.preperiod));
}

void check_oracle_equivalence(checker& c) {
    for (const auto& check : audit_triangles(10))
        c.expect(check.pass, check.name + ": " + check.detail);
    for (const auto& check : audit_sequences(10))
        c.expect(check.pass, check.name + ": " + check.detail);
}

void check_closed_form_suite(checker& c) {
    engine_context ctx;

    std::size_t quarantined = 0;
    for (const auto& rep : check_all_closed_forms(ctx, 200)) {
        std::string label = rep.id;
        if (rep.param != 0) label += "(" + std::to_string(rep.param) + ")";
        if (rep.quarantined) {
            ++quarantined;
            c.expect(rep.pass,
                     label + ": expected divergence not reproduced (first mismatch " +
                         (rep.first_mismatch ? std::to_string(*rep.first_mismatch)
                                             : std::string("none")) +
                         ")");
        } else {
            c.expect(rep.pass, label + ": " + std::to_string(rep.mismatched) + " of " +
                                   std::to_string(rep.checked) +
                                   " mismatched, first at n=" +
                                   (rep.first_mismatch
                                        ? std::to_string(*rep.first_mismatch)
                                        : std::string("-")));
        }
    }
    c.expect(quarantined == 2,
             "expected 2 quarantined forms, saw " + std::to_string(quarantined));

    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 40; ++n)
            c.expect(eval_cycle_type_sum(n, m) ==
                         eng.value(family_spec::restricted_factorial(m), n),
                     "cycle-type sum differs from A_{n,<=m} at n=" +
                         std::to_string(n) + ", m=" + std::to_string(m));

    for (std::size_t m = 1; m <= 4; ++m) {
        triangle& tri = ctx.tri(triangle_kind::second_min(m));
        for (std::size_t k = 1; k <= 4; ++k)
            for (std::size_t n = k * m; n <= 30; ++n)
                c.expect(eval_assoc_recursion(ctx, n, k, m) == tri.value(n, k),
                         "block-count recursion differs at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ", m=" + std::to_string(m));
    }
}

void check_properties(checker& c) {
    for (std::size_t m = 1; m <= 5; ++m) {
        const std::vector<family_spec> dual = {
            family_spec::restricted_bell(m),
            family_spec::restricted_fubini(m),
            family_spec::restricted_factorial(m),
            family_spec::associated_fubini(m),
        };
        for (const auto& f : dual)
            for (std::size_t n = 0; n <= 60; ++n)
                c.expect(eng.value(f, n) == value_by_recurrence(f, n),
                         f.label() + ": triangle route and direct recurrence differ"
                                     " at n=" +
                             std::to_string(n));
    }

    factorial_cache fact;
    {
        triangle tri(triangle_kind::second());
        for (std::size_t n = 0; n <= 25; ++n) {
            Int weighted = 0;
            for (std::size_t k = 0; k <= n; ++k)
                weighted += fact.at(k) * tri.value(n, k);
            c.expect(eng.value(family_spec::fubini(), n) == weighted,
                     "fubini != sum k! {n k} at n=" + std::to_string(n));
        }
    }
    for (std::size_t r = 1; r <= 3; ++r) {
        triangle tri(triangle_kind::second_r(r));
        for (std::size_t n = 0; n <= 20; ++n) {
            Int weighted = 0;
            for (std::size_t k = 0; k <= n; ++k)
                weighted += fact.at(k + r) * tri.value(n + r, k + r);
            c.expect(eng.value(family_spec::r_fubini(r), n) == weighted,
                     "r-fubini(" + std::to_string(r) +
                         ") != weighted row sum at n=" + std::to_string(n));
        }
    }
    for (std::size_t m = 1; m <= 4; ++m) {
        triangle hi(triangle_kind::second_max(m));
        triangle lo(triangle_kind::second_min(m));
        for (std::size_t n = 0; n <= 25; ++n) {
            Int restricted = 0, associated = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                restricted += fact.at(k) * hi.value(n, k);
                associated += fact.at(k) * lo.value(n, k);
            }
            c.expect(eng.value(family_spec::restricted_fubini(m), n) == restricted,
                     "restricted-fubini(" + std::to_string(m) +
                         ") != weighted row sum at n=" + std::to_string(n));
            c.expect(eng.value(family_spec::associated_fubini(m), n) == associated,
                     "assoc-fubini(" + std::to_string(m) +
                         ") != weighted row sum at n=" + std::to_string(n));
        }
    }

    for (std::size_t n = 0; n <= 60; ++n)
        c.expect(eng.value(family_spec::restricted_factorial(2), n) ==
                     eng.value(family_spec::restricted_bell(2), n),
                 "A_{n,<=2} != B_{n,<=2} at n=" + std::to_string(n));

    for (std::size_t n = 0; n <= 20; ++n)
        c.expect(eng.value(family_spec::restricted_fubini(1), n) == fact.at(n),
                 "F_{n,<=1} != n! at n=" + std::to_string(n));

    {
        triangle plain(triangle_kind::second());
        for (std::size_t n = 0; n <= 12; ++n)
            for (std::size_t m = std::max<std::size_t>(n, 1); m <= n + 2; ++m) {
                triangle capped(triangle_kind::second_max(m));
                for (std::size_t k = 0; k <= n; ++k)
                    c.expect(capped.value(n, k) == plain.value(n, k),
                             "{n k}_{<=m} != {n k} at n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) +
                                 ", m=" + std::to_string(m));
            }
    }

    for (std::size_t m = 1; m <= 8; ++m)
        c.expect(eng.value(family_spec::associated_fubini(m), m) == 1,
                 "F_{m,>=m} != 1 at m=" + std::to_string(m));

    engine_context ctx;
    for (const auto& f : closed_form_registry()) {
        const std::vector<std::size_t> params =
            f.check_params.empty() ? std::vector<std::size_t>{0} : f.check_params;
        for (std::size_t p : params) {
            const std::size_t from = f.first_valid(p);
            std::size_t to = from + 120;
            if (const auto hi = f.last_valid(p)) to = std::min(to, *hi);
            for (std::size_t n = from; n <= to; ++n) {
                try {
                    f.eval(ctx, n, p);
                } catch (const non_integral_error&) {
                    c.expect(false, f.id + ": non-integral value inside the validity"
                                            " window at n=" +
                                        std::to_string(n) +
                                        ", param=" + std::to_string(p));
                }
            }
        }
    }
}

}  // namespace

int main() {
    criterion(1, "golden tables reproduce exactly", check_golden_tables);
    criterion(2, "congruence registry sweep to n=1000", check_congruence_sweep);
    criterion(3, "period detection matches the stated claims", check_period_detection);
    criterion(4, "Bell numbers mod 10: no period up to 100", check_negative_control);
    criterion(5, "engines match exhaustive enumeration", check_oracle_equivalence);
    criterion(6, "closed forms match the engines on their windows",
              check_closed_form_suite);
    criterion(7, "structural properties hold", check_properties);

    if (criteria_failed == 0) {
        std::cout << "acceptance: all 7 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << criteria_failed << " criteria failed\n";
    return 1;
}
