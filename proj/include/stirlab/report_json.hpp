#pragma once

// JSON renderings of the CLI results. Every document carries a versioned
// "schema" tag, and big integers are serialized as decimal strings so no
// consumer is tempted to read them as floats.

#include <json.hpp>

#include <string>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/congruences.hpp"
#include "stirlab/oracle_audit.hpp"
#include "stirlab/sequences.hpp"
#include "stirlab/triangle.hpp"

namespace stirlab {

using json = nlohmann::json;

inline json to_json(const sequence_window& w) {
    json values = json::array();
    for (const Int& v : w.values) values.push_back(to_decimal(v));
    json doc{{"schema", "stirlab/compute/1"},
             {"family", w.family.name()},
             {"start", w.start},
             {"values", std::move(values)}};
    if (w.family.has_param())
        doc[w.family.param_letter()] = w.family.param();
    return doc;
}

inline json triangle_rows_to_json(const triangle_kind& kind,
                                  std::size_t from,
                                  const std::vector<std::vector<Int>>& rows) {
    json out = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json values = json::array();
        for (const Int& v : rows[i]) values.push_back(to_decimal(v));
        out.push_back(json{{"n", from + i}, {"values", std::move(values)}});
    }
    return json{{"schema", "stirlab/triangle/1"},
                {"kind", kind.key()},
                {"display", kind.display()},
                {"rows", std::move(out)}};
}

inline json to_json(const case_report& c) {
    return json{{"label", c.label},         {"description", c.description},
                {"from", c.from},           {"to", c.to},
                {"checked", c.checked},     {"pass", c.pass},
                {"violations", c.violations}, {"violation_count", c.violation_count}};
}

inline json to_json(const claim_report& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    return json{{"id", r.id},
                {"status", to_string(r.status)},
                {"pass", r.pass},
                {"cases", std::move(cases)}};
}

inline json verification_to_json(const std::vector<claim_report>& reports,
                                 std::size_t n_max) {
    bool pass = true;
    json claims = json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        claims.push_back(to_json(r));
    }
    return json{{"schema", "stirlab/verify/1"},
                {"n_max", n_max},
                {"pass", pass},
                {"claims", std::move(claims)}};
}

inline json to_json(const period_report& r) {
    json doc{{"schema", "stirlab/detect/1"},
             {"family", r.family.name()},
             {"modulus", r.modulus},
             {"n_max", r.verified_up_to},
             {"found", r.found}};
    if (r.family.has_param())
        doc[r.family.param_letter()] = r.family.param();
    if (r.found) {
        doc["period"] = r.period;
        doc["preperiod"] = r.preperiod;
    }
    return doc;
}

inline json audit_to_json(const std::vector<audit_check>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        json entry{{"name", c.name}, {"comparisons", c.comparisons}, {"pass", c.pass}};
        if (!c.pass) entry["detail"] = c.detail;
        out.push_back(std::move(entry));
    }
    return json{{"schema", "stirlab/oracle/1"},
                {"pass", all_pass(checks)},
                {"checks", std::move(out)}};
}

}  // namespace stirlab
