// Command-line frontend: compute sequence values and triangle rows, verify
// the registered modular claims, detect last-digit periods, and audit the
// engines against the brute-force enumerator.
//
// Exit codes: 0 success (including "no period found"), 1 a verification or
// audit reported failures, 2 bad arguments, 3 a cap or enumeration guard.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stirlab/cache.hpp"
#include "stirlab/closed_forms.hpp"
#include "stirlab/congruences.hpp"
#include "stirlab/errors.hpp"
#include "stirlab/oracle_audit.hpp"
#include "stirlab/report_json.hpp"
#include "stirlab/sequences.hpp"
#include "stirlab/triangle.hpp"

namespace {

using namespace stirlab;

family_spec resolve_family(const std::string& name, std::optional<std::size_t> m,
                           std::optional<std::size_t> r) {
    auto id = family_by_name(name);
    if (!id)
        throw std::invalid_argument("unknown family '" + name +
                                    "'; see `stirlab families list`");
    std::string letter;
    for (const auto& info : family_catalog())
        if (info.id == *id) letter = info.parameter;

    if (letter.empty()) {
        if (m || r) throw std::invalid_argument(name + " takes no parameter");
        return make_family(*id, 0);
    }
    if (letter == "m") {
        if (r) throw std::invalid_argument(name + " takes --m, not --r");
        if (!m) throw std::invalid_argument(name + " requires --m");
        return make_family(*id, *m);
    }
    if (m) throw std::invalid_argument(name + " takes --r, not --m");
    if (!r) throw std::invalid_argument(name + " requires --r");
    return make_family(*id, *r);
}

std::pair<std::size_t, std::size_t> resolve_range(std::optional<std::size_t> n,
                                                  std::optional<std::size_t> from,
                                                  std::optional<std::size_t> to) {
    if (n) {
        if (from || to)
            throw std::invalid_argument("--n conflicts with --from/--to");
        return {*n, *n};
    }
    if (!to) throw std::invalid_argument("need --n, or --to (with optional --from)");
    const std::size_t lo = from.value_or(0);
    if (*to < lo) throw std::invalid_argument("--to must not be below --from");
    return {lo, *to};
}

triangle_kind resolve_kind(const std::string& name, std::optional<std::size_t> r,
                           std::optional<std::size_t> max_m,
                           std::optional<std::size_t> min_m) {
    const int variants = (r ? 1 : 0) + (max_m ? 1 : 0) + (min_m ? 1 : 0);
    if (variants > 1)
        throw std::invalid_argument("choose at most one of --r, --max, --min");
    if (name == "second") {
        if (r) return triangle_kind::second_r(*r);
        if (max_m) return triangle_kind::second_max(*max_m);
        if (min_m) return triangle_kind::second_min(*min_m);
        return triangle_kind::second();
    }
    if (name == "first") {
        if (r || min_m)
            throw std::invalid_argument("first-kind triangles support only --max");
        if (max_m) return triangle_kind::first_max(*max_m);
        return triangle_kind::first();
    }
    throw std::invalid_argument("unknown triangle kind '" + name +
                                "' (expected: second, first)");
}

void print_window(const sequence_window& w, const std::string& format, bool bare) {
    if (format == "json") {
        std::cout << to_json(w).dump(2) << "\n";
        return;
    }
    if (format == "csv") std::cout << "n,value\n";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (format == "csv")
            std::cout << w.start + i << "," << to_decimal(w.values[i]) << "\n";
        else if (bare)
            std::cout << to_decimal(w.values[i]) << "\n";
        else
            std::cout << w.start + i << " " << to_decimal(w.values[i]) << "\n";
    }
}

void print_rows(const triangle_kind& kind, std::size_t from,
                const std::vector<std::vector<Int>>& rows, const std::string& format) {
    if (format == "json") {
        std::cout << triangle_rows_to_json(kind, from, rows).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "n,k,value\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t k = 0; k < rows[i].size(); ++k)
                std::cout << from + i << "," << k << "," << to_decimal(rows[i][k])
                          << "\n";
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << "n=" << from + i << ":";
        for (const Int& v : rows[i]) std::cout << " " << to_decimal(v);
        std::cout << "\n";
    }
}

int print_verification(const std::vector<claim_report>& reports, std::size_t n_max,
                       const std::string& format) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;

    if (format == "json") {
        std::cout << verification_to_json(reports, n_max).dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "claim " << r.id << " [" << to_string(r.status)
                      << "]: " << (r.pass ? "pass" : "FAIL") << "\n";
            for (const auto& c : r.cases) {
                std::cout << "  " << c.description << ": checked " << c.checked;
                if (c.pass) {
                    std::cout << ", ok\n";
                    continue;
                }
                std::cout << ", " << c.violation_count << " violations at n =";
                for (std::size_t v : c.violations) std::cout << " " << v;
                if (c.violation_count > c.violations.size()) std::cout << " ...";
                std::cout << "\n";
            }
        }
        std::cout << (pass ? "pass" : "FAIL") << " (n_max = " << n_max << ")\n";
    }
    return pass ? 0 : 1;
}

int print_audit(const std::vector<audit_check>& checks, const std::string& format) {
    if (format == "json") {
        std::cout << audit_to_json(checks).dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.comparisons
                      << " comparisons)";
            if (!c.pass) std::cout << " " << c.detail;
            std::cout << "\n";
        }
        std::cout << (all_pass(checks) ? "pass" : "FAIL") << "\n";
    }
    return all_pass(checks) ? 0 : 1;
}

std::string format_help(const char* extra) {
    return std::string("output format: ") + extra;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for block- and cycle-constrained partition counts:"
                 " triangles, derived sequences, modular-period claims, and"
                 " brute-force audits"};
    app.require_subcommand(1);
    std::function<int()> run;

    // compute <family> [--m|--r] (--n | [--from] --to) [--format]
    auto* compute = app.add_subcommand("compute", "sequence values for one family");
    std::string comp_family;
    std::optional<std::size_t> comp_m, comp_r, comp_n, comp_from, comp_to;
    std::string comp_format = "plain";
    compute->add_option("family", comp_family, "family name from `families list`")
        ->required();
    compute->add_option("--m", comp_m, "block/cycle size bound");
    compute->add_option("--r", comp_r, "number of pairwise separated elements");
    compute->add_option("--n", comp_n, "single index");
    compute->add_option("--from", comp_from, "first index (default 0)");
    compute->add_option("--to", comp_to, "last index");
    compute->add_option("--format", comp_format, format_help("plain, csv, json"))
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    compute->callback([&] {
        run = [&] {
            const family_spec f = resolve_family(comp_family, comp_m, comp_r);
            const auto [lo, hi] = resolve_range(comp_n, comp_from, comp_to);
            sequence_engine eng;
            print_window(eng.window(f, lo, hi - lo + 1), comp_format,
                         comp_n.has_value());
            return 0;
        };
    });

    // triangle <second|first> [--r|--max|--min] (--n | [--from] --to)
    auto* tri = app.add_subcommand("triangle", "triangle rows for one variant");
    std::string tri_kind_name;
    std::optional<std::size_t> tri_r, tri_max, tri_min, tri_n, tri_from, tri_to;
    std::string tri_format = "plain";
    std::string tri_cache_dir;
    bool tri_no_cache = false;
    tri->add_option("kind", tri_kind_name, "second or first")->required();
    tri->add_option("--r", tri_r, "first r elements pairwise separated (second kind)");
    tri->add_option("--max", tri_max, "maximum block/cycle size");
    tri->add_option("--min", tri_min, "minimum block size (second kind)");
    tri->add_option("--n", tri_n, "single row");
    tri->add_option("--from", tri_from, "first row (default 0)");
    tri->add_option("--to", tri_to, "last row");
    tri->add_option("--format", tri_format, format_help("plain, csv, json"))
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    tri->add_option("--cache-dir", tri_cache_dir,
                    "row cache directory (default: $STIRLAB_CACHE_DIR)");
    tri->add_flag("--no-cache", tri_no_cache, "bypass the row cache");
    tri->callback([&] {
        run = [&] {
            const triangle_kind kind =
                resolve_kind(tri_kind_name, tri_r, tri_max, tri_min);
            const auto [lo, hi] = resolve_range(tri_n, tri_from, tri_to);

            std::string cache_dir = tri_cache_dir;
            if (cache_dir.empty())
                if (const char* env = std::getenv("STIRLAB_CACHE_DIR"))
                    cache_dir = env;

            triangle t(kind);
            std::size_t seeded = 0;
            std::optional<triangle_row_cache> cache;
            if (!tri_no_cache && !cache_dir.empty()) {
                cache.emplace(cache_dir);
                auto rows = cache->load(kind);
                if (!rows.empty() && rows.size() - 1 > t.row_cap())
                    rows.resize(t.row_cap() + 1);
                seeded = rows.size();
                t.seed(std::move(rows));
            }
            t.ensure(hi);
            if (cache && t.rows_computed() > seeded) cache->store(kind, t.rows());

            std::vector<std::vector<Int>> slice;
            for (std::size_t n = lo; n <= hi; ++n) slice.push_back(t.row(n));
            print_rows(kind, lo, slice, tri_format);
            return 0;
        };
    });

    // verify [<claim id>] [--all] [--n-max] [--format]
    auto* verify = app.add_subcommand("verify", "check registered modular claims");
    std::string verify_id;
    bool verify_all = false;
    std::size_t verify_n_max = 200;
    std::string verify_format = "plain";
    verify->add_option("id", verify_id, "claim id from the registry");
    verify->add_flag("--all", verify_all, "verify the whole registry");
    verify->add_option("--n-max", verify_n_max, "sweep bound (default 200)");
    verify->add_option("--format", verify_format, format_help("plain, json"))
        ->check(CLI::IsMember({"plain", "json"}));
    verify->callback([&] {
        run = [&] {
            if (verify_all != verify_id.empty())
                throw std::invalid_argument("give either a claim id or --all");
            sequence_engine eng;
            std::vector<claim_report> reports;
            if (verify_all)
                for (const auto& claim : claim_registry())
                    reports.push_back(verify_claim(eng, claim, verify_n_max));
            else
                reports.push_back(verify_claim(eng, verify_id, verify_n_max));
            return print_verification(reports, verify_n_max, verify_format);
        };
    });

    // detect <family> [--m|--r] --mod [--n-max] [--max-period] [--format]
    auto* detect = app.add_subcommand("detect", "find an eventual period of the last"
                                                " residues on a window");
    std::string det_family;
    std::optional<std::size_t> det_m, det_r;
    std::uint64_t det_mod = 0;
    std::size_t det_n_max = 200, det_max_period = 50;
    std::string det_format = "plain";
    detect->add_option("family", det_family, "family name from `families list`")
        ->required();
    detect->add_option("--m", det_m, "block/cycle size bound");
    detect->add_option("--r", det_r, "number of pairwise separated elements");
    detect->add_option("--mod", det_mod, "modulus (>= 2)")->required();
    detect->add_option("--n-max", det_n_max, "window size (default 200)");
    detect->add_option("--max-period", det_max_period,
                       "largest period to try (default 50)");
    detect->add_option("--format", det_format, format_help("plain, json"))
        ->check(CLI::IsMember({"plain", "json"}));
    detect->callback([&] {
        run = [&] {
            const family_spec f = resolve_family(det_family, det_m, det_r);
            sequence_engine eng;
            const period_report rep =
                detect_period(eng, f, det_mod, det_n_max, det_max_period);
            if (det_format == "json") {
                std::cout << to_json(rep).dump(2) << "\n";
            } else if (rep.found) {
                std::cout << f.label() << " mod " << rep.modulus << ": period "
                          << rep.period << ", preperiod " << rep.preperiod
                          << ", residues repeat for n <= " << rep.verified_up_to
                          << " (verified on this window only)\n";
            } else {
                std::cout << f.label() << " mod " << rep.modulus
                          << ": none found up to period " << det_max_period
                          << " on n <= " << rep.verified_up_to << "\n";
            }
            return 0;
        };
    });

    // oracle <triangles|sequences> [--n-max] [--max-param] [--format]
    auto* orc = app.add_subcommand("oracle", "audit engines against brute-force"
                                             " enumeration");
    std::string orc_what;
    std::size_t orc_n_max = 10, orc_max_param = 4;
    std::string orc_format = "plain";
    orc->add_option("check", orc_what, "triangles or sequences")
        ->required()
        ->check(CLI::IsMember({"triangles", "sequences"}));
    orc->add_option("--n-max", orc_n_max, "largest instance (guard: 12; permutation"
                                          " checks clamp to 9)");
    orc->add_option("--max-param", orc_max_param, "largest m and r (default 4)");
    orc->add_option("--format", orc_format, format_help("plain, json"))
        ->check(CLI::IsMember({"plain", "json"}));
    orc->callback([&] {
        run = [&] {
            const auto checks = orc_what == "triangles"
                                    ? audit_triangles(orc_n_max, orc_max_param)
                                    : audit_sequences(orc_n_max, orc_max_param);
            return print_audit(checks, orc_format);
        };
    });

    // families list
    auto* families = app.add_subcommand("families", "the sequence family catalog");
    families->require_subcommand(1);
    families->add_subcommand("list", "one line per family")->callback([&] {
        run = [&] {
            for (const auto& info : family_catalog()) {
                std::cout << info.name;
                if (info.parameter[0]) std::cout << " --" << info.parameter;
                std::cout << "  (" << info.description << ")\n";
            }
            return 0;
        };
    });

    // formulas list
    auto* formulas = app.add_subcommand("formulas", "the closed-form registry");
    formulas->require_subcommand(1);
    formulas->add_subcommand("list", "one line per formula")->callback([&] {
        run = [&] {
            for (const auto& f : closed_form_registry()) {
                std::cout << f.id << ": " << f.statement;
                if (f.quarantined) std::cout << "  [quarantined: " << f.note << "]";
                std::cout << "\n";
            }
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
