// dyckodd: exact enumeration of Dyck paths and path prefixes whose descents
// obey odd-length constraints, with closed-form cross-checks and OEIS b-file
// comparison.  Every command is deterministic: fixed flags give fixed output.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyckodd/dyckodd.hpp"
#include "dyckodd/oeis_net.hpp"

namespace {

using namespace dyckodd;

enum class output_format { table, json, csv };

output_format parse_format(const std::string& name) {
    if (name == "table") return output_format::table;
    if (name == "json") return output_format::json;
    if (name == "csv") return output_format::csv;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string rational_str(const rational& v) { return v.str(); }

// ---- enumerate ----------------------------------------------------------

struct table_row {
    int n;
    layer lay;
    int height;
    bigint count;
};

std::vector<table_row> nonzero_rows(const count_table& table) {
    std::vector<table_row> rows;
    for (int n = 0; n <= table.n_max(); ++n)
        for (layer l : {layer::F, layer::G, layer::H})
            for (int h = 0; h <= table.n_max(); ++h) {
                const bigint& c = table.at(n, {l, h});
                if (c != 0) rows.push_back({n, l, h, c});
            }
    return rows;
}

int do_enumerate(path_class cls, int n_max, bool complete, output_format format) {
    count_table table = dp_counts(cls, n_max);
    if (complete) {
        std::vector<bigint> counts = complete_counts(table, cls);
        switch (format) {
            case output_format::table: {
                std::string sep;
                for (const bigint& c : counts) {
                    std::cout << sep << c.str();
                    sep = " ";
                }
                std::cout << "\n";
                break;
            }
            case output_format::json: {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t i = 0; i < counts.size(); ++i)
                    rows.push_back({{"semilength", i + 1}, {"count", counts[i].str()}});
                std::cout << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
                break;
            }
            case output_format::csv:
                std::cout << "semilength,count\n";
                for (std::size_t i = 0; i < counts.size(); ++i)
                    std::cout << i + 1 << "," << counts[i].str() << "\n";
                break;
        }
        return 0;
    }
    std::vector<table_row> rows = nonzero_rows(table);
    switch (format) {
        case output_format::table:
            std::cout << "n layer height count\n";
            for (const table_row& r : rows)
                std::cout << r.n << " " << to_string(r.lay) << " " << r.height << " "
                          << r.count.str() << "\n";
            break;
        case output_format::json: {
            nlohmann::json jrows = nlohmann::json::array();
            for (const table_row& r : rows)
                jrows.push_back({{"n", r.n},
                                 {"layer", to_string(r.lay)},
                                 {"height", r.height},
                                 {"count", r.count.str()}});
            std::cout << nlohmann::json{{"rows", jrows}}.dump(2) << "\n";
            break;
        }
        case output_format::csv:
            std::cout << "n,layer,height,count\n";
            for (const table_row& r : rows)
                std::cout << r.n << "," << to_string(r.lay) << "," << r.height << ","
                          << r.count.str() << "\n";
            break;
    }
    return 0;
}

// ---- expand --------------------------------------------------------------

struct expansion {
    series s;
    std::string variable;
};

// precision is certified in the *rendered* variable: z-targets get a window
// ending at z^precision, Z-targets at Z^precision (computed at 2*precision
// in z, then decimated).
expansion expand_target(const std::string& target, std::optional<int> j,
                        std::int64_t precision, bool inject_stall) {
    if (precision < 4) throw std::invalid_argument("--precision must be >= 4");
    if (target == "v1") {
        newton_options opts;
        if (inject_stall) opts.initial_iterate = series::monomial(2, -1, precision);
        return {solve_v1(precision, nullptr, opts), "z"};
    }
    if (target == "g0") return {g0_closed(2 * precision).decimate(), "Z"};
    if (target == "h0") return {h0_closed(2 * precision).decimate(), "Z"};
    if (target == "g0h0")
        return {(g0_closed(2 * precision) + h0_closed(2 * precision)).decimate(), "Z"};
    if (target == "bonus-g0") return {bonus_closed(2 * precision).g0.decimate(), "Z"};
    if (target == "fj" || target == "gj" || target == "hj") {
        if (!j) throw std::invalid_argument("--j is required for target '" + target + "'");
        layer l = target == "fj" ? layer::F : target == "gj" ? layer::G : layer::H;
        return {partial_closed(l, *j, precision), "z"};
    }
    throw std::invalid_argument("unknown target '" + target + "'");
}

int do_expand(const std::string& target, std::optional<int> j, std::int64_t precision,
              output_format format, bool inject_stall) {
    expansion e = expand_target(target, j, precision, inject_stall);
    switch (format) {
        case output_format::table:
            std::cout << "target: " << target << "\n";
            std::cout << "variable: " << e.variable << "\n";
            std::cout << target << " = " << e.s.str(e.variable) << "\n";
            break;
        case output_format::json: {
            nlohmann::json coeffs = nlohmann::json::array();
            for (std::int64_t k = e.s.valuation(); k < e.s.precision(); ++k)
                coeffs.push_back(rational_str(e.s.coeff(k)));
            nlohmann::json doc = {{"variable", e.variable},
                                  {"valuation", e.s.valuation()},
                                  {"coefficients", coeffs},
                                  {"precision", e.s.precision()}};
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case output_format::csv:
            std::cout << "exponent,coefficient\n";
            for (std::int64_t k = e.s.valuation(); k < e.s.precision(); ++k)
                std::cout << k << "," << rational_str(e.s.coeff(k)) << "\n";
            break;
    }
    return 0;
}

// ---- verify --------------------------------------------------------------

struct check_result {
    std::string name;
    bool passed;
    std::string detail;
};

std::optional<std::string> find_divergence(const count_table& a, const count_table& b) {
    int n_max = std::min(a.n_max(), b.n_max());
    for (int n = 0; n <= n_max; ++n)
        for (layer l : {layer::F, layer::G, layer::H})
            for (int h = 0; h <= n_max; ++h) {
                const bigint& x = a.at(n, {l, h});
                const bigint& y = b.at(n, {l, h});
                if (x != y)
                    return "first divergence at n=" + std::to_string(n) + " " +
                           to_string(layer_state{l, h}) + ": dp=" + x.str() +
                           " oracle=" + y.str();
            }
    return std::nullopt;
}

std::vector<check_result> run_identity_checks() {
    std::vector<check_result> out;
    const std::int64_t prec = 26;
    series g0 = g0_closed(prec);
    series g0_Z = g0.decimate();

    series rc = residue_cubic(g0_Z);
    out.push_back({"cubic-residue", rc.is_zero(),
                   rc.is_zero() ? "zero through Z^" + std::to_string(rc.precision() - 1)
                                : "nonzero at Z^" + std::to_string(rc.valuation())});

    series rf = residue_functional(g0);
    out.push_back({"functional-residue", rf.is_zero(),
                   rf.is_zero() ? "zero through z^" + std::to_string(rf.precision() - 1)
                                : "nonzero at z^" + std::to_string(rf.valuation())});

    // h0 = z^2/(v1^2 - z^2) and h0 = -v1/z - 1 + 1/z^2 must agree.
    series h0 = h0_closed(prec);
    series v1 = solve_v1(prec);
    series alt = -v1.shifted(-1) - series::one(prec - 1) + series::monomial(1, -2, prec - 1);
    bool h0_ok = agree(h0, alt);
    out.push_back({"h0-double-expression", h0_ok,
                   h0_ok ? "agree through z^" + std::to_string(std::min(h0.precision(),
                                                                        alt.precision()) - 1)
                         : "series disagree"});

    bonus_series b = bonus_closed(prec);
    series z = series::monomial(1, 1, prec + 2);
    bool f1_ok = agree(b.f1, z + z * b.g0);
    out.push_back({"bonus-f1-relation", f1_ok,
                   f1_ok ? "f1 = z + z*g0 through z^" + std::to_string(b.f1.precision() - 1)
                         : "series disagree"});
    bool g0_ok = agree(b.g0, z * (b.f1 + b.g1 + b.h1));
    out.push_back({"bonus-g0-relation", g0_ok,
                   g0_ok ? "g0 = z(f1+g1+h1) through z^" + std::to_string(b.g0.precision() - 1)
                         : "series disagree"});
    return out;
}

series closed_complete_series(path_class cls, std::int64_t z_precision) {
    switch (cls) {
        case path_class::odd_all: return g0_closed(z_precision);
        case path_class::odd_last_even: return h0_closed(z_precision);
        case path_class::odd_last_any:
            return g0_closed(z_precision) + h0_closed(z_precision);
        case path_class::bonus_interior_odd: return bonus_closed(z_precision).g0;
    }
    throw std::invalid_argument("unknown path class");
}

std::vector<check_result> run_triple_agreement(int n_max, bool inject_mismatch) {
    std::vector<check_result> out;
    if (n_max < 2 || n_max > oracle_max_steps)
        throw std::invalid_argument("--n must lie in 2.." + std::to_string(oracle_max_steps) +
                                    " for triple-agreement");
    for (path_class cls : all_path_classes) {
        std::string tag = "[" + to_string(cls) + "]";
        count_table dp = dp_counts(cls, n_max);
        count_table oracle = oracle_counts(cls, n_max);
        if (inject_mismatch && cls == path_class::odd_all)
            oracle.add(2, {layer::G, 1}, bigint(1));
        std::optional<std::string> div = find_divergence(dp, oracle);
        out.push_back({"dp-vs-oracle" + tag, !div,
                       div ? *div : "tables equal through n=" + std::to_string(n_max)});

        series closed = closed_complete_series(cls, n_max + 2);
        bool ok = true;
        std::string detail = "complete counts equal for semilength 1.." +
                             std::to_string(n_max / 2);
        for (int m = 1; m <= n_max / 2; ++m) {
            rational c = closed.coeff(2 * m);
            bigint dp_count = count_complete(dp, cls, m);
            if (!is_integer(c) || numerator(c) != dp_count) {
                ok = false;
                detail = "first divergence at semilength " + std::to_string(m) + ": closed=" +
                         rational_str(c) + " dp=" + dp_count.str();
                break;
            }
        }
        out.push_back({"dp-vs-closed" + tag, ok, detail});
    }

    // Partial families against the DP, strict all-odd class.
    count_table dp = dp_counts(path_class::odd_all, n_max);
    for (int j = 0; j <= 6; ++j) {
        bool ok = true;
        std::string detail = "f_j,g_j,h_j match DP through n=" + std::to_string(n_max);
        for (layer l : {layer::F, layer::G, layer::H}) {
            series closed = partial_closed(l, j, std::max<std::int64_t>(4, n_max + 1));
            series counted = partial_series(dp, l, j);
            if (!agree(closed, counted)) {
                ok = false;
                detail = "divergence in layer " + to_string(l) + " at j=" + std::to_string(j);
                break;
            }
        }
        out.push_back({"partial-closed-vs-dp[j=" + std::to_string(j) + "]", ok, detail});
    }
    return out;
}

int do_verify(const std::string& suite, int n_max, bool inject_mismatch) {
    std::vector<check_result> results;
    if (suite == "identities" || suite == "all") {
        std::vector<check_result> ids = run_identity_checks();
        results.insert(results.end(), ids.begin(), ids.end());
    }
    if (suite == "triple-agreement" || suite == "all") {
        std::vector<check_result> tri = run_triple_agreement(n_max, inject_mismatch);
        results.insert(results.end(), tri.begin(), tri.end());
    }
    if (results.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    bool all_passed = true;
    for (const check_result& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " - " << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    std::cout << (all_passed ? "verify: all checks passed\n" : "verify: checks FAILED\n");
    return all_passed ? 0 : 1;
}

// ---- oeis ----------------------------------------------------------------

int do_oeis(const std::string& id, const std::string& target, std::optional<int> j,
            std::int64_t precision, std::optional<std::int64_t> start_power,
            std::int64_t count, bool network, const std::string& base_url,
            const std::string& fixture_dir) {
    sequence_record rec = network
                              ? fetch_bfile(base_url, id)
                              : (fixture_dir.empty() ? load_fixture(id)
                                                     : load_fixture(id, fixture_dir));
    expansion e = expand_target(target, j, precision, false);
    std::int64_t sp = start_power ? *start_power : e.s.valuation();
    comparison_report report = compare(e.s, rec, sp, count);
    if (report.all_equal()) {
        std::cout << id << " vs " << target << ": " << report.terms_compared
                  << " terms starting at " << e.variable << "^" << report.start_power
                  << ": all equal\n";
        return 0;
    }
    const term_mismatch& first = report.mismatches.front();
    std::cout << id << " vs " << target << ": first mismatch at term "
              << (first.power - report.start_power) << " (" << e.variable << "^" << first.power
              << "): series=" << rational_str(first.series_value)
              << " oeis=" << first.oeis_value.str() << "\n";
    std::cout << "mismatches: " << report.mismatches.size() << " of "
              << report.terms_compared << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dyckodd: exact, deterministic enumeration of Dyck paths and prefixes with "
        "odd-descent constraints, closed-form expansions, and OEIS cross-checks"};
    app.require_subcommand(1);

    std::string cls_name = "odd-all";
    int n_max = 14;
    bool complete = false;
    std::string format_name = "table";
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "Count path prefixes by step count, layer, and height");
    cmd_enumerate
        ->add_option("--class", cls_name,
                     "path class: odd-all, odd-last-even, odd-last-any, bonus")
        ->required();
    cmd_enumerate->add_option("--n", n_max, "maximum step count")
        ->required()
        ->check(CLI::Range(0, 4096));
    cmd_enumerate->add_flag("--complete", complete,
                            "emit complete-path counts by semilength instead of the table");
    cmd_enumerate->add_option("--format", format_name, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    std::string target;
    std::optional<int> j_index;
    std::int64_t precision = 24;
    bool inject_stall = false;
    CLI::App* cmd_expand =
        app.add_subcommand("expand", "Print a closed-form series expansion");
    cmd_expand
        ->add_option("--target", target,
                     "one of: v1, g0, h0, g0h0, bonus-g0, fj, gj, hj")
        ->required()
        ->check(CLI::IsMember({"v1", "g0", "h0", "g0h0", "bonus-g0", "fj", "gj", "hj"}));
    cmd_expand->add_option("--j", j_index, "state index for fj/gj/hj")->check(CLI::Range(0, 64));
    cmd_expand->add_option("--precision", precision, "certified precision in the rendered variable")
        ->check(CLI::Range(static_cast<std::int64_t>(4), static_cast<std::int64_t>(4096)));
    cmd_expand->add_option("--format", format_name, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd_expand->add_flag("--inject-stall", inject_stall)->group("");  // test hook

    std::string suite = "all";
    int verify_n = 14;
    bool inject_mismatch = false;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Run identity and route-agreement checks; nonzero exit on failure");
    cmd_verify->add_option("--suite", suite, "identities, triple-agreement, or all")
        ->check(CLI::IsMember({"identities", "triple-agreement", "all"}));
    cmd_verify->add_option("--n", verify_n, "step bound for route agreement")
        ->check(CLI::Range(2, 28));
    cmd_verify->add_flag("--inject-mismatch", inject_mismatch)->group("");  // test hook

    std::string id;
    std::string oeis_target;
    std::optional<std::int64_t> start_power;
    std::int64_t count = 11;
    std::int64_t oeis_precision = 40;
    bool network = false;
    std::string base_url = "https://oeis.org";
    std::string fixture_dir;
    CLI::App* cmd_oeis =
        app.add_subcommand("oeis", "Compare an expansion against an OEIS b-file");
    cmd_oeis->add_option("--id", id, "sequence id, e.g. A101785")->required();
    cmd_oeis->add_option("--target", oeis_target, "series to compare (see expand)")
        ->required()
        ->check(CLI::IsMember({"v1", "g0", "h0", "g0h0", "bonus-g0", "fj", "gj", "hj"}));
    cmd_oeis->add_option("--j", j_index, "state index for fj/gj/hj")->check(CLI::Range(0, 64));
    cmd_oeis->add_option("--count", count, "number of terms to compare")
        ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(4096)));
    cmd_oeis->add_option("--start-power", start_power,
                         "series power aligned with the b-file's first term "
                         "(default: the series valuation)");
    cmd_oeis->add_option("--precision", oeis_precision,
                         "certified precision in the rendered variable")
        ->check(CLI::Range(static_cast<std::int64_t>(4), static_cast<std::int64_t>(4096)));
    cmd_oeis->add_flag("--network", network, "fetch the b-file over HTTP instead of fixtures");
    cmd_oeis->add_option("--base-url", base_url, "b-file host (with --network)");
    cmd_oeis->add_option("--fixture-dir", fixture_dir,
                         "b-file directory (default: $DYCKODD_FIXTURE_DIR or built-in)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        output_format format = parse_format(format_name);
        if (cmd_enumerate->parsed())
            return do_enumerate(parse_path_class(cls_name), n_max, complete, format);
        if (cmd_expand->parsed())
            return do_expand(target, j_index, precision, format, inject_stall);
        if (cmd_verify->parsed()) return do_verify(suite, verify_n, inject_mismatch);
        if (cmd_oeis->parsed())
            return do_oeis(id, oeis_target, j_index, oeis_precision, start_power, count,
                           network, base_url, fixture_dir);
        return 2;
    } catch (const oeis_not_found& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const oeis_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const oeis_network_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const non_convergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const division_by_zero_series& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const odd_coefficient_present& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const precision_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const negative_valuation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
