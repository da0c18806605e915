// Command-line front end: build arrays, run TP / PF / production checks,
// scan counterexample families and replay the reference fixtures.
//
// Exit codes: 0 success, 1 assertion or fixture failure, 2 usage/input error.

#include "tpriordan/arrays.hpp"
#include "tpriordan/counterexamples.hpp"
#include "tpriordan/fixtures.hpp"
#include "tpriordan/io.hpp"
#include "tpriordan/sequences.hpp"
#include "tpriordan/tp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace tpr;

constexpr int kOk = 0;
constexpr int kAssertFailed = 1;
constexpr int kInputError = 2;

Rational flag_rational(const std::string& text, const std::string& name) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw InputError("--" + name + ": " + e.what());
    }
}

GridSpec flag_grid(const std::string& min, const std::string& max, const std::string& step, const std::string& axis) {
    GridSpec g{flag_rational(min, axis + "-min"), flag_rational(max, axis + "-max"), flag_rational(step, axis + "-step")};
    if (g.step <= 0) {
        throw InputError("--" + axis + "-step: malformed grid, step must be positive");
    }
    return g;
}

struct Options {
    std::string spec_path;
    std::size_t n = 8;
    std::size_t search_n = 6;
    std::size_t max_order = 4;
    bool quasi = false;
    bool assert_tp = false;
    bool riordan = false;
    std::string format = "text";
    std::string out_path;
    std::string w0 = "0", w1 = "0", z0 = "0", z1 = "0";
    std::size_t k1 = 0, k2 = 1, col = 1;
    std::string alpha_min = "1/4", alpha_max = "4", alpha_step = "1/4";
    std::string beta_min = "1/4", beta_max = "4", beta_step = "1/4";
    std::string ratio = "2";
    std::string family = "geometric";
    std::vector<std::string> only;
    bool list = false;
    unsigned threads = 0;
};

Matrix build_matrix(const RiordanSpec& spec, std::size_t n, bool quasi) {
    return quasi ? quasi_truncation(spec, n) : riordan_truncation(spec, n);
}

int cmd_build(const Options& o) {
    const auto format = parse_matrix_format(o.format);
    const auto spec = load_spec_file(o.spec_path).spec;
    std::cout << render_matrix(build_matrix(spec, o.n, o.quasi), format);
    return kOk;
}

int cmd_tp_check(const Options& o) {
    if (o.format != "json" && o.format != "text") {
        throw InputError("format: tp-check supports json or text");
    }
    if (o.max_order < 1) {
        throw InputError("--max-order: must be at least 1");
    }
    const auto spec = load_spec_file(o.spec_path).spec;
    const auto report = is_tp(build_matrix(spec, o.n, o.quasi), o.max_order, o.threads);
    if (o.format == "json") {
        std::cout << tp_report_to_json(report).dump() << '\n';
    } else {
        std::cout << (report.is_tp() ? "TP up to order " : "not TP within order ") << report.max_order_checked
                  << " (" << report.minors_checked << " minors checked)\n";
        if (report.witness) {
            const auto& w = *report.witness;
            std::cout << "witness rows " << Json(w.rows).dump() << " cols " << Json(w.cols).dump() << " value "
                      << to_string(w.value) << '\n';
        }
    }
    return (o.assert_tp && !report.is_tp()) ? kAssertFailed : kOk;
}

int cmd_pf_check(const Options& o) {
    const auto spec = load_spec_file(o.spec_path).spec;
    Json out;
    out["g"] = pf_certificate_to_json(is_pf_rational(spec.g()));
    out["f"] = pf_certificate_to_json(is_pf_rational(spec.f()));
    // A truncated Toeplitz check can only refute PF.
    auto truncated = tp_report_to_json(is_pf_truncated(gf_coeffs(spec.f(), o.n), o.n, o.max_order, o.threads));
    truncated["necessary_condition_only"] = true;
    out["f_truncated"] = std::move(truncated);
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_sequences(const Options& o) {
    if (o.n < 1) {
        throw InputError("--n: need at least one term");
    }
    const auto spec = load_spec_file(o.spec_path).spec;
    if (!spec.is_proper()) {
        throw InputError("spec: sequences need g(0) = 1 and f'(0) != 0");
    }
    const auto pair = expand(spec, o.n);
    const auto pd = o.riordan ? riordan_production(pair.g, pair.f) : quasi_production(pair.g, pair.f);
    std::cout << production_to_json(pd).dump() << '\n';
    return kOk;
}

int cmd_production_check(const Options& o) {
    const auto spec = load_spec_file(o.spec_path).spec;
    if (!spec.is_proper()) {
        throw InputError("spec: production check needs g(0) = 1 and f'(0) != 0");
    }
    const bool ok = o.riordan ? riordan_production_check(spec, o.n) : production_check(spec, o.n);
    std::cout << Json{{"production_check", ok}, {"n", o.n}, {"source", o.riordan ? "riordan" : "quasi"}}.dump()
              << '\n';
    return ok ? kOk : kAssertFailed;
}

int cmd_family(const Options& o) {
    const FamilyParams p{flag_rational(o.w0, "w0"), flag_rational(o.w1, "w1"), flag_rational(o.z0, "z0"),
                         flag_rational(o.z1, "z1")};
    if (p.z0 == 0) {
        throw InputError("--z0: improper f, z0 must be nonzero");
    }
    const auto spec = tp_family_construct(p);
    const auto pair = expand(spec, o.n + 1);
    const auto pd = quasi_production(pair.g, pair.f);
    const auto criterion = j_tp_criterion(pd.w, pd.z);

    Json out;
    out["params"] = Json{{"w0", to_string(p.w0)}, {"w1", to_string(p.w1)}, {"z0", to_string(p.z0)}, {"z1", to_string(p.z1)}};
    out["g"] = gf_to_string(spec.g());
    out["f"] = gf_to_string(spec.f());
    out["g_gf"] = gf_to_json(spec.g());
    out["f_gf"] = gf_to_json(spec.f());
    out["preconditions_hold"] = family_preconditions_hold(p);
    out["criterion"] = Json{{"holds", criterion.holds}, {"reason", criterion.reason}};
    out["oracle"] = tp_report_to_json(is_tp(quasi_truncation(pair, o.n), o.max_order, o.threads));
    out["oracle"]["n"] = o.n;
    out["pf_g"] = pf_certificate_to_json(is_pf_rational(spec.g()));
    out["pf_f"] = pf_certificate_to_json(is_pf_rational(spec.f()));
    out["discriminant"] = to_string(family_discriminant(p));
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_scan_alpha(const Options& o) {
    const auto spec = load_spec_file(o.spec_path).spec;
    const auto grid = flag_grid(o.alpha_min, o.alpha_max, o.alpha_step, "alpha");
    if (o.k2 <= o.k1) {
        throw InputError("--k2: must exceed --k1");
    }
    if (o.col < 1) {
        throw InputError("--col: must be at least 1");
    }
    const auto f = gf_coeffs(spec.f(), std::max(o.k2, o.col));

    Json out;
    std::optional<AlphaThreshold> threshold;
    try {
        threshold = alpha_threshold(f, o.k1, o.k2, o.col);
        out["threshold"] = Json{{"ratio", to_string(threshold->ratio)}, {"root_degree", threshold->exponent}};
    } catch (const Error& e) {
        out["threshold"] = Json{{"error", e.what()}};
    }
    Json points = Json::array();
    for (const auto& alpha : grid.values()) {
        if (alpha <= 0) {
            continue;
        }
        const AlphaProbe probe{o.k1, o.k2, o.col, alpha};
        const auto closed = alpha_minor(f, probe);
        const auto oracle = alpha_minor_from_matrix(f, probe);
        Json pt{{"alpha", to_string(alpha)}, {"closed_form", to_string(closed)}, {"oracle_minor", to_string(oracle)},
                {"agree", closed == oracle}};
        if (threshold) {
            pt["exceeds_threshold"] = threshold->exceeded_by(alpha);
        }
        points.push_back(std::move(pt));
    }
    out["points"] = std::move(points);
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_region_scan(const Options& o) {
    const auto ratio = flag_rational(o.ratio, "ratio");
    const auto alpha = flag_grid(o.alpha_min, o.alpha_max, o.alpha_step, "alpha");
    const auto beta = flag_grid(o.beta_min, o.beta_max, o.beta_step, "beta");
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            throw InputError("--out: cannot write '" + o.out_path + "'");
        }
    }
    const auto scan = region_scan(ratio, alpha, beta);
    const auto csv = region_scan_csv(scan);
    std::size_t negative = 0;
    std::size_t agree = 0;
    for (const auto& p : scan.points) {
        negative += p.negative_minor_found ? 1 : 0;
        agree += p.agrees() ? 1 : 0;
    }
    std::ostream& summary = o.out_path.empty() ? std::cerr : std::cout;
    if (o.out_path.empty()) {
        std::cout << csv;
    } else {
        file << csv;
    }
    for (const auto& d : scan.diagnostics) {
        std::cerr << "note: " << d << '\n';
    }
    summary << "points=" << scan.points.size() << " negative_minor=" << negative << " agree=" << agree
            << " skipped=" << scan.diagnostics.size() << '\n';
    return agree == scan.points.size() ? kOk : kAssertFailed;
}

int cmd_search(const Options& o) {
    const auto spec = load_spec_file(o.spec_path).spec;
    const auto alphas = flag_grid(o.alpha_min, o.alpha_max, o.alpha_step, "alpha").values();
    SpecFamily family;
    std::vector<std::vector<Rational>> axes{alphas};
    if (o.family == "geometric") {
        family = geometric_g_family(spec.f());
    } else if (o.family == "two-pole") {
        family = two_pole_g_family(spec.f());
        axes.push_back(flag_grid(o.beta_min, o.beta_max, o.beta_step, "beta").values());
    } else {
        throw InputError("--family: expected geometric or two-pole");
    }
    const auto grid = grid_product(axes);
    const auto hits = search_counterexample(family, grid, {o.search_n, o.max_order});
    Json out = Json::array();
    for (const auto& h : hits) {
        Json params = Json::array();
        for (const auto& v : h.params) {
            params.push_back(to_string(v));
        }
        out.push_back(Json{{"params", std::move(params)}, {"report", tp_report_to_json(h.report)}});
    }
    std::cout << Json{{"points", grid.size()}, {"flagged", std::move(out)}}.dump(2) << '\n';
    return kOk;
}

int cmd_paper_examples(const Options& o) {
    if (o.list) {
        for (const auto& id : fixture_ids()) {
            std::cout << id << '\n';
        }
        return kOk;
    }
    std::vector<FixtureResult> results;
    if (o.only.empty()) {
        results = run_all_fixtures();
    } else {
        for (const auto& id : o.only) {
            try {
                results.push_back(run_fixture(id));
            } catch (const Error& e) {
                throw InputError(std::string("--only: ") + e.what());
            }
        }
    }
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        failed += r.pass ? 0 : 1;
        list.push_back(Json{{"id", r.id},
                            {"provenance", r.provenance},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"pass", r.pass}});
    }
    std::cout << Json{{"fixtures", std::move(list)}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2)
              << '\n';
    return failed == 0 ? kOk : kAssertFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riordan / quasi-Riordan arrays and total positivity checks"};
    app.require_subcommand(1);
    Options o;

    auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", o.spec_path, "Spec JSON file {g, f}")->required(); };
    auto add_n = [&](CLI::App* sub, const char* help) { sub->add_option("--n", o.n, help)->capture_default_str(); };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--max-order", o.max_order, "Largest minor order checked")->capture_default_str();
        sub->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
    };
    auto add_alpha_grid = [&](CLI::App* sub) {
        sub->add_option("--alpha-min", o.alpha_min)->capture_default_str();
        sub->add_option("--alpha-max", o.alpha_max)->capture_default_str();
        sub->add_option("--alpha-step", o.alpha_step)->capture_default_str();
    };
    auto add_beta_grid = [&](CLI::App* sub) {
        sub->add_option("--beta-min", o.beta_min)->capture_default_str();
        sub->add_option("--beta-max", o.beta_max)->capture_default_str();
        sub->add_option("--beta-step", o.beta_step)->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "Render a truncated Riordan or quasi-Riordan array");
    add_spec(build);
    add_n(build, "Truncation index (matrix is (n+1)x(n+1))");
    build->add_flag("--quasi", o.quasi, "Build [g, f] instead of (g, f)");
    build->add_option("--format", o.format, "json, csv or text")->capture_default_str();

    auto* tp_check = app.add_subcommand("tp-check", "Exhaustive minor check of a truncation");
    add_spec(tp_check);
    add_n(tp_check, "Truncation index");
    add_order(tp_check);
    tp_check->add_flag("--quasi", o.quasi, "Check [g, f] instead of (g, f)");
    tp_check->add_flag("--assert-tp", o.assert_tp, "Exit 1 when a negative minor is found");
    tp_check->add_option("--format", o.format, "json or text");

    auto* pf_check = app.add_subcommand("pf-check", "Polya-frequency certificates for g and f");
    add_spec(pf_check);
    add_n(pf_check, "Toeplitz truncation index for the necessary-condition check");
    add_order(pf_check);

    auto* sequences = app.add_subcommand("sequences", "A-, Z- and W-sequences");
    add_spec(sequences);
    sequences->add_option("--n", o.n, "Number of terms")->capture_default_str();
    sequences->add_flag("--riordan", o.riordan, "Riordan A/Z sequences instead of quasi A/Z/W");

    auto* production = app.add_subcommand("production-check", "Verify the production-matrix identity");
    add_spec(production);
    add_n(production, "Truncation index");
    production->add_flag("--riordan", o.riordan, "Check the Riordan production matrix instead");

    auto* family = app.add_subcommand("family", "Construct the TP family from w0, w1, z0, z1");
    family->add_option("--w0", o.w0)->required();
    family->add_option("--w1", o.w1)->required();
    family->add_option("--z0", o.z0)->required();
    family->add_option("--z1", o.z1)->required();
    add_n(family, "Truncation index for the oracle");
    add_order(family);

    auto* scan_alpha = app.add_subcommand("scan-alpha", "Closed-form vs. oracle minors for [1/(1-at), f]");
    add_spec(scan_alpha);
    scan_alpha->add_option("--k1", o.k1)->required();
    scan_alpha->add_option("--k2", o.k2)->required();
    scan_alpha->add_option("--col", o.col)->required();
    add_alpha_grid(scan_alpha);

    auto* region = app.add_subcommand("region-scan", "Two-pole (alpha, beta) region data as CSV");
    region->add_option("--ratio", o.ratio)->capture_default_str();
    add_alpha_grid(region);
    add_beta_grid(region);
    region->add_option("--out", o.out_path, "CSV output path (stdout when omitted)");

    auto* search = app.add_subcommand("search", "Scan a g-family for negative minors");
    add_spec(search);
    search->add_option("--family", o.family, "geometric or two-pole")->capture_default_str();
    search->add_option("--n", o.search_n, "Truncation index")->capture_default_str();
    add_order(search);
    add_alpha_grid(search);
    add_beta_grid(search);

    auto* fixtures = app.add_subcommand("paper-examples", "Replay the reference fixtures");
    fixtures->add_option("--only", o.only, "Run only these fixture ids");
    fixtures->add_flag("--list", o.list, "List fixture ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    if (app.got_subcommand(tp_check) && !tp_check->count("--format")) {
        o.format = "json";
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "build") return cmd_build(o);
        if (name == "tp-check") return cmd_tp_check(o);
        if (name == "pf-check") return cmd_pf_check(o);
        if (name == "sequences") return cmd_sequences(o);
        if (name == "production-check") return cmd_production_check(o);
        if (name == "family") return cmd_family(o);
        if (name == "scan-alpha") return cmd_scan_alpha(o);
        if (name == "region-scan") return cmd_region_scan(o);
        if (name == "search") return cmd_search(o);
        if (name == "paper-examples") return cmd_paper_examples(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
