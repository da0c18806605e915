// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// All checks are exact; the only tolerance is the wall-clock budget per criterion.

#include "tpriordan/arrays.hpp"
#include "tpriordan/counterexamples.hpp"
#include "tpriordan/io.hpp"
#include "tpriordan/sequences.hpp"
#include "tpriordan/tp.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tpr;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

Rational q(long p, long d = 1) {
    return make_rational(p, d);
}

RationalGF gf(std::vector<Rational> num, std::vector<Rational> den = {Rational(1)}) {
    return RationalGF(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

std::string witness_text(const TPReport& r) {
    if (!r.witness) {
        return "TP";
    }
    std::ostringstream os;
    os << "rows{";
    for (std::size_t i = 0; i < r.witness->rows.size(); ++i) {
        os << (i ? "," : "") << r.witness->rows[i];
    }
    os << "} cols{";
    for (std::size_t i = 0; i < r.witness->cols.size(); ++i) {
        os << (i ? "," : "") << r.witness->cols[i];
    }
    os << "} = " << to_string(r.witness->value);
    return os.str();
}

// 50 proper pairs g = (1 + g1 t + g2 t^2)/(1 + d1 t), f = t (f1 + f2 t)/(1 + e1 t),
// coefficients drawn from {p/q : q in 1..3} within [-3, 3], f1 != 0.
std::vector<RiordanSpec> random_pairs() {
    std::mt19937_64 rng(20240531);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    auto draw = [&] {
        for (;;) {
            const int d = den(rng);
            const int p = num(rng);
            if (p >= -3 * d && p <= 3 * d) {
                return q(p, d);
            }
        }
    };
    std::vector<RiordanSpec> out;
    while (out.size() < 50) {
        const auto g1 = draw(), g2 = draw(), d1 = draw(), f1 = draw(), f2 = draw(), e1 = draw();
        if (f1 == 0) {
            continue;
        }
        try {
            out.emplace_back(gf({1, g1, g2}, {1, d1}), gf({0, f1, f2}, {1, e1}));
        } catch (const Error&) {
            // cancellation can make a draw improper; skip it
        }
    }
    return out;
}

Outcome c01_minor_one() {
    const RiordanSpec s(gf({1, 2, 1}), gf({0, 1}, {1, -1}));
    const auto m = quasi_truncation(s, 3);
    const std::size_t rows[] = {1, 2, 3};
    const std::size_t cols[] = {0, 1, 2};
    const auto value = minor(m, rows, cols);
    const auto report = is_tp(m, 4);
    const bool witness_ok = report.witness && report.witness->rows == std::vector<std::size_t>{1, 2, 3} &&
                            report.witness->cols == std::vector<std::size_t>{0, 1, 2} && report.witness->value == -1;
    return {value == -1 && !report.is_tp() && witness_ok,
            "minor=" + to_string(value) + " witness " + witness_text(report)};
}

Outcome c02_minor_108() {
    const RiordanSpec s(gf({1}, {1, -3}), gf({0, 1}, {1, -4, 4}));
    const std::size_t rows[] = {3, 4};
    const std::size_t cols[] = {0, 1};
    const auto value = minor(quasi_truncation(s, 4), rows, cols);
    const auto closed = alpha_minor(gf_coeffs(s.f(), 6), {3, 4, 1, q(3)});
    return {value == -108 && closed == -108, "matrix=" + to_string(value) + " closed_form=" + to_string(closed)};
}

Outcome c03_family_example() {
    const FamilyParams p{q(1), q(2), q(1), q(3)};
    const auto spec = tp_family_construct(p);
    const bool g_ok = spec.g() == gf({1, -3}, {1, -4, 1});
    const bool f_ok = spec.f() == gf({0, 1}, {1, -4, 1});
    const auto rows = quasi_truncation(spec, 4);
    const Matrix expected = Matrix::from_rows({{q(1)},
                                               {q(1), q(1)},
                                               {q(3), q(4), q(1)},
                                               {q(11), q(15), q(4), q(1)},
                                               {q(41), q(56), q(15), q(4), q(1)}});
    const auto budget = is_tp(quasi_truncation(spec, 10), 4);
    const auto full = is_tp(quasi_truncation(spec, 8), 9);
    return {g_ok && f_ok && rows == expected && budget.is_tp() && full.is_tp(),
            "g=" + gf_to_string(spec.g()) + " f=" + gf_to_string(spec.f()) + " rows " +
                (rows == expected ? "match" : "differ") + ", n=10/r=4 " + witness_text(budget) + ", n=8 full " +
                witness_text(full)};
}

Outcome c04_sequences() {
    const RiordanSpec s(gf({1}, {1, -1}), gf({0, 1}, {1, -1}));
    const auto pair = expand(s, 20);
    const auto pd = quasi_production(pair.g, pair.f);
    auto is_one = [](const TruncatedSeries& x) {
        if (x.degree() + 1 < 20) {
            return false;
        }
        for (std::size_t i = 0; i < 20; ++i) {
            if (x[i] != (i == 0 ? 1 : 0)) {
                return false;
            }
        }
        return true;
    };
    return {is_one(pd.a) && is_one(pd.z) && is_one(pd.w), production_to_json(pd).dump()};
}

Outcome c05_production_criterion() {
    std::size_t points = 0, disagree = 0, deep = 0;
    std::string first;
    for (int code = 0; code < 729; ++code) {
        int c = code;
        Rational v[6];
        for (auto& x : v) {
            x = c % 3;
            c /= 3;
        }
        const TruncatedSeries w(std::vector<Rational>{v[0], v[1], v[2], 0, 0, 0, 0, 0});
        const TruncatedSeries z(std::vector<Rational>{v[3], v[4], v[5], 0, 0, 0, 0, 0});
        const TruncatedSeries a(std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 0});
        const ProductionData pd{a, z, w, ProductionSource::Quasi};
        const auto criterion = j_tp_criterion(w, z);
        const auto report = is_tp(production_matrix(pd, 7), 8);
        ++points;
        if (criterion.holds != report.is_tp()) {
            ++disagree;
            if (first.empty()) {
                first = " first disagreement w=(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) +
                        ") z=(" + to_string(v[3]) + "," + to_string(v[4]) + "," + to_string(v[5]) + ")";
            }
        }
        if (!criterion.holds && report.witness && report.witness->rows.size() > 3) {
            ++deep;
        }
    }
    return {disagree == 0 && deep == 0, std::to_string(points) + " points, " + std::to_string(disagree) +
                                            " disagreements, " + std::to_string(deep) + " witnesses above order 3" +
                                            first};
}

Outcome c06_factorization(const std::vector<RiordanSpec>& pairs) {
    std::size_t ok = 0;
    for (const auto& s : pairs) {
        ok += factorization_check(s, 10) ? 1 : 0;
    }
    return {ok == pairs.size(), std::to_string(ok) + "/" + std::to_string(pairs.size()) + " pairs at n=10"};
}

Outcome c07_production(const std::vector<RiordanSpec>& pairs) {
    std::size_t ok = 0;
    for (const auto& s : pairs) {
        ok += production_check(s, 8) ? 1 : 0;
    }
    return {ok == pairs.size(), std::to_string(ok) + "/" + std::to_string(pairs.size()) + " pairs at n=8"};
}

Outcome c08_pf() {
    struct Case {
        const char* name;
        RationalGF gf;
        bool pf;
    };
    const Case cases[] = {
        {"(1+t)^2", gf({1, 2, 1}), true},
        {"t/(1-t)", gf({0, 1}, {1, -1}), true},
        {"t/(t^2-4t+1)", gf({0, 1}, {1, -4, 1}), true},
        {"1+t+t^2", gf({1, 1, 1}), false},
        {"(1-3t)/(t^2-4t+1)", gf({1, -3}, {1, -4, 1}), false},
        {"1+t^2", gf({1, 0, 1}), false},
    };
    bool all = true;
    std::string detail;
    for (const auto& c : cases) {
        const bool got = is_pf_rational(c.gf).is_pf;
        all = all && got == c.pf;
        detail += std::string(detail.empty() ? "" : " ") + c.name + "=" + (got ? "PF" : "notPF");
    }
    return {all, detail};
}

Outcome c09_quadratic_grid() {
    const Rational gs[] = {q(1, 2), q(1), q(2)};
    const Rational alphas[] = {q(1, 2), q(1), q(2), q(3)};
    std::size_t points = 0, disagree = 0;
    std::string first;
    for (const auto& g1 : gs) {
        for (const auto& g2 : gs) {
            for (const auto& alpha : alphas) {
                const auto v = quadratic_g_verdict(q(1), g1, g2, alpha);
                if (!v.hypotheses_hold) {
                    continue;
                }
                ++points;
                const auto report = is_tp(quasi_truncation(quadratic_g_spec(q(1), g1, g2, alpha), 8), 4);
                if (v.criterion != report.is_tp()) {
                    ++disagree;
                    if (first.empty()) {
                        first = "; first: g1=" + to_string(g1) + " g2=" + to_string(g2) + " alpha=" +
                                to_string(alpha) + " criterion=" + (v.criterion ? "true" : "false") + " oracle " +
                                witness_text(report);
                    }
                }
            }
        }
    }
    return {points > 0 && disagree == 0,
            std::to_string(points) + " points, " + std::to_string(disagree) + " disagreements" + first};
}

Outcome c10_region() {
    const GridSpec axis{q(1, 4), q(4), q(1, 4)};
    const auto scan = region_scan(q(2), axis, axis);
    const std::size_t rows[] = {1, 2};
    const std::size_t cols[] = {0, 1};
    std::size_t bad = 0;
    bool flagged = false;
    for (const auto& p : scan.points) {
        // independent oracle: build the array and read the minor
        const RiordanSpec s = RiordanSpec::relaxed(gf({1}, {1, -(p.alpha + p.beta), p.alpha * p.beta}), gf({0, 1, 2}));
        const auto m = minor(quasi_truncation(s, 2), rows, cols);
        if (sign(region_value(p.alpha, p.beta, q(2))) != -sign(m) || m != p.oracle_minor) {
            ++bad;
        }
        if (p.alpha == 1 && p.beta == 2) {
            flagged = p.negative_minor_found && m < 0;
        }
    }
    return {bad == 0 && flagged && !scan.points.empty(),
            std::to_string(scan.points.size()) + " points, " + std::to_string(bad) + " sign mismatches, (1,2) " +
                (flagged ? "flagged" : "not flagged")};
}

Outcome c11_sign_grid() {
    std::size_t points = 0, disagree = 0;
    std::string first;
    for (int g1 = -1; g1 <= 1; ++g1) {
        for (int f1 = -1; f1 <= 1; ++f1) {
            for (int f2 = -1; f2 <= 1; ++f2) {
                // f1 = 0 gives an improper f; build the truncated pair directly
                const SeriesPair pair{TruncatedSeries(std::vector<Rational>{1, g1, 0, 0, 0, 0, 0}),
                                      TruncatedSeries(std::vector<Rational>{0, f1, f2, 0, 0, 0, 0})};
                const auto report = is_tp(quasi_truncation(pair, 6), 7);
                const bool expected = g1 >= 0 && f1 >= 0 && f2 >= 0;
                ++points;
                if (report.is_tp() != expected) {
                    ++disagree;
                    if (first.empty()) {
                        first = "; first: (" + std::to_string(g1) + "," + std::to_string(f1) + "," +
                                std::to_string(f2) + ") " + witness_text(report);
                    }
                }
            }
        }
    }
    return {disagree == 0, std::to_string(points) + " points, " + std::to_string(disagree) + " disagreements" + first};
}

Outcome c12_toeplitz_corpus() {
    const RationalGF corpus[] = {
        gf({0, 1}),                       // t
        gf({0, 1}, {1, -1}),              // t/(1-t)
        gf({0, 1, 1}),                    // t(1+t)
        gf({0, 1}, {1, -4, 4}),           // t/(1-2t)^2
        gf({0, 1, 1}, {1, -2}),           // t(1+t)/(1-2t)
        gf({0, 1}, {1, -4, 1}),           // t/(t^2-4t+1)
        gf({0, 1, 3, 1}),                 // t(1+3t+t^2)
        gf({0, 1, 1, 1}),                 // t(1+t+t^2)
        gf({0, 1, 0, 1}),                 // t(1+t^2)
        gf({0, 2, 1, 1}),                 // t(2+t+t^2)
    };
    std::size_t agree = 0, tp = 0;
    std::string first;
    for (const auto& f : corpus) {
        const auto r = toeplitz_case_report(f, 6, 8);
        if (r.all_agree()) {
            ++agree;
            tp += r.pf_sequence.is_tp() ? 1 : 0;
        } else if (first.empty()) {
            first = "; first disagreement f=" + gf_to_string(f);
        }
    }
    return {agree == std::size(corpus), std::to_string(agree) + "/" + std::to_string(std::size(corpus)) +
                                            " agree (" + std::to_string(tp) + " TP, " +
                                            std::to_string(agree - tp) + " not TP)" + first};
}

} // namespace

int main() {
    const auto pairs = random_pairs();
    const std::vector<Criterion> criteria = {
        {1, "quasi (1+t)^2, t/(1-t): minor -1 and NotTP witness at n=3", 1, c01_minor_one},
        {2, "quasi 1/(1-3t), t/(1-2t)^2: minor -108, closed form agrees", 1, c02_minor_108},
        {3, "family (1,2,1,3): g, f, first rows, TP at n=10/r=4 and n=8 full", 60, c03_family_example},
        {4, "[1/(1-t), t/(1-t)]: A = Z = W = 1 to 20 terms", 1, c04_sequences},
        {5, "production criterion vs oracle on {0,1,2}^6, 8x8 full order", 60, c05_production_criterion},
        {6, "factorization identity, 50 random pairs, n=10", 30, [&] { return c06_factorization(pairs); }},
        {7, "production identity, 50 random pairs, n=8", 30, [&] { return c07_production(pairs); }},
        {8, "PF decisions for the six reference series", 1, c08_pf},
        {9, "quadratic g grid: g1 alpha - g2 >= 0 iff TP at n=8/r=4", 120, c09_quadratic_grid},
        {10, "region scan ratio 2, step 1/4: value sign vs minor sign, (1,2) flagged", 30, c10_region},
        {11, "[1+g1 t, f1 t+f2 t^2] sign grid: TP at n=6 full iff all >= 0", 30, c11_sign_grid},
        {12, "Toeplitz four-way agreement on 10 series, n=6", 60, c12_toeplitz_corpus},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs <= c.budget_seconds;
        const bool pass = out.pass && in_budget;
        failed += pass ? 0 : 1;
        std::printf("[%s] %02d %s | %s | %.3fs (budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    out.detail.c_str(), secs, c.budget_seconds, in_budget ? "" : ", exceeded");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
