#include "tpriordan/fixtures.hpp"

#include "tpriordan/arrays.hpp"
#include "tpriordan/counterexamples.hpp"
#include "tpriordan/io.hpp"
#include "tpriordan/sequences.hpp"
#include "tpriordan/tp.hpp"

#include <functional>

namespace tpr {

namespace {

struct Outcome {
    std::string expected;
    std::string computed;
};

struct Fixture {
    const char* id;
    const char* provenance;
    std::function<Outcome()> run;
};

Rational q(long p, long d = 1) {
    return make_rational(p, d);
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return Polynomial(std::move(c));
}

RationalGF gf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return RationalGF(poly(num), poly(den));
}

std::string series_string(const TruncatedSeries& s) {
    return series_to_json(s).dump();
}

/// Lower-triangular rows "(1),(2,1),..." as printed in displays.
std::string triangle_string(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += (i ? ",(" : "(");
        for (std::size_t j = 0; j <= i && j < m.cols(); ++j) {
            out += (j ? "," : "") + to_string(m(i, j));
        }
        out += ")";
    }
    return out;
}

std::string bool_string(bool b) {
    return b ? "true" : "false";
}

std::string witness_string(const TPReport& r) {
    if (!r.witness) {
        return "tp";
    }
    Json j{{"rows", r.witness->rows}, {"cols", r.witness->cols}, {"value", to_string(r.witness->value)}};
    return "not_tp " + j.dump();
}

const RationalGF& g_one_plus_t_sq() {
    static const RationalGF g = gf({1, 2, 1});
    return g;
}

const RationalGF& f_t_over_1mt() {
    static const RationalGF f = gf({0, 1}, {1, -1});
    return f;
}

const RationalGF& f_t_over_1m2t_sq() {
    static const RationalGF f = gf({0, 1}, {1, -4, 4});
    return f;
}

const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> fixtures = {
        {"gf_coeffs_geometric_3", "column 0 of [1/(1-3t), t/(1-2t)^2]",
         [] { return Outcome{"[\"1\",\"3\",\"9\",\"27\",\"81\"]", series_string(gf_coeffs(gf({1}, {1, -3}), 4))}; }},
        {"gf_coeffs_t_over_1m2t_sq", "expansion of t/(1-2t)^2",
         [] {
             return Outcome{"[\"0\",\"1\",\"4\",\"12\",\"32\",\"80\",\"192\"]",
                            series_string(gf_coeffs(f_t_over_1m2t_sq(), 6))};
         }},
        {"gf_coeffs_family_g", "column 0 of the (1,2,1,3) family array",
         [] {
             return Outcome{"[\"1\",\"1\",\"3\",\"11\",\"41\"]", series_string(gf_coeffs(gf({1, -3}, {1, -4, 1}), 4))};
         }},
        {"mul_one_plus_t_squared", "(1+t)^2 expands to 1 + 2t + t^2",
         [] {
             const auto a = gf_coeffs(gf({1, 1}), 2);
             return Outcome{"[\"1\",\"2\",\"1\"]", series_string(mul(a, a))};
         }},
        {"identity_riordan_array", "(1, t) is the identity matrix",
         [] {
             const RiordanSpec id(gf({1}), gf({0, 1}));
             return Outcome{"true", bool_string(riordan_truncation(id, 4) == Matrix::identity(5))};
         }},
        {"ex_gf_not_TP_rows", "[(1+t)^2, t/(1-t)] leading rows",
         [] {
             const RiordanSpec s(g_one_plus_t_sq(), f_t_over_1mt());
             return Outcome{"(1),(2,1),(1,1,1),(0,1,1,1)", triangle_string(quasi_truncation(s, 3))};
         }},
        {"ex_gf_not_TP_minor", "[(1+t)^2, t/(1-t)] minor rows {1,2,3} x cols {0,1,2}",
         [] {
             const RiordanSpec s(g_one_plus_t_sq(), f_t_over_1mt());
             const std::size_t rows[] = {1, 2, 3};
             const std::size_t cols[] = {0, 1, 2};
             return Outcome{"-1", to_string(minor(quasi_truncation(s, 3), rows, cols))};
         }},
        {"ex_gf_not_TP_witness", "[(1+t)^2, t/(1-t)] is not TP; first negative minor",
         [] {
             const RiordanSpec s(g_one_plus_t_sq(), f_t_over_1mt());
             return Outcome{"not_tp {\"rows\":[1,2,3],\"cols\":[0,1,2],\"value\":\"-1\"}",
                            witness_string(is_tp(quasi_truncation(s, 3), 3))};
         }},
        {"ex_gf_not_TP_riordan_is_tp", "((1+t)^2, t/(1-t)) is TP (truncation n=6, all orders)",
         [] {
             const RiordanSpec s(g_one_plus_t_sq(), f_t_over_1mt());
             return Outcome{"tp", witness_string(is_tp(riordan_truncation(s, 6), 7))};
         }},
        {"pf_one_plus_t_squared", "(1+t)^2 is Polya frequency",
         [] { return Outcome{"true", bool_string(is_pf_rational(g_one_plus_t_sq()).is_pf)}; }},
        {"pf_t_over_1mt", "t/(1-t) is Polya frequency",
         [] { return Outcome{"true", bool_string(is_pf_rational(f_t_over_1mt()).is_pf)}; }},
        {"family_example_matrix", "[(1-3t)/(t^2-4t+1), t/(t^2-4t+1)] leading rows",
         [] {
             const auto s = tp_family_construct({q(1), q(2), q(1), q(3)});
             return Outcome{"(1),(1,1),(3,4,1),(11,15,4,1),(41,56,15,4,1)", triangle_string(quasi_truncation(s, 4))};
         }},
        {"family_construct_example", "(w0,w1,z0,z1) = (1,2,1,3) gives g, f",
         [] {
             const auto s = tp_family_construct({q(1), q(2), q(1), q(3)});
             return Outcome{"g=(1 - 3t)/(1 - 4t + t^2) f=t/(1 - 4t + t^2)",
                            "g=" + gf_to_string(s.g()) + " f=" + gf_to_string(s.f())};
         }},
        {"family_example_tp", "the (1,2,1,3) family array is TP (truncation n=8, all orders)",
         [] {
             const auto s = tp_family_construct({q(1), q(2), q(1), q(3)});
             return Outcome{"tp", witness_string(is_tp(quasi_truncation(s, 8), 9))};
         }},
        {"family_z1_zero", "z1 = 0 gives [1/(1-w0 t), z0 t/(1-w0 t)]",
         [] {
             const auto s = tp_family_construct({q(2), q(0), q(3), q(0)});
             return Outcome{"g=1/(1 - 2t) f=3t/(1 - 2t)", "g=" + gf_to_string(s.g()) + " f=" + gf_to_string(s.f())};
         }},
        {"j_criterion_family_example", "w = (1,2), z = (1,3) satisfies the J criterion",
         [] {
             const auto r = j_tp_criterion(TruncatedSeries({q(1), q(2)}), TruncatedSeries({q(1), q(3)}));
             return Outcome{"true", bool_string(r.holds)};
         }},
        {"production_matrix_family_example", "production matrix layout with w = (1,2), z = (1,3)",
         [] {
             ProductionData pd{TruncatedSeries({q(1)}), TruncatedSeries({q(1), q(3)}), TruncatedSeries({q(1), q(2)}),
                               ProductionSource::Quasi};
             return Outcome{"[[\"1\",\"1\",\"0\",\"0\",\"0\"],[\"2\",\"3\",\"1\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"1\",\"0\"],"
                            "[\"0\",\"0\",\"0\",\"0\",\"1\"],[\"0\",\"0\",\"0\",\"0\",\"0\"]]\n",
                            render_matrix(production_matrix(pd, 4), MatrixFormat::Json)};
         }},
        {"pf_family_f", "f = t/(t^2-4t+1) is Polya frequency",
         [] { return Outcome{"true", bool_string(is_pf_rational(gf({0, 1}, {1, -4, 1})).is_pf)}; }},
        {"pf_family_g", "g = (1-3t)/(t^2-4t+1) is not Polya frequency (positive numerator root)",
         [] {
             const auto c = is_pf_rational(gf({1, -3}, {1, -4, 1}));
             return Outcome{"false numerator_ok=false", bool_string(c.is_pf) + " numerator_ok=" +
                                                            bool_string(c.numerator_roots_real_nonpositive)};
         }},
        {"sequences_pascal_quasi", "[1/(1-t), t/(1-t)] has A = Z = W = 1",
         [] {
             const RiordanSpec s(gf({1}, {1, -1}), f_t_over_1mt());
             const auto pair = expand(s, 21);
             const auto pd = quasi_production(pair.g, pair.f);
             const auto one = series_string(TruncatedSeries::one(20));
             return Outcome{one + one + one, series_string(pd.a) + series_string(pd.z) + series_string(pd.w)};
         }},
        {"alpha_example_matrix", "[1/(1-3t), t/(1-2t)^2] leading rows",
         [] {
             const RiordanSpec s(gf({1}, {1, -3}), f_t_over_1m2t_sq());
             return Outcome{"(1),(3,1),(9,4,1),(27,12,4,1),(81,32,12,4,1)", triangle_string(quasi_truncation(s, 4))};
         }},
        {"alpha_minor_108", "[1/(1-3t), t/(1-2t)^2] minor rows {3,4} x cols {0,1}",
         [] {
             const RiordanSpec s(gf({1}, {1, -3}), f_t_over_1m2t_sq());
             const std::size_t rows[] = {3, 4};
             const std::size_t cols[] = {0, 1};
             return Outcome{"-108", to_string(minor(quasi_truncation(s, 4), rows, cols))};
         }},
        {"alpha_minor_108_closed_form", "alpha^k1 f_{k2-n+1} - alpha^k2 f_{k1-n+1} at alpha=3, k1=3, k2=4, n=1",
         [] {
             return Outcome{"-108", to_string(alpha_minor(gf_coeffs(f_t_over_1m2t_sq(), 6), {3, 4, 1, q(3)}))};
         }},
        {"alpha_threshold_ratio_3", "f = t(1+t)/(1-2t), adjacent rows: critical ratio f_2/f_1 = 3",
         [] {
             const auto t = alpha_threshold(gf_coeffs(gf({0, 1, 1}, {1, -2}), 6), 1, 2, 1);
             return Outcome{"3^(1/1)", to_string(t.ratio) + "^(1/" + std::to_string(t.exponent) + ")"};
         }},
        {"alpha_above_3_not_tp", "f = t(1+t)/(1-2t): [1/(1-4t), f] has a negative minor",
         [] {
             const RiordanSpec s(gf({1}, {1, -4}), gf({0, 1, 1}, {1, -2}));
             return Outcome{"not_tp", is_tp(quasi_truncation(s, 4), 2).is_tp() ? "tp" : "not_tp"};
         }},
        {"region_value_sample", "alpha = f1/(2 f0), beta = f1/f0 with ratio 2 lies in the non-TP region",
         [] { return Outcome{"1", to_string(region_value(q(1), q(2), q(2)))}; }},
        {"ex_g_not_matrix", "[1+t+t^2, t/(1-2t)] leading rows",
         [] {
             const RiordanSpec s(gf({1, 1, 1}), gf({0, 1}, {1, -2}));
             return Outcome{"(1),(1,1),(1,2,1),(0,4,2,1),(0,8,4,2,1)", triangle_string(quasi_truncation(s, 4))};
         }},
        {"pf_ex_g_not", "f = t/(1-2t) is Polya frequency, g = 1+t+t^2 is not",
         [] {
             return Outcome{"f=true g=false", "f=" + bool_string(is_pf_rational(gf({0, 1}, {1, -2})).is_pf) +
                                                  " g=" + bool_string(is_pf_rational(gf({1, 1, 1})).is_pf)};
         }},
        {"ex_g_not_tp", "[1+t+t^2, t/(1-2t)] is TP (criterion and truncation n=8, all orders)",
         [] {
             const auto v = quadratic_g_verdict(q(1), q(1), q(1), q(2));
             const auto r = is_tp(quasi_truncation(quadratic_g_spec(q(1), q(1), q(1), q(2)), 8), 9);
             return Outcome{"criterion=true tp", "criterion=" + bool_string(v.criterion) + " " + witness_string(r)};
         }},
        {"ex_g_not_key_minor", "[1+t+t^2, t/(1-2t)] minor rows {1,2} x cols {0,1} equals g_1 alpha - g_2 = 1",
         [] {
             const std::size_t rows[] = {1, 2};
             const std::size_t cols[] = {0, 1};
             const auto m = quasi_truncation(quadratic_g_spec(q(1), q(1), q(1), q(2)), 3);
             return Outcome{"1", to_string(minor(m, rows, cols))};
         }},
        {"one_plus_t_squared_minor", "[1+t^2, t/(1-2t)] minor rows {1,2} x cols {0,1} equals -f_1",
         [] {
             const RiordanSpec s(gf({1, 0, 1}), gf({0, 1}, {1, -2}));
             const std::size_t rows[] = {1, 2};
             const std::size_t cols[] = {0, 1};
             return Outcome{"-1", to_string(minor(quasi_truncation(s, 3), rows, cols))};
         }},
        {"pf_one_plus_t_sq_plain", "1 + t^2 is not Polya frequency",
         [] { return Outcome{"false", bool_string(is_pf_rational(gf({1, 0, 1})).is_pf)}; }},
        {"quasi_tg_is_appell", "[g, tg] = (g, t) for g = (1+t)^2",
         [] {
             const RiordanSpec quasi(g_one_plus_t_sq(), g_one_plus_t_sq().times_t());
             const RiordanSpec appell(g_one_plus_t_sq(), gf({0, 1}));
             return Outcome{"true", bool_string(quasi_truncation(quasi, 6) == riordan_truncation(appell, 6))};
         }},
        {"factorization_pascal", "(g,f)_n = [g,f]_n ([1] + (g,f)_{n-1}) for Pascal at n = 8",
         [] {
             const RiordanSpec s(gf({1}, {1, -1}), f_t_over_1mt());
             return Outcome{"true", bool_string(factorization_check(s, 8))};
         }},
        {"family_discriminant_nonnegative", "D(t) has real roots: discriminant >= 0 on {0,1,2}^4",
         [] {
             bool ok = true;
             for (long w0 = 0; w0 <= 2; ++w0)
                 for (long w1 = 0; w1 <= 2; ++w1)
                     for (long z0 = 0; z0 <= 2; ++z0)
                         for (long z1 = 0; z1 <= 2; ++z1)
                             ok = ok && family_discriminant({q(w0), q(w1), q(z0), q(z1)}) >= 0;
             return Outcome{"true", bool_string(ok)};
         }},
    };
    return fixtures;
}

FixtureResult execute(const Fixture& f) {
    FixtureResult r{f.id, f.provenance, {}, {}, false};
    try {
        auto o = f.run();
        r.expected = std::move(o.expected);
        r.computed = std::move(o.computed);
    } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
    }
    r.pass = !r.expected.empty() && r.expected == r.computed;
    return r;
}

} // namespace

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& f : registry()) {
        ids.emplace_back(f.id);
    }
    return ids;
}

FixtureResult run_fixture(std::string_view id) {
    for (const auto& f : registry()) {
        if (id == f.id) {
            return execute(f);
        }
    }
    throw Error("unknown fixture '" + std::string(id) + "'");
}

std::vector<FixtureResult> run_all_fixtures() {
    std::vector<FixtureResult> out;
    for (const auto& f : registry()) {
        out.push_back(execute(f));
    }
    return out;
}

} // namespace tpr
