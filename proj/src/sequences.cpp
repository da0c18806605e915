#include "tpriordan/sequences.hpp"

#include <string>

namespace tpr {

namespace {

Rational coeff_or_zero(const TruncatedSeries& s, std::size_t k) {
    return k <= s.degree() ? s[k] : Rational(0);
}

TruncatedSeries constant_series(const Rational& c, std::size_t degree) {
    return TruncatedSeries::from_polynomial(Polynomial{c}, degree);
}

/// quotient = num / f with f of order one, plus `seed`. The quotient must
/// have a zero constant term, i.e. num must vanish to order two.
TruncatedSeries seeded_quotient(const TruncatedSeries& num, const TruncatedSeries& f, const Rational& seed,
                                const char* name) {
    if (num[0] != 0 || num[1] != 0) {
        throw Error(std::string(name) + "-sequence quotient has a nonzero constant term: numerator starts " +
                    to_string(num[0]) + " + " + to_string(num[1]) + "t (requires g(0) = 1)");
    }
    auto q = divide(num, f);
    return add(q, constant_series(seed, q.degree()));
}

void require_order_one(const TruncatedSeries& f) {
    if (f.degree() < 1 || f[0] != 0 || f[1] == 0) {
        throw Error("f must have order exactly one");
    }
}

} // namespace

TruncatedSeries a_sequence(const TruncatedSeries& f) {
    require_order_one(f);
    const auto fbar = comp_inverse(f);
    // t / fbar = 1 / (fbar / t)
    return reciprocal(fbar.shift_down(1));
}

TruncatedSeries z_sequence_riordan(const TruncatedSeries& g, const TruncatedSeries& f) {
    require_order_one(f);
    if (g.degree() != f.degree()) {
        throw Error("degree mismatch");
    }
    if (g[0] != 1) {
        throw Error("Z-sequence requires g(0) = 1");
    }
    const auto fbar = comp_inverse(f);
    const auto g_fbar = compose(g, fbar);
    const auto num = sub(g_fbar, TruncatedSeries::one(g.degree()));
    const auto den = mul(fbar, g_fbar);
    return divide(num, den);
}

ProductionData riordan_production(const TruncatedSeries& g, const TruncatedSeries& f) {
    auto z = z_sequence_riordan(g, f);
    auto a = a_sequence(f);
    return {std::move(a), std::move(z), TruncatedSeries(0), ProductionSource::Riordan};
}

ProductionData quasi_production(const TruncatedSeries& g, const TruncatedSeries& f) {
    require_order_one(f);
    if (g.degree() != f.degree()) {
        throw Error("degree mismatch");
    }
    const std::size_t n = g.degree();
    const Rational z0 = f[1];
    const Rational w0 = g[1];
    const auto t = TruncatedSeries::identity(n);

    // Z = (f - z0 t g)/f + z0
    const auto z_num = sub(f, scale(z0, mul(t, g)));
    auto z = seeded_quotient(z_num, f, z0, "Z");

    // W = ((1 - w0 t) g - 1)/f + w0
    const auto one_minus = sub(TruncatedSeries::one(n), scale(w0, t));
    const auto w_num = sub(mul(one_minus, g), TruncatedSeries::one(n));
    auto w = seeded_quotient(w_num, f, w0, "W");

    return {TruncatedSeries::one(z.degree()), std::move(z), std::move(w), ProductionSource::Quasi};
}

Matrix production_matrix(const ProductionData& pd, std::size_t n) {
    Matrix j(n + 1);
    // Coefficients past a sequence's degree are taken as zero.
    const std::size_t first_a_col = pd.source == ProductionSource::Quasi ? 2 : 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (pd.source == ProductionSource::Quasi) {
            j(i, 0) = coeff_or_zero(pd.w, i);
            j(i, 1) = coeff_or_zero(pd.z, i);
        } else {
            j(i, 0) = coeff_or_zero(pd.z, i);
        }
        for (std::size_t c = first_a_col; c <= n; ++c) {
            if (i + 1 >= c) {
                j(i, c) = coeff_or_zero(pd.a, i + 1 - c);
            }
        }
    }
    return j;
}

bool production_check(const SeriesPair& pair, std::size_t n) {
    if (pair.g.degree() < n + 1 || pair.f.degree() < n + 1) {
        throw Error("insufficient truncation: production check at n needs degree n + 1");
    }
    const SeriesPair trimmed{pair.g.truncated(n + 1), pair.f.truncated(n + 1)};
    const auto pd = quasi_production(trimmed.g, trimmed.f);
    const auto lhs = quasi_truncation(trimmed, n) * production_matrix(pd, n);
    const auto rhs = quasi_truncation(trimmed, n + 1).block(1, n + 1, 0, n + 1);
    return lhs == rhs;
}

bool production_check(const RiordanSpec& spec, std::size_t n) {
    return production_check(expand(spec, n + 1), n);
}

bool riordan_production_check(const RiordanSpec& spec, std::size_t n) {
    const auto pair = expand(spec, n + 1);
    const auto pd = riordan_production(pair.g, pair.f);
    const auto lhs = riordan_truncation(pair, n) * production_matrix(pd, n);
    const auto rhs = riordan_truncation(pair, n + 1).block(1, n + 1, 0, n + 1);
    return lhs == rhs;
}

CriterionResult j_tp_criterion(const TruncatedSeries& w, const TruncatedSeries& z) {
    for (std::size_t k = 2; k <= w.degree(); ++k) {
        if (w[k] != 0) {
            return {false, "w_" + std::to_string(k) + " != 0"};
        }
    }
    for (std::size_t k = 2; k <= z.degree(); ++k) {
        if (z[k] != 0) {
            return {false, "z_" + std::to_string(k) + " != 0"};
        }
    }
    const Rational w0 = coeff_or_zero(w, 0);
    const Rational w1 = coeff_or_zero(w, 1);
    const Rational z0 = coeff_or_zero(z, 0);
    const Rational z1 = coeff_or_zero(z, 1);
    const std::pair<const char*, const Rational*> entries[] = {{"w_0", &w0}, {"w_1", &w1}, {"z_0", &z0}, {"z_1", &z1}};
    for (const auto& [name, value] : entries) {
        if (*value < 0) {
            return {false, std::string(name) + " < 0"};
        }
    }
    const Rational det = w0 * z1 - w1 * z0;
    if (det < 0) {
        return {false, "w_0 z_1 - w_1 z_0 = " + to_string(det) + " < 0"};
    }
    return {true, "w_0 z_1 - w_1 z_0 = " + to_string(det) + " >= 0"};
}

Polynomial family_denominator(const FamilyParams& p) {
    return Polynomial{Rational(1), Rational(-(p.w0 + p.z1)), Rational(p.w0 * p.z1 - p.w1 * p.z0)};
}

RiordanSpec tp_family_construct(const FamilyParams& p) {
    if (p.z0 == 0) {
        throw Error("improper f: z0 must be nonzero");
    }
    const auto d = family_denominator(p);
    RationalGF g(Polynomial{Rational(1), Rational(-p.z1)}, d);
    RationalGF f(Polynomial{Rational(0), p.z0}, d);
    return RiordanSpec(std::move(g), std::move(f));
}

Rational family_discriminant(const FamilyParams& p) {
    const Rational diff = p.w0 - p.z1;
    return diff * diff + 4 * p.w1 * p.z0;
}

bool family_preconditions_hold(const FamilyParams& p) {
    return p.w0 >= 0 && p.w1 >= 0 && p.z0 >= 0 && p.z1 >= 0 && p.w0 * p.z1 - p.w1 * p.z0 >= 0;
}

} // namespace tpr
