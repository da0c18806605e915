#include "tpriordan/counterexamples.hpp"

#include "tpriordan/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace tpr {

namespace {

void validate_probe(const AlphaProbe& p) {
    if (p.k2 <= p.k1) {
        throw Error("alpha probe needs k2 > k1");
    }
    if (p.n < 1) {
        throw Error("alpha probe needs column n >= 1");
    }
}

std::string sign_symbol(const Rational& v) {
    const int s = sgn(v);
    return s > 0 ? "+" : (s < 0 ? "-" : "0");
}

} // namespace

Rational alpha_minor(const TruncatedSeries& f, const AlphaProbe& probe) {
    validate_probe(probe);
    const long shift = static_cast<long>(probe.n) - 1;
    const Rational upper = f.coeff_or_zero(static_cast<long>(probe.k2) - shift);
    const Rational lower = f.coeff_or_zero(static_cast<long>(probe.k1) - shift);
    return pow(probe.alpha, static_cast<unsigned>(probe.k1)) * upper -
           pow(probe.alpha, static_cast<unsigned>(probe.k2)) * lower;
}

Rational alpha_minor_from_matrix(const TruncatedSeries& f, const AlphaProbe& probe) {
    validate_probe(probe);
    const std::size_t size = std::max(probe.k2, probe.n);
    if (f.degree() < size) {
        throw Error("insufficient truncation: need f to degree " + std::to_string(size));
    }
    const RationalGF g(Polynomial{Rational(1)}, Polynomial{Rational(1), Rational(-probe.alpha)});
    const SeriesPair pair{gf_coeffs(g, size), f.truncated(size)};
    const auto q = quasi_truncation(pair, size);
    const std::size_t rows[] = {probe.k1, probe.k2};
    const std::size_t cols[] = {0, probe.n};
    return minor(q, rows, cols);
}

bool AlphaThreshold::exceeded_by(const Rational& alpha) const {
    return pow(alpha, exponent) * lower > upper;
}

AlphaThreshold alpha_threshold(const TruncatedSeries& f, std::size_t k1, std::size_t k2, std::size_t n) {
    validate_probe({k1, k2, n, Rational(1)});
    const long shift = static_cast<long>(n) - 1;
    AlphaThreshold t;
    t.lower = f.coeff_or_zero(static_cast<long>(k1) - shift);
    t.upper = f.coeff_or_zero(static_cast<long>(k2) - shift);
    if (t.lower <= 0 || t.upper <= 0) {
        throw Error("threshold undefined: coefficients f_" + std::to_string(static_cast<long>(k1) - shift) +
                    " and f_" + std::to_string(static_cast<long>(k2) - shift) + " must be positive");
    }
    t.ratio = t.upper / t.lower;
    t.exponent = static_cast<unsigned>(k2 - k1);
    return t;
}

TruncatedSeries two_pole_coeffs(const Rational& alpha, const Rational& beta, std::size_t degree) {
    if (alpha == beta) {
        throw Error("equal poles: closed form undefined, expand 1/(1 - alpha t)^2 with gf_coeffs");
    }
    std::vector<Rational> c(degree + 1);
    Rational a_pow = alpha;
    Rational b_pow = beta;
    const Rational diff = beta - alpha;
    for (std::size_t k = 0; k <= degree; ++k) {
        c[k] = (b_pow - a_pow) / diff;
        a_pow *= alpha;
        b_pow *= beta;
    }
    return TruncatedSeries(std::move(c));
}

Rational region_value(const Rational& alpha, const Rational& beta, const Rational& ratio) {
    return alpha * alpha + beta * beta + alpha * beta - ratio * (alpha + beta);
}

std::vector<Rational> GridSpec::values() const {
    if (step <= 0) {
        throw Error("malformed grid: step must be positive");
    }
    std::vector<Rational> out;
    for (Rational v = min; v <= max; v += step) {
        out.push_back(v);
    }
    return out;
}

bool RegionPoint::agrees() const {
    return sgn(value) == -sgn(oracle_minor);
}

RegionScan region_scan(const Rational& ratio, const GridSpec& alpha, const GridSpec& beta) {
    RegionScan scan;
    const auto alphas = alpha.values();
    const auto betas = beta.values();
    const TruncatedSeries f(std::vector<Rational>{0, 1, ratio});
    const std::size_t rows[] = {1, 2};
    const std::size_t cols[] = {0, 1};
    for (const auto& a : alphas) {
        for (const auto& b : betas) {
            if (a > b) {
                continue;
            }
            if (a == b) {
                scan.diagnostics.push_back("skipped alpha = beta = " + to_string(a) + ": closed form undefined");
                continue;
            }
            if (a <= 0) {
                scan.diagnostics.push_back("skipped alpha = " + to_string(a) + ": alpha must be positive");
                continue;
            }
            RegionPoint p;
            p.alpha = a;
            p.beta = b;
            p.ratio = ratio;
            p.value = region_value(a, b, ratio);
            const SeriesPair pair{two_pole_coeffs(a, b, 2), f};
            p.oracle_minor = minor(quasi_truncation(pair, 2), rows, cols);
            p.negative_minor_found = p.oracle_minor < 0;
            scan.points.push_back(std::move(p));
        }
    }
    return scan;
}

std::string region_scan_csv(const RegionScan& scan) {
    std::ostringstream out;
    out << "alpha,beta,value,quadratic_sign,oracle_minor,agree\n";
    for (const auto& p : scan.points) {
        out << to_string(p.alpha) << ',' << to_string(p.beta) << ',' << to_string(p.value) << ','
            << sign_symbol(p.value) << ',' << to_string(p.oracle_minor) << ',' << (p.agrees() ? "true" : "false")
            << '\n';
    }
    return out.str();
}

QuadraticVerdict quadratic_g_verdict(const Rational& g0, const Rational& g1, const Rational& g2,
                                     const Rational& alpha) {
    QuadraticVerdict v;
    if (alpha <= 0) {
        v.violations.push_back("alpha > 0");
    }
    if (g0 <= 0) {
        v.violations.push_back("g0 > 0");
    }
    if (g1 <= 0) {
        v.violations.push_back("g1 > 0");
    }
    if (g2 <= 0) {
        v.violations.push_back("g2 > 0");
    }
    if (g1 * g1 - 4 * g0 * g2 >= 0) {
        v.violations.push_back("g1^2 - 4 g0 g2 < 0");
    }
    v.hypotheses_hold = v.violations.empty();
    v.key_minor = g1 * alpha - g2;
    v.criterion = v.key_minor >= 0;
    return v;
}

RiordanSpec quadratic_g_spec(const Rational& g0, const Rational& g1, const Rational& g2, const Rational& alpha) {
    return RiordanSpec::relaxed(RationalGF(Polynomial{g0, g1, g2}),
                                RationalGF(Polynomial{Rational(0), Rational(1)},
                                           Polynomial{Rational(1), Rational(-alpha)}));
}

SpecFamily geometric_g_family(RationalGF f) {
    return [f = std::move(f)](std::span<const Rational> p) {
        if (p.size() != 1) {
            throw Error("geometric family takes one parameter (alpha)");
        }
        return RiordanSpec::relaxed(RationalGF(Polynomial{Rational(1)}, Polynomial{Rational(1), Rational(-p[0])}), f);
    };
}

SpecFamily two_pole_g_family(RationalGF f) {
    return [f = std::move(f)](std::span<const Rational> p) {
        if (p.size() != 2) {
            throw Error("two-pole family takes two parameters (alpha, beta)");
        }
        const Polynomial den = Polynomial{Rational(1), Rational(-p[0])} * Polynomial{Rational(1), Rational(-p[1])};
        return RiordanSpec::relaxed(RationalGF(Polynomial{Rational(1)}, den), f);
    };
}

SpecFamily tp_family() {
    return [](std::span<const Rational> p) {
        if (p.size() != 4) {
            throw Error("TP family takes four parameters (w0, w1, z0, z1)");
        }
        return tp_family_construct({p[0], p[1], p[2], p[3]});
    };
}

std::vector<std::vector<Rational>> grid_product(std::span<const std::vector<Rational>> axes) {
    std::vector<std::vector<Rational>> out;
    if (axes.empty()) {
        return out;
    }
    out.emplace_back();
    for (const auto& axis : axes) {
        std::vector<std::vector<Rational>> next;
        next.reserve(out.size() * axis.size());
        for (const auto& prefix : out) {
            for (const auto& v : axis) {
                auto point = prefix;
                point.push_back(v);
                next.push_back(std::move(point));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<SearchHit> search_counterexample(const SpecFamily& family, std::span<const std::vector<Rational>> grid,
                                             const SearchBudget& budget) {
    std::vector<SearchHit> hits;
    for (const auto& params : grid) {
        const auto spec = family(params);
        auto report = is_tp(quasi_truncation(spec, budget.n), budget.max_order);
        if (!report.is_tp()) {
            hits.push_back({params, std::move(report)});
        }
    }
    return hits;
}

} // namespace tpr
