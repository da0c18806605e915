#include "tpriordan/arrays.hpp"

#include <string>

namespace tpr {

namespace {

void require_proper(const RationalGF& g, const RationalGF& f) {
    if (g.constant_term() != 1) {
        throw Error("not a proper Riordan pair: g(0) = " + to_string(g.constant_term()) + ", expected 1");
    }
    if (f.constant_term() != 0) {
        throw Error("not a proper Riordan pair: f(0) != 0");
    }
    // With den(0) = 1, f'(0) is the linear coefficient of the numerator.
    if (f.num()[1] == 0) {
        throw Error("not a proper Riordan pair: f'(0) = 0");
    }
}

void require_relaxed(const RationalGF& g, const RationalGF& f) {
    if (g.constant_term() <= 0) {
        throw Error("not a proper Riordan pair: g(0) must be positive");
    }
    if (f.is_zero() || f.constant_term() != 0) {
        throw Error("not a proper Riordan pair: f must be a nonzero series with f(0) = 0");
    }
}

void require_degree(const SeriesPair& pair, std::size_t n) {
    if (pair.g.degree() < n || pair.f.degree() < n) {
        throw Error("insufficient truncation: need coefficients to degree " + std::to_string(n));
    }
    if (pair.f[0] != 0) {
        throw Error("not a proper Riordan pair: f(0) != 0");
    }
}

} // namespace

RiordanSpec::RiordanSpec(RationalGF g, RationalGF f, bool proper)
    : g_(std::move(g)), f_(std::move(f)), proper_(proper) {}

RiordanSpec::RiordanSpec(RationalGF g, RationalGF f) : g_(std::move(g)), f_(std::move(f)) {
    require_proper(g_, f_);
}

RiordanSpec RiordanSpec::relaxed(RationalGF g, RationalGF f) {
    require_relaxed(g, f);
    const bool proper = g.constant_term() == 1 && f.num()[1] != 0;
    return RiordanSpec(std::move(g), std::move(f), proper);
}

SeriesPair expand(const RiordanSpec& spec, std::size_t degree) {
    return {gf_coeffs(spec.g(), degree), gf_coeffs(spec.f(), degree)};
}

Matrix riordan_truncation(const SeriesPair& pair, std::size_t n) {
    require_degree(pair, n);
    const auto g = pair.g.truncated(n);
    const auto f = pair.f.truncated(n);
    Matrix m(n + 1);
    auto column = g;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = k; i <= n; ++i) {
            m(i, k) = column[i];
        }
        column = mul(column, f);
    }
    return m;
}

Matrix riordan_truncation(const RiordanSpec& spec, std::size_t n) {
    return riordan_truncation(expand(spec, n), n);
}

Matrix quasi_truncation(const SeriesPair& pair, std::size_t n) {
    require_degree(pair, n);
    Matrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        m(i, 0) = pair.g[i];
    }
    // Column k >= 1 holds t^{k-1} f.
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = k; i <= n; ++i) {
            m(i, k) = pair.f[i - k + 1];
        }
    }
    return m;
}

Matrix quasi_truncation(const RiordanSpec& spec, std::size_t n) {
    return quasi_truncation(expand(spec, n), n);
}

SeriesPair riordan_product(const SeriesPair& a, const SeriesPair& b) {
    return {mul(a.g, compose(b.g, a.f)), compose(b.f, a.f)};
}

SeriesPair riordan_product(const RiordanSpec& a, const RiordanSpec& b, std::size_t degree) {
    return riordan_product(expand(a, degree), expand(b, degree));
}

SeriesPair riordan_inverse(const SeriesPair& a) {
    auto fbar = comp_inverse(a.f);
    auto g_of_fbar = compose(a.g, fbar);
    return {reciprocal(g_of_fbar), std::move(fbar)};
}

SeriesPair riordan_inverse(const RiordanSpec& a, std::size_t degree) {
    return riordan_inverse(expand(a, degree));
}

bool factorization_check(const RiordanSpec& spec, std::size_t n) {
    if (n < 1) {
        throw Error("factorization check needs n >= 1");
    }
    const auto pair = expand(spec, n);
    const auto lhs = riordan_truncation(pair, n);
    const auto rhs = quasi_truncation(pair, n) *
                     direct_sum(Matrix::identity(1), riordan_truncation(pair, n - 1));
    return lhs == rhs;
}

} // namespace tpr
