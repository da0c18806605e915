#include "tpriordan/series.hpp"

#include <algorithm>
#include <string>

namespace tpr {

namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree() != b.degree()) {
        throw Error("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                    std::to_string(b.degree()));
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t degree) {
    TruncatedSeries s(degree);
    for (std::size_t k = 0; k <= degree; ++k) {
        s.coeffs_[k] = p[k];
    }
    return s;
}

TruncatedSeries TruncatedSeries::one(std::size_t degree) {
    TruncatedSeries s(degree);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t degree) {
    TruncatedSeries s(degree);
    if (degree >= 1) {
        s.coeffs_[1] = 1;
    }
    return s;
}

Rational TruncatedSeries::coeff_or_zero(long k) const {
    if (k < 0) {
        return 0;
    }
    if (static_cast<std::size_t>(k) > degree()) {
        throw Error("insufficient truncation: coefficient " + std::to_string(k) +
                    " requested from a series known to degree " + std::to_string(degree()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> TruncatedSeries::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return k;
        }
    }
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t degree) const {
    if (degree > this->degree()) {
        throw Error("cannot extend a series truncated at degree " + std::to_string(this->degree()) +
                    " to degree " + std::to_string(degree));
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(),
                                                 coeffs_.begin() + static_cast<long>(degree + 1)));
}

TruncatedSeries TruncatedSeries::shift_up(std::size_t k) const {
    TruncatedSeries s(degree());
    for (std::size_t i = k; i <= degree(); ++i) {
        s.coeffs_[i] = coeffs_[i - k];
    }
    return s;
}

TruncatedSeries TruncatedSeries::shift_down(std::size_t k) const {
    if (k > degree()) {
        throw Error("insufficient truncation to divide by t^" + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) {
            throw Error("series is not divisible by t^" + std::to_string(k));
        }
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    std::vector<Rational> c(a.degree() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] + b[k];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    std::vector<Rational> c(a.degree() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] - b[k];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& a) {
    std::vector<Rational> out(a.degree() + 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = c * a[k];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    const std::size_t n = a.degree();
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a[0] == 0) {
        throw Error("non-invertible series: constant term is zero");
    }
    const std::size_t n = a.degree();
    const Rational inv0 = 1 / a[0];
    std::vector<Rational> r(n + 1);
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += a[i] * r[k - i];
        }
        r[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    const auto m = b.order();
    if (!m) {
        throw Error("division by a series that vanishes to its truncation degree");
    }
    return mul(a.shift_down(*m), reciprocal(b.shift_down(*m)));
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    if (b[0] != 0) {
        throw Error("composition requires order >= 1 of the inner series");
    }
    const std::size_t n = a.degree();
    TruncatedSeries acc = TruncatedSeries::from_polynomial(Polynomial{a[n]}, n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, b);
        acc = add(acc, TruncatedSeries::from_polynomial(Polynomial{a[k]}, n));
    }
    return acc;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
    if (f[0] != 0 || f.degree() < 1 || f[1] == 0) {
        throw Error("not invertible under composition: need f_0 = 0 and f_1 != 0");
    }
    const std::size_t n = f.degree();
    std::vector<Rational> g(n + 1);
    g[1] = 1 / f[1];
    // Coefficient k of f(g) is f_1 g_k plus terms in g_1..g_{k-1}.
    for (std::size_t k = 2; k <= n; ++k) {
        const TruncatedSeries gk(std::vector<Rational>(g.begin(), g.begin() + static_cast<long>(k + 1)));
        const auto fg = compose(f.truncated(k), gk);
        g[k] = -fg[k] / f[1];
    }
    return TruncatedSeries(std::move(g));
}

RationalGF::RationalGF() : num_(), den_{Rational(1)} {}

RationalGF::RationalGF(Polynomial num) : num_(std::move(num)), den_{Rational(1)} {}

RationalGF::RationalGF(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        throw Error("non-expandable generating function: zero denominator");
    }
    if (num.is_zero()) {
        num_ = {};
        den_ = Polynomial{Rational(1)};
        return;
    }
    const auto common = gcd(num, den);
    num = divmod(num, common).first;
    den = divmod(den, common).first;
    if (den[0] == 0) {
        throw Error("non-expandable generating function: denominator vanishes at t = 0");
    }
    const Rational d0 = den[0];
    num_ = Rational(1 / d0) * num;
    den_ = Rational(1 / d0) * den;
}

RationalGF RationalGF::divided_by_t() const {
    return RationalGF(num_.shift_down(1), den_);
}

RationalGF RationalGF::times_t() const {
    return RationalGF(Polynomial::monomial(1, 1) * num_, den_);
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TruncatedSeries gf_coeffs(const RationalGF& gf, std::size_t degree) {
    const auto& den = gf.den();
    if (den[0] == 0) {
        throw Error("non-expandable generating function");
    }
    const Rational inv0 = 1 / den[0];
    const auto dd = static_cast<std::size_t>(std::max(0L, den.degree()));
    std::vector<Rational> c(degree + 1);
    // den * c = num  =>  c_k = (num_k - sum_{i>=1} den_i c_{k-i}) / den_0
    for (std::size_t k = 0; k <= degree; ++k) {
        Rational acc = gf.num()[k];
        for (std::size_t i = 1; i <= std::min(k, dd); ++i) {
            acc -= den[i] * c[k - i];
        }
        c[k] = acc * inv0;
    }
    return TruncatedSeries(std::move(c));
}

} // namespace tpr
