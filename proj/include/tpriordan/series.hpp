#pragma once

#include "tpriordan/polynomial.hpp"
#include "tpriordan/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tpr {

/// Coefficients c_0..c_N of a formal power series, known modulo t^{N+1}.
///
/// The truncation degree N is part of the value: binary operations require
/// both operands to share it and never read past it.
class TruncatedSeries {
public:
    /// The zero series truncated at degree N.
    explicit TruncatedSeries(std::size_t degree);
    /// Takes c_0..c_N; the list must be non-empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    /// Expansion of a polynomial, dropping terms above N.
    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t degree);
    /// 1 + 0t + ... mod t^{N+1}.
    static TruncatedSeries one(std::size_t degree);
    /// The series t mod t^{N+1}.
    static TruncatedSeries identity(std::size_t degree);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    /// Coefficient k, or zero for negative k; throws past the truncation.
    Rational coeff_or_zero(long k) const;

    /// Index of the first nonzero coefficient, or nullopt when zero up to N.
    std::optional<std::size_t> order() const;

    /// Keeps coefficients 0..degree (degree <= N).
    TruncatedSeries truncated(std::size_t degree) const;
    /// Multiplies by t^k, keeping the truncation degree.
    TruncatedSeries shift_up(std::size_t k) const;
    /// Divides by t^k; the k lowest coefficients must vanish. Degree drops by k.
    TruncatedSeries shift_down(std::size_t k) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& a);

/// Cauchy product modulo t^{N+1}.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a modulo t^{N+1}; requires a_0 != 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// a/b where b may have positive order m: the m lowest coefficients of a
/// must vanish and the quotient is known to degree N - m.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// a(b(t)) modulo t^{N+1} by Horner's rule; requires b_0 = 0.
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// The series g with f(g(t)) = t modulo t^{N+1}; requires f_0 = 0, f_1 != 0.
TruncatedSeries comp_inverse(const TruncatedSeries& f);

/// A power series presented as num/den with den(0) != 0.
///
/// Construction removes gcd(num, den) and scales so that den(0) = 1, which
/// makes structural equality coincide with equality of the series.
class RationalGF {
public:
    /// The zero series.
    RationalGF();
    RationalGF(Polynomial num, Polynomial den);
    /// A polynomial series (den = 1).
    explicit RationalGF(Polynomial num);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    Rational constant_term() const { return num_[0]; }

    /// The generating function divided by t; the constant term must vanish.
    RationalGF divided_by_t() const;
    RationalGF times_t() const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);

private:
    Polynomial num_;
    Polynomial den_;
};

/// Coefficients c_0..c_N of num/den, solved from den * series = num.
TruncatedSeries gf_coeffs(const RationalGF& gf, std::size_t degree);

} // namespace tpr
