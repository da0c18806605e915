#pragma once

#include "tpriordan/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tpr {

/// Univariate polynomial with exact rational coefficients in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c * t^k.
    static Polynomial monomial(Rational c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Coefficient of t^k; zero beyond the degree.
    Rational operator[](std::size_t k) const;
    const Rational& leading() const;
    /// Index of the lowest nonzero coefficient; the polynomial must be nonzero.
    std::size_t order() const;

    Rational evaluate(const Rational& t) const;
    Polynomial derivative() const;
    /// Divides by t^k; the k lowest coefficients must vanish.
    Polynomial shift_down(std::size_t k) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... for a nonzero polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    /// Sign changes of the chain evaluated at t.
    int variations_at(const Rational& t) const;
    int variations_at_neg_infinity() const;
    int variations_at_pos_infinity() const;

    /// Distinct real roots in the half-open interval (a, b]; a, b need not be roots.
    int count_roots(const Rational& a, const Rational& b) const;
    int count_negative_roots() const;
    int count_positive_roots() const;

private:
    std::vector<Polynomial> chain_;
};

} // namespace tpr
