#include "tpriordan/polynomial.hpp"

#include <algorithm>

namespace tpr {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    trim();
}

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw Error("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

std::size_t Polynomial::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return k;
        }
    }
    throw Error("zero polynomial has no order");
}

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
        if (coeffs_[i] != 0) {
            throw Error("polynomial is not divisible by t^" + std::to_string(k));
        }
    }
    if (k >= coeffs_.size()) {
        return {};
    }
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        return {};
    }
    return Rational(1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] + b[k];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
    return Rational(-1) * a;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = c * a.coeffs_[k];
    }
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw Error("polynomial division by zero");
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) {
        return {Polynomial{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    for (long k = da - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) {
            continue;
        }
        for (long j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 0) {
        return p;
    }
    return divmod(p, gcd(p, p.derivative())).first;
}

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) {
        throw Error("Sturm sequence of the zero polynomial");
    }
    chain_.push_back(p);
    auto next = p.derivative();
    while (!next.is_zero()) {
        chain_.push_back(next);
        const auto& prev = chain_[chain_.size() - 2];
        next = -divmod(prev, chain_.back()).second;
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

} // namespace

int SturmSequence::variations_at(const Rational& t) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        signs.push_back(sgn(q.evaluate(t)));
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        signs.push_back(sgn(q.leading()));
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        const int s = sgn(q.leading());
        signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_negative_roots() const {
    // (-inf, 0): a root at 0 would be counted by (-inf, 0], so exclude it.
    int n = variations_at_neg_infinity() - variations_at(Rational(0));
    if (chain_.front().evaluate(Rational(0)) == 0) {
        --n;
    }
    return n;
}

int SturmSequence::count_positive_roots() const {
    return variations_at(Rational(0)) - variations_at_pos_infinity();
}

} // namespace tpr
