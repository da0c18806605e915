#include "tpriordan/rational.hpp"

#include <cctype>

namespace tpr {

Rational make_rational(long p, long q) {
    if (q == 0) {
        throw Error("zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw Error("malformed rational '" + std::string(text) + "'");
    }
    Integer den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text)) {
            throw Error("malformed rational '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
        if (den == 0) {
            throw Error("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational r(parse_integer(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

int sign(const Rational& value) {
    return sgn(value);
}

Rational pow(const Rational& value, unsigned exponent) {
    Rational result = 1;
    Rational base = value;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

} // namespace tpr
