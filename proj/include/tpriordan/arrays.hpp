#pragma once

#include "tpriordan/matrix.hpp"
#include "tpriordan/series.hpp"

#include <cstddef>

namespace tpr {

/// A pair (g, f) of generating functions defining a Riordan array (g, f)
/// and its quasi-Riordan companion [g, f].
///
/// The checked constructor enforces the proper case: g(0) = 1 and f of order
/// exactly one. `relaxed` admits g(0) > 0 and f of any order >= 1, which is
/// what Toeplitz and Polya-frequency experiments need.
class RiordanSpec {
public:
    RiordanSpec(RationalGF g, RationalGF f);
    static RiordanSpec relaxed(RationalGF g, RationalGF f);

    const RationalGF& g() const { return g_; }
    const RationalGF& f() const { return f_; }
    bool is_proper() const { return proper_; }

    friend bool operator==(const RiordanSpec&, const RiordanSpec&) = default;

private:
    RiordanSpec(RationalGF g, RationalGF f, bool proper);

    RationalGF g_;
    RationalGF f_;
    bool proper_ = true;
};

/// Truncated expansions of g and f, both known to the same degree.
struct SeriesPair {
    TruncatedSeries g;
    TruncatedSeries f;

    friend bool operator==(const SeriesPair&, const SeriesPair&) = default;
};

SeriesPair expand(const RiordanSpec& spec, std::size_t degree);

/// Leading (n+1)x(n+1) block of (g, f): entry (i, k) = [t^i] g f^k.
Matrix riordan_truncation(const RiordanSpec& spec, std::size_t n);
Matrix riordan_truncation(const SeriesPair& pair, std::size_t n);

/// Leading (n+1)x(n+1) block of [g, f] = (g, f, tf, t^2 f, ...).
Matrix quasi_truncation(const RiordanSpec& spec, std::size_t n);
Matrix quasi_truncation(const SeriesPair& pair, std::size_t n);

/// (g1 g2(f1), f2(f1)) truncated at degree N.
SeriesPair riordan_product(const RiordanSpec& a, const RiordanSpec& b, std::size_t degree);
SeriesPair riordan_product(const SeriesPair& a, const SeriesPair& b);

/// (1/g(fbar), fbar) truncated at degree N, fbar the compositional inverse of f.
SeriesPair riordan_inverse(const RiordanSpec& a, std::size_t degree);
SeriesPair riordan_inverse(const SeriesPair& a);

/// Whether (g, f)_n = [g, f]_n ([1] + (g, f)_{n-1}) holds exactly.
bool factorization_check(const RiordanSpec& spec, std::size_t n);

} // namespace tpr
