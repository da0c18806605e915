#pragma once

#include "tpriordan/matrix.hpp"
#include "tpriordan/series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tpr {

enum class Verdict { TpUpToBudget, NotTp };

/// A minor given by explicit row and column index lists (no super/subscript
/// convention), together with its exact value.
struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;

    friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

/// Outcome of a total-positivity check on a finite matrix.
///
/// `TpUpToBudget` means every minor of order <= max_order_checked is
/// nonnegative. A `NotTp` report carries the first negative minor in the
/// canonical order: increasing order, then row set, then column set, both
/// lexicographic. `minors_checked` counts determinants evaluated up to the
/// verdict in that order; structurally zero minors are skipped, not counted.
struct TPReport {
    Verdict verdict = Verdict::TpUpToBudget;
    std::optional<MinorWitness> witness;
    std::uint64_t minors_checked = 0;
    std::size_t max_order_checked = 0;

    bool is_tp() const { return verdict == Verdict::TpUpToBudget; }
    friend bool operator==(const TPReport&, const TPReport&) = default;
};

/// Exact minor; rows and cols strictly increasing, same nonzero length, in range.
Rational minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Exhaustive minor enumeration up to `max_order`. `threads` = 0 picks the
/// hardware concurrency; the report does not depend on the thread count.
TPReport is_tp(const Matrix& m, std::size_t max_order, unsigned threads = 0);

/// Decision of the Polya-frequency product form for a rational generating
/// function: num = C t^k prod(1 + a_j t), den = prod(1 - b_j t), a_j, b_j >= 0.
struct PfCertificate {
    bool is_pf = false;
    Rational constant;
    std::size_t shift = 0;
    bool numerator_roots_real_nonpositive = false;
    bool denominator_roots_real_positive = false;
    bool coefficients_nonnegative = false;
    std::string reason;
};

/// Exact PF decision via Sturm sequences on square-free parts.
PfCertificate is_pf_rational(const RationalGF& gf);

/// Lower-triangular Toeplitz block [s_{i-j}] of size (n+1)x(n+1); n <= s.degree().
Matrix toeplitz_truncation(const TruncatedSeries& s, std::size_t n);

/// TP check of the Toeplitz truncation. A negative verdict disproves PF; a
/// positive one is only a necessary condition.
TPReport is_pf_truncated(const TruncatedSeries& s, std::size_t n, std::size_t max_order,
                         unsigned threads = 0);

/// The four equivalent conditions for g = 1, each checked on a truncation
/// exposing the same minors.
struct ToeplitzCaseReport {
    TPReport pf_sequence; ///< Toeplitz matrix of the coefficients of f, size n+2
    TPReport appell;      ///< (f/t, t)_n
    TPReport lagrange;    ///< (1, f)_n
    TPReport quasi;       ///< [1, f]_{n+1} = [1] + (f/t, t)_n

    bool all_agree() const;
};

ToeplitzCaseReport toeplitz_case_report(const RationalGF& f, std::size_t n, std::size_t max_order,
                                        unsigned threads = 0);

/// True iff the four verdicts of `toeplitz_case_report` coincide.
bool toeplitz_case_equivalence(const RationalGF& f, std::size_t n, std::size_t max_order);

} // namespace tpr
