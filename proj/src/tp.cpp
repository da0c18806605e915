#include "tpriordan/tp.hpp"

#include "tpriordan/arrays.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace tpr {

namespace {

void validate_indices(std::span<const std::size_t> idx, std::size_t bound) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= bound || (i > 0 && idx[i] <= idx[i - 1])) {
            throw Error("invalid minor selection: indices must be strictly increasing and in range");
        }
    }
}

/// Enumerates k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) {
        cur[i] = i;
    }
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

struct ChunkResult {
    std::optional<MinorWitness> witness;
    std::uint64_t checked = 0;
};

/// Scans all column sets compatible with the band structure of `m` for each
/// row set of one chunk. A minor whose sorted row r_i lies more than `upper`
/// above its column c_i (or more than `lower` below it) is structurally zero.
class ChunkScanner {
public:
    ChunkScanner(const Matrix& m, std::size_t order, std::size_t upper, std::size_t lower)
        : m_(m), k_(order), upper_(upper), lower_(lower), cols_(order), buffer_(order * order) {}

    ChunkResult scan(std::span<const std::vector<std::size_t>> row_sets, std::size_t chunk_index,
                     const std::atomic<std::size_t>& best_chunk) {
        ChunkResult result;
        for (const auto& rows : row_sets) {
            if (best_chunk.load(std::memory_order_relaxed) < chunk_index) {
                break;
            }
            rows_ = &rows;
            if (descend(0, 0, result)) {
                break;
            }
        }
        return result;
    }

private:
    // Returns true once a negative minor has been recorded.
    bool descend(std::size_t pos, std::size_t first_col, ChunkResult& result) {
        if (pos == k_) {
            return evaluate(result);
        }
        const std::size_t r = (*rows_)[pos];
        std::size_t lo = first_col;
        if (r > lower_) {
            lo = std::max(lo, r - lower_);
        }
        // Leave room for the remaining k - pos - 1 columns.
        const std::size_t room = m_.cols() - (k_ - pos);
        const std::size_t hi = std::min(r + upper_, room);
        for (std::size_t c = lo; c <= hi; ++c) {
            cols_[pos] = c;
            if (descend(pos + 1, c + 1, result)) {
                return true;
            }
        }
        return false;
    }

    bool evaluate(ChunkResult& result) {
        const auto& rows = *rows_;
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) {
                buffer_[i * k_ + j] = m_(rows[i], cols_[j]);
            }
        }
        ++result.checked;
        Rational value = determinant_in_place(buffer_, k_);
        if (value < 0) {
            result.witness = MinorWitness{rows, cols_, std::move(value)};
            return true;
        }
        return false;
    }

    const Matrix& m_;
    std::size_t k_;
    std::size_t upper_;
    std::size_t lower_;
    const std::vector<std::size_t>* rows_ = nullptr;
    std::vector<std::size_t> cols_;
    std::vector<Rational> buffer_;
};

constexpr std::size_t kMinRowSetsPerThread = 32;

} // namespace

Rational minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (rows.empty() || rows.size() != cols.size()) {
        throw Error("invalid minor selection: row and column lists must be non-empty and of equal length");
    }
    validate_indices(rows, m.rows());
    validate_indices(cols, m.cols());
    return determinant(m.submatrix(rows, cols));
}

TPReport is_tp(const Matrix& m, std::size_t max_order, unsigned threads) {
    if (max_order < 1) {
        throw Error("max_order must be at least 1");
    }
    TPReport report;
    report.max_order_checked = std::min({max_order, m.rows(), m.cols()});
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    const std::size_t upper = m.upper_bandwidth();
    const std::size_t lower = m.lower_bandwidth();

    for (std::size_t k = 1; k <= report.max_order_checked; ++k) {
        const auto row_sets = all_subsets(m.rows(), k);
        const std::size_t chunks = std::clamp<std::size_t>(row_sets.size() / kMinRowSetsPerThread, 1, threads);
        const std::size_t per_chunk = (row_sets.size() + chunks - 1) / chunks;
        std::vector<ChunkResult> results(chunks);
        std::atomic<std::size_t> best_chunk{std::numeric_limits<std::size_t>::max()};

        auto run = [&](std::size_t c) {
            const std::size_t begin = std::min(row_sets.size(), c * per_chunk);
            const std::size_t end = std::min(row_sets.size(), begin + per_chunk);
            ChunkScanner scanner(m, k, upper, lower);
            results[c] = scanner.scan(std::span(row_sets).subspan(begin, end - begin), c, best_chunk);
            if (results[c].witness) {
                std::size_t expected = best_chunk.load();
                while (c < expected && !best_chunk.compare_exchange_weak(expected, c)) {
                }
            }
        };

        if (chunks == 1) {
            run(0);
        } else {
            std::vector<std::jthread> workers;
            workers.reserve(chunks);
            for (std::size_t c = 0; c < chunks; ++c) {
                workers.emplace_back(run, c);
            }
        }

        // Chunks before the first witness ran to completion, so the count
        // matches a sequential scan.
        for (auto& r : results) {
            report.minors_checked += r.checked;
            if (r.witness) {
                report.verdict = Verdict::NotTp;
                report.witness = std::move(r.witness);
                return report;
            }
        }
    }
    return report;
}

PfCertificate is_pf_rational(const RationalGF& gf) {
    if (gf.is_zero()) {
        throw Error("zero series");
    }
    PfCertificate cert;
    const auto& num = gf.num();
    const auto& den = gf.den();
    cert.shift = num.order();
    cert.constant = num[cert.shift];

    constexpr std::size_t kSanityDepth = 32;
    const auto head = gf_coeffs(gf, kSanityDepth);
    cert.coefficients_nonnegative =
        std::all_of(head.coeffs().begin(), head.coeffs().end(), [](const Rational& c) { return c >= 0; });

    const auto reduced = num.shift_down(cert.shift);
    const auto num_sf = square_free_part(reduced);
    cert.numerator_roots_real_nonpositive =
        num_sf.degree() <= 0 || SturmSequence(num_sf).count_negative_roots() == num_sf.degree();

    const auto den_sf = square_free_part(den);
    cert.denominator_roots_real_positive =
        den_sf.degree() <= 0 || SturmSequence(den_sf).count_positive_roots() == den_sf.degree();

    if (cert.constant <= 0) {
        cert.reason = "leading coefficient C = " + to_string(cert.constant) + " is not positive";
    } else if (!cert.numerator_roots_real_nonpositive) {
        cert.reason = "numerator has a root that is not real and nonpositive";
    } else if (!cert.denominator_roots_real_positive) {
        cert.reason = "denominator has a root that is not real and positive";
    } else {
        cert.is_pf = true;
        cert.reason = "product form with nonnegative parameters";
    }
    return cert;
}

Matrix toeplitz_truncation(const TruncatedSeries& s, std::size_t n) {
    if (n > s.degree()) {
        throw Error("insufficient coefficients: Toeplitz block of size " + std::to_string(n + 1) +
                    " needs degree " + std::to_string(n));
    }
    Matrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m(i, j) = s[i - j];
        }
    }
    return m;
}

TPReport is_pf_truncated(const TruncatedSeries& s, std::size_t n, std::size_t max_order, unsigned threads) {
    return is_tp(toeplitz_truncation(s, n), max_order, threads);
}

bool ToeplitzCaseReport::all_agree() const {
    const bool v = pf_sequence.is_tp();
    return appell.is_tp() == v && lagrange.is_tp() == v && quasi.is_tp() == v;
}

ToeplitzCaseReport toeplitz_case_report(const RationalGF& f, std::size_t n, std::size_t max_order,
                                        unsigned threads) {
    if (f.is_zero() || f.constant_term() != 0) {
        throw Error("f must have order >= 1");
    }
    const auto fs = gf_coeffs(f, n + 1);
    const auto appell = RiordanSpec::relaxed(f.divided_by_t(), RationalGF(Polynomial{0, 1}));
    const auto lagrange = RiordanSpec::relaxed(RationalGF(Polynomial{1}), f);
    const auto quasi = RiordanSpec::relaxed(RationalGF(Polynomial{1}), f);

    ToeplitzCaseReport report;
    report.pf_sequence = is_pf_truncated(fs, n + 1, max_order, threads);
    report.appell = is_tp(riordan_truncation(appell, n), max_order, threads);
    report.lagrange = is_tp(riordan_truncation(lagrange, n), max_order, threads);
    report.quasi = is_tp(quasi_truncation(quasi, n + 1), max_order, threads);
    return report;
}

bool toeplitz_case_equivalence(const RationalGF& f, std::size_t n, std::size_t max_order) {
    return toeplitz_case_report(f, n, max_order).all_agree();
}

} // namespace tpr
