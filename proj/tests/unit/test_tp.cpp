#include "oracles.hpp"
#include "tpriordan/arrays.hpp"
#include "tpriordan/tp.hpp"

#include <doctest.h>

using namespace tpr;

namespace {

Rational q(long p, long d = 1) {
    return make_rational(p, d);
}

RationalGF gf(std::vector<Rational> num, std::vector<Rational> den = {Rational(1)}) {
    return RationalGF(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

using Idx = std::vector<std::size_t>;

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool lower) {
    Matrix m(r, c);
    std::uniform_int_distribution<int> d(0, 4);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (!lower || j <= i) {
                m(i, j) = d(rng) - 1; // mostly nonnegative so that deep witnesses occur
            }
        }
    }
    return m;
}

void check_against_oracle(const Matrix& m, std::size_t max_order) {
    const auto report = is_tp(m, max_order);
    const auto expected = oracle::first_negative_minor(m, max_order);
    REQUIRE(report.is_tp() == !expected.has_value());
    if (expected) {
        CHECK(report.witness->rows == expected->rows);
        CHECK(report.witness->cols == expected->cols);
        CHECK(report.witness->value == expected->value);
    }
}

} // namespace

TEST_SUITE("tp") {

TEST_CASE("minor examples") {
    const RiordanSpec a(gf({1, 2, 1}), gf({0, 1}, {1, -1}));
    const Idx r3{1, 2, 3}, c3{0, 1, 2};
    CHECK(minor(quasi_truncation(a, 3), r3, c3) == -1);
    const RiordanSpec b(gf({1}, {1, -3}), gf({0, 1}, {1, -4, 4}));
    const Idx r2{3, 4}, c2{0, 1};
    CHECK(minor(quasi_truncation(b, 4), r2, c2) == -108);
    const auto m = quasi_truncation(b, 4);
    const Idx one_r{4}, one_c{1};
    CHECK(minor(m, one_r, one_c) == m(4, 1));
}

TEST_CASE("invalid minor selection") {
    const auto m = Matrix::identity(3);
    const Idx good{0, 1}, unsorted{1, 0}, out{1, 3}, short_{0};
    CHECK_THROWS_WITH_AS(minor(m, unsorted, good), doctest::Contains("invalid minor selection"), Error);
    CHECK_THROWS_AS(minor(m, good, out), Error);
    CHECK_THROWS_AS(minor(m, good, short_), Error);
    CHECK_THROWS_AS(minor(m, Idx{}, Idx{}), Error);
}

TEST_CASE("is_tp examples") {
    const RiordanSpec pascal(gf({1}, {1, -1}), gf({0, 1}, {1, -1}));
    const auto p = is_tp(riordan_truncation(pascal, 8), 8);
    CHECK(p.is_tp());
    CHECK(p.max_order_checked == 8);
    CHECK_FALSE(p.witness.has_value());

    const RiordanSpec a(gf({1, 2, 1}), gf({0, 1}, {1, -1}));
    const auto r = is_tp(quasi_truncation(a, 3), 3);
    REQUIRE_FALSE(r.is_tp());
    CHECK(r.witness->rows == Idx{1, 2, 3});
    CHECK(r.witness->cols == Idx{0, 1, 2});
    CHECK(r.witness->value == -1);

    CHECK(is_tp(Matrix::identity(1), 1).is_tp());
}

TEST_CASE("is_tp matches the unpruned Leibniz oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const bool lower = trial % 2 == 0;
        const std::size_t n = 3 + trial % 4;
        check_against_oracle(random_matrix(rng, n, n, lower), n);
    }
    // rectangular and banded shapes exercise both bandwidth prunes
    check_against_oracle(Matrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 1}}), 3);
    check_against_oracle(Matrix::from_rows({{1, 2}, {1, 3}, {1, 4}, {1, 1}}), 2);
}

TEST_CASE("report does not depend on the thread count") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(rng, 9, 9, true);
        const auto base = is_tp(m, 5, 1);
        for (unsigned t : {2u, 3u, 8u}) {
            CHECK(is_tp(m, 5, t) == base);
        }
    }
    const RiordanSpec fam(gf({1, -3}, {1, -4, 1}), gf({0, 1}, {1, -4, 1}));
    const auto m = quasi_truncation(fam, 9);
    CHECK(is_tp(m, 6, 1) == is_tp(m, 6, 7));
}

TEST_CASE("property: monotone in the order budget") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 6, 6, true);
        for (std::size_t r = 1; r < 6; ++r) {
            if (!is_tp(m, r).is_tp()) {
                for (std::size_t r2 = r; r2 <= 6; ++r2) {
                    const auto rep = is_tp(m, r2);
                    CHECK_FALSE(rep.is_tp());
                    CHECK(rep.witness == is_tp(m, r).witness);
                }
                break;
            }
        }
    }
}

TEST_CASE("witness invariants") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 6, 6, false);
        const auto r = is_tp(m, 6);
        if (r.witness) {
            CHECK(r.witness->value < 0);
            CHECK(r.witness->rows.size() == r.witness->cols.size());
            CHECK(std::is_sorted(r.witness->rows.begin(), r.witness->rows.end()));
            CHECK(minor(m, r.witness->rows, r.witness->cols) == r.witness->value);
        }
    }
}

TEST_CASE("PF decisions") {
    CHECK(is_pf_rational(gf({1, 2, 1})).is_pf);
    CHECK(is_pf_rational(gf({0, 1}, {1, -1})).is_pf);
    CHECK(is_pf_rational(gf({0, 1}, {1, -4, 1})).is_pf);
    CHECK(is_pf_rational(gf({0, 1}, {1, -4, 4})).is_pf);
    CHECK(is_pf_rational(gf({0, 0, 3, 3})).is_pf);
    CHECK_FALSE(is_pf_rational(gf({1, 1, 1})).is_pf);
    CHECK_FALSE(is_pf_rational(gf({1, -3}, {1, -4, 1})).is_pf);
    CHECK_FALSE(is_pf_rational(gf({1, 0, 1})).is_pf);
    CHECK_FALSE(is_pf_rational(gf({1}, {1, 1})).is_pf);
    CHECK_FALSE(is_pf_rational(gf({-1})).is_pf);
    // 1/(1 + t^2): denominator roots are not real
    CHECK_FALSE(is_pf_rational(gf({1}, {1, 0, 1})).is_pf);
    CHECK_THROWS_WITH_AS(is_pf_rational(gf({0})), doctest::Contains("zero series"), Error);

    const auto c = is_pf_rational(gf({0, 0, 6, 6}, {1, -1}));
    CHECK(c.is_pf);
    CHECK(c.constant == 6);
    CHECK(c.shift == 2);
    CHECK(c.numerator_roots_real_nonpositive);
    CHECK(c.denominator_roots_real_positive);
}

TEST_CASE("property: PF decision agrees with the truncated Toeplitz check") {
    // products of PF factors stay PF; a complex-conjugate factor breaks it
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<int> d(1, 3);
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial num = Polynomial{1, q(d(rng))} * Polynomial{1, q(d(rng), 2)};
        const Polynomial den{1, -q(1, d(rng))};
        const RationalGF pf(num, den);
        REQUIRE(is_pf_rational(pf).is_pf);
        CHECK(is_pf_truncated(gf_coeffs(pf, 7), 7, 4).is_tp());
    }
}

TEST_CASE("Toeplitz truncations") {
    const TruncatedSeries ones(std::vector<Rational>{1, 1, 1, 1});
    CHECK(toeplitz_truncation(ones, 3) == Matrix::from_rows({{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}}));
    const TruncatedSeries shifted(std::vector<Rational>{0, 1, 1, 1});
    CHECK(toeplitz_truncation(shifted, 3) == Matrix::from_rows({{0}, {1, 0}, {1, 1, 0}, {1, 1, 1, 0}}));
    const TruncatedSeries banded(std::vector<Rational>{2, 3, 1, 0, 0});
    CHECK(toeplitz_truncation(banded, 4)(4, 1) == 0);
    CHECK(toeplitz_truncation(banded, 4)(3, 1) == 1);
    CHECK_THROWS_WITH_AS(toeplitz_truncation(banded, 5), doctest::Contains("insufficient coefficients"), Error);
}

TEST_CASE("truncated PF checks") {
    CHECK(is_pf_truncated(gf_coeffs(gf({0, 1}, {1, -1}), 6), 6, 4).is_tp());
    CHECK(is_pf_truncated(gf_coeffs(gf({1}), 6), 6, 6).is_tp());
    // (1,1,1): no order-2 minor is negative, the first witness has order 3
    const auto r = is_pf_truncated(gf_coeffs(gf({1, 1, 1}), 4), 4, 4);
    REQUIRE_FALSE(r.is_tp());
    CHECK(r.witness->rows == Idx{1, 2, 3});
    CHECK(r.witness->cols == Idx{0, 1, 2});
    CHECK(r.witness->value == -1);
    CHECK(is_pf_truncated(gf_coeffs(gf({1, 1, 1}), 4), 4, 2).is_tp());
}

TEST_CASE("four-way Toeplitz agreement") {
    const auto a = toeplitz_case_report(gf({0, 1}, {1, -1}), 6, 8);
    CHECK(a.all_agree());
    CHECK(a.pf_sequence.is_tp());
    const auto b = toeplitz_case_report(gf({0, 1, 1, 1}), 6, 8);
    CHECK(b.all_agree());
    CHECK_FALSE(b.quasi.is_tp());
    CHECK_FALSE(b.lagrange.is_tp());
    CHECK(toeplitz_case_equivalence(gf({0, 1}), 5, 6));
}

TEST_CASE("Lagrange truncation needs a longer horizon for t(1+2t+2t^2)") {
    const auto f = gf({0, 1, 2, 2});
    const auto r = toeplitz_case_report(f, 6, 8);
    CHECK_FALSE(r.pf_sequence.is_tp());
    CHECK(r.lagrange.is_tp());
    const RiordanSpec lagrange = RiordanSpec::relaxed(gf({1}), f);
    CHECK_FALSE(is_tp(riordan_truncation(lagrange, 10), 11).is_tp());
}

TEST_CASE("property: a TP quasi truncation has a TP Toeplitz block for f") {
    std::mt19937_64 rng(46);
    std::uniform_int_distribution<int> d(0, 3);
    std::size_t tp_cases = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gf({1, q(d(rng)), q(d(rng))});
        const auto f = gf({0, q(1 + d(rng)), q(d(rng)), q(d(rng), 2)});
        const auto quasi = is_tp(quasi_truncation(RiordanSpec(g, f), 5), 6);
        if (quasi.is_tp()) {
            ++tp_cases;
            CHECK(is_pf_truncated(gf_coeffs(f, 5).shift_down(1), 4, 5).is_tp());
        }
    }
    CHECK(tp_cases > 0);
}

}
