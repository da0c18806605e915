#include "oracles.hpp"
#include "tpriordan/arrays.hpp"

#include <doctest.h>

using namespace tpr;

namespace {

Rational q(long p, long d = 1) {
    return make_rational(p, d);
}

RationalGF gf(std::vector<Rational> num, std::vector<Rational> den = {Rational(1)}) {
    return RationalGF(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

Matrix rows(const std::vector<std::vector<Rational>>& r) {
    return Matrix::from_rows(r);
}

const RiordanSpec& pascal() {
    static const RiordanSpec s(gf({1}, {1, -1}), gf({0, 1}, {1, -1}));
    return s;
}

const RiordanSpec& identity_spec() {
    static const RiordanSpec s(gf({1}), gf({0, 1}));
    return s;
}

std::vector<Rational> coeffs(const RationalGF& g, std::size_t n) {
    const auto s = gf_coeffs(g, n);
    return {s.coeffs().begin(), s.coeffs().end()};
}

RiordanSpec random_spec(std::mt19937_64& rng) {
    for (;;) {
        const auto f1 = oracle::random_rational(rng);
        if (f1 == 0) {
            continue;
        }
        try {
            return RiordanSpec(gf({1, oracle::random_rational(rng), oracle::random_rational(rng)},
                                  {1, oracle::random_rational(rng)}),
                               gf({0, f1, oracle::random_rational(rng)}, {1, oracle::random_rational(rng)}));
        } catch (const Error&) {
        }
    }
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("determinants match Leibniz up to order 7") {
    std::mt19937_64 rng(21);
    for (std::size_t k = 1; k <= 7; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            Matrix m(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    m(i, j) = oracle::random_rational(rng);
                }
            }
            CHECK(determinant(m) == oracle::leibniz_det(oracle::to_rows(m)));
        }
    }
}

TEST_CASE("determinant of singular and zero-pivot matrices") {
    CHECK(determinant(rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(rows({{0, 1, 0, 0, 0},
                            {1, 0, 0, 0, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1},
                            {0, 0, 1, 0, 0}})) == -1);
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(Matrix::identity(1), Matrix::identity(1)) == Matrix::identity(2));
    const auto s = direct_sum(rows({{1, 2}, {3, 4}}), Matrix::identity(3));
    CHECK(s.rows() == 5);
    CHECK(s(0, 1) == 2);
    CHECK(s(1, 0) == 3);
    CHECK(s(0, 2) == 0);
    CHECK(s(4, 1) == 0);
    CHECK(s(4, 4) == 1);
}

TEST_CASE("bandwidths") {
    const auto m = rows({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK(m.is_lower_triangular());
    CHECK(m.upper_bandwidth() == 0);
    CHECK(m.lower_bandwidth() == 2);
    const auto j = rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(j.upper_bandwidth() == 1);
    CHECK(j.lower_bandwidth() == 0);
}

}

TEST_SUITE("arrays") {

TEST_CASE("proper pair validation") {
    CHECK_THROWS_WITH_AS(RiordanSpec(gf({2}), gf({0, 1})), doctest::Contains("not a proper Riordan pair"), Error);
    CHECK_THROWS_AS(RiordanSpec(gf({1}), gf({0, 0, 1})), Error);
    CHECK_THROWS_AS(RiordanSpec(gf({1}), gf({1, 1})), Error);
    CHECK_NOTHROW(RiordanSpec::relaxed(gf({2}), gf({0, 0, 1})));
    CHECK_FALSE(RiordanSpec::relaxed(gf({2}), gf({0, 1})).is_proper());
}

TEST_CASE("riordan_truncation examples") {
    CHECK(riordan_truncation(identity_spec(), 4) == Matrix::identity(5));
    const auto p = riordan_truncation(pascal(), 4);
    for (std::size_t i = 0; i <= 4; ++i) {
        Integer binom = 1;
        for (std::size_t k = 0; k <= i; ++k) {
            CHECK(p(i, k) == Rational(binom));
            binom = binom * static_cast<long>(i - k) / static_cast<long>(k + 1);
        }
    }
    const RiordanSpec s(gf({1, 2, 1}), gf({0, 1}, {1, -1}));
    CHECK(riordan_truncation(s, 3) == rows({{1}, {2, 1}, {1, 3, 1}, {0, 4, 4, 1}}));
}

TEST_CASE("quasi_truncation examples") {
    const RiordanSpec a(gf({1, 2, 1}), gf({0, 1}, {1, -1}));
    CHECK(quasi_truncation(a, 3) == rows({{1}, {2, 1}, {1, 1, 1}, {0, 1, 1, 1}}));
    const RiordanSpec b(gf({1, -3}, {1, -4, 1}), gf({0, 1}, {1, -4, 1}));
    CHECK(quasi_truncation(b, 4) == rows({{1}, {1, 1}, {3, 4, 1}, {11, 15, 4, 1}, {41, 56, 15, 4, 1}}));
    const RiordanSpec c(gf({1, 1, 1}), gf({0, 1}, {1, -2}));
    CHECK(quasi_truncation(c, 4) == rows({{1}, {1, 1}, {1, 2, 1}, {0, 4, 2, 1}, {0, 8, 4, 2, 1}}));
}

TEST_CASE("truncations agree with the brute-force constructions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = random_spec(rng);
        const auto g = coeffs(s.g(), 7);
        const auto f = coeffs(s.f(), 7);
        CHECK(riordan_truncation(s, 7) == oracle::riordan(g, f, 7));
        CHECK(quasi_truncation(s, 7) == oracle::quasi(g, f, 7));
    }
}

TEST_CASE("product and inverse") {
    const auto sq = riordan_product(pascal(), pascal(), 6);
    CHECK(sq.g == gf_coeffs(gf({1}, {1, -2}), 6));
    CHECK(sq.f == gf_coeffs(gf({0, 1}, {1, -2}), 6));
    const auto inv = riordan_inverse(pascal(), 6);
    CHECK(inv.g == gf_coeffs(gf({1}, {1, 1}), 6));
    CHECK(inv.f == gf_coeffs(gf({0, 1}, {1, 1}), 6));
    const auto id = riordan_product(expand(pascal(), 6), inv);
    CHECK(id == expand(identity_spec(), 6));
    CHECK(riordan_product(pascal(), identity_spec(), 6) == expand(pascal(), 6));
}

TEST_CASE("property: inverse pair is the matrix inverse") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        const auto s = random_spec(rng);
        const auto inv = oracle::inverse(riordan_truncation(s, 6));
        REQUIRE(inv.has_value());
        CHECK(riordan_truncation(riordan_inverse(s, 6), 6) == *inv);
    }
}

TEST_CASE("property: truncation of a product is the product of truncations") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 15; ++trial) {
        const auto a = random_spec(rng);
        const auto b = random_spec(rng);
        CHECK(riordan_truncation(riordan_product(a, b, 7), 7) == riordan_truncation(a, 7) * riordan_truncation(b, 7));
    }
}

TEST_CASE("factorization identity") {
    CHECK(factorization_check(identity_spec(), 5));
    CHECK(factorization_check(pascal(), 8));
    CHECK(factorization_check(RiordanSpec(gf({1, 2, 1}), gf({0, 1}, {1, -1})), 6));
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_spec(rng);
        for (std::size_t n : {1u, 4u, 12u}) {
            CHECK(factorization_check(s, n));
        }
    }
}

TEST_CASE("property: quasi structure") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_spec(rng);
        const auto m = quasi_truncation(s, 7);
        CHECK(m.is_lower_triangular());
        for (std::size_t k = 2; k <= 7; ++k) {
            for (std::size_t i = 1; i <= 7; ++i) {
                CHECK(m(i, k) == m(i - 1, k - 1));
            }
        }
        // [g, tg] = (g, t)
        const RiordanSpec appell(s.g(), gf({0, 1}));
        CHECK(quasi_truncation(RiordanSpec(s.g(), s.g().times_t()), 7) == riordan_truncation(appell, 7));
    }
}

}
