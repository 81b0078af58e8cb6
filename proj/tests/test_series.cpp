#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "dyckodd/kernel.hpp"
#include "dyckodd/series.hpp"

using namespace dyckodd;

namespace {

series geometric(std::int64_t precision) {
    // 1/(1 - z)
    return series::one(precision) / series::polynomial({{0, 1}, {1, -1}}, precision);
}

// Small random Laurent series with a fixed seed; the workhorse of the
// property sections.
series random_series(std::mt19937& rng, bool force_nonzero = false) {
    std::uniform_int_distribution<int> val_dist(-3, 3);
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 4);
    for (;;) {
        std::int64_t valuation = val_dist(rng);
        int len = len_dist(rng);
        std::vector<rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i)
            coeffs.emplace_back(num_dist(rng), den_dist(rng));
        series s = series::from_coefficients(valuation, coeffs, valuation + len);
        if (!force_nonzero || !s.is_zero()) return s;
    }
}

}  // namespace

TEST_CASE("construction and normalization") {
    series s = series::from_coefficients(
        0, {rational(0), rational(0), rational(3), rational(0), rational(0)}, 5);
    CHECK(s.valuation() == 2);
    CHECK(s.precision() == 5);
    CHECK(s.coeff(2) == 3);
    CHECK(s.coeff(0) == 0);

    series z = series::zero(7);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 7);
    CHECK(z.precision() == 7);

    series all_zero = series::from_coefficients(-2, {rational(0), rational(0)}, 0);
    CHECK(all_zero.is_zero());
}

TEST_CASE("addition") {
    series a = series::polynomial({{0, 1}, {1, 1}}, 8);   // 1 + z
    series b = series::polynomial({{0, 1}, {1, -1}}, 8);  // 1 - z
    series sum = a + b;
    CHECK(sum.coeff(0) == 2);
    CHECK(sum.coeff(1) == 0);
    CHECK(sum.valuation() == 0);

    SECTION("additive identity") {
        series s = series::polynomial({{-1, 3}, {2, 5}}, 6);
        CHECK(agree(s + series::zero(6), s));
    }
    SECTION("precision is the minimum") {
        series wide = series::one(20);
        series narrow = series::one(5);
        CHECK((wide + narrow).precision() == 5);
    }
}

TEST_CASE("multiplication") {
    series a = series::polynomial({{0, 1}, {1, 1}}, 9);
    series b = series::polynomial({{0, 1}, {1, -1}}, 9);
    series prod = a * b;  // 1 - z^2
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);

    SECTION("multiplicative identity") {
        series s = series::polynomial({{-2, 7}, {0, -1}, {3, 2}}, 10);
        CHECK(agree(s * series::one(15), s));
    }
    SECTION("z * v1 clears the pole") {
        series v1 = solve_v1(12);
        series p = series::monomial(1, 1, 14) * v1;
        CHECK(p.valuation() == 0);
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(2) == -1);
        CHECK(p.coeff(6) == -1);
        CHECK(p.coeff(8) == -2);
        CHECK(p.coeff(10) == -4);
    }
    SECTION("valuations add") {
        series x = series::monomial(rational(3, 2), -2, 4);
        series y = series::monomial(2, 5, 9);
        series p = x * y;
        CHECK(p.valuation() == 3);
        CHECK(p.coeff(3) == 3);
    }
}

TEST_CASE("division") {
    SECTION("geometric series") {
        series g = geometric(10);
        for (int n = 0; n < 10; ++n) CHECK(g.coeff(n) == 1);
    }
    SECTION("s / s = 1") {
        series s = series::polynomial({{-1, 2}, {0, 1}, {4, -3}}, 9);
        series q = s / s;
        CHECK(q.valuation() == 0);
        CHECK(q.coeff(0) == 1);
        for (std::int64_t n = 1; n < q.precision(); ++n) CHECK(q.coeff(n) == 0);
    }
    SECTION("zero divisor raises") {
        series s = series::one(6);
        CHECK_THROWS_AS(s / series::zero(6), division_by_zero_series);
    }
    SECTION("quotient valuation subtracts") {
        series num = series::monomial(1, 3, 12);
        series den = series::monomial(2, 1, 12);
        series q = num / den;
        CHECK(q.valuation() == 2);
        CHECK(q.coeff(2) == rational(1, 2));
    }
}

TEST_CASE("coefficient access") {
    series v1 = solve_v1(8);
    CHECK(v1.coeff(-1) == 1);
    CHECK(v1.coeff(-3) == 0);  // below valuation
    CHECK_THROWS_AS(v1.coeff(8), precision_exceeded);
    CHECK_THROWS_AS(v1.coeff(100), precision_exceeded);

    series g0 = g0_closed(10);
    CHECK(g0.coeff(8) == 5);
}

TEST_CASE("decimate and inflate") {
    SECTION("even series reindexes") {
        series s = series::polynomial({{0, 1}, {2, 4}, {6, -2}}, 8);
        series d = s.decimate();
        CHECK(d.coeff(0) == 1);
        CHECK(d.coeff(1) == 4);
        CHECK(d.coeff(3) == -2);
        CHECK(d.precision() == 4);
    }
    SECTION("constant is fixed") {
        series one = series::one(6);
        CHECK(one.decimate().coeff(0) == 1);
    }
    SECTION("odd coefficient raises") {
        series s = series::polynomial({{0, 1}, {1, 1}}, 8);
        CHECK_THROWS_AS(s.decimate(), odd_coefficient_present);
    }
    SECTION("negative valuation halves") {
        series s = series::polynomial({{-2, 1}, {0, 3}}, 6);
        series d = s.decimate();
        CHECK(d.valuation() == -1);
        CHECK(d.coeff(-1) == 1);
        CHECK(d.coeff(0) == 3);
    }
}

TEST_CASE("truncate, shift, scale") {
    series s = series::polynomial({{1, 1}, {3, 2}}, 10);
    series t = s.truncated(3);
    CHECK(t.precision() == 3);
    CHECK_THROWS_AS(t.coeff(3), precision_exceeded);
    CHECK_THROWS_AS(s.truncated(11), std::invalid_argument);

    series sh = s.shifted(-2);
    CHECK(sh.valuation() == -1);
    CHECK(sh.coeff(-1) == 1);
    CHECK(sh.coeff(1) == 2);
    CHECK(sh.precision() == 8);

    series sc = s.scaled(rational(-1, 2));
    CHECK(sc.coeff(1) == rational(-1, 2));
    CHECK(sc.coeff(3) == -1);
}

TEST_CASE("pretty printer") {
    series v1 = solve_v1(8);
    std::string text = v1.str();
    CHECK(text.find("z^-1") != std::string::npos);
    CHECK(text.find("O(z^8)") != std::string::npos);
    series zs = series::zero(5);
    CHECK(zs.str("Z").find("O(Z^5)") != std::string::npos);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20260818);
    for (int trial = 0; trial < 200; ++trial) {
        series a = random_series(rng);
        series b = random_series(rng);
        series c = random_series(rng);
        CAPTURE(trial);
        CHECK(agree((a + b) + c, a + (b + c)));
        CHECK(agree(a + b, b + a));
        CHECK(agree(a * b, b * a));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("division inverts multiplication on random series") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 200; ++trial) {
        series a = random_series(rng);
        series b = random_series(rng, /*force_nonzero=*/true);
        CAPTURE(trial);
        series q = a / b;
        CHECK(agree(q * b, a));
    }
}

TEST_CASE("coefficient extraction is additive") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        series a = random_series(rng);
        series b = random_series(rng);
        series sum = a + b;
        for (std::int64_t n = std::min(a.valuation(), b.valuation()) - 2; n < sum.precision();
             ++n)
            CHECK(sum.coeff(n) == a.coeff(n) + b.coeff(n));
    }
}

TEST_CASE("decimate is a left inverse of inflate") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 100; ++trial) {
        series s = random_series(rng);
        series round_trip = s.inflate().decimate();
        CHECK(agree(round_trip, s));
        CHECK(round_trip.precision() == s.precision());
    }
}

TEST_CASE("integrality detection") {
    CHECK(series::polynomial({{0, 2}, {5, -7}}, 9).is_integral());
    CHECK_FALSE(series::polynomial({{1, rational(1, 2)}}, 4).is_integral());
    CHECK(series::zero(3).is_integral());
}
