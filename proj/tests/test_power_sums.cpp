#include <catch2/catch_amalgamated.hpp>

#include <partcalc/power_sums.hpp>

#include <stdexcept>
#include <vector>

using namespace partcalc;

TEST_CASE("Bernoulli numbers") {
    REQUIRE(bernoulli(0) == 1);
    REQUIRE(bernoulli(1) == make_rational(-1, 2));
    REQUIRE(bernoulli(2) == make_rational(1, 6));
    REQUIRE(bernoulli(3) == 0);
    REQUIRE(bernoulli(4) == make_rational(-1, 30));
    REQUIRE(bernoulli(6) == make_rational(1, 42));
    REQUIRE(bernoulli(12) == make_rational(-691, 2730));
    for (long long m = 3; m <= 13; m += 2) REQUIRE(bernoulli(m) == 0);
    REQUIRE_THROWS_AS(bernoulli(-1), std::invalid_argument);
}

TEST_CASE("power-sum polynomials match direct summation") {
    REQUIRE(faulhaber(2).evaluate(3) == 14);  // 1 + 4 + 9
    for (long long n = 1; n <= 12; ++n) {
        Polynomial p = faulhaber(n);
        REQUIRE(p.degree() == n + 1);
        REQUIRE(p.evaluate(0) == 0);
        Rational running = 0;
        for (long long k = 1; k <= 8; ++k) {
            running += Rational(integer_pow(Integer(k), static_cast<unsigned long long>(n)));
            REQUIRE(p.evaluate(k) == running);
        }
    }
    REQUIRE_THROWS_AS(faulhaber(0), std::invalid_argument);
}

TEST_CASE("power-sum polynomials satisfy the reflection law") {
    // P_n(-k-1) = (-1)^{n+1} P_n(k), the analytic continuation that the
    // corner summation relies on below the origin.
    for (long long n = 1; n <= 6; ++n) {
        Polynomial p = faulhaber(n);
        Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
        for (long long k = 0; k <= 8; ++k)
            REQUIRE(p.evaluate(Rational(-k - 1)) == sign * p.evaluate(Rational(k)));
    }
}

TEST_CASE("falling square product") {
    REQUIRE(falling_square_product(0) == Polynomial(1));
    // (z²−1)(z²−4) = z⁴ − 5z² + 4
    Polynomial f2 = falling_square_product(2);
    REQUIRE(f2.degree() == 4);
    REQUIRE(f2.coeff(0) == 4);
    REQUIRE(f2.coeff(1) == 0);
    REQUIRE(f2.coeff(2) == -5);
    REQUIRE(f2.coeff(3) == 0);
    REQUIRE(f2.coeff(4) == 1);
    // Vanishes exactly at ±1..±r and matches the direct product elsewhere.
    for (long long r = 0; r <= 4; ++r) {
        Polynomial f = falling_square_product(r);
        for (long long h = -r; h <= r; ++h)
            if (h != 0) REQUIRE(f.evaluate(Rational(h)) == 0);
        for (long long h = 1; h <= 9; ++h) {
            Rational prod = 1;
            for (long long i = 1; i <= r; ++i) prod *= Rational(h * h - i * i);
            REQUIRE(f.evaluate(Rational(h)) == prod);
        }
    }
    REQUIRE_THROWS_AS(falling_square_product(-1), std::invalid_argument);
}

TEST_CASE("double partial-sum polynomial") {
    SECTION("first-order case is exact") {
        // G(z) = z⁴/12 − 7z²/12 for r = 1.
        Polynomial g = build_G(1);
        REQUIRE(g.degree() == 4);
        REQUIRE(g.coeff(4) == make_rational(1, 12));
        REQUIRE(g.coeff(2) == make_rational(-7, 12));
        REQUIRE(g.coeff(0) == 0);
        REQUIRE(g.coeff(1) == 0);
        REQUIRE(g.coeff(3) == 0);
    }
    SECTION("structure: even, degree 2r+2, vanishing at 0") {
        for (long long r = 1; r <= 4; ++r) {
            Polynomial g = build_G(r);
            REQUIRE(g.degree() == 2 * r + 2);
            REQUIRE(g.evaluate(0) == 0);
            for (long long k = 1; k <= 2 * r + 2; k += 2) REQUIRE(g.coeff(k) == 0);
        }
    }
    SECTION("agrees with the brute double partial sum") {
        for (long long r = 1; r <= 3; ++r) {
            Polynomial g0 = falling_square_product(r);
            Polynomial g = build_G(r);
            Integer rfact = factorial(r);
            Rational half_diag = make_rational((r % 2 ? -1 : 1) * rfact * rfact, 2);
            for (long long n = 1; n <= 12; ++n) {
                // G2(n-1) = Σ_{t=1..n-1} Σ_{j=1..t} G0(j)
                Rational g2 = 0;
                for (long long t = 1; t <= n - 1; ++t)
                    for (long long j = 1; j <= t; ++j) g2 += g0.evaluate(Rational(j));
                REQUIRE(g.evaluate(Rational(n)) == half_diag * n + g2);
            }
        }
    }
    REQUIRE_THROWS_AS(build_G(0), std::invalid_argument);
}

TEST_CASE("corner weight extraction") {
    std::vector<Rational> xi1 = corner_weights(1);
    REQUIRE(xi1.size() == 2);
    REQUIRE(xi1[0] == make_rational(-7, 12));
    REQUIRE(xi1[1] == make_rational(1, 12));
    for (long long r = 1; r <= 4; ++r) {
        Polynomial g = build_G(r);
        std::vector<Rational> xi = corner_weights(r);
        REQUIRE(xi.size() == static_cast<std::size_t>(r) + 1);
        for (long long k = 1; k <= r + 1; ++k)
            REQUIRE(xi[static_cast<std::size_t>(k - 1)] == g.coeff(2 * k));
    }
}
