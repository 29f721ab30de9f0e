#pragma once

#include "partcalc/polynomial.hpp"
#include "partcalc/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace partcalc {

// Bernoulli numbers with B_1 = -1/2, from the recurrence
// sum_{j=0..m} C(m+1,j) B_j = 0 (m >= 1).
inline Rational bernoulli(long long m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::vector<Rational> table{1};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long long>(table.size()) <= m) {
        long long k = static_cast<long long>(table.size());
        Rational acc = 0;
        for (long long j = 0; j < k; ++j)
            acc += Rational(binomial(k + 1, j)) * table[static_cast<std::size_t>(j)];
        table.push_back(-acc / Rational(k + 1));
    }
    return table[static_cast<std::size_t>(m)];
}

// Faulhaber polynomial: P_n(k) = 1^n + 2^n + ... + k^n for integer k >= 1,
// as P_n(z) = z^{n+1}/(n+1) + z^n/2 + (1/(n+1)) sum_{1<=j<=n/2} C(n+1,2j) B_{2j} z^{n-2j+1}.
inline Polynomial faulhaber(long long n) {
    if (n < 1) throw std::invalid_argument("faulhaber: n must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 2, Rational(0));
    Rational lead = make_rational(1, n + 1);
    c[static_cast<std::size_t>(n + 1)] = lead;
    c[static_cast<std::size_t>(n)] = make_rational(1, 2);
    for (long long j = 1; 2 * j <= n; ++j)
        c[static_cast<std::size_t>(n - 2 * j + 1)] =
            lead * Rational(binomial(n + 1, 2 * j)) * bernoulli(2 * j);
    return Polynomial(std::move(c));
}

// prod_{i=1..r}(z^2 - i^2): the even polynomial whose value at a hook length
// h is the summand of S(λ,r).
inline Polynomial falling_square_product(long long r) {
    if (r < 0) throw std::invalid_argument("falling_square_product: r must be >= 0");
    Polynomial out(1);
    Polynomial z2(std::vector<Rational>{0, 0, 1});
    for (long long i = 1; i <= r; ++i) out *= z2 - Polynomial(Rational(i * i));
    return out;
}

// The even degree-(2r+2) polynomial G with G(0) = 0 and, for integers n >= 1,
// G(n) = (-1)^r n r!^2 / 2 + G_2(n-1), where G_2 is the double partial sum of
// G_0(j) = prod(j^2 - i^2).  Its even coefficients ξ_k convert corner power
// sums into S(λ,r); built from Faulhaber polynomials shifted to z-1:
//   G(z) = (-1)^r z^2 r!^2/2
//        + sum_{w=1..r} η_w ( P_{2w}(z-1)/2 + sum_{j=0..w} ζ_j(2w) P_{2w-2j+1}(z-1) )
// with η_w = [j^{2w}] G_0 and ζ_j(n) = [z^{n-2j+1}] P_n.
inline Polynomial build_G(long long r) {
    if (r < 1) throw std::invalid_argument("build_G: r must be >= 1");
    Polynomial g0 = falling_square_product(r);
    Integer rfact = factorial(r);
    Polynomial out(std::vector<Rational>{0, 0, make_rational((r % 2 ? -1 : 1) * rfact * rfact, 2)});
    for (long long w = 1; w <= r; ++w) {
        Rational eta = g0.coeff(2 * w);
        if (eta == 0) continue;
        Polynomial p2w = faulhaber(2 * w);
        Polynomial acc = make_rational(1, 2) * p2w.shift(-1);
        for (long long j = 0; j <= w; ++j) {
            Rational zeta = p2w.coeff(2 * w - 2 * j + 1);
            acc += zeta * faulhaber(2 * w - 2 * j + 1).shift(-1);
        }
        out += eta * acc;
    }
    return out;
}

// ξ_1..ξ_{r+1}: the even coefficients of build_G (index 0 holds ξ_1).
inline std::vector<Rational> corner_weights(long long r) {
    Polynomial g = build_G(r);
    std::vector<Rational> xi;
    for (long long k = 1; k <= r + 1; ++k) xi.push_back(g.coeff(2 * k));
    return xi;
}

}  // namespace partcalc
