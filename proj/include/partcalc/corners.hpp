#pragma once

#include "partcalc/hookstats.hpp"
#include "partcalc/partition.hpp"
#include "partcalc/polynomial.hpp"
#include "partcalc/power_sums.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/report.hpp"
#include "partcalc/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace partcalc {

// Σ_box F0(h_box) computed from corner contents alone: with F1, F2 the first
// and second partial-sum transforms of F0 (zero at arguments <= 0),
//   Σ F0(h) = Σ_{0<=j<i<=m} ( F2(x_i−x_j−1) + F2(y_i−y_{j+1}−1)
//                           − F2(x_i−y_{j+1}−1) − F2(y_i−x_j−1) ).
// The y-difference argument can reach −1, where F2 is 0.
inline Rational hook_sum_via_corners(const Partition& p,
                                     const std::function<Rational(long long)>& f0) {
    CornerData cd = corners(p);
    const long long m = static_cast<long long>(cd.y.size());
    // Largest argument needed is x_m - x_0 - 1.
    long long max_arg = m > 0 ? cd.x.back() - cd.x.front() : 0;
    std::vector<Rational> f2(static_cast<std::size_t>(max_arg) + 1, Rational(0));
    Rational f1 = 0;
    for (long long v = 1; v <= max_arg; ++v) {
        f1 += f0(v);
        f2[static_cast<std::size_t>(v)] = f2[static_cast<std::size_t>(v - 1)] + f1;
    }
    auto F2 = [&](long long v) -> Rational {
        if (v <= 0) return 0;
        return f2[static_cast<std::size_t>(v)];
    };

    // y is 1-based in the display: y_{j} = cd.y[j-1].
    auto x = [&](long long i) { return cd.x[static_cast<std::size_t>(i)]; };
    auto y = [&](long long j) { return cd.y[static_cast<std::size_t>(j - 1)]; };
    Rational acc = 0;
    for (long long i = 1; i <= m; ++i)
        for (long long j = 0; j < i; ++j)
            acc += F2(x(i) - x(j) - 1) + F2(y(i) - y(j + 1) - 1) - F2(x(i) - y(j + 1) - 1) -
                   F2(y(i) - x(j) - 1);
    return acc;
}

// The corner generating identity: Σ_i (H_λ/H_{λ^{i+}})·1/(1−x_i z) equals
// ∏_j (1−y_j z) / ∏_i (1−x_i z).  Checked two ways: exactly, by
// cross-multiplying into a polynomial identity, and as truncated series to
// the given order.
inline VerificationReport corner_generating_check(const Partition& p, long long order) {
    if (order < 1) throw std::invalid_argument("corner_generating_check: order must be >= 1");
    CornerData cd = corners(p);
    const long long m = static_cast<long long>(cd.y.size());

    std::vector<Rational> ratios;  // H_λ / H_{λ^{i+}}
    for (long long i = 0; i <= m; ++i)
        ratios.push_back(1 / hook_ratio_add(p, static_cast<int>(i)));

    auto lin = [](long long c) {  // 1 - c z
        return Polynomial(std::vector<Rational>{1, Rational(-c)});
    };

    // Cross-multiplied form: Σ_i ratio_i ∏_{k≠i}(1−x_k z) = ∏_j (1−y_j z).
    Polynomial lhs_poly;
    for (long long i = 0; i <= m; ++i) {
        Polynomial term(ratios[static_cast<std::size_t>(i)]);
        for (long long k = 0; k <= m; ++k)
            if (k != i) term *= lin(cd.x[static_cast<std::size_t>(k)]);
        lhs_poly += term;
    }
    Polynomial rhs_poly(1);
    for (long long y : cd.y) rhs_poly *= lin(y);
    bool poly_ok = lhs_poly == rhs_poly;

    // Series form: Σ_i ratio_i/(1−x_i z) = ∏(1−y_j z)/∏(1−x_i z) + O(z^{order+1}).
    Series lhs_series(order);
    for (long long i = 0; i <= m; ++i)
        lhs_series += ratios[static_cast<std::size_t>(i)] *
                      series_ratio(Polynomial(1), lin(cd.x[static_cast<std::size_t>(i)]), order);
    Polynomial den(1);
    for (long long x : cd.x) den *= lin(x);
    Series rhs_series = series_ratio(rhs_poly, den, order);
    bool series_ok = lhs_series == rhs_series;

    VerificationReport rep;
    rep.identity = "corner-generating";
    rep.params = "lambda=" + render_partition(p) + " order=" + std::to_string(order);
    rep.lhs = lhs_poly.to_string();
    rep.rhs = rhs_poly.to_string();
    rep.pass = poly_ok && series_ok;
    if (!poly_ok)
        rep.counterexample = "cross-multiplied polynomials differ";
    else if (!series_ok)
        rep.counterexample = "series expansions differ";
    return rep;
}

// S(λ,r) assembled from corner data: Σ_{k=1..r+1} ξ_k V(k), where ξ are the
// even coefficients of build_G(r) and
//   V(k) = Σ_{0<=i<=j<=m}(x_i−x_j)^{2k} + Σ_{1<=i<=j<=m}(y_i−y_j)^{2k}
//        − Σ_{0<=i<=m}Σ_{1<=j<=m}(x_i−y_j)^{2k}.
inline Rational S_via_corner_formula(const Partition& p, long long r) {
    if (r < 1) throw std::invalid_argument("S_via_corner_formula: r must be >= 1");
    CornerData cd = corners(p);
    const long long m = static_cast<long long>(cd.y.size());
    std::vector<Rational> xi = corner_weights(r);

    Rational acc = 0;
    for (long long k = 1; k <= r + 1; ++k) {
        Integer v = 0;
        for (long long i = 0; i <= m; ++i)
            for (long long j = i; j <= m; ++j)
                v += integer_pow(cd.x[static_cast<std::size_t>(i)] - cd.x[static_cast<std::size_t>(j)],
                                 static_cast<unsigned long long>(2 * k));
        for (long long i = 1; i <= m; ++i)
            for (long long j = i; j <= m; ++j)
                v += integer_pow(cd.y[static_cast<std::size_t>(i - 1)] - cd.y[static_cast<std::size_t>(j - 1)],
                                 static_cast<unsigned long long>(2 * k));
        for (long long i = 0; i <= m; ++i)
            for (long long j = 1; j <= m; ++j)
                v -= integer_pow(cd.x[static_cast<std::size_t>(i)] - cd.y[static_cast<std::size_t>(j - 1)],
                                 static_cast<unsigned long long>(2 * k));
        acc += xi[static_cast<std::size_t>(k - 1)] * Rational(v);
    }
    return acc;
}

}  // namespace partcalc
