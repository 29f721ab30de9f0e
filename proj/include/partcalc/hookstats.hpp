#pragma once

#include "partcalc/diffops.hpp"
#include "partcalc/partition.hpp"
#include "partcalc/polynomial.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace partcalc {

// S(λ,r) = Σ_box ∏_{j=1..r}(h² − j²).  r = 0 gives |λ|.
inline Integer stat_S(const Partition& p, long long r) {
    if (r < 0) throw std::invalid_argument("stat_S: r must be >= 0");
    Integer acc = 0;
    for (const auto& [box, h] : hook_lengths(p)) {
        Integer term = 1;
        for (long long j = 1; j <= r; ++j) term *= Integer(h) * h - j * j;
        acc += term;
    }
    return acc;
}

// C(λ,r) = Σ_box ∏_{j=0..r-1}(c² − j²).  r = 0 gives |λ|.
inline Integer stat_C(const Partition& p, long long r) {
    if (r < 0) throw std::invalid_argument("stat_C: r must be >= 0");
    Integer acc = 0;
    for (const auto& [box, c] : contents(p)) {
        Integer term = 1;
        for (long long j = 0; j <= r - 1; ++j) term *= Integer(c) * c - j * j;
        acc += term;
    }
    return acc;
}

// K_r = (2r)!(2r+1)! / (r!·(r+1)!²); K_0..K_3 = 1, 3, 40, 1050.
inline Integer okada_constant(long long r) {
    if (r < 0) throw std::invalid_argument("okada_constant: r must be >= 0");
    Integer num = factorial(2 * r) * factorial(2 * r + 1);
    Integer den = factorial(r) * factorial(r + 1) * factorial(r + 1);
    Integer out = num / den;
    if (out * den != num) throw std::logic_error("okada_constant: inexact division");
    return out;
}

// p_ν evaluated at the squared hooks: ∏_t ( Σ_box h^{2ν_t} ).
inline Integer stat_power_sum_hooks(const Partition& p, const Partition& nu) {
    if (nu.empty()) throw std::invalid_argument("stat_power_sum_hooks: ν must be nonempty");
    auto hooks = hook_lengths(p);
    Integer acc = 1;
    for (int part : nu.parts()) {
        Integer sum = 0;
        for (const auto& [box, h] : hooks)
            sum += integer_pow(h, 2 * static_cast<unsigned long long>(part));
        acc *= sum;
    }
    return acc;
}

// Corner power sum q_k = Σ x_i^k − Σ y_j^k; q_0 = 1, q_1 = 0, q_2 = 2|λ|.
inline Integer stat_q(const Partition& p, long long k) {
    if (k < 0) throw std::invalid_argument("stat_q: k must be >= 0");
    CornerData cd = corners(p);
    Integer acc = 0;
    for (long long x : cd.x) acc += integer_pow(x, static_cast<unsigned long long>(k));
    for (long long y : cd.y) acc -= integer_pow(y, static_cast<unsigned long long>(k));
    return acc;
}

// q_ν = ∏_t q_{ν_t}.
inline Integer stat_qnu(const Partition& p, const Partition& nu) {
    Integer acc = 1;
    for (int part : nu.parts()) acc *= stat_q(p, part);
    return acc;
}

// ρ(h,z) = h·Σ_k C(h,2k) z^k / Σ_k C(h,2k+1) z^k, expanded as a rational
// series (constant term 1).  Memoized on (h, order): the same few hook
// values recur across every partition sweep.
inline Series rho_series(long long h, long long order) {
    if (h < 1) throw std::invalid_argument("rho_series: h must be >= 1");
    static std::map<std::pair<long long, long long>, Series> cache;
    static std::mutex mtx;
    std::pair<long long, long long> key{h, order};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Rational> num, den;
    for (long long k = 0; 2 * k <= h; ++k) num.push_back(Rational(Integer(h) * binomial(h, 2 * k)));
    for (long long k = 0; 2 * k + 1 <= h; ++k) den.push_back(Rational(binomial(h, 2 * k + 1)));
    Series out = series_ratio(Polynomial(std::move(num)), Polynomial(std::move(den)), order);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), out);
    return out;
}

// Product of ρ(h_box, z) over all boxes, truncated at the given order.
inline Series hook_rho_product(const Partition& p, long long order) {
    Series acc = Series::constant(1, order);
    for (const auto& [box, h] : hook_lengths(p))
        if (h > 1) acc *= rho_series(h, order);  // ρ(1,z) = 1
    return acc;
}

// L_k(λ): coefficient of z^k in ∏_box ρ(h_box, z).  L_0 = 1, L_1 = S(λ,1)/3.
inline Rational stat_L(const Partition& p, long long k) {
    if (k < 0) throw std::invalid_argument("stat_L: k must be >= 0");
    return hook_rho_product(p, k).coeff(k);
}

// w(λ) = ∏_box ρ(h,z)/(h·√z).  The rational part is ∏ρ / H_λ; the √z powers
// are carried separately as z^(-half_power/2).
struct HalfPowerSeries {
    Series series;
    long long half_power;
};

inline HalfPowerSeries weight_w(const Partition& p, long long order) {
    Series s = hook_rho_product(p, order);
    return {make_rational(1, hook_product(p)) * s, p.size()};
}

// φ_λ(z) = ∏_{i=1..n}(z + n + λ_i − i) with n = |λ| and parts padded by 0.
inline Polynomial phi_poly(const Partition& p) {
    long long n = p.size();
    Polynomial out(1);
    for (long long i = 1; i <= n; ++i)
        out *= Polynomial(std::vector<Rational>{Rational(n + p.part(i) - i), 1});
    return out;
}

namespace detail {

inline long long parse_count(const std::string& text, const std::string& what) {
    if (text.empty() || text.size() > 9 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument(what + ": bad number '" + text + "'");
    long long v = 0;
    for (char c : text) v = v * 10 + (c - '0');
    return v;
}

}  // namespace detail

// Resolve a statistic identifier to a partition function.  Supported ids:
//   S:r  C:r  p:ν  q:k  qnu:ν  L:k  phi:z0  invH
// each optionally followed by /H to divide by the hook product.
inline PartitionFunction make_statistic(const std::string& id) {
    std::string base = id;
    bool over_h = false;
    if (base.size() >= 2 && base.compare(base.size() - 2, 2, "/H") == 0) {
        over_h = true;
        base = base.substr(0, base.size() - 2);
    }

    PartitionFunction::Evaluator eval;
    if (base == "invH") {
        eval = [](const Partition& p) { return make_rational(1, hook_product(p)); };
    } else {
        auto colon = base.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 > base.size())
            throw std::invalid_argument("make_statistic: unknown statistic id '" + id + "'");
        std::string kind = base.substr(0, colon);
        std::string arg = base.substr(colon + 1);
        if (kind == "S") {
            long long r = detail::parse_count(arg, "make_statistic S");
            eval = [r](const Partition& p) { return Rational(stat_S(p, r)); };
        } else if (kind == "C") {
            long long r = detail::parse_count(arg, "make_statistic C");
            eval = [r](const Partition& p) { return Rational(stat_C(p, r)); };
        } else if (kind == "p") {
            Partition nu = Partition::parse(arg);
            if (nu.empty()) throw std::invalid_argument("make_statistic: p:ν needs a nonempty ν");
            eval = [nu](const Partition& p) { return Rational(stat_power_sum_hooks(p, nu)); };
        } else if (kind == "q") {
            long long k = detail::parse_count(arg, "make_statistic q");
            eval = [k](const Partition& p) { return Rational(stat_q(p, k)); };
        } else if (kind == "qnu") {
            Partition nu = Partition::parse(arg);
            eval = [nu](const Partition& p) { return Rational(stat_qnu(p, nu)); };
        } else if (kind == "L") {
            long long k = detail::parse_count(arg, "make_statistic L");
            eval = [k](const Partition& p) { return stat_L(p, k); };
        } else if (kind == "phi") {
            Rational z0 = parse_rational(arg);
            eval = [z0](const Partition& p) { return phi_poly(p).evaluate(z0); };
        } else {
            throw std::invalid_argument("make_statistic: unknown statistic id '" + id + "'");
        }
    }

    if (over_h) {
        auto inner = std::move(eval);
        eval = [inner](const Partition& p) {
            return inner(p) / Rational(hook_product(p));
        };
    }
    return PartitionFunction(id, std::move(eval));
}

}  // namespace partcalc
