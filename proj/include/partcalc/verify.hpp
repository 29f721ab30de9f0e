#pragma once

#include "partcalc/corners.hpp"
#include "partcalc/diffops.hpp"
#include "partcalc/hookstats.hpp"
#include "partcalc/partition.hpp"
#include "partcalc/polynomial.hpp"
#include "partcalc/power_sums.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/report.hpp"
#include "partcalc/series.hpp"
#include "partcalc/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace partcalc {

namespace detail {

// Polynomial-valued partition functions, for identities that are equalities
// of polynomials in a formal variable.  Memoized per closure; each check
// builds its own chain, so no locking is needed.
using PolyFn = std::function<Polynomial(const Partition&)>;

inline PolyFn memo_poly(PolyFn f) {
    auto memo = std::make_shared<std::map<Partition, Polynomial>>();
    return [f = std::move(f), memo](const Partition& p) -> Polynomial {
        auto it = memo->find(p);
        if (it != memo->end()) return it->second;
        Polynomial v = f(p);
        return memo->emplace(p, std::move(v)).first->second;
    };
}

inline PolyFn apply_D_poly(PolyFn f) {
    return memo_poly([f](const Partition& p) {
        Polynomial acc;
        for (const AddMove& mv : add_moves(p)) acc += f(mv.result);
        acc -= f(p);
        return acc;
    });
}

inline std::string render_value_list(const std::vector<Rational>& vals) {
    std::string out = "[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ", ";
        out += to_string(vals[i]);
    }
    return out + "]";
}

}  // namespace detail

// λ ↦ |λ|, used by several operator-algebra properties.
inline PartitionFunction size_statistic() {
    return PartitionFunction("size", [](const Partition& p) { return Rational(p.size()); });
}

inline PartitionFunction size_over_H() {
    return PartitionFunction("size/H",
                             [](const Partition& p) { return make_rational(p.size(), hook_product(p)); });
}

// ---------------------------------------------------------------------------
// Straight and skew summation identities
// ---------------------------------------------------------------------------

// n! Σ_{|λ|=n} S(λ,r)/H_λ² = K_r C(n,r+1).
inline VerificationReport check_okada_panova(long long n, long long r) {
    Rational lhs = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
        Integer h = hook_product(lam);
        lhs += make_rational(stat_S(lam, r), h * h);
    }
    lhs *= Rational(factorial(n));
    Rational rhs = Rational(okada_constant(r) * binomial(n, r + 1));
    VerificationReport rep;
    rep.identity = "okada-panova";
    rep.params = "n=" + std::to_string(n) + " r=" + std::to_string(r);
    rep.lhs = to_string(lhs);
    rep.rhs = to_string(rhs);
    rep.pass = lhs == rhs;
    return rep;
}

// Σ_{|λ|=n} f_λ S(λ,1)/H_λ = 3 C(n,2).
inline VerificationReport check_marked_hook(long long n) {
    Rational lhs = 0;
    for (const Partition& lam : enumerate_partitions(n))
        lhs += make_rational(syt_count(lam) * stat_S(lam, 1), hook_product(lam));
    Rational rhs = Rational(3 * binomial(n, 2));
    VerificationReport rep;
    rep.identity = "marked-hook";
    rep.params = "n=" + std::to_string(n);
    rep.lhs = to_string(lhs);
    rep.rhs = to_string(rhs);
    rep.pass = lhs == rhs;
    return rep;
}

// n! Σ_{|λ|=n} C(λ,r)/H_λ² = (2r)!/(r+1)! · C(n,r+1).
inline VerificationReport check_content_formula(long long n, long long r) {
    Rational lhs = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
        Integer h = hook_product(lam);
        lhs += make_rational(stat_C(lam, r), h * h);
    }
    lhs *= Rational(factorial(n));
    Rational rhs = make_rational(factorial(2 * r), factorial(r + 1)) * Rational(binomial(n, r + 1));
    VerificationReport rep;
    rep.identity = "content-formula";
    rep.params = "n=" + std::to_string(n) + " r=" + std::to_string(r);
    rep.lhs = to_string(lhs);
    rep.rhs = to_string(rhs);
    rep.pass = lhs == rhs;
    return rep;
}

// Σ_{|λ|=n, λ⊇μ} H_μ f_{λ/μ} (S(λ,1)−S(μ,1))/H_λ = (3/2)(n−|μ|)(n+|μ|−1).
inline VerificationReport check_skew_marked_hook(const Partition& mu, long long n) {
    if (n < mu.size()) throw std::invalid_argument("check_skew_marked_hook: need n >= |mu|");
    Integer hmu = hook_product(mu);
    Integer smu = stat_S(mu, 1);
    Rational lhs = 0;
    for (const Partition& lam : enumerate_extensions(mu, n - mu.size()))
        lhs += make_rational(hmu * skew_syt_count(lam, mu) * (stat_S(lam, 1) - smu),
                             hook_product(lam));
    Rational rhs = make_rational(3 * Integer(n - mu.size()) * (n + mu.size() - 1), 2);
    VerificationReport rep;
    rep.identity = "skew-marked-hook";
    rep.params = "mu=" + render_partition(mu) + " n=" + std::to_string(n);
    rep.lhs = to_string(lhs);
    rep.rhs = to_string(rhs);
    rep.pass = lhs == rhs;
    return rep;
}

// Σ_{|λ|=n, λ⊇μ} H_μ f_{λ/μ} (C(λ,1)−C(μ,1))/H_λ = (1/2)(n−|μ|)(n+|μ|−1).
inline VerificationReport check_skew_marked_content(const Partition& mu, long long n) {
    if (n < mu.size()) throw std::invalid_argument("check_skew_marked_content: need n >= |mu|");
    Integer hmu = hook_product(mu);
    Integer cmu = stat_C(mu, 1);
    Rational lhs = 0;
    for (const Partition& lam : enumerate_extensions(mu, n - mu.size()))
        lhs += make_rational(hmu * skew_syt_count(lam, mu) * (stat_C(lam, 1) - cmu),
                             hook_product(lam));
    Rational rhs = make_rational(Integer(n - mu.size()) * (n + mu.size() - 1), 2);
    VerificationReport rep;
    rep.identity = "skew-marked-content";
    rep.params = "mu=" + render_partition(mu) + " n=" + std::to_string(n);
    rep.lhs = to_string(lhs);
    rep.rhs = to_string(rhs);
    rep.pass = lhs == rhs;
    return rep;
}

// Two-path transform equality: direct skew sum vs binomial transform, and
// iterated D vs the alternating inversion formula.
inline VerificationReport check_main2(const std::string& stat_id, const Partition& mu,
                                      long long n) {
    PartitionFunction g = make_statistic(stat_id);
    Rational direct = skew_weighted_sum(g, mu, n);
    Rational binom_path = skew_sum_via_binomial(g, mu, n);
    Rational iterated = apply_Dk(g, n)(mu);
    Rational inverted = Dk_via_inversion(g, mu, n);
    VerificationReport rep;
    rep.identity = "main2";
    rep.params = "g=" + stat_id + " mu=" + render_partition(mu) + " n=" + std::to_string(n);
    rep.lhs = to_string(direct);
    rep.rhs = to_string(binom_path);
    rep.pass = direct == binom_path && iterated == inverted;
    if (direct != binom_path)
        rep.counterexample = "direct sum differs from binomial transform";
    else if (iterated != inverted)
        rep.counterexample = "iterated D " + to_string(iterated) + " differs from inversion " +
                             to_string(inverted);
    return rep;
}

// Telescoping lists A(k), B(k) with A(k+1) = A(k) + B(k).
inline VerificationReport check_telescope(const std::string& stat_id, const Partition& mu,
                                          long long n) {
    PartitionFunction g = make_statistic(stat_id);
    TelescopeResult t = telescope(g, mu, n);
    Rational total = t.A.front();
    for (const Rational& b : t.B) total += b;
    VerificationReport rep;
    rep.identity = "telescope";
    rep.params = "g=" + stat_id + " mu=" + render_partition(mu) + " n=" + std::to_string(n);
    rep.lhs = "A(n)=" + to_string(t.A.back());
    rep.rhs = "A(0)+sum B=" + to_string(total);
    rep.pass = !t.first_violation.has_value();
    if (t.first_violation)
        rep.counterexample = "A(k+1) != A(k)+B(k) at k=" + std::to_string(*t.first_violation);
    return rep;
}

// ---------------------------------------------------------------------------
// Difference-operator closed forms
// ---------------------------------------------------------------------------

namespace detail {

// Shared body for the hook/content operator lemmas: checks
// H_λ·D^{r}(g/H) = scale·|λ|, H_λ·D^{r+1}(g/H) = scale, H_λ·D^{r+2}(g/H) = 0,
// via both the iterated operator and the inversion formula.
inline VerificationReport check_dpoly_levels(const std::string& identity,
                                             const std::string& stat_id, const Partition& lam,
                                             long long r, const Rational& scale) {
    PartitionFunction g = make_statistic(stat_id);
    Rational inv_h = make_rational(1, hook_product(lam));
    std::vector<Rational> expected{scale * Rational(lam.size()) * inv_h, scale * inv_h,
                                   Rational(0)};
    std::vector<Rational> iterated, inverted;
    PartitionFunction d = apply_Dk(g, r);
    for (long long level = 0; level < 3; ++level) {
        iterated.push_back(d(lam));
        inverted.push_back(Dk_via_inversion(g, lam, r + level));
        if (level < 2) d = apply_D(d);
    }
    VerificationReport rep;
    rep.identity = identity;
    rep.params = "lambda=" + render_partition(lam) + " r=" + std::to_string(r);
    rep.lhs = detail::render_value_list(iterated);
    rep.rhs = detail::render_value_list(expected);
    rep.pass = true;
    for (std::size_t i = 0; i < 3; ++i) {
        if (iterated[i] != expected[i]) {
            rep.pass = false;
            rep.counterexample = "iterated D^" + std::to_string(r + static_cast<long long>(i)) +
                                 " differs from closed form";
            break;
        }
        if (inverted[i] != expected[i]) {
            rep.pass = false;
            rep.counterexample = "inversion D^" + std::to_string(r + static_cast<long long>(i)) +
                                 " differs from closed form";
            break;
        }
    }
    return rep;
}

}  // namespace detail

// H_λ D^r(S(·,r)/H) = K_r|λ|, then K_r, then 0.
inline VerificationReport check_DS(const Partition& lam, long long r) {
    return detail::check_dpoly_levels("hook-dpoly", "S:" + std::to_string(r) + "/H", lam, r,
                                      Rational(okada_constant(r)));
}

// H_λ D^r(C(·,r)/H) = (2r)!/(r+1)!·|λ|, then (2r)!/(r+1)!, then 0.
inline VerificationReport check_DC(const Partition& lam, long long r) {
    return detail::check_dpoly_levels("content-dpoly", "C:" + std::to_string(r) + "/H", lam, r,
                                      make_rational(factorial(2 * r), factorial(r + 1)));
}

// D^{2r+1}(L_r/H) = 0, D^{2r}(L_r/H) = (2r−1)!!/H, D^{2r−1}(L_r/H) = (2r−1)!!|λ|/H.
inline VerificationReport check_DL(const Partition& lam, long long r) {
    if (r < 1) throw std::invalid_argument("check_DL: r must be >= 1");
    PartitionFunction g = make_statistic("L:" + std::to_string(r) + "/H");
    Rational dd = Rational(odd_double_factorial(r));
    Rational inv_h = make_rational(1, hook_product(lam));
    std::vector<Rational> expected{dd * Rational(lam.size()) * inv_h, dd * inv_h, Rational(0)};
    std::vector<Rational> got;
    PartitionFunction d = apply_Dk(g, 2 * r - 1);
    for (long long level = 0; level < 3; ++level) {
        got.push_back(d(lam));
        if (level < 2) d = apply_D(d);
    }
    VerificationReport rep;
    rep.identity = "series-dpoly";
    rep.params = "lambda=" + render_partition(lam) + " r=" + std::to_string(r);
    rep.lhs = detail::render_value_list(got);
    rep.rhs = detail::render_value_list(expected);
    rep.pass = got == expected;
    if (!rep.pass) rep.counterexample = "levels 2r-1, 2r, 2r+1 do not all match";
    return rep;
}

// The weight recurrence Σ_{λ⁺} w(λ⁺) = w(1)·w(λ) + Σ_{λ⁻} w(λ⁻), compared
// after aligning every term to the common half-power |λ|+1 (the λ⁻ sum picks
// up one full power of z).
inline VerificationReport check_carde(const Partition& lam, long long order) {
    Series lhs(order);
    for (const AddMove& mv : add_moves(lam)) lhs += weight_w(mv.result, order).series;
    Series rhs = weight_w(lam, order).series;  // w(1)'s series part is 1
    Series removed(order);
    for (const Partition& sm : remove_moves(lam)) removed += weight_w(sm, order).series;
    rhs += removed.shift_up(1);
    VerificationReport rep;
    rep.identity = "carde";
    rep.params = "lambda=" + render_partition(lam) + " order=" + std::to_string(order);
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    rep.pass = lhs == rhs;
    return rep;
}

// The shifted-parts identity D(φ_λ(z)/H_λ) = z·φ_λ(z+1)/H_λ coefficientwise,
// its iterated closed form D^{r+1}(φ_λ(z)/H_λ) = z(z+1)···(z+r)·φ_λ(z+r+1)/H_λ,
// the vanishing D^{r+1}(φ_·(−r)/H)(λ) = 0, and the sum-vs-binomial identity
// Σ_{|λ'/λ|=n} f φ_{λ'}(−r)/H_{λ'} = Σ_{k≤r} C(n,k) D^k(φ_·(−r)/H)(λ).
inline VerificationReport check_shifted(const Partition& lam, long long r_max,
                                        long long n_max = 5) {
    bool ok = true;
    std::string cex;

    detail::PolyFn fn = detail::memo_poly([](const Partition& q) {
        return make_rational(1, hook_product(q)) * phi_poly(q);
    });
    Rational inv_h = make_rational(1, hook_product(lam));
    Polynomial lhs0, rhs0;
    for (long long r = 0; r <= r_max && ok; ++r) {
        fn = detail::apply_D_poly(fn);  // D^{r+1}(φ/H)
        Polynomial rhs(inv_h);
        for (long long u = 0; u <= r; ++u) rhs *= Polynomial(std::vector<Rational>{Rational(u), 1});
        rhs *= phi_poly(lam).shift(r + 1);
        Polynomial lhs = fn(lam);
        if (r == 0) {
            lhs0 = lhs;
            rhs0 = rhs;
        }
        if (lhs != rhs) {
            ok = false;
            cex = "D^" + std::to_string(r + 1) + "(phi/H) differs from closed form";
        }
    }

    for (long long r = 0; r <= r_max && ok; ++r) {
        PartitionFunction g("phi:-" + std::to_string(r) + "/H", [r](const Partition& q) {
            return phi_poly(q).evaluate(Rational(-r)) / Rational(hook_product(q));
        });
        std::vector<Rational> dk;  // D^k g(λ) for k = 0..r
        PartitionFunction d = g;
        for (long long k = 0; k <= r + 1; ++k) {
            if (k <= r) dk.push_back(d(lam));
            if (k == r + 1) break;
            d = apply_D(d);
        }
        if (d(lam) != 0) {
            ok = false;
            cex = "D^" + std::to_string(r + 1) + "(phi(-r)/H) is nonzero at r=" + std::to_string(r);
            break;
        }
        for (long long n = 0; n <= n_max && ok; ++n) {
            Rational direct = skew_weighted_sum(g, lam, n);
            Rational viaD = 0;
            for (long long k = 0; k <= r; ++k)
                viaD += Rational(binomial(n, k)) * dk[static_cast<std::size_t>(k)];
            if (direct != viaD) {
                ok = false;
                cex = "truncated binomial transform differs at r=" + std::to_string(r) +
                      " n=" + std::to_string(n);
            }
        }
    }

    VerificationReport rep;
    rep.identity = "shifted";
    rep.params = "lambda=" + render_partition(lam) + " r_max=" + std::to_string(r_max);
    rep.lhs = lhs0.to_string();
    rep.rhs = rhs0.to_string();
    rep.pass = ok;
    rep.counterexample = cex;
    return rep;
}

// ---------------------------------------------------------------------------
// Operator algebra properties
// ---------------------------------------------------------------------------

// (DD⁻ − D⁻D) g = D g on all |λ| ≤ lambda_max.
inline VerificationReport check_commutator(const std::string& label, const PartitionFunction& g,
                                           long long lambda_max) {
    PartitionFunction ddm = apply_D(apply_Dminus(g));
    PartitionFunction dmd = apply_Dminus(apply_D(g));
    PartitionFunction dg = apply_D(g);
    VerificationReport rep;
    rep.identity = "commutator";
    rep.params = "g=" + label + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational lhs = ddm(lam) - dmd(lam);
            Rational rhs = dg(lam);
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam) + " lhs=" + to_string(lhs) +
                                     " rhs=" + to_string(rhs);
                break;
            }
        }
    rep.lhs = "DD-g - D-Dg";
    rep.rhs = "Dg";
    return rep;
}

// D and D⁻ are linear over fixed rational weights.
inline VerificationReport check_linearity(const std::string& l1, const PartitionFunction& g1,
                                          const std::string& l2, const PartitionFunction& g2,
                                          const Rational& a1, const Rational& a2,
                                          long long lambda_max) {
    PartitionFunction comb("comb", [g1, g2, a1, a2](const Partition& p) {
        return a1 * g1(p) + a2 * g2(p);
    });
    PartitionFunction d_comb = apply_D(comb), dm_comb = apply_Dminus(comb);
    PartitionFunction d1 = apply_D(g1), d2 = apply_D(g2);
    PartitionFunction dm1 = apply_Dminus(g1), dm2 = apply_Dminus(g2);
    VerificationReport rep;
    rep.identity = "linearity";
    rep.params = "g1=" + l1 + " g2=" + l2 + " a1=" + to_string(a1) + " a2=" + to_string(a2) +
                 " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            bool okD = d_comb(lam) == a1 * d1(lam) + a2 * d2(lam);
            bool okDm = dm_comb(lam) == a1 * dm1(lam) + a2 * dm2(lam);
            if (!okD || !okDm) {
                rep.pass = false;
                rep.counterexample = std::string(okD ? "D-" : "D") + " fails at lambda=" +
                                     render_partition(lam);
                break;
            }
        }
    rep.lhs = "D(a1 g1 + a2 g2)";
    rep.rhs = "a1 Dg1 + a2 Dg2";
    return rep;
}

// D(g/H)(λ) = Σ_{λ⁺}(g(λ⁺)−g(λ))/H_{λ⁺} and
// D⁻(g/H)(λ) = Σ_{λ⁻}(g(λ)−g(λ⁻))/H_{λ⁻}, for a plain statistic g.
inline VerificationReport check_leibniz1(const std::string& label, const PartitionFunction& g,
                                         long long lambda_max) {
    PartitionFunction g_over_h("g/H", [g](const Partition& p) {
        return g(p) / Rational(hook_product(p));
    });
    PartitionFunction dg = apply_D(g_over_h), dmg = apply_Dminus(g_over_h);
    VerificationReport rep;
    rep.identity = "leibniz1";
    rep.params = "g=" + label + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational up = 0;
            for (const AddMove& mv : add_moves(lam))
                up += (g(mv.result) - g(lam)) / Rational(hook_product(mv.result));
            Rational down = 0;
            for (const Partition& sm : remove_moves(lam))
                down += (g(lam) - g(sm)) / Rational(hook_product(sm));
            if (dg(lam) != up || dmg(lam) != down) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam);
                break;
            }
        }
    rep.lhs = "D(g/H), D-(g/H)";
    rep.rhs = "one-box difference sums";
    return rep;
}

// Two-factor product rule for D and D⁻.
inline VerificationReport check_leibniz_product(const std::string& l1, const PartitionFunction& g1,
                                                const std::string& l2, const PartitionFunction& g2,
                                                long long lambda_max) {
    auto over_h = [](const PartitionFunction& g) {
        return PartitionFunction("g/H", [g](const Partition& p) {
            return g(p) / Rational(hook_product(p));
        });
    };
    PartitionFunction prod("g1*g2/H", [g1, g2](const Partition& p) {
        return g1(p) * g2(p) / Rational(hook_product(p));
    });
    PartitionFunction d_prod = apply_D(prod), dm_prod = apply_Dminus(prod);
    PartitionFunction d1 = apply_D(over_h(g1)), d2 = apply_D(over_h(g2));
    PartitionFunction dm1 = apply_Dminus(over_h(g1)), dm2 = apply_Dminus(over_h(g2));
    VerificationReport rep;
    rep.identity = "leibniz";
    rep.params = "g1=" + l1 + " g2=" + l2 + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational cross_up = 0;
            for (const AddMove& mv : add_moves(lam))
                cross_up += (g1(mv.result) - g1(lam)) * (g2(mv.result) - g2(lam)) /
                            Rational(hook_product(mv.result));
            Rational cross_down = 0;
            for (const Partition& sm : remove_moves(lam))
                cross_down += (g1(lam) - g1(sm)) * (g2(lam) - g2(sm)) /
                              Rational(hook_product(sm));
            bool okD = d_prod(lam) == g1(lam) * d2(lam) + g2(lam) * d1(lam) + cross_up;
            bool okDm = dm_prod(lam) == g1(lam) * dm2(lam) + g2(lam) * dm1(lam) - cross_down;
            if (!okD || !okDm) {
                rep.pass = false;
                rep.counterexample = std::string(okD ? "D-" : "D") + " product rule fails at lambda=" +
                                     render_partition(lam);
                break;
            }
        }
    rep.lhs = "D(g1 g2/H)";
    rep.rhs = "product rule expansion";
    return rep;
}

// D(C(n,r)/H) = C(n,r−1)/H and D⁻(C(n,r)/H) = r·C(n,r)/H, n = |λ|.
inline VerificationReport check_dbino(long long r, long long lambda_max) {
    PartitionFunction g("binom/H", [r](const Partition& p) {
        return make_rational(binomial(p.size(), r), hook_product(p));
    });
    PartitionFunction dg = apply_D(g), dmg = apply_Dminus(g);
    VerificationReport rep;
    rep.identity = "dbino";
    rep.params = "r=" + std::to_string(r) + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational expect_d = make_rational(binomial(lam.size(), r - 1), hook_product(lam));
            Rational expect_dm = Rational(r) * g(lam);
            if (dg(lam) != expect_d || dmg(lam) != expect_dm) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam);
                break;
            }
        }
    rep.lhs = "D(binom(n,r)/H), D-(binom(n,r)/H)";
    rep.rhs = "binom(n,r-1)/H, r binom(n,r)/H";
    return rep;
}

// D^k(C(n,r)·g(λ)) = Σ_i C(k,i)·C(n+i, r−k+i)·D^i g(λ), n = |λ|.
inline VerificationReport check_dkbino(const std::string& label, const PartitionFunction& g,
                                       long long k, long long r, long long lambda_max) {
    PartitionFunction fg("binom*g", [g, r](const Partition& p) {
        return Rational(binomial(p.size(), r)) * g(p);
    });
    PartitionFunction lhs_fn = apply_Dk(fg, k);
    std::vector<PartitionFunction> d_powers{g};
    for (long long i = 1; i <= k; ++i) d_powers.push_back(apply_D(d_powers.back()));
    VerificationReport rep;
    rep.identity = "dkbino";
    rep.params = "g=" + label + " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                 " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational rhs = 0;
            for (long long i = 0; i <= k; ++i)
                rhs += Rational(binomial(k, i) * binomial(lam.size() + i, r - k + i)) *
                       d_powers[static_cast<std::size_t>(i)](lam);
            if (lhs_fn(lam) != rhs) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam);
                break;
            }
        }
    rep.lhs = "D^k(binom(n,r) g)";
    rep.rhs = "sum_i binom(k,i) binom(n+i,r-k+i) D^i g";
    return rep;
}

// ---------------------------------------------------------------------------
// Corner-calculus sweeps
// ---------------------------------------------------------------------------

// Σ F0(h) via corner contents equals direct summation, for all |λ| ≤ cap.
inline VerificationReport check_corner_hook_sum(const std::string& label,
                                                const std::function<Rational(long long)>& f0,
                                                long long lambda_max) {
    VerificationReport rep;
    rep.identity = "corner-hook-sum";
    rep.params = "F0=" + label + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational direct = 0;
            for (const auto& [box, h] : hook_lengths(lam)) direct += f0(h);
            Rational via = hook_sum_via_corners(lam, f0);
            if (direct != via) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam) + " direct=" +
                                     to_string(direct) + " corners=" + to_string(via);
                break;
            }
        }
    rep.lhs = "corner partial-sum form";
    rep.rhs = "direct hook sum";
    return rep;
}

// S_via_corner_formula ≡ stat_S on all |λ| ≤ cap.
inline VerificationReport check_corner_formula(long long r, long long lambda_max) {
    VerificationReport rep;
    rep.identity = "corner-formula";
    rep.params = "r=" + std::to_string(r) + " lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Rational via = S_via_corner_formula(lam, r);
            Rational direct = Rational(stat_S(lam, r));
            if (via != direct) {
                rep.pass = false;
                rep.counterexample = "lambda=" + render_partition(lam) + " corners=" +
                                     to_string(via) + " direct=" + to_string(direct);
                break;
            }
        }
    rep.lhs = "sum_k xi_k V(k)";
    rep.rhs = "S(lambda,r)";
    return rep;
}

// hook_ratio_add against direct hook-product quotients, every corner of
// every |λ| ≤ cap.
inline VerificationReport check_hook_ratio_add(long long lambda_max) {
    VerificationReport rep;
    rep.identity = "hook-ratio-add";
    rep.params = "lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 0; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            for (const AddMove& mv : add_moves(lam)) {
                Rational formula = hook_ratio_add(lam, mv.corner);
                Rational direct = make_rational(hook_product(mv.result), hook_product(lam));
                if (formula != direct) {
                    rep.pass = false;
                    rep.counterexample = "lambda=" + render_partition(lam) +
                                         " corner=" + std::to_string(mv.corner);
                    break;
                }
            }
            if (!rep.pass) break;
        }
    rep.lhs = "corner-content product";
    rep.rhs = "H(lambda+)/H(lambda)";
    return rep;
}

// hook_ratio_remove against direct hook-product quotients, every removable
// row of every |λ| ≤ cap.
inline VerificationReport check_hook_ratio_remove(long long lambda_max) {
    VerificationReport rep;
    rep.identity = "hook-ratio-remove";
    rep.params = "lambda_max=" + std::to_string(lambda_max);
    rep.pass = true;
    for (long long n = 1; n <= lambda_max && rep.pass; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            for (int i = 1; i <= lam.rows(); ++i) {
                if (lam.part(i) <= lam.part(i + 1)) continue;
                std::vector<int> parts = lam.parts();
                parts[static_cast<std::size_t>(i - 1)] -= 1;
                if (parts[static_cast<std::size_t>(i - 1)] == 0) parts.pop_back();
                Partition smaller(parts);
                Rational formula = hook_ratio_remove(lam, i);
                Rational direct = make_rational(hook_product(lam), hook_product(smaller));
                if (formula != direct) {
                    rep.pass = false;
                    rep.counterexample = "lambda=" + render_partition(lam) + " row=" +
                                         std::to_string(i);
                    break;
                }
            }
            if (!rep.pass) break;
        }
    rep.lhs = "shifted-parts quotient";
    rep.rhs = "H(lambda)/H(lambda-)";
    return rep;
}

// ---------------------------------------------------------------------------
// Polynomiality and the truncated product
// ---------------------------------------------------------------------------

struct PolynomialFit {
    VerificationReport report;
    std::optional<Polynomial> polynomial;  // in n, present on pass
};

// Passes iff the (d+1)-st finite differences of the values all vanish; on
// pass the Newton forward form is assembled into a monomial-basis polynomial.
inline PolynomialFit polynomiality_check(const std::vector<Rational>& values, long long degree,
                                         const std::string& params = "") {
    if (degree < 0) throw std::invalid_argument("polynomiality_check: degree must be >= 0");
    if (static_cast<long long>(values.size()) < degree + 2)
        throw std::invalid_argument("polynomiality_check: need at least degree+2 values");

    std::vector<std::vector<Rational>> table{values};
    for (long long d = 1; d <= degree + 1; ++d) {
        const auto& prev = table.back();
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        table.push_back(std::move(next));
    }

    PolynomialFit fit;
    fit.report.identity = "polynomiality";
    fit.report.params = params.empty() ? "degree<=" + std::to_string(degree) : params;
    fit.report.rhs = "degree<=" + std::to_string(degree);
    fit.report.pass = true;
    const auto& top = table[static_cast<std::size_t>(degree + 1)];
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (top[i] != 0) {
            fit.report.pass = false;
            fit.report.counterexample = "Delta^" + std::to_string(degree + 1) + " value[" +
                                        std::to_string(i) + "] = " + to_string(top[i]);
            break;
        }
    }
    if (fit.report.pass) {
        Polynomial poly;
        for (long long k = 0; k <= degree; ++k)
            poly += table[static_cast<std::size_t>(k)][0] * binomial_polynomial(k);
        fit.polynomial = poly;
        fit.report.lhs = poly.to_string("n");
    } else {
        fit.report.lhs = "not a polynomial";
    }
    return fit;
}

// Σ_n (Σ_{|λ|=n} f_λ² ∏(t+h²)) x^n/n!² = ∏_i (1−x^i)^{−1−t}, compared as
// polynomials in t for every n ≤ N, with the right side expanded through the
// binomial series (1−x^i)^{−1−t} = Σ_s C(t+s,s) x^{is}.
inline VerificationReport check_nekrasov_okounkov(long long N) {
    if (N < 0 || N > 10)
        throw std::invalid_argument("check_nekrasov_okounkov: N must be between 0 and 10");

    std::vector<Polynomial> lhs;
    for (long long n = 0; n <= N; ++n) {
        Polynomial sum;
        for (const Partition& lam : enumerate_partitions(n)) {
            Polynomial prod(1);
            for (const auto& [box, h] : hook_lengths(lam))
                prod *= Polynomial(std::vector<Rational>{Rational(Integer(h) * h), 1});
            Integer hp = hook_product(lam);
            sum += make_rational(1, hp * hp) * prod;  // f_λ²/n!² = 1/H_λ²
        }
        lhs.push_back(sum);
    }

    std::vector<Polynomial> rhs(static_cast<std::size_t>(N) + 1);
    rhs[0] = Polynomial(1);
    for (long long i = 1; i <= N; ++i) {
        std::vector<Polynomial> factor;  // coefficient of x^{i s}: C(t+s, s)
        for (long long s = 0; i * s <= N; ++s) {
            Polynomial c(make_rational(1, factorial(s)));
            for (long long u = 1; u <= s; ++u)
                c *= Polynomial(std::vector<Rational>{Rational(u), 1});
            factor.push_back(c);
        }
        std::vector<Polynomial> next(static_cast<std::size_t>(N) + 1);
        for (long long j = 0; j <= N; ++j)
            for (long long s = 0; i * s <= j; ++s)
                next[static_cast<std::size_t>(j)] +=
                    rhs[static_cast<std::size_t>(j - i * s)] * factor[static_cast<std::size_t>(s)];
        rhs = std::move(next);
    }

    VerificationReport rep;
    rep.identity = "nekrasov-okounkov";
    rep.params = "N=" + std::to_string(N);
    rep.lhs = lhs.back().to_string("t");
    rep.rhs = rhs.back().to_string("t");
    rep.pass = true;
    for (long long n = 0; n <= N; ++n) {
        if (lhs[static_cast<std::size_t>(n)] != rhs[static_cast<std::size_t>(n)]) {
            rep.pass = false;
            rep.counterexample = "coefficient of x^" + std::to_string(n) + " differs";
            rep.lhs = lhs[static_cast<std::size_t>(n)].to_string("t");
            rep.rhs = rhs[static_cast<std::size_t>(n)].to_string("t");
            break;
        }
    }
    return rep;
}

// Σ_{|λ/μ|=n} f_{λ/μ} L_r(λ)/H_λ = Σ_{k≤2r} C(n,k) D^k(L_r/H)(μ) for every
// n ≤ n_max, plus polynomiality of the left side at degree 2r.
inline VerificationReport check_polynomial_star(const Partition& mu, long long r,
                                                long long n_max) {
    if (r < 0) throw std::invalid_argument("check_polynomial_star: r must be >= 0");
    if (n_max < 2 * r + 1) n_max = 2 * r + 1;
    PartitionFunction g = make_statistic("L:" + std::to_string(r) + "/H");

    std::vector<Rational> dk;
    PartitionFunction d = g;
    for (long long k = 0; k <= 2 * r; ++k) {
        dk.push_back(d(mu));
        if (k < 2 * r) d = apply_D(d);
    }

    std::vector<Rational> direct;
    bool ok = true;
    std::string cex;
    for (long long n = 0; n <= n_max; ++n) {
        direct.push_back(skew_weighted_sum(g, mu, n));
        Rational viaD = 0;
        for (long long k = 0; k <= 2 * r; ++k)
            viaD += Rational(binomial(n, k)) * dk[static_cast<std::size_t>(k)];
        if (direct.back() != viaD) {
            ok = false;
            cex = "two-path mismatch at n=" + std::to_string(n);
            break;
        }
    }
    if (ok) {
        PolynomialFit fit = polynomiality_check(direct, 2 * r);
        if (!fit.report.pass) {
            ok = false;
            cex = "direct sums fail polynomiality at degree " + std::to_string(2 * r);
        }
    }
    VerificationReport rep;
    rep.identity = "polynomial-star";
    rep.params = "mu=" + render_partition(mu) + " r=" + std::to_string(r) +
                 " n_max=" + std::to_string(n_max);
    rep.lhs = detail::render_value_list(direct);
    rep.rhs = "binomial transform of D^k values";
    rep.pass = ok;
    rep.counterexample = cex;
    return rep;
}

// (1/(n+|μ|)!)·Σ_{|λ/μ|=n} f_λ f_{λ/μ} p_ν(h²) is a polynomial in n of
// degree ≤ |ν|+ℓ(ν); the sequence length follows the degree bound.
inline VerificationReport check_han_stanley(const Partition& nu, const Partition& mu) {
    if (nu.empty()) throw std::invalid_argument("check_han_stanley: ν must be nonempty");
    long long degree = nu.size() + nu.rows();
    long long n_max = 2 * degree + 3;
    PartitionFunction g = make_statistic("p:" + nu.to_string() + "/H");
    std::vector<Rational> values;
    for (long long n = 0; n <= n_max; ++n) values.push_back(skew_weighted_sum(g, mu, n));
    PolynomialFit fit = polynomiality_check(values, degree);
    VerificationReport rep = fit.report;
    rep.identity = "polynomiality";
    rep.params = "nu=" + render_partition(nu) + " mu=" + render_partition(mu) +
                 " n_max=" + std::to_string(n_max) + " degree<=" + std::to_string(degree);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite orchestration
// ---------------------------------------------------------------------------

struct SuiteCaps {
    long long straight_n_max = 14;  // Σ over |λ|=n sweeps
    long long r_max = 3;
    long long skew_mu_max = 4;      // sweep all μ up to this size
    long long skew_n_max = 12;      // |λ| bound in skew sweeps
    long long lambda_max = 7;       // operator checks
    long long corner_lambda_max = 8;
    long long order_max = 4;        // series truncation order
    long long product_n_max = 6;    // Nekrasov–Okounkov truncation
    std::vector<Partition> mus;     // override μ grids when nonempty
};

namespace detail {

inline std::vector<Partition> default_mus(const SuiteCaps& caps, long long size_cap) {
    if (!caps.mus.empty()) return caps.mus;
    std::vector<Partition> out;
    for (long long s = 0; s <= size_cap; ++s)
        for (const Partition& mu : enumerate_partitions(s)) out.push_back(mu);
    return out;
}

inline std::vector<Partition> small_mus(const SuiteCaps& caps) {
    if (!caps.mus.empty()) return caps.mus;
    return {Partition(), Partition({1}), Partition({2, 1})};
}

inline std::vector<std::string> main2_statistics() {
    return {"invH", "S:1/H", "C:1/H", "q:2/H", "L:1/H"};
}

inline std::vector<Partition> partitions_up_to(long long cap) {
    std::vector<Partition> out;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& lam : enumerate_partitions(n)) out.push_back(lam);
    return out;
}

}  // namespace detail

using VerifyTask = std::function<VerificationReport()>;

inline std::vector<std::string> verify_identity_names() {
    return {"okada-panova",  "marked-hook",      "content-formula", "skew-marked-hook",
            "skew-marked-content", "main2",      "telescope",       "hook-dpoly",
            "content-dpoly", "shifted",          "series-dpoly",    "carde",
            "operator-algebra", "corner-hook-sum", "corner-generating", "corner-formula",
            "hook-ratios",   "polynomial-star",  "polynomiality",   "nekrasov-okounkov"};
}

inline std::vector<VerifyTask> build_identity_tasks(const std::string& name,
                                                    const SuiteCaps& caps) {
    std::vector<VerifyTask> tasks;
    auto add = [&tasks](VerifyTask t) { tasks.push_back(std::move(t)); };

    if (name == "okada-panova") {
        for (long long n = 1; n <= caps.straight_n_max; ++n)
            for (long long r = 0; r <= caps.r_max; ++r)
                add([n, r] { return check_okada_panova(n, r); });
    } else if (name == "marked-hook") {
        for (long long n = 1; n <= caps.straight_n_max; ++n)
            add([n] { return check_marked_hook(n); });
    } else if (name == "content-formula") {
        for (long long n = 1; n <= caps.straight_n_max; ++n)
            for (long long r = 0; r <= caps.r_max; ++r)
                add([n, r] { return check_content_formula(n, r); });
    } else if (name == "skew-marked-hook") {
        for (const Partition& mu : detail::default_mus(caps, caps.skew_mu_max))
            for (long long n = mu.size(); n <= caps.skew_n_max; ++n)
                add([mu, n] { return check_skew_marked_hook(mu, n); });
    } else if (name == "skew-marked-content") {
        for (const Partition& mu : detail::default_mus(caps, caps.skew_mu_max))
            for (long long n = mu.size(); n <= caps.skew_n_max; ++n)
                add([mu, n] { return check_skew_marked_content(mu, n); });
    } else if (name == "main2") {
        for (const std::string& id : detail::main2_statistics())
            for (const Partition& mu : detail::small_mus(caps))
                for (long long n = 0; n <= 5; ++n)
                    add([id, mu, n] { return check_main2(id, mu, n); });
    } else if (name == "telescope") {
        for (const std::string& id : detail::main2_statistics())
            for (const Partition& mu : detail::small_mus(caps))
                add([id, mu] { return check_telescope(id, mu, 5); });
    } else if (name == "hook-dpoly") {
        for (const Partition& lam :
             {Partition(), Partition({1}), Partition({2, 1}), Partition({3, 1})})
            for (long long r = 0; r <= 2; ++r)
                add([lam, r] { return check_DS(lam, r); });
    } else if (name == "content-dpoly") {
        for (const Partition& lam :
             {Partition(), Partition({1}), Partition({2, 1}), Partition({3, 1})})
            for (long long r = 0; r <= 2; ++r)
                add([lam, r] { return check_DC(lam, r); });
    } else if (name == "shifted") {
        long long r_max = std::min<long long>(caps.r_max, 3);
        for (const Partition& lam : detail::partitions_up_to(caps.lambda_max))
            add([lam, r_max] { return check_shifted(lam, r_max); });
    } else if (name == "series-dpoly") {
        for (const Partition& lam : detail::partitions_up_to(5))
            for (long long r = 1; r <= 2; ++r)
                add([lam, r] { return check_DL(lam, r); });
    } else if (name == "carde") {
        for (const Partition& lam : detail::partitions_up_to(5))
            add([lam, order = caps.order_max] { return check_carde(lam, order); });
    } else if (name == "operator-algebra") {
        long long lm = caps.lambda_max;
        add([lm] { return check_commutator("invH", make_statistic("invH"), lm); });
        add([lm] { return check_commutator("size/H", size_over_H(), lm); });
        add([lm] { return check_commutator("q:2/H", make_statistic("q:2/H"), lm); });
        add([lm] { return check_commutator("S:1/H", make_statistic("S:1/H"), lm); });
        add([lm] {
            return check_linearity("S:1/H", make_statistic("S:1/H"), "q:2", make_statistic("q:2"),
                                   make_rational(2, 3), make_rational(-5, 7), lm);
        });
        add([lm] {
            return check_linearity("invH", make_statistic("invH"), "C:1", make_statistic("C:1"),
                                   make_rational(-1, 2), make_rational(4, 9), lm);
        });
        for (const std::string& id : {"q:2", "S:1", "C:1"})
            add([id, lm] { return check_leibniz1(id, make_statistic(id), lm); });
        {
            std::vector<std::pair<std::string, PartitionFunction>> gs{
                {"size", size_statistic()},
                {"q:2", make_statistic("q:2")},
                {"S:1", make_statistic("S:1")}};
            for (std::size_t a = 0; a < gs.size(); ++a)
                for (std::size_t b = a; b < gs.size(); ++b)
                    add([g1 = gs[a], g2 = gs[b], lm] {
                        return check_leibniz_product(g1.first, g1.second, g2.first, g2.second,
                                                     lm);
                    });
        }
        for (long long r = 0; r <= 4; ++r)
            add([r, lm] { return check_dbino(r, lm); });
        for (const std::string& id : {"invH", "q:2/H"})
            for (long long k = 1; k <= 3; ++k)
                for (long long r = 0; r <= 4; ++r)
                    add([id, k, r, lm] {
                        return check_dkbino(id, make_statistic(id), k, r, lm);
                    });
    } else if (name == "corner-hook-sum") {
        long long lm = caps.corner_lambda_max + 1;
        std::vector<std::pair<std::string, std::function<Rational(long long)>>> f0s{
            {"1", [](long long) { return Rational(1); }},
            {"h", [](long long h) { return Rational(h); }},
            {"h^2", [](long long h) { return Rational(Integer(h) * h); }},
            {"h^4", [](long long h) { return Rational(integer_pow(h, 4)); }}};
        for (long long r = 1; r <= 3; ++r)
            f0s.push_back({"prod(h^2-j^2),r=" + std::to_string(r), [r](long long h) {
                               return Rational(falling_square_product(r).evaluate(Rational(h)));
                           }});
        for (auto& [label, f0] : f0s)
            add([label = label, f0 = f0, lm] { return check_corner_hook_sum(label, f0, lm); });
    } else if (name == "corner-generating") {
        for (const Partition& lam : detail::partitions_up_to(caps.corner_lambda_max))
            add([lam] { return corner_generating_check(lam, 6); });
    } else if (name == "corner-formula") {
        for (long long r = 1; r <= 3; ++r)
            add([r, lm = caps.corner_lambda_max] { return check_corner_formula(r, lm); });
    } else if (name == "hook-ratios") {
        add([lm = caps.corner_lambda_max] { return check_hook_ratio_add(lm); });
        add([lm = caps.corner_lambda_max] { return check_hook_ratio_remove(lm); });
    } else if (name == "polynomial-star") {
        std::vector<Partition> mus =
            caps.mus.empty() ? std::vector<Partition>{Partition(), Partition({1})} : caps.mus;
        for (const Partition& mu : mus)
            for (long long r = 0; r <= 2; ++r)
                add([mu, r] { return check_polynomial_star(mu, r, 2 * r + 3); });
    } else if (name == "polynomiality") {
        std::vector<Partition> mus =
            caps.mus.empty() ? std::vector<Partition>{Partition(), Partition({1})} : caps.mus;
        for (const Partition& nu : {Partition({1}), Partition({2}), Partition({1, 1})})
            for (const Partition& mu : mus)
                add([nu, mu] { return check_han_stanley(nu, mu); });
    } else if (name == "nekrasov-okounkov") {
        add([n = caps.product_n_max] { return check_nekrasov_okounkov(n); });
    } else {
        throw std::invalid_argument("unknown verify identity '" + name + "'");
    }
    return tasks;
}

inline std::vector<VerificationReport> run_tasks(const std::vector<VerifyTask>& tasks,
                                                 int workers) {
    std::vector<VerificationReport> out(tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                out[i] = tasks[i]();
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

inline std::vector<VerificationReport> run_identity(const std::string& name,
                                                    const SuiteCaps& caps, int workers = 1) {
    return run_tasks(build_identity_tasks(name, caps), workers);
}

inline std::vector<VerificationReport> run_suite(const SuiteCaps& caps, int workers = 1) {
    std::vector<VerifyTask> tasks;
    for (const std::string& name : verify_identity_names())
        for (VerifyTask& t : build_identity_tasks(name, caps)) tasks.push_back(std::move(t));
    return run_tasks(tasks, workers);
}

}  // namespace partcalc
