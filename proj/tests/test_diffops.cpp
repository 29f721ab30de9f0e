#include "partcalc/diffops.hpp"
#include "partcalc/hookstats.hpp"
#include "partcalc/partition.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/tableaux.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace partcalc;

namespace {

std::vector<Partition> all_partitions_up_to(long long cap) {
    std::vector<Partition> out;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& q : enumerate_partitions(n)) out.push_back(q);
    return out;
}

PartitionFunction inv_hook() { return make_statistic("invH"); }

}  // namespace

TEST_CASE("partition functions memoize by value") {
    int calls = 0;
    PartitionFunction f("counter", [&calls](const Partition& p) {
        ++calls;
        return Rational(p.size());
    });
    Partition p({2, 1});
    REQUIRE(f(p) == 3);
    REQUIRE(f(p) == 3);
    REQUIRE(calls == 1);
    PartitionFunction copy = f;  // copies share the cache
    REQUIRE(copy(p) == 3);
    REQUIRE(calls == 1);
    REQUIRE(f.name() == "counter");
}

TEST_CASE("first difference operator on reference values") {
    PartitionFunction g = inv_hook();
    PartitionFunction dg = apply_D(g);
    // Σ_{λ⁺} 1/H_{λ⁺} = 1/H_λ, so D(1/H) vanishes identically.
    for (const Partition& p : all_partitions_up_to(7)) REQUIRE(dg(p) == 0);

    PartitionFunction size("size", [](const Partition& p) { return Rational(p.size()); });
    PartitionFunction dsize = apply_D(size);
    // D|λ| = Σ_{λ⁺}(|λ|+1) − |λ| = (m+1)(|λ|+1) − |λ| with m+1 addable cells.
    REQUIRE(dsize(Partition()) == 1);
    REQUIRE(dsize(Partition({2, 1})) == 3 * 4 - 3);
}

TEST_CASE("second difference operator on reference values") {
    // D⁻(1/H) vanishes identically: Σ_{λ⁻} 1/H_{λ⁻} = |λ|/H_λ.
    PartitionFunction dmg = apply_Dminus(inv_hook());
    for (const Partition& p : all_partitions_up_to(7)) REQUIRE(dmg(p) == 0);

    // D⁻(|λ|/H) = |λ|/H: removals each drop the size by one.
    PartitionFunction size_over_h("size/H", [](const Partition& p) {
        return make_rational(p.size(), hook_product(p));
    });
    PartitionFunction dm_size = apply_Dminus(size_over_h);
    REQUIRE(dm_size(Partition({2, 1})) == 1);
    for (const Partition& p : all_partitions_up_to(6)) REQUIRE(dm_size(p) == size_over_h(p));
}

TEST_CASE("commutator identity on small partitions") {
    for (const std::string& id : {"invH", "S:1/H", "q:2/H"}) {
        PartitionFunction g = make_statistic(id);
        PartitionFunction lhs1 = apply_D(apply_Dminus(g));
        PartitionFunction lhs2 = apply_Dminus(apply_D(g));
        PartitionFunction rhs = apply_D(g);
        for (const Partition& p : all_partitions_up_to(5))
            REQUIRE(lhs1(p) - lhs2(p) == rhs(p));
    }
}

TEST_CASE("iterated operator depth cap") {
    REQUIRE_THROWS_AS(apply_Dk(inv_hook(), 13), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_Dk(inv_hook(), -1), std::invalid_argument);
    REQUIRE(apply_Dk(inv_hook(), 0)(Partition({2})) == make_rational(1, 2));
}

TEST_CASE("weighted skew sums") {
    SECTION("reference values") {
        // Σ_{|λ/μ|=n} f_{λ/μ}/H_λ telescopes to 1/H_μ.
        for (const Partition& mu : {Partition(), Partition({1}), Partition({2, 1})})
            for (long long n = 0; n <= 6; ++n)
                REQUIRE(skew_weighted_sum(inv_hook(), mu, n) ==
                        make_rational(1, hook_product(mu)));
        REQUIRE(skew_weighted_sum(make_statistic("S:1/H"), Partition(), 4) == 18);
    }
    SECTION("n = 0 returns the statistic at the inner shape") {
        REQUIRE(skew_weighted_sum(make_statistic("q:2"), Partition({3, 1}), 0) == 8);
    }
    SECTION("direct and binomial-transform paths agree") {
        for (const std::string& id : {"invH", "S:1/H", "C:1/H", "q:2/H"})
            for (const Partition& mu : {Partition(), Partition({1}), Partition({2, 1})})
                for (long long n = 0; n <= 4; ++n)
                    REQUIRE(skew_weighted_sum(make_statistic(id), mu, n) ==
                            skew_sum_via_binomial(make_statistic(id), mu, n));
    }
    SECTION("caps") {
        REQUIRE_THROWS_AS(skew_weighted_sum(inv_hook(), Partition(), 41),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(skew_sum_via_binomial(inv_hook(), Partition(), 13),
                          std::invalid_argument);
    }
}

TEST_CASE("iterated operator equals the alternating inversion") {
    for (const std::string& id : {"invH", "q:2/H", "S:1/H"})
        for (const Partition& mu : {Partition(), Partition({1}), Partition({2, 1})})
            for (long long n = 0; n <= 4; ++n) {
                PartitionFunction g = make_statistic(id);
                REQUIRE(apply_Dk(g, n)(mu) == Dk_via_inversion(g, mu, n));
            }
}

TEST_CASE("telescoping lists") {
    TelescopeResult t = telescope(make_statistic("S:1/H"), Partition(), 5);
    REQUIRE(t.A.size() == 6);
    REQUIRE(t.B.size() == 5);
    REQUIRE_FALSE(t.first_violation.has_value());
    REQUIRE(t.A[4] == 18);
    Rational total = t.A[0];
    for (const Rational& b : t.B) total += b;
    REQUIRE(total == t.A[5]);
}

TEST_CASE("series coefficient recurrence for the hook weight") {
    // D(L_k/H)(λ) = |λ|·L_{k-1}(λ)/H_λ − D⁻(L_{k-1}/H)(λ) for k ≥ 1.
    for (long long k = 1; k <= 3; ++k) {
        PartitionFunction lk = make_statistic("L:" + std::to_string(k) + "/H");
        PartitionFunction lk1 = make_statistic("L:" + std::to_string(k - 1) + "/H");
        PartitionFunction d_lk = apply_D(lk);
        PartitionFunction dm_lk1 = apply_Dminus(lk1);
        for (const Partition& p : all_partitions_up_to(5))
            REQUIRE(d_lk(p) == Rational(p.size()) * lk1(p) - dm_lk1(p));
    }
}

TEST_CASE("higher-order recurrence with the down operator") {
    // D^r(L_k/H) = |λ|D^{r-1}(L_{k-1}/H) + (r-1)D^{r-2}(L_{k-1}/H) − D⁻D^{r-1}(L_{k-1}/H)
    for (long long k = 1; k <= 2; ++k)
        for (long long r = 1; r <= 3; ++r) {
            PartitionFunction lk = make_statistic("L:" + std::to_string(k) + "/H");
            PartitionFunction lk1 = make_statistic("L:" + std::to_string(k - 1) + "/H");
            PartitionFunction lhs = apply_Dk(lk, r);
            PartitionFunction d_r1 = apply_Dk(lk1, r - 1);
            PartitionFunction dm_d_r1 = apply_Dminus(d_r1);
            for (const Partition& p : all_partitions_up_to(4)) {
                Rational rhs = Rational(p.size()) * d_r1(p) - dm_d_r1(p);
                if (r >= 2) rhs += Rational(r - 1) * apply_Dk(lk1, r - 2)(p);
                REQUIRE(lhs(p) == rhs);
            }
        }
}
