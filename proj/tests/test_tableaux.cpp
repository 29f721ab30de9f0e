#include "partcalc/partition.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/tableaux.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace partcalc;

namespace {

// All μ ⊆ λ, by choosing each part from 0 to min(λ_i, previous).
std::vector<Partition> sub_shapes(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        if (row > lam.rows() || prev == 0) {
            std::vector<int> trimmed = cur;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.push_back(Partition(trimmed));
            return;
        }
        for (int v = std::min(lam.part(row), prev); v >= 0; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, lam.rows() == 0 ? 0 : lam.part(1));
    return out;
}

std::vector<Partition> all_partitions_up_to(long long cap) {
    std::vector<Partition> out;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& q : enumerate_partitions(n)) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("integer determinants") {
    using detail::bareiss_determinant;
    REQUIRE(bareiss_determinant({}) == 1);
    REQUIRE(bareiss_determinant({{5}}) == 5);
    REQUIRE(bareiss_determinant({{1, 2}, {3, 4}}) == -2);
    REQUIRE(bareiss_determinant({{0, 1}, {1, 0}}) == -1);  // needs a row swap
    REQUIRE(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
    REQUIRE(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {0, 1, 4}}) == 21);
    REQUIRE(bareiss_determinant({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("straight-shape tableau counts") {
    REQUIRE(syt_count(Partition()) == 1);
    REQUIRE(syt_count(Partition({1})) == 1);
    REQUIRE(syt_count(Partition({2, 1})) == 2);
    REQUIRE(syt_count(Partition({3, 2})) == 5);
    REQUIRE(syt_count(Partition({6, 3, 3, 2})) == 35035);

    SECTION("hook formula equals brute-force counting") {
        for (const Partition& lam : all_partitions_up_to(6))
            REQUIRE(syt_count(lam) == syt_enumerate(SkewShape(lam, Partition())));
    }
    SECTION("sum of squares is n!") {
        for (long long n = 0; n <= 8; ++n) {
            Integer acc = 0;
            for (const Partition& lam : enumerate_partitions(n)) {
                Integer f = syt_count(lam);
                acc += f * f;
            }
            REQUIRE(acc == factorial(n));
        }
    }
    SECTION("adding one box multiplies the total count by n+1") {
        for (const Partition& lam : all_partitions_up_to(8)) {
            Integer acc = 0;
            for (const auto& mv : add_moves(lam)) acc += syt_count(mv.result);
            REQUIRE(acc == Integer(lam.size() + 1) * syt_count(lam));
        }
    }
}

TEST_CASE("skew-shape tableau counts") {
    REQUIRE(skew_syt_count(Partition({2, 1}), Partition({1})) == 2);
    REQUIRE(skew_syt_count(Partition({3, 2}), Partition({1})) == 5);
    REQUIRE(skew_syt_count(Partition({2, 2}), Partition({1})) == 2);
    REQUIRE(skew_syt_count(Partition({3, 3, 1}), Partition({3, 3, 1})) == 1);  // empty shape
    REQUIRE(skew_syt_count(Partition({4, 1}), Partition()) == syt_count(Partition({4, 1})));
    // disconnected skew shape: boxes interleave freely
    REQUIRE(skew_syt_count(Partition({2, 1, 1}), Partition({1, 1})) == 2);

    SECTION("determinant equals brute-force counting on every sub-shape") {
        for (const Partition& lam : all_partitions_up_to(6))
            for (const Partition& mu : sub_shapes(lam)) {
                SkewShape shape(lam, mu);
                REQUIRE(skew_syt_count(shape) == syt_enumerate(shape));
            }
    }
    SECTION("invalid shapes are rejected") {
        REQUIRE_THROWS_AS(SkewShape(Partition({1}), Partition({2})), std::invalid_argument);
        REQUIRE_THROWS_AS(skew_syt_count(Partition({2}), Partition({1, 1})),
                          std::invalid_argument);
    }
    SECTION("enumeration cap") {
        REQUIRE_THROWS_AS(syt_enumerate(SkewShape(Partition({8, 7}), Partition()), 12),
                          std::invalid_argument);
    }
}
