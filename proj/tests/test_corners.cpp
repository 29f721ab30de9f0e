#include <catch2/catch_amalgamated.hpp>

#include <partcalc/corners.hpp>
#include <partcalc/hookstats.hpp>
#include <partcalc/power_sums.hpp>
#include <partcalc/tableaux.hpp>

#include <functional>
#include <stdexcept>
#include <vector>

using namespace partcalc;

namespace {

std::vector<Partition> all_partitions_up_to(long long cap) {
    std::vector<Partition> out;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& p : enumerate_partitions(n)) out.push_back(p);
    return out;
}

Rational direct_hook_sum(const Partition& p, const std::function<Rational(long long)>& f0) {
    Rational acc = 0;
    for (const auto& [box, h] : hook_lengths(p)) acc += f0(h);
    return acc;
}

}  // namespace

TEST_CASE("hook sums from corner data") {
    std::vector<std::pair<std::string, std::function<Rational(long long)>>> functions;
    functions.emplace_back("1", [](long long) { return Rational(1); });
    functions.emplace_back("h", [](long long h) { return Rational(h); });
    functions.emplace_back("h^2", [](long long h) { return Rational(h * h); });
    functions.emplace_back("h^4", [](long long h) { return Rational(Integer(h) * h * h * h); });
    for (long long r = 1; r <= 3; ++r) {
        Polynomial f = falling_square_product(r);
        functions.emplace_back("falling r=" + std::to_string(r),
                               [f](long long h) { return f.evaluate(Rational(h)); });
    }

    for (const auto& [label, f0] : functions) {
        INFO("F0 = " << label);
        for (const Partition& p : all_partitions_up_to(7))
            REQUIRE(hook_sum_via_corners(p, f0) == direct_hook_sum(p, f0));
    }

    SECTION("hand-checked case") {
        // λ = (2,2): hooks {3,2,2,1}, so Σh = 8; corner contents x = (−2, 2), y = (0).
        auto ident = [](long long h) { return Rational(h); };
        REQUIRE(hook_sum_via_corners(Partition({2, 2}), ident) == 8);
    }
}

TEST_CASE("corner generating identity") {
    for (const Partition& p : all_partitions_up_to(6)) {
        VerificationReport rep = corner_generating_check(p, 6);
        INFO(rep.params << " : " << rep.counterexample);
        REQUIRE(rep.pass);
        REQUIRE(rep.identity == "corner-generating");
    }
    REQUIRE_THROWS_AS(corner_generating_check(Partition({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("hook statistic from corner data") {
    REQUIRE(S_via_corner_formula(Partition({2, 1}), 1) == 8);
    // Bigger frozen case: hooks of (6,3,3,2) are
    // {9,8,6,3,2,1},{5,4,2},{4,3,1},{2,1}; Σ(h²−1) = 271 − 14 = 257.
    REQUIRE(S_via_corner_formula(Partition({6, 3, 3, 2}), 1) == 257);
    REQUIRE(S_via_corner_formula(Partition({6, 3, 3, 2}), 1) ==
            Rational(stat_S(Partition({6, 3, 3, 2}), 1)));
    for (long long r = 1; r <= 3; ++r)
        for (const Partition& p : all_partitions_up_to(6))
            REQUIRE(S_via_corner_formula(p, r) == Rational(stat_S(p, r)));
    REQUIRE_THROWS_AS(S_via_corner_formula(Partition({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("hook sums separate corner power contributions") {
    // Each pure power h^t is within reach of the partial-sum transform, which
    // exercises arguments across the full corner content range.
    for (long long t = 0; t <= 6; ++t) {
        auto f0 = [t](long long h) {
            return Rational(integer_pow(Integer(h), static_cast<unsigned long long>(t)));
        };
        for (const Partition& p : all_partitions_up_to(6))
            REQUIRE(hook_sum_via_corners(p, f0) == direct_hook_sum(p, f0));
    }
}
