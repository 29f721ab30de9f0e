// Acceptance gate: one exact check per numbered criterion, one PASS/FAIL line
// each, exit status = number of failed criteria.  Everything is integer or
// rational arithmetic; there are no tolerances anywhere.

#include <partcalc/partcalc.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace partcalc;

namespace {

bool all_pass(const std::vector<VerificationReport>& reports) {
    bool ok = true;
    for (const VerificationReport& rep : reports) {
        if (!rep.pass) {
            ok = false;
            std::cerr << "  failing check: " << rep.to_tsv() << "\n";
        }
    }
    return ok;
}

std::vector<Partition> partitions_up_to(long long cap) {
    std::vector<Partition> out;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& p : enumerate_partitions(n)) out.push_back(p);
    return out;
}

std::vector<Partition> sub_shapes(const Partition& outer) {
    std::vector<Partition> out;
    for (long long s = 0; s <= outer.size(); ++s)
        for (const Partition& mu : enumerate_partitions(s))
            if (outer.contains(mu)) out.push_back(mu);
    return out;
}

bool criterion_1() {
    if (okada_constant(0) != 1 || okada_constant(1) != 3 || okada_constant(2) != 40 ||
        okada_constant(3) != 1050) {
        std::cerr << "  normalizing constants K_0..K_3 are off\n";
        return false;
    }
    std::vector<VerificationReport> reports;
    for (long long n = 1; n <= 14; ++n)
        for (long long r = 0; r <= 4; ++r) reports.push_back(check_okada_panova(n, r));
    return all_pass(reports);
}

bool criterion_2() {
    std::vector<VerificationReport> reports;
    for (long long n = 1; n <= 16; ++n) reports.push_back(check_marked_hook(n));
    return all_pass(reports);
}

bool criterion_3() {
    std::vector<VerificationReport> reports;
    for (const Partition& mu : {Partition(), Partition({1}), Partition({2}), Partition({1, 1}),
                                Partition({2, 1}), Partition({2, 2})}) {
        for (long long n = mu.size(); n <= 12; ++n) {
            reports.push_back(check_skew_marked_hook(mu, n));
            reports.push_back(check_skew_marked_content(mu, n));
        }
    }
    return all_pass(reports);
}

bool criterion_4() {
    std::vector<VerificationReport> reports;
    for (long long n = 1; n <= 14; ++n)
        for (long long r = 0; r <= 4; ++r) reports.push_back(check_content_formula(n, r));
    return all_pass(reports);
}

bool criterion_5() {
    std::vector<VerificationReport> reports;
    for (const Partition& lam :
         {Partition(), Partition({1}), Partition({2, 1}), Partition({3, 1})}) {
        for (long long r = 0; r <= 2; ++r) {
            reports.push_back(check_DS(lam, r));
            reports.push_back(check_DC(lam, r));
        }
    }
    return all_pass(reports);
}

bool criterion_6() {
    std::vector<VerificationReport> reports;
    for (const std::string& id : {"invH", "S:1/H", "C:1/H", "q:2/H", "L:1/H"})
        for (const Partition& mu : {Partition(), Partition({1}), Partition({2, 1})})
            for (long long n = 0; n <= 5; ++n) reports.push_back(check_main2(id, mu, n));
    return all_pass(reports);
}

bool criterion_7() {
    SuiteCaps caps;
    caps.lambda_max = 7;
    return all_pass(run_identity("operator-algebra", caps));
}

bool criterion_8() {
    std::vector<VerificationReport> reports;
    for (const Partition& lam : partitions_up_to(7)) reports.push_back(check_shifted(lam, 3));
    return all_pass(reports);
}

bool criterion_9() {
    std::vector<VerificationReport> reports;
    for (const Partition& lam : partitions_up_to(5)) {
        for (long long r = 1; r <= 2; ++r) reports.push_back(check_DL(lam, r));
        reports.push_back(check_carde(lam, 4));
    }
    return all_pass(reports);
}

bool criterion_10() {
    std::vector<VerificationReport> reports;
    {
        SuiteCaps caps;
        caps.corner_lambda_max = 8;
        for (const auto& name : {"corner-hook-sum", "corner-formula", "hook-ratios"})
            for (VerificationReport& rep : run_identity(name, caps))
                reports.push_back(std::move(rep));
    }
    for (const Partition& lam : partitions_up_to(8))
        reports.push_back(corner_generating_check(lam, 6));
    return all_pass(reports);
}

bool criterion_11() { return all_pass({check_nekrasov_okounkov(6)}); }

bool criterion_12() {
    bool ok = true;
    if (syt_count(Partition({6, 3, 3, 2})) != 35035) {
        std::cerr << "  tableau count of (6,3,3,2) is off\n";
        ok = false;
    }
    for (long long n = 0; n <= 10 && ok; ++n) {
        Integer sum = 0;
        for (const Partition& lam : enumerate_partitions(n)) {
            Integer f = syt_count(lam);
            sum += f * f;
        }
        if (sum != factorial(n)) {
            std::cerr << "  sum of squared tableau counts misses " << n << "!\n";
            ok = false;
        }
    }
    for (const Partition& lam : partitions_up_to(8)) {
        for (const Partition& mu : sub_shapes(lam)) {
            SkewShape shape(lam, mu);
            if (skew_syt_count(shape) != syt_enumerate(shape)) {
                std::cerr << "  skew count mismatch at (" << lam.to_string() << ")/("
                          << mu.to_string() << ")\n";
                ok = false;
            }
        }
        if (!ok) break;
    }
    for (long long n = 0; n <= 10 && ok; ++n) {
        for (const Partition& lam : enumerate_partitions(n)) {
            Integer up = 0;
            for (const AddMove& mv : add_moves(lam)) up += syt_count(mv.result);
            if (up != Integer(n + 1) * syt_count(lam)) {
                std::cerr << "  branching identity fails at (" << lam.to_string() << ")\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion_13() {
    std::vector<VerificationReport> reports;
    for (const Partition& nu : {Partition({1}), Partition({2}), Partition({1, 1})})
        for (const Partition& mu : {Partition(), Partition({1})})
            reports.push_back(check_han_stanley(nu, mu));
    return all_pass(reports);
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria{
        {"weighted hook-statistic sums over all shapes of each size", criterion_1},
        {"marked hook sums equal three times a binomial", criterion_2},
        {"skew marked hook and content sums", criterion_3},
        {"content-statistic analogue of the marked sums", criterion_4},
        {"three-level collapse of hook and content statistics", criterion_5},
        {"binomial transform equals direct skew summation", criterion_6},
        {"operator algebra: commutator, Leibniz, binomial lemmas", criterion_7},
        {"shifted factorial polynomial difference chain", criterion_8},
        {"series-coefficient statistics and their recurrences", criterion_9},
        {"corner-content machinery reproduces hook sums and ratios", criterion_10},
        {"truncated product expansion with squared hooks", criterion_11},
        {"tableau counting layer", criterion_12},
        {"polynomiality of normalized skew power sums", criterion_13},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& e) {
            std::cerr << "  exception: " << e.what() << "\n";
            ok = false;
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].label << "\n"
                  << std::flush;
    }
    std::cout << "ACCEPTANCE: " << (failures == 0 ? "PASS" : "FAIL") << " ("
              << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << ")\n";
    return failures;
}
