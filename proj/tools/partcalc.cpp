// partcalc: exact partition calculus from the command line.
//
// Subcommands:
//   eval       evaluate a statistic at one partition
//   sum        tableau-weighted skew sum, direct or via the binomial transform
//   verify     run one identity family (or "all") and report pass/fail
//   fit        fit the skew-sum sequence to an exact polynomial in n
//   enumerate  list partitions (optionally extensions of a fixed inner shape)
//
// Exit codes: 0 success / all checks pass, 1 verification or fit failure,
// 2 usage or parse error.

#include "partcalc/partcalc.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <exception>
#include <iostream>
#include <string>
#include <vector>

namespace {

using partcalc::Partition;
using partcalc::Rational;
using partcalc::VerificationReport;

struct OutputConfig {
    std::string format = "pretty";  // pretty | json | tsv
};

void print_value(const OutputConfig& out, const std::string& command, const std::string& stat,
                 const std::string& partition, const Rational& value) {
    if (out.format == "json") {
        nlohmann::json j;
        j["command"] = command;
        j["stat"] = stat;
        j["partition"] = partition;
        j["value"] = partcalc::to_string(value);
        std::cout << j.dump() << "\n";
    } else if (out.format == "tsv") {
        std::cout << "command\tstat\tpartition\tvalue\n"
                  << command << "\t" << stat << "\t" << partition << "\t"
                  << partcalc::to_string(value) << "\n";
    } else {
        std::cout << partcalc::to_string(value) << "\n";
    }
}

int print_reports(const OutputConfig& out, const std::vector<VerificationReport>& reports) {
    std::size_t failed = 0;
    if (out.format == "json") {
        for (const auto& r : reports) {
            std::cout << r.to_json() << "\n";
            if (!r.pass) ++failed;
        }
    } else if (out.format == "tsv") {
        std::cout << VerificationReport::tsv_header() << "\n";
        for (const auto& r : reports) {
            std::cout << r.to_tsv() << "\n";
            if (!r.pass) ++failed;
        }
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "  " << r.params << "\n";
            if (!r.pass) {
                ++failed;
                std::cout << "     lhs: " << r.lhs << "\n     rhs: " << r.rhs << "\n";
                if (!r.counterexample.empty())
                    std::cout << "     counterexample: " << r.counterexample << "\n";
            }
        }
        std::cout << "summary: " << reports.size() << " checks, " << reports.size() - failed
                  << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of partition statistics, hook products, and difference operators"};
    app.require_subcommand(1);

    OutputConfig out;
    int workers = 1;
    app.add_option("--output", out.format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "tsv"}))
        ->capture_default_str();
    app.add_option("--workers", workers, "Worker threads for verification sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a statistic at a partition");
    std::string eval_stat;
    std::string eval_partition;
    eval_cmd->add_option("stat", eval_stat, "Statistic id, e.g. S:1, C:2, q:2, L:1, invH, S:1/H")
        ->required();
    eval_cmd->add_option("partition", eval_partition,
                         "Partition as comma-separated parts; empty for the empty partition");

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "Skew sum Σ_{|λ/μ|=n} f_{λ/μ} g(λ)");
    std::string sum_stat, sum_mu, sum_mode = "direct";
    long long sum_n = 0;
    sum_cmd->add_option("--stat", sum_stat, "Statistic id g")->required();
    sum_cmd->add_option("--mu", sum_mu, "Inner partition μ")->capture_default_str();
    sum_cmd->add_option("--n", sum_n, "Number of boxes added to μ")->required();
    sum_cmd->add_option("--mode", sum_mode, "direct or binomial")
        ->check(CLI::IsMember({"direct", "binomial"}))
        ->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check one identity family, or all of them");
    std::string verify_name;
    partcalc::SuiteCaps caps;
    std::vector<std::string> verify_mus;
    long long opt_n_max = -1, opt_r_max = -1, opt_lambda_max = -1, opt_corner_max = -1,
              opt_skew_mu_max = -1, opt_order = -1, opt_product_n = -1;
    verify_cmd->add_option("name", verify_name, "Identity name (see --list) or 'all'");
    bool list_names = false;
    verify_cmd->add_flag("--list", list_names, "List identity names and exit");
    verify_cmd->add_option("--n-max", opt_n_max, "Cap on n in summation sweeps");
    verify_cmd->add_option("--r-max", opt_r_max, "Cap on r");
    verify_cmd->add_option("--lambda-max", opt_lambda_max, "Cap on |λ| in operator sweeps");
    verify_cmd->add_option("--corner-max", opt_corner_max, "Cap on |λ| in corner sweeps");
    verify_cmd->add_option("--skew-mu-max", opt_skew_mu_max, "Cap on |μ| in skew sweeps");
    verify_cmd->add_option("--order", opt_order, "Series truncation order");
    verify_cmd->add_option("--product-n", opt_product_n, "Truncation of the product identity");
    verify_cmd->add_option("--mu", verify_mus, "Replace the default μ grid (repeatable)");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit the skew-sum sequence to a polynomial in n");
    std::string fit_stat, fit_mu;
    long long fit_degree = 0, fit_n_max = -1;
    fit_cmd->add_option("--stat", fit_stat, "Statistic id g")->required();
    fit_cmd->add_option("--mu", fit_mu, "Inner partition μ")->capture_default_str();
    fit_cmd->add_option("--degree", fit_degree, "Claimed degree bound")->required();
    fit_cmd->add_option("--n-max", fit_n_max, "Largest n sampled (needs n_max >= degree+1)")
        ->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "List partitions of |μ|+n containing μ");
    long long enum_n = 0, enum_cap = 40;
    std::string enum_mu;
    enum_cmd->add_option("n", enum_n, "Boxes added to μ")->required();
    enum_cmd->add_option("--mu", enum_mu, "Inner partition μ (default empty)")
        ->capture_default_str();
    enum_cmd->add_option("--cap", enum_cap, "Size guard on |μ|+n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) {
            Partition lam = Partition::parse(eval_partition);
            Rational v = partcalc::make_statistic(eval_stat)(lam);
            print_value(out, "eval", eval_stat, lam.to_string(), v);
            return 0;
        }

        if (*sum_cmd) {
            Partition mu = Partition::parse(sum_mu);
            partcalc::PartitionFunction g = partcalc::make_statistic(sum_stat);
            Rational v = sum_mode == "binomial" ? partcalc::skew_sum_via_binomial(g, mu, sum_n)
                                                : partcalc::skew_weighted_sum(g, mu, sum_n);
            print_value(out, "sum:" + sum_mode + ":n=" + std::to_string(sum_n), sum_stat,
                        mu.to_string(), v);
            return 0;
        }

        if (*verify_cmd) {
            if (list_names) {
                for (const std::string& n : partcalc::verify_identity_names())
                    std::cout << n << "\n";
                return 0;
            }
            if (verify_name.empty())
                throw std::invalid_argument("verify: an identity name (or 'all') is required");
            if (opt_n_max >= 0) {
                caps.straight_n_max = opt_n_max;
                caps.skew_n_max = opt_n_max;
            }
            if (opt_r_max >= 0) caps.r_max = opt_r_max;
            if (opt_lambda_max >= 0) caps.lambda_max = opt_lambda_max;
            if (opt_corner_max >= 0) caps.corner_lambda_max = opt_corner_max;
            if (opt_skew_mu_max >= 0) caps.skew_mu_max = opt_skew_mu_max;
            if (opt_order >= 0) caps.order_max = opt_order;
            if (opt_product_n >= 0) caps.product_n_max = opt_product_n;
            for (const std::string& m : verify_mus) caps.mus.push_back(Partition::parse(m));
            std::vector<VerificationReport> reports =
                verify_name == "all" ? partcalc::run_suite(caps, workers)
                                     : partcalc::run_identity(verify_name, caps, workers);
            return print_reports(out, reports);
        }

        if (*fit_cmd) {
            Partition mu = Partition::parse(fit_mu);
            partcalc::PartitionFunction g = partcalc::make_statistic(fit_stat);
            std::vector<Rational> values;
            for (long long n = 0; n <= fit_n_max; ++n)
                values.push_back(partcalc::skew_weighted_sum(g, mu, n));
            partcalc::PolynomialFit fit = partcalc::polynomiality_check(
                values, fit_degree, "stat=" + fit_stat + " mu=(" + mu.to_string() + ") degree<=" +
                                        std::to_string(fit_degree));
            if (out.format == "json") {
                std::cout << fit.report.to_json() << "\n";
            } else if (out.format == "tsv") {
                std::cout << VerificationReport::tsv_header() << "\n"
                          << fit.report.to_tsv() << "\n";
            } else if (fit.report.pass) {
                std::cout << fit.polynomial->to_string("n") << "\n";
            } else {
                std::cout << "FAIL " << fit.report.params << "\n     counterexample: "
                          << fit.report.counterexample << "\n";
            }
            return fit.report.pass ? 0 : 1;
        }

        if (*enum_cmd) {
            Partition mu = Partition::parse(enum_mu);
            if (mu.size() + enum_n > enum_cap)
                throw std::invalid_argument("enumerate: |μ|+n exceeds cap " +
                                            std::to_string(enum_cap));
            for (const Partition& lam : partcalc::enumerate_extensions(mu, enum_n)) {
                if (out.format == "json")
                    std::cout << nlohmann::json{{"partition", lam.to_string()}}.dump() << "\n";
                else
                    std::cout << lam.to_string() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
