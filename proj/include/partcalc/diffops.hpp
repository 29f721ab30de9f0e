#pragma once

#include "partcalc/partition.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/tableaux.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partcalc {

// A named pure function Partition → Rational.  Values are memoized per
// function object (copies share the cache), which collapses the fan-out when
// difference operators are iterated.
class PartitionFunction {
public:
    using Evaluator = std::function<Rational(const Partition&)>;

    PartitionFunction() = default;

    PartitionFunction(std::string name, Evaluator eval)
        : name_(std::move(name)), eval_(std::move(eval)), cache_(std::make_shared<Cache>()) {}

    const std::string& name() const { return name_; }

    Rational operator()(const Partition& p) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->values.find(p);
            if (it != cache_->values.end()) return it->second;
        }
        Rational v = eval_(p);
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->values.emplace(p, std::move(v)).first->second;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<Partition, Rational> values;
    };

    std::string name_;
    Evaluator eval_;
    std::shared_ptr<Cache> cache_;
};

// Dg(λ) = Σ_{λ⁺} g(λ⁺) − g(λ), summing over all one-box additions.
inline PartitionFunction apply_D(const PartitionFunction& g) {
    return PartitionFunction("D(" + g.name() + ")", [g](const Partition& p) {
        Rational acc = -g(p);
        for (const AddMove& mv : add_moves(p)) acc += g(mv.result);
        return acc;
    });
}

// D⁻g(λ) = |λ|·g(λ) − Σ_{λ⁻} g(λ⁻), summing over all one-box removals.
inline PartitionFunction apply_Dminus(const PartitionFunction& g) {
    return PartitionFunction("D-(" + g.name() + ")", [g](const Partition& p) {
        Rational acc = Rational(p.size()) * g(p);
        for (const Partition& smaller : remove_moves(p)) acc -= g(smaller);
        return acc;
    });
}

// D^k g by k-fold composition; evaluation at λ touches partitions up to
// size |λ| + k, so k is capped.
inline PartitionFunction apply_Dk(const PartitionFunction& g, long long k, long long cap = 12) {
    if (k < 0) throw std::invalid_argument("apply_Dk: k must be >= 0");
    if (k > cap)
        throw std::invalid_argument("apply_Dk: k = " + std::to_string(k) + " exceeds cap " +
                                    std::to_string(cap));
    PartitionFunction out = g;
    for (long long i = 0; i < k; ++i) out = apply_D(out);
    return out;
}

// D^n g(μ) as the alternating binomial transform of skew-tableau-weighted
// sums: Σ_{k=0..n} (−1)^{n+k} C(n,k) Σ_{|λ/μ|=k} f_{λ/μ} g(λ).
inline Rational Dk_via_inversion(const PartitionFunction& g, const Partition& mu, long long n) {
    if (n < 0) throw std::invalid_argument("Dk_via_inversion: n must be >= 0");
    Rational acc = 0;
    for (long long k = 0; k <= n; ++k) {
        Rational inner = 0;
        for (const Partition& lam : enumerate_extensions(mu, k))
            inner += Rational(skew_syt_count(lam, mu)) * g(lam);
        Rational term = Rational(binomial(n, k)) * inner;
        if ((n + k) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Σ_{|λ/μ|=n} f_{λ/μ} g(λ), by direct enumeration.
inline Rational skew_weighted_sum(const PartitionFunction& g, const Partition& mu, long long n,
                                  long long size_cap = 40) {
    if (n < 0) throw std::invalid_argument("skew_weighted_sum: n must be >= 0");
    if (mu.size() + n > size_cap)
        throw std::invalid_argument("skew_weighted_sum: |μ|+n exceeds cap " +
                                    std::to_string(size_cap));
    Rational acc = 0;
    for (const Partition& lam : enumerate_extensions(mu, n))
        acc += Rational(skew_syt_count(lam, mu)) * g(lam);
    return acc;
}

// The same sum through the binomial transform: Σ_{k=0..n} C(n,k) D^k g(μ).
inline Rational skew_sum_via_binomial(const PartitionFunction& g, const Partition& mu,
                                      long long n, long long cap = 12) {
    if (n < 0) throw std::invalid_argument("skew_sum_via_binomial: n must be >= 0");
    if (n > cap)
        throw std::invalid_argument("skew_sum_via_binomial: n = " + std::to_string(n) +
                                    " exceeds operator depth cap " + std::to_string(cap));
    Rational acc = 0;
    PartitionFunction dk = g;
    for (long long k = 0; k <= n; ++k) {
        acc += Rational(binomial(n, k)) * dk(mu);
        if (k < n) dk = apply_D(dk);  // build D^{k+1} incrementally
    }
    return acc;
}

// A(k) = Σ_{|λ/μ|=k} f_{λ/μ} g(λ) and B(k) = same sum of Dg; the lists
// satisfy A(k+1) = A(k) + B(k).  first_violation reports the smallest k
// where that fails (it never should; the caller treats it as data).
struct TelescopeResult {
    std::vector<Rational> A;  // indices 0..n
    std::vector<Rational> B;  // indices 0..n-1
    std::optional<long long> first_violation;
};

inline TelescopeResult telescope(const PartitionFunction& g, const Partition& mu, long long n,
                                 long long size_cap = 40) {
    if (n < 0) throw std::invalid_argument("telescope: n must be >= 0");
    TelescopeResult out;
    PartitionFunction dg = apply_D(g);
    for (long long k = 0; k <= n; ++k) {
        out.A.push_back(skew_weighted_sum(g, mu, k, size_cap));
        if (k < n) out.B.push_back(skew_weighted_sum(dg, mu, k, size_cap));
    }
    for (long long k = 0; k + 1 <= n; ++k) {
        if (out.A[static_cast<std::size_t>(k + 1)] !=
            out.A[static_cast<std::size_t>(k)] + out.B[static_cast<std::size_t>(k)]) {
            out.first_violation = k;
            break;
        }
    }
    return out;
}

}  // namespace partcalc
