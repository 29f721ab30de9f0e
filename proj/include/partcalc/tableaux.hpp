#pragma once

#include "partcalc/partition.hpp"
#include "partcalc/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partcalc {

namespace detail {

// Fraction-free (Bareiss) determinant of an integer matrix.  Every interior
// division is exact, so the result is the exact integer determinant.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace detail

// Number of standard Young tableaux of straight shape: |λ|! / H_λ.
inline Integer syt_count(const Partition& p) {
    Integer h = hook_product(p);
    Integer fact = factorial(p.size());
    Integer out = fact / h;
    if (out * h != fact)
        throw std::logic_error("syt_count: hook product does not divide |λ|! (hook bug)");
    return out;
}

// Number of standard Young tableaux of skew shape, by the Aitken
// determinant (|λ|−|μ|)! · det[ 1/((λ_i − μ_j − i + j)!) ] with 1/k! = 0
// for k < 0.  Row i is scaled by (λ_i + ℓ − i)! so the elimination runs over
// integers; the scale divides back out exactly.
inline Integer skew_syt_count(const SkewShape& shape) {
    static std::map<std::pair<Partition, Partition>, Integer> cache;
    static std::mutex cache_mutex;
    const std::size_t cache_capacity = 1 << 16;
    std::pair<Partition, Partition> key{shape.outer, shape.inner};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const long long ell = shape.outer.rows();
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(ell),
                                        std::vector<Integer>(static_cast<std::size_t>(ell)));
    Integer scale = 1;
    for (long long i = 1; i <= ell; ++i) {
        long long top = shape.outer.part(i) + ell - i;  // row scaled by top!
        scale *= factorial(top);
        for (long long j = 1; j <= ell; ++j) {
            long long e = shape.outer.part(i) - shape.inner.part(j) - i + j;
            Integer entry = 0;
            if (e >= 0) {
                entry = 1;  // top! / e! as a falling product
                for (long long v = e + 1; v <= top; ++v) entry *= v;
            }
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = entry;
        }
    }
    Integer det = detail::bareiss_determinant(std::move(m));
    Integer num = factorial(shape.size()) * det;
    Integer out = num / scale;
    if (out * scale != num || out < 0)
        throw std::logic_error("skew_syt_count: determinant did not yield a nonnegative integer");

    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.size() >= cache_capacity) cache.clear();
    cache.emplace(std::move(key), out);
    return out;
}

inline Integer skew_syt_count(const Partition& outer, const Partition& inner) {
    return skew_syt_count(SkewShape(outer, inner));
}

// Brute-force count of the same tableaux, walking removable corners down to
// the inner shape.  Each tableau corresponds to exactly one removal
// sequence, so this is a slow independent oracle.
inline Integer syt_enumerate(const SkewShape& shape, long long cap = 12) {
    if (shape.size() > cap)
        throw std::invalid_argument("syt_enumerate: skew size exceeds cap " + std::to_string(cap));
    auto rec = [&](auto&& self, const Partition& cur) -> Integer {
        if (cur == shape.inner) return 1;
        Integer total = 0;
        for (const Partition& smaller : remove_moves(cur))
            if (smaller.contains(shape.inner)) total += self(self, smaller);
        return total;
    };
    return rec(rec, shape.outer);
}

}  // namespace partcalc
