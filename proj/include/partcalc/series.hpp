#pragma once

#include "partcalc/polynomial.hpp"
#include "partcalc/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace partcalc {

// Formal power series truncated at a fixed order: all arithmetic is exact
// modulo z^(order+1).  Binary operations truncate to the smaller order.
class Series {
public:
    explicit Series(long long order) : coef_(check_order(order) + 1, Rational(0)) {}

    Series(long long order, std::vector<Rational> coef) : coef_(std::move(coef)) {
        coef_.resize(static_cast<std::size_t>(check_order(order)) + 1, Rational(0));
    }

    static Series from_polynomial(const Polynomial& p, long long order) {
        Series out(order);
        for (long long k = 0; k <= order; ++k) out.coef_[static_cast<std::size_t>(k)] = p.coeff(k);
        return out;
    }

    static Series constant(const Rational& c, long long order) {
        Series out(order);
        out.coef_[0] = c;
        return out;
    }

    long long order() const { return static_cast<long long>(coef_.size()) - 1; }

    Rational coeff(long long k) const {
        if (k < 0 || k > order()) return 0;
        return coef_[static_cast<std::size_t>(k)];
    }

    Series truncate(long long new_order) const {
        if (new_order > order()) throw std::invalid_argument("Series::truncate: order can only shrink");
        return Series(new_order, std::vector<Rational>(coef_.begin(), coef_.begin() + new_order + 1));
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (long long k = 0; k <= out.order(); ++k)
            out.coef_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (long long k = 0; k <= out.order(); ++k)
            out.coef_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return out;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (long long i = 0; i <= out.order(); ++i) {
            if (a.coeff(i) == 0) continue;
            for (long long j = 0; i + j <= out.order(); ++j)
                out.coef_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return out;
    }

    friend Series operator*(const Rational& c, const Series& a) {
        Series out = a;
        for (auto& v : out.coef_) v *= c;
        return out;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    bool operator==(const Series& o) const { return coef_ == o.coef_; }

    // Multiply by z^k, dropping coefficients pushed past the order.
    Series shift_up(long long k) const {
        Series out(order());
        for (long long j = k; j <= order(); ++j) out.coef_[static_cast<std::size_t>(j)] = coeff(j - k);
        return out;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const {
        if (coeff(0) == 0) throw std::domain_error("Series::inverse: zero constant term");
        Series out(order());
        out.coef_[0] = 1 / coeff(0);
        for (long long k = 1; k <= order(); ++k) {
            Rational acc = 0;
            for (long long j = 1; j <= k; ++j) acc += coeff(j) * out.coef_[static_cast<std::size_t>(k - j)];
            out.coef_[static_cast<std::size_t>(k)] = -acc / coeff(0);
        }
        return out;
    }

    // exp of a series with zero constant term, via e' = e * f'.
    Series exp() const {
        if (coeff(0) != 0) throw std::domain_error("Series::exp: nonzero constant term");
        Series out(order());
        out.coef_[0] = 1;
        for (long long k = 1; k <= order(); ++k) {
            Rational acc = 0;  // k*e_k = sum_{j=1..k} j*f_j*e_{k-j}
            for (long long j = 1; j <= k; ++j)
                acc += Rational(j) * coeff(j) * out.coef_[static_cast<std::size_t>(k - j)];
            out.coef_[static_cast<std::size_t>(k)] = acc / k;
        }
        return out;
    }

    // log of a series with constant term 1, via l' = f'/f.
    Series log() const {
        if (coeff(0) != 1) throw std::domain_error("Series::log: constant term must be 1");
        Series out(order());
        for (long long k = 1; k <= order(); ++k) {
            Rational acc = Rational(k) * coeff(k);  // k*f_k - sum_{j=1..k-1} j*l_j*f_{k-j}
            for (long long j = 1; j < k; ++j)
                acc -= Rational(j) * out.coef_[static_cast<std::size_t>(j)] * coeff(k - j);
            out.coef_[static_cast<std::size_t>(k)] = acc / k;
        }
        return out;
    }

    std::string to_string(const std::string& var = "z") const {
        std::string out = Polynomial(coef_).to_string(var);
        out += " + O(" + var + "^" + std::to_string(order() + 1) + ")";
        return out;
    }

private:
    static long long check_order(long long order) {
        if (order < 0) throw std::invalid_argument("Series: order must be >= 0");
        return order;
    }

    std::vector<Rational> coef_;
};

// Expansion of num/den to the requested order; den must have a nonzero
// constant term.
inline Series series_ratio(const Polynomial& num, const Polynomial& den, long long order) {
    if (den.coeff(0) == 0)
        throw std::domain_error("series_ratio: denominator has zero constant term");
    return Series::from_polynomial(num, order) * Series::from_polynomial(den, order).inverse();
}

}  // namespace partcalc
