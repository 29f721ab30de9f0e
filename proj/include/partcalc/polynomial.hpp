#pragma once

#include "partcalc/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace partcalc {

// Dense univariate polynomial with exact rational coefficients.
// Coefficients are stored ascending by degree with no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { coef_.push_back(c); trim(); }  // NOLINT: implicit by design
    Polynomial(const Integer& c) : Polynomial(Rational(c)) {}
    Polynomial(long long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coef) : coef_(std::move(coef)) { trim(); }

    // The monomial x.
    static Polynomial variable() { return Polynomial(std::vector<Rational>{0, 1}); }

    long long degree() const { return static_cast<long long>(coef_.size()) - 1; }

    Rational coeff(long long k) const {
        if (k < 0 || k >= static_cast<long long>(coef_.size())) return 0;
        return coef_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coefficients() const { return coef_; }

    bool is_zero() const { return coef_.empty(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] += b.coef_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] -= b.coef_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) { return Polynomial(0) - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> out(a.coef_.size() + b.coef_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                out[i + j] += a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        return Polynomial(c) * a;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return coef_ == o.coef_; }

    Rational evaluate(const Rational& x) const {
        Rational out = 0;  // Horner
        for (std::size_t i = coef_.size(); i-- > 0;) out = out * x + coef_[i];
        return out;
    }

    // p(x + a), expanded via Horner against the linear factor.
    Polynomial shift(const Rational& a) const {
        Polynomial lin(std::vector<Rational>{a, 1});
        Polynomial out;
        for (std::size_t i = coef_.size(); i-- > 0;) out = out * lin + Polynomial(coef_[i]);
        return out;
    }

    std::string to_string(const std::string& var = "z") const {
        if (coef_.empty()) return "0";
        std::string out;
        for (std::size_t i = coef_.size(); i-- > 0;) {
            const Rational& c = coef_[i];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            bool unit = (mag == 1) && i > 0;
            if (!unit) out += partcalc::to_string(mag);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }

    std::vector<Rational> coef_;
};

// binomial(z, k) = z(z-1)···(z-k+1)/k! as a polynomial in z; the Newton
// forward-difference basis.
inline Polynomial binomial_polynomial(long long k) {
    if (k < 0) throw std::invalid_argument("binomial_polynomial: k must be >= 0");
    Polynomial out(1);
    for (long long i = 0; i < k; ++i) out *= Polynomial(std::vector<Rational>{Rational(-i), 1});
    return make_rational(1, factorial(k)) * out;
}

}  // namespace partcalc
