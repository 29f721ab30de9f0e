#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Build a rational from a possibly negative denominator.  The underlying
// boost type insists on a positive denominator at construction time, so the
// sign is normalised here; reduction happens inside cpp_rational.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Integer factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::vector<Integer> table{1};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long long>(table.size()) <= n)
        table.push_back(table.back() * static_cast<long long>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

// (2r-1)!! = 1*3*5*...*(2r-1); r = 0 gives the empty product.
inline Integer odd_double_factorial(long long r) {
    if (r < 0) throw std::domain_error("odd_double_factorial: negative argument");
    Integer out = 1;
    for (long long j = 1; j <= 2 * r - 1; j += 2) out *= j;
    return out;
}

// Binomial coefficient with integer (possibly negative) top argument.
// For k < 0 the value is 0.  The running product of consecutive integers is
// divisible by i! at every step, so the incremental division is exact.
inline Integer binomial(const Integer& n, long long k) {
    if (k < 0) return 0;
    Integer out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

inline Integer binomial(long long n, long long k) { return binomial(Integer(n), k); }

inline Integer integer_pow(Integer base, unsigned long long e) {
    Integer out = 1;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline std::string to_string(const Integer& v) { return v.str(); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
// q > 0 and gcd(p, q) = 1.  This is what operator<< on cpp_rational already
// produces; the helper exists so formatting is named at call sites.
inline std::string to_string(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Parse "p" or "p/q" (optional leading '-', no whitespace inside).
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { throw std::invalid_argument("parse_rational: malformed value '" + s + "'"); };
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) bad();
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    Integer d(den);
    if (d == 0) bad();
    return make_rational(Integer(num), d);
}

}  // namespace partcalc
