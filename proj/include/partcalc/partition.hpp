#pragma once

#include "partcalc/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partcalc {

// Box coordinates: (row, column), 1-based, English notation (row 1 is the
// longest row).
struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box&) const = default;
};

// Integer partition: weakly decreasing positive parts.  The empty partition
// has no parts and size 0.  Ordering is lexicographic on the part lists,
// which makes Partition usable as an ordered map key.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    // Comma-separated decreasing positive integers; empty text is the empty
    // partition.  Input is not sorted silently: "2,3" is an error.
    static Partition parse(std::string_view text) {
        auto trim = [](std::string_view v) {
            while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
            while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
            return v;
        };
        text = trim(text);
        if (text.empty()) return Partition();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - pos));
            if (tok.empty() || tok.size() > 9 ||
                !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("Partition::parse: bad part '" + std::string(tok) + "'");
            int v = 0;
            for (char c : tok) v = v * 10 + (c - '0');
            parts.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }

    // 1-based part access; rows past the last part read as 0.
    int part(long long i) const {
        if (i < 1 || i > static_cast<long long>(parts_.size())) return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    int rows() const { return static_cast<int>(parts_.size()); }

    long long size() const {
        long long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool empty() const { return parts_.empty(); }

    // Diagram containment: inner_i <= this_i for every row.
    bool contains(const Partition& inner) const {
        if (inner.rows() > rows()) return false;
        for (int i = 0; i < inner.rows(); ++i)
            if (inner.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
        return Partition(std::move(conj));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// A pair of nested partitions; boxes of outer not in inner form the skew
// diagram outer/inner.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("SkewShape: inner diagram must fit inside outer");
    }

    long long size() const { return outer.size() - inner.size(); }
};

// Hook length of every box in row-major order: h = arm + leg + 1
// = lambda_i - j + lambda'_j - i + 1.
inline std::vector<std::pair<Box, int>> hook_lengths(const Partition& p) {
    std::vector<std::pair<Box, int>> out;
    Partition conj = p.conjugate();
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            out.push_back({Box{i, j}, p.part(i) - j + conj.part(j) - i + 1});
    return out;
}

// Product of all hook lengths; 1 for the empty partition.
inline Integer hook_product(const Partition& p) {
    Integer out = 1;
    for (const auto& [box, h] : hook_lengths(p)) out *= h;
    return out;
}

// Content of every box in row-major order: c = j - i.
inline std::vector<std::pair<Box, int>> contents(const Partition& p) {
    std::vector<std::pair<Box, int>> out;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j) out.push_back({Box{i, j}, j - i});
    return out;
}

// Contents of the cells where a box may be added (x, one more entry than y)
// and of the boxes that may be removed (y), both strictly increasing.  The
// two lists interlace: x_0 < y_1 < x_1 < ... < y_m < x_m.
struct CornerData {
    std::vector<long long> x;
    std::vector<long long> y;
};

inline CornerData corners(const Partition& p) {
    CornerData cd;
    int rows = p.rows();
    // Walk rows bottom-up so contents come out increasing.
    cd.x.push_back(-rows);  // new row (rows+1, 1)
    for (int i = rows; i >= 1; --i) {
        if (p.part(i) > p.part(i + 1))  // removable box (i, lambda_i)
            cd.y.push_back(static_cast<long long>(p.part(i)) - i);
        if (p.part(i) < p.part(i - 1) || i == 1)  // addable cell (i, lambda_i + 1)
            cd.x.push_back(static_cast<long long>(p.part(i)) + 1 - i);
    }
    return cd;
}

// One-box addition: `corner` is the index into corners(λ).x of the cell the
// new box fills.
struct AddMove {
    int corner;
    Partition result;
    bool operator==(const AddMove&) const = default;
};

// All one-box additions, listed top row first (corner index descending).
inline std::vector<AddMove> add_moves(const Partition& p) {
    CornerData cd = corners(p);
    std::vector<AddMove> out;
    for (int i = 1; i <= p.rows() + 1; ++i) {
        if (p.part(i) >= p.part(i - 1) && i != 1) continue;  // row not extendable
        std::vector<int> parts = p.parts();
        if (i <= p.rows())
            parts[static_cast<std::size_t>(i - 1)] += 1;
        else
            parts.push_back(1);
        long long content = static_cast<long long>(p.part(i)) + 1 - i;
        auto it = std::lower_bound(cd.x.begin(), cd.x.end(), content);
        out.push_back({static_cast<int>(it - cd.x.begin()), Partition(std::move(parts))});
    }
    return out;
}

// All one-box removals, listed top row first.
inline std::vector<Partition> remove_moves(const Partition& p) {
    std::vector<Partition> out;
    for (int i = 1; i <= p.rows(); ++i) {
        if (p.part(i) <= p.part(i + 1)) continue;
        std::vector<int> parts = p.parts();
        parts[static_cast<std::size_t>(i - 1)] -= 1;
        if (parts[static_cast<std::size_t>(i - 1)] == 0) parts.pop_back();
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

// All partitions of n in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(long long n, long long cap = 40) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (n > cap)
        throw std::invalid_argument("enumerate_partitions: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = static_cast<int>(std::min<long long>(max_part, rem)); v >= 1; --v) {
            cur.push_back(v);
            self(self, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n > 0 ? static_cast<int>(n) : 1);
    return out;
}

// All λ ⊇ μ with |λ/μ| = n, descending lexicographic.  Prefixes are pruned
// as soon as a part would drop below μ or the boxes left cannot cover the
// rest of μ.
inline std::vector<Partition> enumerate_extensions(const Partition& mu, long long n) {
    if (n < 0) throw std::invalid_argument("enumerate_extensions: n must be >= 0");
    // mu_suffix[i] = boxes of mu in rows > i
    std::vector<long long> mu_suffix(static_cast<std::size_t>(mu.rows()) + 2, 0);
    for (int i = mu.rows(); i >= 1; --i)
        mu_suffix[static_cast<std::size_t>(i)] = mu_suffix[static_cast<std::size_t>(i) + 1] + mu.part(i);
    auto suffix = [&](long long i) {
        if (i > mu.rows()) return 0LL;
        return mu_suffix[static_cast<std::size_t>(i)];
    };

    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, long long rem, long long prev) -> void {
        if (rem == 0 && mu.part(row) == 0) {
            out.push_back(Partition(cur));
            return;
        }
        long long hi = std::min<long long>(prev, rem - suffix(row + 1));
        long long lo = std::max(mu.part(row), 1);
        for (long long v = hi; v >= lo; --v) {
            cur.push_back(static_cast<int>(v));
            self(self, row + 1, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, mu.size() + n, mu.size() + n);
    return out;
}

// H(λ with a box added at inner corner k) / H(λ), straight from corner
// contents: prod_{i≠k}(x_k - x_i) / prod_j(x_k - y_j).
inline Rational hook_ratio_add(const Partition& p, int k) {
    CornerData cd = corners(p);
    if (k < 0 || k >= static_cast<int>(cd.x.size()))
        throw std::invalid_argument("hook_ratio_add: corner index out of range");
    Integer num = 1, den = 1;
    long long xk = cd.x[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < cd.x.size(); ++i)
        if (static_cast<int>(i) != k) num *= xk - cd.x[i];
    for (long long yj : cd.y) den *= xk - yj;
    return make_rational(num, den);
}

// H(λ) / H(λ with a box removed from row i), as the closed quotient
// prod_{j=1..n}(i - λ_i + 1 + λ_j - j) / prod_{j=1..n-1}(i - λ_i + ν_j - j)
// with n = |λ| and ν the smaller partition, parts padded with zeros.
inline Rational hook_ratio_remove(const Partition& p, int i) {
    if (p.part(i) <= p.part(i + 1) || p.part(i) == 0)
        throw std::invalid_argument("hook_ratio_remove: row is not removable");
    std::vector<int> parts = p.parts();
    parts[static_cast<std::size_t>(i - 1)] -= 1;
    if (parts[static_cast<std::size_t>(i - 1)] == 0) parts.pop_back();
    Partition smaller(std::move(parts));

    long long n = p.size();
    long long base = i - p.part(i);
    Integer num = 1, den = 1;
    for (long long j = 1; j <= n; ++j) num *= base + 1 + p.part(j) - j;
    for (long long j = 1; j <= n - 1; ++j) den *= base + smaller.part(j) - j;
    return make_rational(num, den);
}

}  // namespace partcalc
