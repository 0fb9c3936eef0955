#ifndef ZPAT_POLY_HPP
#define ZPAT_POLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace zpat {

/// Packed exponent vector: 8 bits per variable, x_1 in the most significant byte.
/// Numeric order of keys is lexicographic order of exponent vectors.
using MonoKey = std::uint64_t;

inline constexpr int max_vars = 8;
inline constexpr int max_exponent = 255;

constexpr int key_shift(int v) { return 8 * (max_vars - v); } // v is 1-based

constexpr int exponent(MonoKey k, int v) { return static_cast<int>((k >> key_shift(v)) & 0xffu); }

constexpr MonoKey var_key(int v) { return MonoKey{1} << key_shift(v); }

inline int total_degree(MonoKey k)
{
    int d = 0;
    for (int v = 1; v <= max_vars; ++v) d += exponent(k, v);
    return d;
}

inline MonoKey make_key(const std::vector<int> &e)
{
    if (e.size() > static_cast<std::size_t>(max_vars)) throw unsupported_input("at most 8 variables");
    MonoKey k = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] < 0 || e[v] > max_exponent) throw unsupported_input("exponent out of range");
        k |= MonoKey(e[v]) << key_shift(static_cast<int>(v) + 1);
    }
    return k;
}

inline std::vector<int> unpack(MonoKey k, int n)
{
    std::vector<int> e(n);
    for (int v = 1; v <= n; ++v) e[v - 1] = exponent(k, v);
    return e;
}

inline void check_exponent_sum(MonoKey a, MonoKey b)
{
    for (int v = 1; v <= max_vars; ++v)
        if (exponent(a, v) + exponent(b, v) > max_exponent) throw unsupported_input("exponent overflow");
}

/// Polynomial in x_1..x_n with big-integer coefficients.
///
/// Terms are kept sorted by key (ascending) with no zero coefficients.
class Poly {
public:
    using Term = std::pair<MonoKey, BigInt>;

    Poly() = default;

    explicit Poly(int n) : n_(n) { check_n(n); }

    static Poly constant(int n, BigInt c)
    {
        Poly p(n);
        if (c != 0) p.terms_.emplace_back(0, std::move(c));
        return p;
    }

    static Poly monomial(int n, const std::vector<int> &e, BigInt c = 1)
    {
        if (static_cast<int>(e.size()) != n) throw dimension_mismatch("exponent vector length differs from n");
        Poly p(n);
        if (c != 0) p.terms_.emplace_back(make_key(e), std::move(c));
        return p;
    }

    static Poly variable(int n, int v)
    {
        if (v < 1 || v > n) throw position_out_of_range("variable index out of range");
        Poly p(n);
        p.terms_.emplace_back(var_key(v), 1);
        return p;
    }

    /// Builds from unsorted terms; merges duplicates and drops zeros.
    static Poly from_terms(int n, std::vector<Term> ts)
    {
        Poly p(n);
        std::sort(ts.begin(), ts.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
        for (auto &t : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
        }
        p.drop_zeros();
        return p;
    }

    int nvars() const noexcept { return n_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coeff(MonoKey k) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term &t, MonoKey key) { return t.first < key; });
        return (it != terms_.end() && it->first == k) ? it->second : BigInt(0);
    }

    BigInt coeff(const std::vector<int> &e) const { return coeff(make_key(e)); }

    /// -1 for the zero polynomial.
    int degree() const
    {
        int d = -1;
        for (const auto &t : terms_) d = std::max(d, total_degree(t.first));
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty()) return true;
        const int d = total_degree(terms_.front().first);
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term &t) { return total_degree(t.first) == d; });
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto &t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator+(const Poly &a, const Poly &b) { return merge(a, b, 1); }
    friend Poly operator-(const Poly &a, const Poly &b) { return merge(a, b, -1); }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        same_n(a, b);
        std::unordered_map<MonoKey, BigInt> acc;
        acc.reserve(a.size() * b.size());
        for (const auto &[ka, ca] : a.terms_)
            for (const auto &[kb, cb] : b.terms_) {
                check_exponent_sum(ka, kb);
                acc[ka + kb] += ca * cb;
            }
        std::vector<Term> ts(acc.begin(), acc.end());
        return from_terms(a.n_, std::move(ts));
    }

    friend Poly operator*(const BigInt &c, const Poly &a)
    {
        if (c == 0) return Poly(a.n_);
        Poly r = a;
        for (auto &t : r.terms_) t.second *= c;
        return r;
    }

    Poly &operator+=(const Poly &b) { return *this = *this + b; }
    Poly &operator-=(const Poly &b) { return *this = *this - b; }
    Poly &operator*=(const Poly &b) { return *this = *this * b; }

    /// Multiplies by (x_i - x_j) by merging two shifted copies.
    Poly times_difference(int i, int j) const
    {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw position_out_of_range("variable index out of range");
        const MonoKey di = var_key(i), dj = var_key(j);
        for (const auto &t : terms_)
            if (exponent(t.first, i) == max_exponent || exponent(t.first, j) == max_exponent)
                throw unsupported_input("exponent overflow");
        Poly r(n_);
        r.terms_.reserve(2 * terms_.size());
        auto a = terms_.begin(), b = terms_.begin();
        const auto e = terms_.end();
        while (a != e || b != e) {
            if (b == e || (a != e && a->first + di < b->first + dj)) {
                r.terms_.emplace_back(a->first + di, a->second);
                ++a;
            } else if (a == e || b->first + dj < a->first + di) {
                r.terms_.emplace_back(b->first + dj, -b->second);
                ++b;
            } else {
                BigInt c = a->second - b->second;
                if (c != 0) r.terms_.emplace_back(a->first + di, std::move(c));
                ++a;
                ++b;
            }
        }
        return r;
    }

    /// Renames x_v to x_{s(v)}; s holds 1-based images of 1..n.
    Poly permute_vars(const std::vector<int> &s) const
    {
        if (static_cast<int>(s.size()) != n_) throw dimension_mismatch("permutation degree differs from n");
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto &[k, c] : terms_) {
            MonoKey nk = 0;
            for (int v = 1; v <= n_; ++v) nk |= MonoKey(exponent(k, v)) << key_shift(s[v - 1]);
            ts.emplace_back(nk, c);
        }
        return from_terms(n_, std::move(ts));
    }

    friend bool operator==(const Poly &a, const Poly &b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    static void check_n(int n)
    {
        if (n < 0 || n > max_vars) throw unsupported_input("polynomials support at most 8 variables");
    }

    static void same_n(const Poly &a, const Poly &b)
    {
        if (a.n_ != b.n_) throw dimension_mismatch("polynomials in different numbers of variables");
    }

    static Poly merge(const Poly &a, const Poly &b, int sign)
    {
        same_n(a, b);
        Poly r(a.n_);
        r.terms_.reserve(a.size() + b.size());
        auto x = a.terms_.begin(), y = b.terms_.begin();
        while (x != a.terms_.end() || y != b.terms_.end()) {
            if (y == b.terms_.end() || (x != a.terms_.end() && x->first < y->first)) {
                r.terms_.push_back(*x++);
            } else if (x == a.terms_.end() || y->first < x->first) {
                r.terms_.emplace_back(y->first, sign > 0 ? y->second : BigInt(-y->second));
                ++y;
            } else {
                BigInt c = sign > 0 ? x->second + y->second : x->second - y->second;
                if (c != 0) r.terms_.emplace_back(x->first, std::move(c));
                ++x;
                ++y;
            }
        }
        return r;
    }

    void drop_zeros()
    {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term &t) { return t.second == 0; }),
                     terms_.end());
    }

    int n_ = 0;
    std::vector<Term> terms_;
};

/// Graded lexicographic: higher total degree first, then lex with x_1 > x_2 > ...
inline std::string to_string(const Poly &p)
{
    if (p.is_zero()) return "0";
    std::vector<Poly::Term> ts = p.terms();
    std::stable_sort(ts.begin(), ts.end(), [](const Poly::Term &a, const Poly::Term &b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : ts) {
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (int v = 1; v <= p.nvars(); ++v) {
            const int e = exponent(k, v);
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            os << mag;
        else if (mag == 1)
            os << mono;
        else
            os << mag << '*' << mono;
    }
    return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << to_string(p); }

} // namespace zpat

#endif // ZPAT_POLY_HPP
