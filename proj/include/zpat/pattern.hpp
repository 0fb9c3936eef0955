#ifndef ZPAT_PATTERN_HPP
#define ZPAT_PATTERN_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace zpat {

/// A matrix position (i, j), 1-based.
struct Position {
    int i = 1;
    int j = 1;

    constexpr bool is_diagonal() const noexcept { return i == j; }
    constexpr Position transposed() const noexcept { return {j, i}; }

    friend constexpr auto operator<=>(const Position &, const Position &) = default;
};

/// Largest ambient size for which a pattern fits a 64-bit occupancy mask.
inline constexpr int max_mask_n = 8;

/// A finite set of positions, stored sorted and without duplicates.
///
/// The ambient size n is never stored: the same strict pattern is meaningful
/// in every M(m) with m >= n, so operations that need n take it explicitly.
class Pattern {
public:
    Pattern() = default;

    Pattern(std::initializer_list<Position> ps) : pos_(ps) { normalize(); }

    explicit Pattern(std::vector<Position> ps) : pos_(std::move(ps)) { normalize(); }

    /// Decodes an occupancy mask; bit (i-1)*n + (j-1) encodes position (i, j).
    static Pattern from_mask(std::uint64_t mask, int n)
    {
        check_mask_n(n);
        std::vector<Position> ps;
        while (mask) {
            const int b = std::countr_zero(mask);
            mask &= mask - 1;
            ps.push_back({b / n + 1, b % n + 1});
        }
        Pattern r;
        r.pos_ = std::move(ps); // already sorted by (i, j)
        return r;
    }

    std::uint64_t mask(int n) const
    {
        check_mask_n(n);
        std::uint64_t m = 0;
        for (const auto &p : pos_) {
            if (p.i < 1 || p.j < 1 || p.i > n || p.j > n)
                throw position_out_of_range("position outside Z_" + std::to_string(n) + " x Z_" + std::to_string(n));
            m |= std::uint64_t{1} << ((p.i - 1) * n + (p.j - 1));
        }
        return m;
    }

    std::size_t size() const noexcept { return pos_.size(); }
    bool empty() const noexcept { return pos_.empty(); }
    auto begin() const noexcept { return pos_.begin(); }
    auto end() const noexcept { return pos_.end(); }
    const std::vector<Position> &positions() const noexcept { return pos_; }

    bool contains(Position p) const { return std::binary_search(pos_.begin(), pos_.end(), p); }

    /// Largest row or column index used, 0 for the empty pattern.
    int max_index() const noexcept
    {
        int m = 0;
        for (const auto &p : pos_) m = std::max({m, p.i, p.j});
        return m;
    }

    bool fits(int n) const noexcept
    {
        return std::all_of(pos_.begin(), pos_.end(),
                           [n](const Position &p) { return p.i >= 1 && p.j >= 1 && p.i <= n && p.j <= n; });
    }

    friend bool operator==(const Pattern &, const Pattern &) = default;
    friend auto operator<=>(const Pattern &a, const Pattern &b) { return a.pos_ <=> b.pos_; }

private:
    static void check_mask_n(int n)
    {
        if (n < 1 || n > max_mask_n) throw unsupported_input("occupancy masks support 1 <= n <= 8");
    }

    void normalize()
    {
        for (const auto &p : pos_)
            if (p.i < 1 || p.j < 1) throw position_out_of_range("positions are 1-based");
        std::sort(pos_.begin(), pos_.end());
        pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
    }

    std::vector<Position> pos_;
};

inline std::string to_string(const Pattern &I)
{
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto &p : I) {
        if (!first) os << ',';
        first = false;
        os << '[' << p.i << ',' << p.j << ']';
    }
    os << ']';
    return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const Pattern &I) { return os << to_string(I); }

/// A permutation of {1..n}, stored as its sequence of images.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images))
    {
        std::vector<char> seen(img_.size() + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw invalid_parameters("not a permutation of 1..n");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// Product of the disjoint-or-not transpositions, applied right to left.
    static Permutation from_transpositions(int n, const std::vector<std::pair<int, int>> &ts)
    {
        Permutation r = identity(n);
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
            std::vector<int> t(n);
            std::iota(t.begin(), t.end(), 1);
            std::swap(t[it->first - 1], t[it->second - 1]);
            r = Permutation(std::move(t)) * r;
        }
        return r;
    }

    int size() const noexcept { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_.at(k - 1); }
    const std::vector<int> &images() const noexcept { return img_; }

    int sign() const
    {
        std::vector<char> seen(img_.size(), 0);
        int s = 1;
        for (std::size_t k = 0; k < img_.size(); ++k) {
            if (seen[k]) continue;
            std::size_t len = 0;
            for (std::size_t c = k; !seen[c]; c = img_[c] - 1) {
                seen[c] = 1;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    Permutation inverse() const
    {
        std::vector<int> v(img_.size());
        for (std::size_t k = 0; k < img_.size(); ++k) v[img_[k] - 1] = static_cast<int>(k) + 1;
        return Permutation(std::move(v));
    }

    /// Composition: (a * b)(k) = a(b(k)).
    friend Permutation operator*(const Permutation &a, const Permutation &b)
    {
        if (a.size() != b.size()) throw dimension_mismatch("composing permutations of different degree");
        std::vector<int> v(b.img_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.img_[b.img_[k] - 1];
        return Permutation(std::move(v));
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> img_;
};

/// All n! permutations of {1..n} in lexicographic order.
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Predicates and actions

inline Pattern transpose(const Pattern &I)
{
    std::vector<Position> ps;
    ps.reserve(I.size());
    for (const auto &p : I) ps.push_back(p.transposed());
    return Pattern(std::move(ps));
}

inline bool is_symmetric(const Pattern &I) { return transpose(I) == I; }

inline bool is_strict(const Pattern &I)
{
    return std::none_of(I.begin(), I.end(), [](const Position &p) { return p.is_diagonal(); });
}

inline void require_fits(const Pattern &I, int n)
{
    if (!I.fits(n)) throw position_out_of_range("pattern " + to_string(I) + " does not fit in Z_" + std::to_string(n));
}

/// True iff at least one diagonal position (i, i), i <= n, is absent.
inline bool is_proper(const Pattern &I, int n)
{
    require_fits(I, n);
    for (int i = 1; i <= n; ++i)
        if (!I.contains({i, i})) return true;
    return false;
}

/// Simply laced: I and its transpose are disjoint.
inline bool is_simple(const Pattern &I)
{
    return std::none_of(I.begin(), I.end(), [&](const Position &p) { return I.contains(p.transposed()); });
}

/// Number of positions (i, j) in I with i <= j whose transpose is also in I.
inline int complexity(const Pattern &I)
{
    int c = 0;
    for (const auto &p : I)
        if (p.i <= p.j && I.contains(p.transposed())) ++c;
    return c;
}

inline Pattern apply_perm(const Permutation &s, const Pattern &I)
{
    std::vector<Position> ps;
    ps.reserve(I.size());
    for (const auto &p : I) {
        if (p.i > s.size() || p.j > s.size()) throw position_out_of_range("permutation degree smaller than pattern");
        ps.push_back({s(p.i), s(p.j)});
    }
    return Pattern(std::move(ps));
}

/// Replaces p by its transpose; requires p in I and p^T not in I.
inline Pattern flip(const Pattern &I, Position p)
{
    if (!I.contains(p) || I.contains(p.transposed()))
        throw flip_not_allowed("flip requires p in I and p^T not in I");
    std::vector<Position> ps;
    ps.reserve(I.size());
    for (const auto &q : I)
        if (q != p) ps.push_back(q);
    ps.push_back(p.transposed());
    return Pattern(std::move(ps));
}

inline Pattern translate(std::pair<int, int> offset, const Pattern &I)
{
    std::vector<Position> ps;
    ps.reserve(I.size());
    for (const auto &p : I) ps.push_back({p.i + offset.first, p.j + offset.second});
    return Pattern(std::move(ps));
}

inline Pattern set_union(const Pattern &a, const Pattern &b)
{
    std::vector<Position> ps(a.begin(), a.end());
    ps.insert(ps.end(), b.begin(), b.end());
    return Pattern(std::move(ps));
}

inline Pattern set_difference(const Pattern &a, const Pattern &b)
{
    std::vector<Position> ps;
    for (const auto &p : a)
        if (!b.contains(p)) ps.push_back(p);
    return Pattern(std::move(ps));
}

/// I' = I u ((n,n)+J) u ((0,n) + Z_n x Z_{m-n}).
inline Pattern block_extend(const Pattern &I, const Pattern &J, int n, int m)
{
    if (m <= n || n < 1) throw dimension_mismatch("block_extend needs m > n >= 1");
    if (!I.fits(n)) throw dimension_mismatch("I must lie in Z_n x Z_n");
    if (!J.fits(m - n)) throw dimension_mismatch("J must lie in Z_{m-n} x Z_{m-n}");
    std::vector<Position> ps(I.begin(), I.end());
    for (const auto &p : J) ps.push_back({p.i + n, p.j + n});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m - n; ++j) ps.push_back({i, n + j});
    return Pattern(std::move(ps));
}

} // namespace zpat

#endif // ZPAT_PATTERN_HPP
