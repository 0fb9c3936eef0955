#ifndef ZPAT_FAMILIES_HPP
#define ZPAT_FAMILIES_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pattern.hpp"

namespace zpat::family {

inline void require_n(int n, int lo, const char *name)
{
    if (n < lo) throw invalid_parameters(std::string(name) + ": n must be >= " + std::to_string(lo));
}

inline Pattern diagonal(int n)
{
    require_n(n, 1, "delta");
    std::vector<Position> ps;
    for (int i = 1; i <= n; ++i) ps.push_back({i, i});
    return Pattern(std::move(ps));
}

template <typename Pred>
Pattern triangular(int n, Pred keep)
{
    std::vector<Position> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (keep(i, j)) ps.push_back({i, j});
    return Pattern(std::move(ps));
}

inline Pattern ne(int n) { require_n(n, 1, "ne"); return triangular(n, [](int i, int j) { return i < j; }); }
inline Pattern sw(int n) { require_n(n, 1, "sw"); return triangular(n, [](int i, int j) { return i > j; }); }
inline Pattern nw(int n) { require_n(n, 1, "nw"); return triangular(n, [n](int i, int j) { return i + j < n + 1; }); }
inline Pattern se(int n) { require_n(n, 1, "se"); return triangular(n, [n](int i, int j) { return i + j > n + 1; }); }

/// Off-diagonal positions with i + j <= n + 1, minus (2i-1, n-2i+1) and its
/// transpose for 1 <= i <= m (n = 4m + r), minus (2m+2, 2m+1) when r is 2 or 3.
inline Pattern lambda(int n)
{
    require_n(n, 1, "lambda");
    const int m = n / 4, r = n % 4;
    std::set<Position> omit;
    for (int i = 1; i <= m; ++i) {
        omit.insert({2 * i - 1, n - 2 * i + 1});
        omit.insert({n - 2 * i + 1, 2 * i - 1});
    }
    if (r == 2 || r == 3) omit.insert({2 * m + 2, 2 * m + 1});
    return triangular(n, [&](int i, int j) { return i != j && i + j <= n + 1 && !omit.count({i, j}); });
}

/// J'_n = {(1,2),(1,n-1),(2,n)} u {1,2} x {3..n-2}, n >= 4.
inline Pattern j_half(int n)
{
    require_n(n, 4, "j_half");
    std::vector<Position> ps{{1, 2}, {1, n - 1}, {2, n}};
    for (int r = 1; r <= 2; ++r)
        for (int c = 3; c <= n - 2; ++c) ps.push_back({r, c});
    return Pattern(std::move(ps));
}

/// J_n = J'_n u (J'_n)^T.
inline Pattern j_block(int n)
{
    const Pattern h = j_half(n);
    return set_union(h, transpose(h));
}

/// Lambda'_n = J_n u ((2,2) + Lambda'_{n-4}) with the four small base cases.
inline Pattern lambda_prime(int n)
{
    if (n < 0) throw invalid_parameters("lambda_prime: n must be >= 0");
    switch (n) {
    case 0:
    case 1: return {};
    case 2: return {{1, 2}};
    case 3: return {{2, 1}, {2, 3}, {3, 2}};
    default: return set_union(j_block(n), translate({2, 2}, lambda_prime(n - 4)));
    }
}

/// prod_{k=1}^{s} (2k-1, 2k) with s = [(n+1)/4]; maps Lambda'_n onto Lambda_n.
inline Permutation lambda_sigma(int n)
{
    const int s = (n + 1) / 4;
    std::vector<std::pair<int, int>> ts;
    for (int k = 1; k <= s; ++k) ts.emplace_back(2 * k - 1, 2 * k);
    return Permutation::from_transpositions(n, ts);
}

inline Pattern pi(int n)
{
    require_n(n, 1, "pi");
    return triangular(n, [n](int i, int j) { return (i + j <= n && i != j) || (j == n - i + 1 && 2 * i <= n); });
}

/// Parameters (sigma, i) of the family J(sigma, i).
struct JParams {
    Permutation sigma;
    std::vector<int> seq; ///< i_1, ..., i_{n-1}
};

inline void validate(const JParams &p)
{
    const int n = p.sigma.size();
    if (n < 1) throw invalid_parameters("jfam: empty permutation");
    if (static_cast<int>(p.seq.size()) != n - 1)
        throw invalid_parameters("jfam: i must have n-1 entries");
    std::set<int> seen;
    for (int k = 1; k <= n - 1; ++k) {
        const int v = p.seq[k - 1];
        if (v == 0) throw invalid_parameters("jfam: entries of i are nonzero");
        if (!seen.insert(v).second) throw invalid_parameters("jfam: entries of i must be distinct");
        bool ok = false;
        for (int q = 1; q <= k; ++q) ok = ok || p.sigma(q) == std::abs(v);
        if (!ok) throw invalid_parameters("jfam: |i_k| must lie in sigma(Z_k)");
    }
}

/// J(sigma, i) = {(i_k, sigma(j))^+ : 1 <= k < j <= n}.
inline Pattern jfam(const JParams &p)
{
    validate(p);
    const int n = p.sigma.size();
    std::vector<Position> ps;
    for (int k = 1; k <= n - 1; ++k) {
        const int v = p.seq[k - 1];
        for (int j = k + 1; j <= n; ++j)
            ps.push_back(v > 0 ? Position{v, p.sigma(j)} : Position{p.sigma(j), -v});
    }
    return Pattern(std::move(ps));
}

/// sigma = 1, n, 2, n-1, ... and i = (1, -1, 2, -2, ...), for which J(sigma, i) = Pi_n.
inline JParams pi_params(int n)
{
    require_n(n, 1, "pi_params");
    std::vector<int> s(n), seq;
    for (int k = 1; k <= n; ++k) s[k - 1] = (k % 2 == 1) ? (k + 1) / 2 : n + 1 - k / 2;
    for (int k = 1; k <= n - 1; ++k) seq.push_back((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
    return {Permutation(std::move(s)), std::move(seq)};
}

/// J_{k,n} = ((0,1) + NE_{n-1}) u ({n} x Z_k) u {(i,1) : k < i < n}.
inline Pattern hess(int k, int n)
{
    require_n(n, 2, "hess");
    if (k < 1 || k > n - 1) throw invalid_parameters("hess: k must lie in Z_{n-1}");
    std::vector<Position> ps;
    for (const auto &p : ne(n - 1)) ps.push_back({p.i, p.j + 1});
    for (int c = 1; c <= k; ++c) ps.push_back({n, c});
    for (int i = k + 1; i < n; ++i) ps.push_back({i, 1});
    return Pattern(std::move(ps));
}

/// sigma = identity, i = (-1, 1, 2, ..., n-2).
inline JParams example_params(int n)
{
    require_n(n, 2, "example_params");
    std::vector<int> seq{-1};
    for (int k = 2; k <= n - 1; ++k) seq.push_back(k - 1);
    return {Permutation::identity(n), std::move(seq)};
}

inline Pattern cyclic3() { return {{1, 3}, {2, 1}, {3, 2}}; }

/// Representatives of the seven exceptional classes of P'_4, rows 1..7.
inline Pattern table2(int row)
{
    switch (row) {
    case 1: return {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
    case 2: return {{1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 4}, {3, 2}};
    case 3: return {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 4}, {4, 3}};
    case 4: return {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 4}, {4, 3}};
    case 5: return {{1, 2}, {2, 1}, {1, 3}, {2, 3}, {4, 1}, {4, 2}};
    case 6: return {{1, 2}, {2, 1}, {1, 4}, {2, 3}, {3, 1}, {4, 2}};
    case 7: return {{1, 2}, {2, 1}, {1, 4}, {3, 1}, {3, 4}, {4, 3}};
    default: throw invalid_parameters("table2 rows are numbered 1..7");
    }
}

/// (NE_n \ {(1,2)}) u {(3,1)}: complexity one, nonsingular branch.
inline Pattern complexity_one_a(int n)
{
    require_n(n, 3, "complexity_one_a");
    return set_union(set_difference(ne(n), {{1, 2}}), {{3, 1}});
}

/// (NE_n \ {(1,2)}) u {(4,3)}: complexity one, singular branch.
inline Pattern complexity_one_b(int n)
{
    require_n(n, 4, "complexity_one_b");
    return set_union(set_difference(ne(n), {{1, 2}}), {{4, 3}});
}

/// Uniform random member of P'_n: a mu_n-subset of the off-diagonal cells.
template <typename Rng>
Pattern random_strict(int n, Rng &rng)
{
    require_n(n, 1, "random_strict");
    std::vector<Position> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) cells.push_back({i, j});
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(static_cast<std::size_t>(n * (n - 1) / 2));
    return Pattern(std::move(cells));
}

/// Uniformly chooses a valid i for the given sigma, entry by entry.
template <typename Rng>
JParams random_jparams(int n, Rng &rng)
{
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    std::vector<int> seq;
    std::set<int> used;
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> cand;
        for (int q = 0; q < k; ++q)
            for (int sgn : {1, -1})
                if (!used.count(sgn * s[q])) cand.push_back(sgn * s[q]);
        std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
        const int v = cand[pick(rng)];
        used.insert(v);
        seq.push_back(v);
    }
    return {Permutation(std::move(s)), std::move(seq)};
}

/// Calls f(JParams) for every valid (sigma, i); there are (n!)^2 of them.
template <typename F>
void for_each_jparams(int n, F &&f)
{
    for (const auto &sigma : all_permutations(n)) {
        std::vector<int> seq(n - 1);
        std::set<int> used;
        auto rec = [&](auto &&self, int k) -> void {
            if (k == n) {
                f(JParams{sigma, seq});
                return;
            }
            for (int q = 1; q <= k; ++q)
                for (int sgn : {1, -1}) {
                    const int v = sgn * sigma(q);
                    if (used.count(v)) continue;
                    used.insert(v);
                    seq[k - 1] = v;
                    self(self, k + 1);
                    used.erase(v);
                }
        };
        rec(rec, 1);
    }
}

} // namespace zpat::family

#endif // ZPAT_FAMILIES_HPP
