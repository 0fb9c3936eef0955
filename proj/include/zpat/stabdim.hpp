#ifndef ZPAT_STABDIM_HPP
#define ZPAT_STABDIM_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "pattern.hpp"

namespace zpat {

/// Integer matrix over the n^2 real parameters of a skew-hermitian X (rows are
/// linear conditions). Parameter order: t_1..t_n for X_kk = i t_k, then for each
/// k < l the pair (a_kl, b_kl) with X_kl = a + ib and X_lk = -a + ib.
struct StabilizerSystem {
    int n = 0;
    int unknowns = 0;
    std::vector<std::vector<int>> rows;
};

namespace detail {

/// A complex linear form in the real parameters: re + i im.
struct CForm {
    std::vector<int> re, im;
    explicit CForm(int m) : re(m, 0), im(m, 0) {}
};

class SkewParams {
public:
    explicit SkewParams(int n) : n_(n)
    {
        int next = n;
        idx_.assign(n * n, -1);
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                idx_[k * n + l] = next;
                next += 2;
            }
    }

    int count() const { return n_ * n_; }

    /// Adds c * X_pq (1-based) to f.
    void add(CForm &f, int p, int q, int c) const
    {
        --p;
        --q;
        if (p == q) {
            f.im[p] += c;
        } else if (p < q) {
            const int a = idx_[p * n_ + q];
            f.re[a] += c;
            f.im[a + 1] += c;
        } else {
            const int a = idx_[q * n_ + p];
            f.re[a] -= c;
            f.im[a + 1] += c;
        }
    }

private:
    int n_;
    std::vector<int> idx_;
};

} // namespace detail

/// Complex basis of L_I(n) as lists of (row, col, coefficient) entries.
inline std::vector<std::vector<std::pair<Position, int>>> basis_LI(const Pattern &I, int n)
{
    require_fits(I, n);
    std::vector<std::vector<std::pair<Position, int>>> basis;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            if (k != l && !I.contains({k, l})) basis.push_back({{{k, l}, 1}});
    std::vector<int> free;
    for (int a = 1; a <= n; ++a)
        if (!I.contains({a, a})) free.push_back(a);
    for (std::size_t t = 0; t + 1 < free.size(); ++t)
        basis.push_back({{{free[t], free[t]}, 1}, {{free[t + 1], free[t + 1]}, -1}});
    return basis;
}

/// Conditions ([X, A])_pq = 0 for (p, q) in I and A in a basis of L_I(n),
/// real and imaginary parts separately.
inline StabilizerSystem stabilizer_system(const Pattern &I, int n)
{
    require_fits(I, n);
    if (!is_proper(I, n)) throw unsupported_input("stabilizer_system: pattern must be proper");
    detail::SkewParams par(n);
    StabilizerSystem sys{n, par.count(), {}};
    std::set<std::vector<int>> seen;
    auto emit = [&](const std::vector<int> &r) {
        if (std::any_of(r.begin(), r.end(), [](int v) { return v != 0; }) && seen.insert(r).second)
            sys.rows.push_back(r);
    };
    for (const auto &A : basis_LI(I, n))
        for (const auto &pq : I) {
            detail::CForm f(par.count());
            // [X, E_kl]_pq = X_pk [l = q] - [p = k] X_lq
            for (const auto &[kl, c] : A) {
                if (kl.j == pq.j) par.add(f, pq.i, kl.i, c);
                if (kl.i == pq.i) par.add(f, kl.j, pq.j, -c);
            }
            emit(f.re);
            emit(f.im);
        }
    return sys;
}

/// Rank by fraction-free (Bareiss) elimination.
inline int integer_rank(const std::vector<std::vector<int>> &rows, int cols)
{
    std::vector<std::vector<BigInt>> m;
    m.reserve(rows.size());
    for (const auto &r : rows) m.emplace_back(r.begin(), r.end());
    const int R = static_cast<int>(m.size());
    int rank = 0;
    BigInt prev = 1;
    for (int c = 0; c < cols && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < R; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Real dimension of the stabilizer of L_I(n) in U(n), via its Lie algebra.
inline int stabilizer_dim(const Pattern &I, int n)
{
    const auto sys = stabilizer_system(I, n);
    return sys.unknowns - integer_rank(sys.rows, sys.unknowns);
}

inline bool is_defective(const Pattern &I, int n)
{
    return stabilizer_dim(I, n) > n * n - 2 * static_cast<int>(I.size());
}

} // namespace zpat

#endif // ZPAT_STABDIM_HPP
