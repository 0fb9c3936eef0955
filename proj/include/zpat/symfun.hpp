#ifndef ZPAT_SYMFUN_HPP
#define ZPAT_SYMFUN_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "families.hpp"
#include "pattern.hpp"
#include "poly.hpp"

namespace zpat {

/// chi_n = sum over sigma of sgn(sigma) prod_i x_{sigma(i)}^{n-i}.
inline Poly vandermonde(int n)
{
    if (n < 1) throw invalid_parameters("vandermonde: n must be >= 1");
    std::vector<Poly::Term> ts;
    for (const auto &s : all_permutations(n)) {
        std::vector<int> e(n);
        for (int i = 1; i <= n; ++i) e[s(i) - 1] = n - i;
        ts.emplace_back(make_key(e), s.sign());
    }
    return Poly::from_terms(n, std::move(ts));
}

inline void require_strict_fit(const Pattern &I, int n)
{
    require_fits(I, n);
    if (!is_strict(I)) throw unsupported_input("chi is undefined for diagonal positions");
}

/// chi_I = prod_{(i,j) in I} (x_i - x_j).
inline Poly chi(const Pattern &I, int n)
{
    require_strict_fit(I, n);
    Poly p = Poly::constant(n, 1);
    for (const auto &q : I) p = p.times_difference(q.i, q.j);
    return p;
}

/// The inner product making monomials orthonormal.
inline BigInt inner(const Poly &f, const Poly &g)
{
    if (f.nvars() != g.nvars()) throw dimension_mismatch("inner: different numbers of variables");
    BigInt s = 0;
    auto a = f.terms().begin(), b = g.terms().begin();
    while (a != f.terms().end() && b != g.terms().end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            s += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return s;
}

inline BigInt norm_squared(const Pattern &I, int n)
{
    const Poly c = chi(I, n);
    return inner(c, c);
}

namespace detail {

/// Can each variable v reach a distinct final exponent in
/// [e_v, min(e_v + r_v, n - 1)]? Greedy earliest-deadline matching.
inline bool staircase_reachable(MonoKey k, const std::array<int, max_vars> &rem, int n)
{
    std::array<int, max_vars> lo{}, hi{};
    for (int v = 1; v <= n; ++v) {
        lo[v - 1] = exponent(k, v);
        if (lo[v - 1] > n - 1) return false;
        hi[v - 1] = std::min(lo[v - 1] + rem[v - 1], n - 1);
    }
    unsigned used = 0;
    for (int p = 0; p < n; ++p) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!(used & (1u << v)) && lo[v] <= p && (best < 0 || hi[v] < hi[best])) best = v;
        if (best < 0 || hi[best] < p) return false;
        used |= 1u << best;
    }
    return true;
}

/// Sign of v -> n - e_v when the exponents form a permutation of 0..n-1, else 0.
inline int staircase_sign(MonoKey k, int n)
{
    std::vector<int> img(n);
    unsigned seen = 0;
    for (int v = 1; v <= n; ++v) {
        const int e = exponent(k, v);
        if (e > n - 1 || (seen & (1u << e))) return 0;
        seen |= 1u << e;
        img[v - 1] = n - e;
    }
    return Permutation(std::move(img)).sign();
}

/// Factor order: repeatedly exhaust the variable with the fewest remaining factors.
inline std::vector<Position> factor_order(const Pattern &I, int n)
{
    std::vector<Position> left(I.begin(), I.end()), out;
    while (!left.empty()) {
        std::vector<int> deg(n + 1, 0);
        for (const auto &p : left) ++deg[p.i], ++deg[p.j];
        int best = 0;
        for (int v = 1; v <= n; ++v)
            if (deg[v] > 0 && (best == 0 || deg[v] < deg[best])) best = v;
        std::vector<Position> keep;
        for (const auto &p : left) (p.i == best || p.j == best ? out : keep).push_back(p);
        left.swap(keep);
    }
    return out;
}

} // namespace detail

/// <chi_I, chi_n>, expanding chi_I one factor at a time and discarding every
/// intermediate monomial that can no longer reach a staircase exponent vector.
inline BigInt pair_with_vandermonde(const Pattern &I, int n)
{
    require_strict_fit(I, n);
    if (static_cast<int>(I.size()) != mu(n)) return 0;
    const auto order = detail::factor_order(I, n);
    std::array<int, max_vars> rem{};
    for (const auto &p : order) ++rem[p.i - 1], ++rem[p.j - 1];

    std::vector<Poly::Term> cur{{0, 1}}, nxt;
    for (const auto &p : order) {
        --rem[p.i - 1];
        --rem[p.j - 1];
        const MonoKey di = var_key(p.i), dj = var_key(p.j);
        nxt.clear();
        nxt.reserve(2 * cur.size());
        auto push = [&](MonoKey k, BigInt &&c) {
            if (c != 0 && detail::staircase_reachable(k, rem, n)) nxt.emplace_back(k, std::move(c));
        };
        auto a = cur.begin(), b = cur.begin();
        const auto e = cur.end();
        while (a != e || b != e) {
            if (b == e || (a != e && a->first + di < b->first + dj)) {
                push(a->first + di, BigInt(a->second));
                ++a;
            } else if (a == e || b->first + dj < a->first + di) {
                push(b->first + dj, BigInt(-b->second));
                ++b;
            } else {
                push(a->first + di, a->second - b->second);
                ++a;
                ++b;
            }
        }
        cur.swap(nxt);
    }
    BigInt s = 0;
    for (const auto &[k, c] : cur) {
        const int sg = detail::staircase_sign(k, n);
        if (sg > 0)
            s += c;
        else if (sg < 0)
            s -= c;
    }
    return s;
}

/// Reference path: full expansion of chi_I paired against chi_n.
inline BigInt pair_naive(const Pattern &I, int n) { return inner(chi(I, n), vandermonde(n)); }

/// sigma_{k,n}.
inline Poly elementary(int k, int n)
{
    if (k < 0 || n < 0) throw invalid_parameters("elementary: k, n must be >= 0");
    std::vector<Poly::Term> ts;
    if (k <= n) {
        std::vector<int> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end());
        do {
            ts.emplace_back(make_key(pick), 1);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return Poly::from_terms(n, std::move(ts));
}

/// h_{k,n}, the sum of all monomials of degree k; defined for every k >= 0.
inline Poly complete(int k, int n)
{
    if (k < 0 || n < 0) throw invalid_parameters("complete: k, n must be >= 0");
    std::vector<Poly::Term> ts;
    if (n == 0) {
        if (k == 0) ts.emplace_back(0, 1);
        return Poly::from_terms(0, std::move(ts));
    }
    std::vector<int> e(n, 0);
    auto rec = [&](auto &&self, int v, int left) -> void {
        if (v == n - 1) {
            e[v] = left;
            ts.emplace_back(make_key(e), 1);
            return;
        }
        for (int d = left; d >= 0; --d) {
            e[v] = d;
            self(self, v + 1, left - d);
        }
    };
    rec(rec, 0, k);
    return Poly::from_terms(n, std::move(ts));
}

/// d_f g, where d_f = f(d_1, ..., d_n).
inline Poly diff_apply(const Poly &f, const Poly &g)
{
    if (f.nvars() != g.nvars()) throw dimension_mismatch("diff_apply: different numbers of variables");
    const int n = f.nvars();
    std::vector<Poly::Term> ts;
    for (const auto &[ka, ca] : f.terms())
        for (const auto &[kb, cb] : g.terms()) {
            BigInt c = ca * cb;
            bool ok = true;
            MonoKey k = 0;
            for (int v = 1; v <= n && ok; ++v) {
                const int a = exponent(ka, v), b = exponent(kb, v);
                if (a > b) {
                    ok = false;
                    break;
                }
                for (int t = b - a + 1; t <= b; ++t) c *= t;
                k |= MonoKey(b - a) << key_shift(v);
            }
            if (ok) ts.emplace_back(k, std::move(c));
        }
    return Poly::from_terms(n, std::move(ts));
}

/// tau^t: x_i -> x_{i+t}, read in new_n variables.
inline Poly shift(const Poly &f, int t, int new_n)
{
    if (t < 0) throw invalid_parameters("shift: t must be >= 0");
    if (f.nvars() + t > new_n) throw dimension_mismatch("shift: new_n too small");
    if (new_n > max_vars) throw unsupported_input("polynomials support at most 8 variables");
    std::vector<Poly::Term> ts;
    for (const auto &[k, c] : f.terms()) ts.emplace_back(k >> (8 * t), c);
    return Poly::from_terms(new_n, std::move(ts));
}

/// f in K(n) for homogeneous f of degree d <= mu_n, via: <m f, chi_n> = 0 for
/// every monomial m of degree mu_n - d.
inline bool in_coinvariant_ideal(const Poly &f, int n)
{
    if (f.nvars() != n) throw dimension_mismatch("in_coinvariant_ideal: f has the wrong number of variables");
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw unsupported_input("in_coinvariant_ideal: f must be homogeneous");
    const int d = f.degree();
    if (d > mu(n)) throw unsupported_input("in_coinvariant_ideal: degree above mu_n");
    std::map<MonoKey, BigInt> acc; // m -> <m f, chi_n>
    const Poly vn = vandermonde(n);
    for (const auto &[kc, sgn] : vn.terms())
        for (const auto &[ka, ca] : f.terms()) {
            bool ok = true;
            for (int v = 1; v <= n && ok; ++v) ok = exponent(ka, v) <= exponent(kc, v);
            if (!ok) continue;
            acc[kc - ka] += sgn * ca;
        }
    return std::all_of(acc.begin(), acc.end(), [](const auto &kv) { return kv.second == 0; });
}

/// chi of the Vandermonde in x_{vars[0]}, x_{vars[1]}, ... (in that order).
inline Poly vandermonde_in(const std::vector<int> &vars, int n)
{
    Poly p = Poly::constant(n, 1);
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) p = p.times_difference(vars[a], vars[b]);
    return p;
}

/// Checks d_{I_1} ... d_{I_m} chi_n against
/// sgn(sigma) prod_{k<=m} (n-k+[r_k = sigma(k)])! chi_{n-m}(x_{sigma(m+1)}, ..., x_{sigma(n)}),
/// where I_k = {(r_k, sigma(j)) : k < j <= n}.
inline bool verify_glavna(const Permutation &sigma, const std::vector<int> &r, int m, int n)
{
    if (sigma.size() != n) throw dimension_mismatch("verify_glavna: sigma has the wrong degree");
    if (m < 0 || m >= n) throw invalid_parameters("verify_glavna: need 0 <= m < n");
    if (static_cast<int>(r.size()) < m) throw invalid_parameters("verify_glavna: r too short");
    for (int k = 1; k <= m; ++k) {
        bool ok = false;
        for (int q = 1; q <= k; ++q) ok = ok || sigma(q) == r[k - 1];
        if (!ok) throw invalid_parameters("verify_glavna: r_k must lie in sigma(Z_k)");
    }
    Poly lhs = vandermonde(n);
    for (int k = m; k >= 1; --k) {
        Poly op = Poly::constant(n, 1);
        for (int j = k + 1; j <= n; ++j) op = op.times_difference(r[k - 1], sigma(j));
        lhs = diff_apply(op, lhs);
    }
    BigInt c = sigma.sign();
    for (int k = 1; k <= m; ++k) c *= factorial(n - k + (r[k - 1] == sigma(k) ? 1 : 0));
    std::vector<int> tail;
    for (int j = m + 1; j <= n; ++j) tail.push_back(sigma(j));
    return lhs == c * vandermonde_in(tail, n);
}

/// Closed form of <chi_J, chi_n> for J = J(sigma, i).
inline BigInt jfam_pairing_formula(const family::JParams &p)
{
    family::validate(p);
    const int n = p.sigma.size();
    int d = 0;
    BigInt v = p.sigma.sign();
    for (int k = 1; k <= n - 1; ++k) {
        const int ik = p.seq[k - 1];
        if (ik < 0) d += n - k;
        if (std::abs(ik) == p.sigma(k)) v *= n - k + 1;
    }
    return d % 2 ? BigInt(-v) : v;
}

} // namespace zpat

#endif // ZPAT_SYMFUN_HPP
