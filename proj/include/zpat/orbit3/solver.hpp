#ifndef ZPAT_ORBIT3_SOLVER_HPP
#define ZPAT_ORBIT3_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "../families.hpp"
#include "../parallel.hpp"
#include "../pattern.hpp"
#include "cmat.hpp"
#include "invariants.hpp"
#include "transversal.hpp"

namespace zpat::orbit3 {

/// A flag U T_n reducing A: B = U* A U lies in L_I up to `residual`.
struct FlagSolution {
    CMat U;
    CMat B;
    double residual = 0; ///< sum over I of |B_ij|^2, for A scaled to unit norm
};

struct SolverOptions {
    int max_iter = 300;
    double stop_residual = 1e-28;
    double accept_residual = 1e-18;
};

/// Sum over I of |(U* A U)_ij|^2.
inline double pattern_residual(const CMat &B, const Pattern &I)
{
    double s = 0;
    for (const auto &p : I) s += std::norm(B(p.i - 1, p.j - 1));
    return s;
}

/// Levenberg-Marquardt on U(n): U <- U exp(H), H = sum h_k X_k, minimum-norm
/// damped steps, polar re-unitarization after each step.
inline FlagSolution local_reduce(const CMat &A, const Pattern &I, int n, CMat U, const SolverOptions &opt = {})
{
    const auto basis = skew_basis(n);
    const int m = static_cast<int>(2 * I.size()), p = static_cast<int>(basis.size());
    auto resid = [&](const CMat &B) {
        Eigen::VectorXd r(m);
        int t = 0;
        for (const auto &q : I) {
            r(t++) = B(q.i - 1, q.j - 1).real();
            r(t++) = B(q.i - 1, q.j - 1).imag();
        }
        return r;
    };
    CMat B = U.adjoint() * A * U;
    Eigen::VectorXd r = resid(B);
    double cost = r.squaredNorm();
    double lambda = 1e-6;
    for (int it = 0; it < opt.max_iter && cost > opt.stop_residual; ++it) {
        Eigen::MatrixXd J(m, p);
        for (int k = 0; k < p; ++k) {
            const CMat d = B * basis[k] - basis[k] * B;
            int t = 0;
            for (const auto &q : I) {
                J(t++, k) = d(q.i - 1, q.j - 1).real();
                J(t++, k) = d(q.i - 1, q.j - 1).imag();
            }
        }
        const Eigen::MatrixXd JJt = J * J.transpose();
        bool improved = false;
        while (lambda < 1e10) {
            Eigen::MatrixXd M = JJt;
            M.diagonal().array() += lambda;
            const Eigen::VectorXd h = -J.transpose() * M.ldlt().solve(r);
            CMat H = CMat::Zero(n, n);
            for (int k = 0; k < p; ++k) H += h(k) * basis[k];
            const CMat Un = polar_unitary(U * expm_skew(H));
            const CMat Bn = Un.adjoint() * A * Un;
            const Eigen::VectorXd rn = resid(Bn);
            const double cn = rn.squaredNorm();
            if (cn < cost) {
                U = Un;
                B = Bn;
                r = rn;
                cost = cn;
                lambda = std::max(lambda / 10, 1e-15);
                improved = true;
                break;
            }
            lambda *= 10;
        }
        if (!improved) break;
    }
    return {U, B, cost};
}

/// Gauge-fixes B under D* B D, D diagonal unitary: along a spanning forest of
/// the free off-diagonal entries (largest modulus first), entries become real
/// positive.
inline CMat torus_gauge(const CMat &B, const Pattern &I, double eps = 1e-6)
{
    const int n = static_cast<int>(B.rows());
    struct Edge {
        double w;
        int i, j;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !I.contains({i + 1, j + 1}) && std::abs(B(i, j)) > eps) edges.push_back({std::abs(B(i, j)), i, j});
    std::stable_sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) { return a.w > b.w; });
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> tree(n); // neighbour, edge index
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int a = find(edges[e].i), b = find(edges[e].j);
        if (a == b) continue;
        comp[a] = b;
        tree[edges[e].i].push_back({edges[e].j, static_cast<int>(e)});
        tree[edges[e].j].push_back({edges[e].i, static_cast<int>(e)});
    }
    std::vector<cd> d(n, cd(0));
    for (int root = 0; root < n; ++root) {
        if (d[root] != cd(0)) continue;
        d[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (auto [b, e] : tree[a]) {
                if (d[b] != cd(0)) continue;
                const Edge &E = edges[e];
                const cd bij = B(E.i, E.j), ph = bij / std::abs(bij);
                // want conj(d_i) B_ij d_j > 0
                d[b] = (E.i == a) ? d[a] * std::conj(ph) : d[a] * ph;
                stack.push_back(b);
            }
        }
    }
    CMat G = B;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = std::conj(d[i]) * B(i, j) * d[j];
    return G;
}

/// min over a grid of D in T_n (first phase fixed) of |D* B1 D - B2|, refined
/// locally around the best grid point.
inline double torus_distance(const CMat &B1, const CMat &B2, int grid = 96)
{
    const int n = static_cast<int>(B1.rows());
    const int k = n - 1;
    if (k == 0) return (B1 - B2).norm();
    auto dist = [&](const std::vector<double> &th) {
        std::vector<cd> d(n, 1.0);
        for (int a = 1; a < n; ++a) d[a] = std::polar(1.0, th[a - 1]);
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += std::norm(std::conj(d[i]) * B1(i, j) * d[j] - B2(i, j));
        return std::sqrt(s);
    };
    const double two_pi = 2 * std::numbers::pi;
    std::vector<double> best(k, 0.0), th(k, 0.0);
    double bd = dist(best);
    std::vector<int> idx(k, 0);
    for (;;) {
        for (int a = 0; a < k; ++a) th[a] = two_pi * idx[a] / grid;
        const double v = dist(th);
        if (v < bd) bd = v, best = th;
        int a = 0;
        while (a < k && ++idx[a] == grid) idx[a++] = 0;
        if (a == k) break;
    }
    for (double step = two_pi / grid; step > 1e-13; step /= 2) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int a = 0; a < k; ++a)
                for (double sg : {1.0, -1.0}) {
                    th = best;
                    th[a] += sg * step;
                    const double v = dist(th);
                    if (v < bd) bd = v, best = th, moved = true;
                }
        }
    }
    return bd;
}

inline constexpr double cluster_tolerance = 1e-7;

/// Same T_n-orbit, for B1, B2 computed from the same unit-norm A.
inline bool same_torus_orbit(const CMat &B1, const CMat &B2, const Pattern &I)
{
    if ((B1.cwiseAbs() - B2.cwiseAbs()).maxCoeff() > cluster_tolerance ||
        (B2.cwiseAbs() - B1.cwiseAbs()).maxCoeff() > cluster_tolerance)
        return false;
    if ((torus_gauge(B1, I) - torus_gauge(B2, I)).cwiseAbs().maxCoeff() <= cluster_tolerance) return true;
    return torus_distance(B1, B2) <= cluster_tolerance;
}

struct FlagCluster {
    FlagSolution rep;
    int hits = 0;
    double P1 = 0; ///< P_1 at the unit-norm B
};

struct FlagCount {
    int N = 0;
    std::vector<FlagCluster> clusters;
    int restarts = 0;
    int converged = 0;
    bool budget_exhausted = false; ///< no restart converged
    bool z_closed = false;         ///< Z B Z^{-1} is found for every B
    bool generic = false;          ///< transversal at every found B
    double min_relative_P1 = 0;    ///< over found B
    double max_residual = 0;
};

/// Counts T_3-orbits in O_A n L_I for the cyclic pattern by random restarts.
inline FlagCount count_flags(const Mat3 &A, int restarts, std::uint64_t seed, int threads = 0,
                             const SolverOptions &opt = {})
{
    if (restarts < 1) throw invalid_parameters("count_flags: restarts must be >= 1");
    const Pattern I = family::cyclic3();
    const double s = A.norm();
    if (s == 0) throw unsupported_input("count_flags: A = 0");
    const CMat Ah = A / s;
    std::vector<FlagSolution> sol(restarts);
    parallel_for(static_cast<std::size_t>(restarts), threads, [&](std::size_t r) {
        Rng rng = make_rng(seed, r);
        sol[r] = local_reduce(Ah, I, 3, haar_unitary(3, rng), opt);
    });
    FlagCount out;
    out.restarts = restarts;
    for (auto &f : sol) {
        if (f.residual > opt.accept_residual) continue;
        ++out.converged;
        out.max_residual = std::max(out.max_residual, f.residual);
        bool found = false;
        for (auto &c : out.clusters)
            if (same_torus_orbit(c.rep.B, f.B, I)) {
                ++c.hits;
                found = true;
                break;
            }
        if (!found) {
            FlagCluster c;
            c.rep = f;
            c.hits = 1;
            out.clusters.push_back(std::move(c));
        }
    }
    out.N = static_cast<int>(out.clusters.size());
    out.budget_exhausted = out.converged == 0;
    const Mat3 Z = cyclic_Z();
    out.z_closed = out.N > 0;
    out.generic = out.N > 0;
    out.min_relative_P1 = INFINITY;
    for (auto &c : out.clusters) {
        Mat3 B = c.rep.B;
        for (const auto &p : I) B(p.i - 1, p.j - 1) = 0; // residual below 1e-9 per entry
        B -= Mat3::Identity() * (B.trace() / 3.0);
        c.P1 = poly_P1(B);
        out.min_relative_P1 = std::min(out.min_relative_P1, relative_P1(B));
        out.generic = out.generic && is_transversal_at(B);
        const CMat zb = Z * c.rep.B * Z.adjoint();
        out.z_closed = out.z_closed && std::any_of(out.clusters.begin(), out.clusters.end(), [&](const FlagCluster &d) {
                           return same_torus_orbit(d.rep.B, zb, I);
                       });
    }
    for (auto &c : out.clusters) c.rep.B *= s; // back to the scale of A
    if (out.clusters.empty()) out.min_relative_P1 = 0;
    return out;
}

/// Searches for U with U* A U in L_I(n); the first solution found, if any.
inline std::optional<FlagSolution> numeric_reduce(const CMat &A, const Pattern &I, int n, int restarts,
                                                  std::uint64_t seed, const SolverOptions &opt = {})
{
    if (n < 2 || n > 4) throw unsupported_input("numeric_reduce supports 2 <= n <= 4");
    if (A.rows() != n || A.cols() != n) throw dimension_mismatch("numeric_reduce: A has the wrong size");
    require_fits(I, n);
    const double s = A.norm();
    if (s == 0) return FlagSolution{CMat::Identity(n, n), A, 0.0};
    const CMat Ah = A / s;
    for (int r = 0; r < restarts; ++r) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
        FlagSolution f = local_reduce(Ah, I, n, haar_unitary(n, rng), opt);
        if (f.residual <= opt.accept_residual) {
            f.B *= s;
            return f;
        }
    }
    return std::nullopt;
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_SOLVER_HPP
