#ifndef ZPAT_ORBIT3_CMAT_HPP
#define ZPAT_ORBIT3_CMAT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "../error.hpp"
#include "../pattern.hpp"
#include "../rng.hpp"

namespace zpat::orbit3 {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using Mat3 = Eigen::Matrix3cd;

using zpat::make_rng;
using zpat::Rng;
using zpat::splitmix64;

inline CMat gaussian(int n, Rng &rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = g(rng);
            m(i, j) = cd(re, g(rng));
        }
    return m;
}

inline CMat traceless(CMat m)
{
    const cd t = m.trace() / static_cast<double>(m.rows());
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= t;
    return m;
}

/// Haar-distributed unitary: QR of a complex Gaussian with phases fixed.
inline CMat haar_unitary(int n, Rng &rng)
{
    Eigen::HouseholderQR<CMat> qr(gaussian(n, rng));
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0) q.col(j) *= r(j, j) / a;
    }
    return q;
}

inline CMat random_traceless(int n, Rng &rng) { return traceless(gaussian(n, rng)); }

/// Random member of L_I(n): Gaussian with the pattern entries zeroed, made traceless
/// on the free diagonal.
inline CMat random_in_pattern(const Pattern &I, int n, Rng &rng)
{
    require_fits(I, n);
    CMat m = gaussian(n, rng);
    for (const auto &p : I) m(p.i - 1, p.j - 1) = 0;
    std::vector<int> freed;
    for (int a = 1; a <= n; ++a)
        if (!I.contains({a, a})) freed.push_back(a - 1);
    if (freed.empty()) throw unsupported_input("pattern is not proper");
    cd t = m.trace() / static_cast<double>(freed.size());
    for (int a : freed) m(a, a) -= t;
    return m;
}

/// exp(H) for skew-hermitian H via the spectral decomposition of -iH.
inline CMat expm_skew(const CMat &H)
{
    const cd I(0, 1);
    Eigen::SelfAdjointEigenSolver<CMat> es(-I * H);
    const Eigen::VectorXd lam = es.eigenvalues();
    Eigen::VectorXcd ph(lam.size());
    for (int k = 0; k < lam.size(); ++k) ph(k) = std::exp(I * lam(k));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

/// Nearest unitary (polar factor).
inline CMat polar_unitary(const CMat &M)
{
    Eigen::JacobiSVD<CMat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

/// Real basis of u(n): i E_kk, then E_kl - E_lk and i(E_kl + E_lk) for k < l.
inline std::vector<CMat> skew_basis(int n)
{
    std::vector<CMat> b;
    const cd I(0, 1);
    for (int k = 0; k < n; ++k) {
        CMat m = CMat::Zero(n, n);
        m(k, k) = I;
        b.push_back(m);
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            CMat a = CMat::Zero(n, n), s = CMat::Zero(n, n);
            a(k, l) = 1;
            a(l, k) = -1;
            s(k, l) = I;
            s(l, k) = I;
            b.push_back(a);
            b.push_back(s);
        }
    return b;
}

/// Cyclic permutation matrix with ones at (2,1), (3,2), (1,3).
inline Mat3 cyclic_Z()
{
    Mat3 z = Mat3::Zero();
    z(0, 2) = 1;
    z(1, 0) = 1;
    z(2, 1) = 1;
    return z;
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_CMAT_HPP
