#ifndef ZPAT_ORBIT3_TRANSVERSAL_HPP
#define ZPAT_ORBIT3_TRANSVERSAL_HPP

#include <vector>

#include "../families.hpp"
#include "../pattern.hpp"
#include "cmat.hpp"

namespace zpat::orbit3 {

inline constexpr double transversal_threshold = 1e-8;

/// Smallest singular value that must be nonzero for L_I(n) + [A, u(n)] to
/// span L(n): the (2n^2 - 2)-th singular value of the spanning set, with A
/// scaled to unit norm. Vectors are written in the 2n^2 real coordinates of M(n).
inline double transversality_margin(const CMat &A, const Pattern &I, int n)
{
    require_fits(I, n);
    const double s = A.norm();
    if (s == 0) return 0;
    const CMat Ah = A / s;
    std::vector<CMat> vecs;
    const cd Im(0, 1);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l && !I.contains({k + 1, l + 1})) {
                CMat e = CMat::Zero(n, n);
                e(k, l) = 1;
                vecs.push_back(e);
                vecs.push_back(Im * e);
            }
    std::vector<int> freed;
    for (int a = 0; a < n; ++a)
        if (!I.contains({a + 1, a + 1})) freed.push_back(a);
    for (std::size_t t = 0; t + 1 < freed.size(); ++t) {
        CMat e = CMat::Zero(n, n);
        e(freed[t], freed[t]) = 1;
        e(freed[t + 1], freed[t + 1]) = -1;
        vecs.push_back(e);
        vecs.push_back(Im * e);
    }
    for (const auto &X : skew_basis(n)) vecs.push_back(Ah * X - X * Ah);
    Eigen::MatrixXd M(2 * n * n, static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                M(2 * (k * n + l), c) = vecs[c](k, l).real();
                M(2 * (k * n + l) + 1, c) = vecs[c](k, l).imag();
            }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues();
    const int need = 2 * n * n - 2;
    return sv.size() >= need ? sv(need - 1) : 0.0;
}

inline bool is_transversal(const CMat &A, const Pattern &I, int n)
{
    return transversality_margin(A, I, n) > transversal_threshold;
}

inline bool is_transversal_at(const Mat3 &A) { return is_transversal(A, family::cyclic3(), 3); }

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_TRANSVERSAL_HPP
