#ifndef ZPAT_ORBIT3_CERTIFICATES_HPP
#define ZPAT_ORBIT3_CERTIFICATES_HPP

#include <cmath>

#include "cmat.hpp"

namespace zpat::orbit3 {

/// A point of L_I on P_1 = 0.
inline Mat3 gamma1_point()
{
    Mat3 a;
    a << cd(3, 3), 5, 0, 0, cd(3, -3), 5, 5, 0, -6;
    return a;
}

/// A point of L_I in the orbit of gamma1_point(), on P_2 = 0 with P_1 = 89424.
inline Mat3 gamma2_point()
{
    const double r = std::sqrt(69.0);
    Mat3 b;
    b << -1, 0.5 * std::sqrt(222 + 6 * r), 0, 0, 0.5 * (1 - r), 0, 0.5 * std::sqrt(222 - 6 * r), 0, 0.5 * (1 + r);
    return b;
}

/// Unitary X with gamma1_point() X = X gamma2_point(), from closed-form radicals.
inline Mat3 intertwiner()
{
    const cd I(0, 1);
    const double r69 = std::sqrt(69.0), r6 = std::sqrt(6.0), r46 = std::sqrt(46.0), r13 = std::sqrt(13.0);
    const double q = std::sqrt(37 - r69);
    Mat3 x;
    x(0, 0) = (2 * (r69 - 7) - I * (3 + r69)) / (6 * q);
    x(0, 1) = (1.0 + 3.0 * I) * (I * r6 - r46) / (12 * r13);
    x(0, 2) = (r46 + r6) / 12;
    x(1, 0) = ((3.0 - I) * r69 + 34.0 + 27.0 * I) / (15 * q);
    x(1, 1) = 4 * (r46 - r6) / (15 * r13) + I * (23 * r6 - 3 * r46) / (60 * r13);
    x(1, 2) = (3.0 - I) * (3 * r6 - I * r46) / 60.0;
    x(2, 0) = (2 * (2 - r69) - I * (3 + r69)) / (6 * q);
    x(2, 1) = 4 * (r6 + r46) / (15 * r13) + I * (23 * r6 + 3 * r46) / (60 * r13);
    x(2, 2) = (r46 - r6) / 12;
    return x;
}

/// Two unitarily similar points of L_I with P_1 = 45 and P_2 = 0.
inline Mat3 regular_gamma2_A()
{
    Mat3 a;
    a << cd(1, 1), 0, 0, 0, -1, 0, 1, 0, cd(0, -1);
    return a;
}

inline Mat3 regular_gamma2_B()
{
    Mat3 b;
    b << cd(0, -1), 0, 0, 0, -1, 0, 1, 0, cd(1, 1);
    return b;
}

struct IntertwinerReport {
    double unitarity_residual = 0; ///< |X* X - Id|_F
    double intertwining_residual = 0; ///< |A X - X B|_F
    double spectrum_gap = 0;       ///< max distance between matched eigenvalues
    bool pass(double tol = 1e-9) const
    {
        return unitarity_residual <= tol && intertwining_residual <= tol && spectrum_gap <= tol;
    }
};

/// Largest distance between the spectra under the best matching (3! matchings).
inline double spectrum_gap(const Mat3 &A, const Mat3 &B)
{
    const Eigen::Vector3cd ea = Eigen::ComplexEigenSolver<Mat3>(A, false).eigenvalues();
    const Eigen::Vector3cd eb = Eigen::ComplexEigenSolver<Mat3>(B, false).eigenvalues();
    int p[3] = {0, 1, 2};
    double best = INFINITY;
    do {
        double m = 0;
        for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(ea(k) - eb(p[k])));
        best = std::min(best, m);
    } while (std::next_permutation(p, p + 3));
    return best;
}

inline IntertwinerReport check_appendix_C()
{
    const Mat3 A = gamma1_point(), B = gamma2_point(), X = intertwiner();
    IntertwinerReport r;
    r.unitarity_residual = (X.adjoint() * X - Mat3::Identity()).norm();
    r.intertwining_residual = (A * X - X * B).norm();
    r.spectrum_gap = spectrum_gap(A, B);
    return r;
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_CERTIFICATES_HPP
