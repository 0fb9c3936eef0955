#ifndef ZPAT_ORBIT3_OBSTRUCTIONS_HPP
#define ZPAT_ORBIT3_OBSTRUCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "cmat.hpp"
#include "invariants.hpp"

namespace zpat::orbit3 {

/// Obstruction polynomial for V_1 = {[[0,0,x],[0,z,y],[u,v,-z]]}, written in i_k.
inline double obstruction_V1(const InvariantVector &i)
{
    return std::pow(2 * i[4] + 3 * i[5] - i[6], 2) + 4 * i[1] * (i[2] - i[3]) * (i[1] * i[3] - 6 * i[5]) +
           4 * i[1] * i[1] * (i[1] * i[5] + i[8] - i[7]) + 4 * i[1] * i[2] * (i[6] - i[4]) +
           4 * i[8] * (5 * i[3] - 4 * i[2]) + 16 * i[3] * i[3] * (2 * i[2] - i[3]) + 4 * i[7] * (2 * i[2] - 3 * i[3]) +
           4 * i[2] * i[2] * (i[2] - 5 * i[3]) + 8 * (i[1] * i[11] - i[13]);
}

/// Obstruction polynomial for V_2 = {[[0,x,y],[u,z,0],[v,0,-z]]}.
inline double obstruction_V2(const InvariantVector &i) { return i[1] * i[1] + 4 * (i[3] - i[2]); }

inline Mat3 v1_matrix(cd x, cd y, cd z, cd u, cd v)
{
    Mat3 a;
    a << 0, 0, x, 0, z, y, u, v, -z;
    return a;
}

inline Mat3 v2_matrix(cd x, cd y, cd z, cd u, cd v)
{
    Mat3 a;
    a << 0, x, y, u, z, 0, v, 0, -z;
    return a;
}

inline Mat3 diag_uv(cd u, cd v)
{
    Mat3 d = Mat3::Zero();
    d(0, 0) = u;
    d(1, 1) = v;
    d(2, 2) = -u - v;
    return d;
}

/// Closed forms on V_1, V_2 and at D = diag(u, v, -u-v).
inline double closed_V1(cd x, cd z, cd u)
{
    const double u1 = u.real(), u2 = u.imag(), x1 = x.real(), x2 = x.imag(), z1 = z.real(), z2 = z.imag();
    const double q = std::norm(x - std::conj(u)) * z1 * z1 - 4 * (u1 * x2 + u2 * x1) * z1 * z2 +
                     std::norm(x + std::conj(u)) * z2 * z2;
    const double w = std::norm(u) - std::norm(x);
    return w * w * q * q;
}

inline double closed_V2(cd x, cd y, cd u, cd v)
{
    const double w = std::norm(u) + std::norm(v) - std::norm(x) - std::norm(y);
    return w * w;
}

inline double closed_D1(cd u, cd v) { return -64 * std::pow(u.real() * v.imag() - u.imag() * v.real(), 6); }
inline double closed_D2(cd u, cd v) { return -4 * std::pow(u.real() * v.imag() - u.imag() * v.real(), 2); }

struct ObstructionReport {
    int samples = 0;
    double max_rel_V1 = 0, max_rel_V2 = 0, max_rel_D1 = 0, max_rel_D2 = 0;
    int negative_D1 = 0, negative_D2 = 0; ///< count of D with the polynomial < 0
    double min_V1 = 0, min_V2 = 0;        ///< smallest value seen on the subspaces
    bool pass(double tol = 1e-8) const
    {
        return max_rel_V1 <= tol && max_rel_V2 <= tol && max_rel_D1 <= tol && max_rel_D2 <= tol &&
               negative_D1 == samples && negative_D2 == samples;
    }
};

/// Relative error scaled by the natural size of the value (|M|^deg).
inline double scaled_error(double got, double want, double scale)
{
    return std::abs(got - want) / std::max(scale, 1e-300);
}

/// Random checks of both obstruction polynomials against their closed forms.
inline ObstructionReport check_prop26_identities(int samples, std::uint64_t seed)
{
    ObstructionReport r;
    r.samples = samples;
    r.min_V1 = r.min_V2 = INFINITY;
    Rng rng = make_rng(seed, 26);
    std::normal_distribution<double> g(0.0, 1.0);
    auto c = [&] {
        const double re = g(rng);
        return cd(re, g(rng));
    };
    for (int s = 0; s < samples; ++s) {
        const cd x = c(), y = c(), z = c(), u = c(), v = c();
        const Mat3 a1 = v1_matrix(x, y, z, u, v), a2 = v2_matrix(x, y, z, u, v), d = diag_uv(u, v);
        const double p1 = obstruction_V1(invariants(a1)), p2 = obstruction_V2(invariants(a2));
        r.min_V1 = std::min(r.min_V1, p1);
        r.min_V2 = std::min(r.min_V2, p2);
        r.max_rel_V1 = std::max(r.max_rel_V1, scaled_error(p1, closed_V1(x, z, u), std::pow(a1.norm(), 12)));
        r.max_rel_V2 = std::max(r.max_rel_V2, scaled_error(p2, closed_V2(x, y, u, v), std::pow(a2.norm(), 4)));
        const auto id = invariants(d);
        const double q1 = obstruction_V1(id), q2 = obstruction_V2(id);
        r.max_rel_D1 = std::max(r.max_rel_D1, scaled_error(q1, closed_D1(u, v), std::pow(d.norm(), 12)));
        r.max_rel_D2 = std::max(r.max_rel_D2, scaled_error(q2, closed_D2(u, v), std::pow(d.norm(), 4)));
        if (q1 < 0) ++r.negative_D1;
        if (q2 < 0) ++r.negative_D2;
    }
    return r;
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_OBSTRUCTIONS_HPP
