#ifndef ZPAT_ORBIT3_INVARIANTS_HPP
#define ZPAT_ORBIT3_INVARIANTS_HPP

#include <array>
#include <cmath>
#include <complex>

#include "../error.hpp"
#include "cmat.hpp"
#include "p_table.hpp"

namespace zpat::orbit3 {

/// i_1..i_16 stored at indices 1..16; index 0 is unused.
using InvariantVector = std::array<double, 17>;

/// The complex quantity behind each invariant, before taking Re, Im or |.|^2,
/// with its U(1) phase weight: under X -> e^{it} X it picks up e^{i w t}.
struct InvariantSource {
    cd value;
    int weight;
};

struct Traces {
    cd xy, x2y2, x2, y2, x3, y3, x2y, xy2, xyx2y2;
};

inline Traces traces(const Mat3 &X)
{
    const Mat3 Y = X.adjoint(), X2 = X * X, Y2 = Y * Y;
    return {(X * Y).trace(),      (X2 * Y2).trace(),     X2.trace(),
            Y2.trace(),           (X2 * X).trace(),      (Y2 * Y).trace(),
            (X2 * Y).trace(),     (X * Y2).trace(),      (X * Y * X2 * Y2).trace()};
}

inline std::array<InvariantSource, 17> invariant_sources(const Mat3 &X)
{
    const Traces t = traces(X);
    std::array<InvariantSource, 17> s{};
    s[1] = {t.xy, 0};
    s[2] = {t.x2y2, 0};
    s[3] = {t.x2, 2};
    s[4] = {t.xyx2y2, 0};
    s[5] = {t.x3, 3};
    s[6] = {t.x2y, 1};
    s[7] = {t.y2 * (3.0 * t.x2y * t.x2y + t.x3 * t.xy2), 0};
    s[8] = {t.y2 * (3.0 * t.x2y * t.x2y - t.x3 * t.xy2), 0};
    s[9] = {t.y2 * t.x2y * t.x2y, 0};
    s[10] = {t.x2 * t.x2y * t.x2y * t.y3, 1};
    s[11] = {t.x2 * t.x2 * t.y3 * t.xy2, 0};
    s[12] = s[11];
    s[13] = {t.x3 * t.x3 * t.y2 * t.y2 * t.y2, 0};
    s[14] = s[13];
    s[15] = {t.x2y * t.x2y * t.x2y * t.y3, 0};
    s[16] = {t.x2 * t.x2 * t.x2 * t.x2 * t.y3 * t.y3 * t.xy2 * t.xy2, 0};
    return s;
}

inline InvariantVector invariants(const Mat3 &X)
{
    const auto s = invariant_sources(X);
    InvariantVector i{};
    i[1] = s[1].value.real();
    i[2] = s[2].value.real();
    i[3] = std::norm(s[3].value) / 4;
    i[4] = s[4].value.real();
    i[5] = std::norm(s[5].value) / 9;
    i[6] = std::norm(s[6].value);
    i[7] = s[7].value.real() / 6;
    i[8] = s[8].value.real() / 6;
    i[9] = s[9].value.imag() / 2;
    i[10] = s[10].value.imag() / 6;
    i[11] = s[11].value.real() / 12;
    i[12] = s[12].value.imag() / 12;
    i[13] = s[13].value.real() / 72;
    i[14] = s[14].value.imag() / 72;
    i[15] = s[15].value.imag() / 3;
    i[16] = s[16].value.real() / 144;
    return i;
}

/// P = sum over (k, l) of p_kl i_3^k i_6^l, with p_kl read from the literal table.
inline double poly_P(const InvariantVector &i)
{
    long double s = 0;
    for (const auto &t : p_table) {
        long double m = static_cast<long double>(t.c);
        for (int v = 0; v < 16; ++v)
            for (int e = 0; e < t.e[v]; ++e) m *= i[v + 1];
        for (int e = 0; e < t.k; ++e) m *= i[3];
        for (int e = 0; e < t.l; ++e) m *= i[6];
        s += m;
    }
    return static_cast<double>(s);
}

inline double poly_P(const Mat3 &X) { return poly_P(invariants(X)); }

/// Degree of P in the matrix entries.
inline constexpr int degree_P = 24;

inline bool in_cyclic_pattern(const Mat3 &A, double tol = 1e-12)
{
    const double s = std::max(1.0, A.norm());
    return std::abs(A(0, 2)) <= tol * s && std::abs(A(1, 0)) <= tol * s && std::abs(A(2, 1)) <= tol * s &&
           std::abs(A.trace()) <= tol * s;
}

/// P_1 on L_I for I = {(1,3),(2,1),(3,2)}, with A = [[u,z,0],[0,v,x],[y,0,w]].
inline double poly_P1(const Mat3 &A)
{
    if (!in_cyclic_pattern(A, 1e-9)) throw unsupported_input("poly_P1: matrix is not in L_I for the cyclic pattern");
    const cd u = A(0, 0), z = A(0, 1), v = A(1, 1), x = A(1, 2), y = A(2, 0), w = A(2, 2);
    auto n2 = [](cd c) { return std::norm(c); };
    return n2((v - w) * x * x) + n2((w - u) * y * y) + n2((u - v) * z * z) +
           (n2((v - w) * x) + n2(y * z)) * (n2(v) + n2(w) - 5 * n2(u)) +
           (n2((w - u) * y) + n2(z * x)) * (n2(w) + n2(u) - 5 * n2(v)) +
           (n2((u - v) * z) + n2(x * y)) * (n2(u) + n2(v) - 5 * n2(w)) + n2((u - v) * (v - w) * (w - u));
}

/// Relative size of P_1: |P_1(A)| / |A|^6.
inline double relative_P1(const Mat3 &A)
{
    const double s = A.norm();
    return s == 0 ? 0.0 : std::abs(poly_P1(A)) / std::pow(s, 6);
}

inline constexpr double p2_ratio_threshold = 1e-8;

/// P(A) / P_1(A)^2; refused when |P_1| / |A|^6 is below the threshold.
inline double poly_P2_ratio(const Mat3 &A)
{
    if (relative_P1(A) < p2_ratio_threshold) throw unsupported_input("poly_P2_ratio: P_1 too close to zero");
    const double p1 = poly_P1(A);
    return poly_P(A) / (p1 * p1);
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_INVARIANTS_HPP
