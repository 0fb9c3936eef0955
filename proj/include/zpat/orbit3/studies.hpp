#ifndef ZPAT_ORBIT3_STUDIES_HPP
#define ZPAT_ORBIT3_STUDIES_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "../families.hpp"
#include "cmat.hpp"
#include "invariants.hpp"
#include "solver.hpp"
#include "transversal.hpp"

namespace zpat::orbit3 {

/// Samples with |P_1| / |A|^6 below this are treated as lying on Gamma_1.
inline constexpr double genericity_band = 1e-6;

inline Mat3 random_cyclic(Rng &rng) { return random_in_pattern(family::cyclic3(), 3, rng); }

/// Root of P_1 on the segment [A, B] of L_I, by bisection, when P_1 changes
/// sign there. The result has unit norm.
inline std::optional<Mat3> gamma1_crossing(const Mat3 &A, const Mat3 &B)
{
    auto at = [&](double t) {
        Mat3 X = (1 - t) * A + t * B;
        return Mat3(X / X.norm());
    };
    double lo = 0, hi = 1;
    const double flo = poly_P1(at(lo)), fhi = poly_P1(at(hi));
    if (flo == 0) return at(lo);
    if (fhi == 0) return at(hi);
    if ((flo < 0) == (fhi < 0)) return std::nullopt;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi), fm = poly_P1(at(mid));
        if (fm == 0) return at(mid);
        if ((fm < 0) == (flo < 0))
            lo = mid;
        else
            hi = mid;
    }
    return at(0.5 * (lo + hi));
}

struct TransversalityStudy {
    int samples = 0;  ///< kept samples, all outside the band
    int discarded = 0; ///< draws inside the band
    int agree = 0;    ///< transversal verdict equals [P_1 != 0]
    int gamma1_points = 0;
    int gamma1_nontransversal = 0; ///< bisected points of Gamma_1 reported non-transversal
};

/// Random unit-norm A in L_I outside the band, compared against the P_1 sign
/// test; also bisected points of Gamma_1 along segments where P_1 changes sign.
inline TransversalityStudy transversality_study(int samples, int gamma1_points, std::uint64_t seed)
{
    TransversalityStudy s;
    Rng rng = make_rng(seed, 81);
    while (s.samples < samples) {
        Mat3 A = random_cyclic(rng);
        A /= A.norm();
        const double r = relative_P1(A);
        if (r < genericity_band) {
            ++s.discarded;
            continue;
        }
        ++s.samples;
        if (is_transversal_at(A) == (r != 0)) ++s.agree;
    }
    while (s.gamma1_points < gamma1_points) {
        const auto X = gamma1_crossing(random_cyclic(rng), random_cyclic(rng));
        if (!X) continue;
        ++s.gamma1_points;
        if (!is_transversal_at(*X)) ++s.gamma1_nontransversal;
    }
    return s;
}

struct FlagSample {
    Mat3 A;
    FlagCount count;
    bool generic = false; ///< outside the band at every found B
};

/// Draws A in L(3) with A_k = random traceless, seeds derived from (seed, k).
inline FlagSample flag_sample(std::uint64_t seed, std::uint64_t k, int restarts, int threads = 0,
                              const SolverOptions &opt = {})
{
    Rng rng = make_rng(seed, 1000003 + k);
    FlagSample f;
    f.A = random_traceless(3, rng);
    f.count = count_flags(f.A, restarts, splitmix64(seed + k), threads, opt);
    f.generic = f.count.N > 0 && f.count.min_relative_P1 >= genericity_band && f.count.generic;
    return f;
}

/// Draws until `samples` generic samples are collected (or `max_draws` run out).
inline std::vector<FlagSample> flag_study(int samples, int restarts, std::uint64_t seed, int threads = 0,
                                          int max_draws = 0, const SolverOptions &opt = {})
{
    if (max_draws <= 0) max_draws = 4 * samples + 10;
    std::vector<FlagSample> out;
    for (int k = 0, kept = 0; k < max_draws && kept < samples; ++k) {
        out.push_back(flag_sample(seed, static_cast<std::uint64_t>(k), restarts, threads, opt));
        if (out.back().generic) ++kept;
    }
    return out;
}

} // namespace zpat::orbit3

#endif // ZPAT_ORBIT3_STUDIES_HPP
