#ifndef ZPAT_RNG_HPP
#define ZPAT_RNG_HPP

#include <cstdint>
#include <random>

namespace zpat {

/// SplitMix64, used to derive independent seeds for restart streams.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

} // namespace zpat

#endif // ZPAT_RNG_HPP
