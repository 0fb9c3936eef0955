#ifndef ZPAT_BIGINT_HPP
#define ZPAT_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zpat {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline BigInt factorial(int n)
{
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

/// n!! = n (n-2) (n-4) ... ; 0!! = 1.
inline BigInt double_factorial(int n)
{
    BigInt r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt int_pow(BigInt b, unsigned e)
{
    BigInt r = 1;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const BigInt &v) { return v.str(); }

/// mu_n = n(n-1)/2, the size of a full strict pattern.
constexpr int mu(int n) { return n * (n - 1) / 2; }

} // namespace zpat

#endif // ZPAT_BIGINT_HPP
