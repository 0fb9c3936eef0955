#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include <zpat/classify.hpp>
#include <zpat/families.hpp>
#include <zpat/rng.hpp>
#include <zpat/symfun.hpp>

using namespace zpat;

namespace {

Permutation random_perm(int n, Rng &rng)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

Poly random_poly(int n, int d, int terms, Rng &rng)
{
    std::uniform_int_distribution<int> var(0, n - 1), coef(-3, 3);
    std::vector<Poly::Term> ts;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(n, 0);
        for (int s = 0; s < d; ++s) ++e[var(rng)];
        ts.emplace_back(make_key(e), coef(rng));
    }
    return Poly::from_terms(n, std::move(ts));
}

} // namespace

TEST(Poly, Basics)
{
    const Poly x1 = Poly::variable(2, 1), x2 = Poly::variable(2, 2);
    EXPECT_EQ(vandermonde(2), x1 - x2);
    EXPECT_EQ((x1 - x2) * (x1 + x2), x1 * x1 - x2 * x2);
    EXPECT_EQ(Poly::constant(2, 1).times_difference(1, 2), x1 - x2);
    EXPECT_EQ(shift(Poly::variable(1, 1), 1, 2), x2);
    EXPECT_EQ(shift(vandermonde(2), 0, 3), Poly::variable(3, 1) - Poly::variable(3, 2));
    EXPECT_EQ((x1 * x1 * x2).degree(), 3);
    EXPECT_TRUE((x1 * x1 - x2).is_homogeneous() == false);
    EXPECT_THROW(Poly::variable(2, 3), position_out_of_range);
}

TEST(Poly, SymmetricFunctions)
{
    EXPECT_EQ(elementary(2, 3).size(), 3u);
    EXPECT_EQ(elementary(4, 3), Poly(3));
    EXPECT_EQ(elementary(0, 3), Poly::constant(3, 1));
    EXPECT_EQ(complete(2, 2).size(), 3u);
    EXPECT_EQ(complete(3, 3).size(), 10u);
    EXPECT_EQ(complete(0, 4), Poly::constant(4, 1));
}

TEST(Poly, DiffApply)
{
    const Poly x1 = Poly::variable(2, 1), x2 = Poly::variable(2, 2);
    EXPECT_EQ(diff_apply(x1, x1 * x1 * x2), Poly::constant(2, 2) * x1 * x2);
    EXPECT_EQ(diff_apply(x1 * x2, x1 * x1 * x2), Poly::constant(2, 2) * x1);
    EXPECT_EQ(diff_apply(x2 * x2, x1 * x2), Poly(2));
}

TEST(Vandermonde, NormIsFactorial)
{
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(inner(vandermonde(n), vandermonde(n)), factorial(n)) << n;
        EXPECT_EQ(static_cast<int>(vandermonde(n).size()), static_cast<int>(factorial(n))) << n;
    }
}

TEST(Vandermonde, EqualsProductOfDifferences)
{
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(chi(family::ne(n), n), vandermonde(n)) << n;
}

TEST(Pairing, Examples)
{
    EXPECT_EQ(pair_with_vandermonde(family::ne(2), 2), 2);
    EXPECT_EQ(pair_with_vandermonde(family::ne(3), 3), 6);
    EXPECT_EQ(pair_with_vandermonde(family::cyclic3(), 3), 6);
    EXPECT_EQ(pair_with_vandermonde(family::sw(3), 3), -6);
    EXPECT_EQ(pair_with_vandermonde(family::lambda(6), 6), -360);
    EXPECT_EQ(pair_with_vandermonde(family::pi(4), 4), 8);
    EXPECT_EQ(pair_with_vandermonde(family::pi(5), 5), 15);
    EXPECT_EQ(pair_with_vandermonde({{1, 2}}, 3), 0);
    EXPECT_EQ(pair_with_vandermonde({{1, 2}, {2, 1}, {1, 3}}, 3), 3);
    EXPECT_THROW(pair_with_vandermonde({{1, 1}}, 2), unsupported_input);
}

TEST(Pairing, NorthEastIsFactorialAndSouthWestSigned)
{
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(pair_with_vandermonde(family::ne(n), n), factorial(n)) << n;
        EXPECT_EQ(pair_with_vandermonde(family::sw(n), n), (mu(n) % 2 ? -1 : 1) * factorial(n)) << n;
    }
}

TEST(PairingProperty, PrunedMatchesNaiveExhaustive)
{
    for (int n = 2; n <= 4; ++n)
        for (const auto &I : strict_patterns(n)) ASSERT_EQ(pair_with_vandermonde(I, n), pair_naive(I, n)) << I;
}

TEST(PairingProperty, PrunedMatchesNaiveRandomFive)
{
    Rng rng = make_rng(11);
    for (int t = 0; t < 1000; ++t) {
        const Pattern I = family::random_strict(5, rng);
        ASSERT_EQ(pair_with_vandermonde(I, 5), pair_naive(I, 5)) << I;
    }
}

TEST(PairingProperty, TransposeAndRelabelSigns)
{
    Rng rng = make_rng(12);
    for (int t = 0; t < 300; ++t) {
        const int n = 3 + t % 4;
        const Pattern I = family::random_strict(n, rng);
        const Permutation s = random_perm(n, rng);
        const BigInt p = pair_with_vandermonde(I, n);
        EXPECT_EQ(pair_with_vandermonde(transpose(I), n), (mu(n) % 2 ? -1 : 1) * p) << I;
        EXPECT_EQ(pair_with_vandermonde(apply_perm(s, I), n), s.sign() * p) << I;
        EXPECT_LE(abs(p), factorial(n));
        EXPECT_GE(norm_squared(I, n), factorial(n));
    }
}

TEST(PairingProperty, LambdaClosedForm)
{
    for (int n = 2; n <= 8; ++n) {
        const int s = (n + 1) / 4;
        const BigInt v = factorial(n) / int_pow(2, s);
        EXPECT_EQ(pair_with_vandermonde(family::lambda(n), n), s % 2 ? BigInt(-v) : v) << n;
    }
}

TEST(PairingProperty, PiIsDoubleFactorial)
{
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(pair_with_vandermonde(family::pi(n), n), double_factorial(n)) << n;
}

TEST(PairingProperty, JFamilyFormulaExhaustive)
{
    for (int n = 2; n <= 4; ++n)
        family::for_each_jparams(n, [&](const family::JParams &p) {
            ASSERT_EQ(pair_with_vandermonde(family::jfam(p), n), jfam_pairing_formula(p));
        });
}

TEST(PairingProperty, JFamilyFormulaRandom)
{
    Rng rng = make_rng(13);
    for (int n = 5; n <= 7; ++n)
        for (int t = 0; t < 100; ++t) {
            const auto p = family::random_jparams(n, rng);
            ASSERT_EQ(pair_with_vandermonde(family::jfam(p), n), jfam_pairing_formula(p)) << n;
        }
    for (int n = 2; n <= 7; ++n) {
        const BigInt v = n * ((n - 1) % 2 ? -1 : 1);
        EXPECT_EQ(jfam_pairing_formula(family::example_params(n)), v) << n;
        EXPECT_EQ(pair_with_vandermonde(family::jfam(family::example_params(n)), n), v) << n;
    }
}

TEST(InnerProperty, RelabelInvariance)
{
    Rng rng = make_rng(14);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 5;
        const Poly f = random_poly(n, 4, 8, rng), g = random_poly(n, 4, 8, rng);
        const auto s = random_perm(n, rng).images();
        EXPECT_EQ(inner(f.permute_vars(s), g.permute_vars(s)), inner(f, g));
        EXPECT_EQ(inner(f, g), inner(g, f));
    }
}

TEST(CoinvariantIdeal, Membership)
{
    for (int n = 2; n <= 5; ++n) {
        EXPECT_FALSE(in_coinvariant_ideal(vandermonde(n), n)) << n;
        for (int k = 1; k <= std::min(n, mu(n)); ++k) EXPECT_TRUE(in_coinvariant_ideal(elementary(k, n), n)) << n << ' ' << k;
    }
    EXPECT_TRUE(in_coinvariant_ideal(Poly(3), 3));
    EXPECT_FALSE(in_coinvariant_ideal(Poly::constant(3, 1), 3));
}

TEST(CoinvariantProperty, DerivativeOfVandermonde)
{
    Rng rng = make_rng(15);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 4;
        const Poly f = random_poly(n, mu(n), 6, rng);
        BigInt c = 1;
        for (int k = 1; k < n; ++k) c *= factorial(k);
        EXPECT_EQ(diff_apply(f, vandermonde(n)), Poly::constant(n, c * inner(f, vandermonde(n))));
    }
}

TEST(CoinvariantProperty, CongruentPolynomialsActAlike)
{
    Rng rng = make_rng(16);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 4;
        const int k = 1 + t % std::min(n, mu(n));
        const Poly f = random_poly(n, mu(n), 6, rng);
        const Poly g = f + elementary(k, n) * random_poly(n, mu(n) - k, 4, rng);
        EXPECT_TRUE(in_coinvariant_ideal(f - g, n));
        EXPECT_EQ(diff_apply(f, vandermonde(n)), diff_apply(g, vandermonde(n)));
    }
}

TEST(Glavna, ExhaustiveSmall)
{
    for (int n = 2; n <= 4; ++n)
        for (const auto &s : all_permutations(n))
            for (int m = 0; m < n; ++m) {
                std::vector<int> r(m);
                auto rec = [&](auto &&self, int k) -> void {
                    if (k > m) {
                        EXPECT_TRUE(verify_glavna(s, r, m, n));
                        return;
                    }
                    for (int q = 1; q <= k; ++q) {
                        r[k - 1] = s(q);
                        self(self, k + 1);
                    }
                };
                rec(rec, 1);
            }
    EXPECT_THROW(verify_glavna(Permutation::identity(3), {2}, 1, 3), invalid_parameters);
}
