#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include <zpat/classify.hpp>
#include <zpat/families.hpp>
#include <zpat/io/parse.hpp>
#include <zpat/pattern.hpp>
#include <zpat/rng.hpp>

using namespace zpat;

namespace {

// Brute-force membership straight from the set-builder definitions.
bool in_pi(int n, int i, int j) { return (i + j <= n && i != j) || (j == n - i + 1 && 2 * i <= n); }


} // namespace

TEST(Pattern, TransposeExamples)
{
    EXPECT_EQ(transpose({{1, 2}}), (Pattern{{2, 1}}));
    EXPECT_EQ(transpose(family::ne(3)), family::sw(3));
    EXPECT_TRUE(is_symmetric(family::lambda(4)));
    EXPECT_FALSE(is_symmetric(family::lambda(6)));
}

TEST(Pattern, Predicates)
{
    EXPECT_FALSE(is_strict({{1, 1}}));
    EXPECT_TRUE(is_strict(family::ne(4)));
    EXPECT_FALSE(is_strict(family::diagonal(3)));
    EXPECT_FALSE(is_proper(family::diagonal(3), 3));
    EXPECT_TRUE(is_proper({{1, 1}, {2, 2}}, 3));
    EXPECT_TRUE(is_proper({}, 2));
    EXPECT_THROW(is_proper({{3, 1}}, 2), position_out_of_range);
    EXPECT_TRUE(is_simple(family::ne(4)));
    EXPECT_FALSE(is_simple({{1, 2}, {2, 1}}));
}

TEST(Pattern, PiFourSimplicityByMembership)
{
    // (1,4) comes from the anti-diagonal part, (4,1) would need i + j <= 4.
    EXPECT_TRUE(in_pi(4, 1, 4));
    EXPECT_FALSE(in_pi(4, 4, 1));
    bool simple = true;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (in_pi(4, i, j) && in_pi(4, j, i)) simple = false;
    EXPECT_EQ(is_simple(family::pi(4)), simple);
}

TEST(Pattern, Complexity)
{
    EXPECT_EQ(complexity(family::ne(4)), 0);
    EXPECT_EQ(complexity({{1, 2}, {2, 1}, {1, 3}}), 1);
    for (int n : {4, 5, 8, 9}) EXPECT_EQ(2 * complexity(family::lambda(n)), static_cast<int>(family::lambda(n).size())) << n;
}

TEST(Pattern, PermutationAction)
{
    const Pattern I{{1, 2}};
    EXPECT_EQ(apply_perm(Permutation::identity(2), I), I);
    EXPECT_EQ(apply_perm(Permutation({2, 1}), I), (Pattern{{2, 1}}));
    for (int n = 4; n <= 7; ++n)
        EXPECT_EQ(apply_perm(family::lambda_sigma(n), family::lambda_prime(n)), family::lambda(n)) << n;
}

TEST(Pattern, FlipRules)
{
    EXPECT_EQ(flip({{1, 2}}, {1, 2}), (Pattern{{2, 1}}));
    EXPECT_THROW(flip({{1, 2}, {2, 1}}, {1, 2}), flip_not_allowed);
    Pattern I = family::sw(3);
    for (const auto &p : family::sw(3)) I = flip(I, p);
    EXPECT_EQ(I, family::ne(3));
}

TEST(Pattern, TranslateAndBlockExtend)
{
    const Pattern I{{1, 2}};
    EXPECT_EQ(translate({0, 0}, I), I);
    EXPECT_EQ(translate({2, 2}, I), (Pattern{{3, 4}}));
    EXPECT_EQ(block_extend(family::ne(2), {}, 2, 3), family::ne(3));
    const Pattern big = block_extend(family::ne(2), family::sw(2), 2, 4);
    EXPECT_EQ(static_cast<int>(big.size()), mu(4));
    EXPECT_TRUE(is_strict(big));
    EXPECT_THROW(block_extend(family::ne(3), {}, 2, 4), dimension_mismatch);
}

TEST(Pattern, PermutationSignAndComposition)
{
    Rng rng = make_rng(1);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> a(5), b(5);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const Permutation s(a), r(b);
        EXPECT_EQ((s * r).sign(), s.sign() * r.sign());
        EXPECT_EQ(s * s.inverse(), Permutation::identity(5));
    }
    EXPECT_EQ(Permutation::from_transpositions(3, {{1, 2}}).sign(), -1);
}

TEST(PatternProperty, GroupActionLaws)
{
    Rng rng = make_rng(2);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 5;
        const Pattern I = family::random_strict(n, rng);
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const Permutation s(a), r(b);
        EXPECT_EQ(transpose(transpose(I)), I);
        EXPECT_EQ(apply_perm(s * r, I), apply_perm(s, apply_perm(r, I)));
        EXPECT_EQ(complexity(apply_perm(s, I)), complexity(I));
        EXPECT_EQ(complexity(transpose(I)), complexity(I));
    }
}

TEST(PatternProperty, FlipPreservesPairMultiplicities)
{
    Rng rng = make_rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 4;
        const Pattern I = family::random_strict(n, rng);
        for (const auto &p : I) {
            if (I.contains(p.transposed())) continue;
            const Pattern F = flip(I, p);
            EXPECT_EQ(F.size(), I.size());
            EXPECT_EQ(weak_canonical_form(F, n), weak_canonical_form(I, n));
            EXPECT_EQ(I.size() - complexity(I), F.size() - complexity(F));
        }
    }
}

TEST(Families, LambdaFourMatchesDisplayedZeros)
{
    EXPECT_EQ(family::lambda(4), (Pattern{{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 1}}));
    EXPECT_EQ(family::lambda(3), (Pattern{{1, 2}, {1, 3}, {3, 1}}));
}

TEST(Families, PiFiveByMembership)
{
    std::vector<Position> ps;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (in_pi(5, i, j)) ps.push_back({i, j});
    EXPECT_EQ(family::pi(5), Pattern(ps));
    EXPECT_EQ(static_cast<int>(family::pi(5).size()), mu(5));
}

TEST(Families, PiAsJFamily)
{
    for (int n = 4; n <= 6; ++n) EXPECT_EQ(family::jfam(family::pi_params(n)), family::pi(n)) << n;
}

TEST(Families, JFamilySmallExample)
{
    const family::JParams p{Permutation::identity(3), {-1, 1}};
    EXPECT_EQ(family::jfam(p), (Pattern{{2, 1}, {3, 1}, {1, 3}}));
}

TEST(Families, JFamilyValidation)
{
    EXPECT_THROW(family::jfam({Permutation::identity(3), {2, 1}}), invalid_parameters);
    EXPECT_THROW(family::jfam({Permutation::identity(3), {1, 1}}), invalid_parameters);
    EXPECT_THROW(family::jfam({Permutation::identity(3), {1}}), invalid_parameters);
    EXPECT_THROW(family::jfam({Permutation::identity(3), {0, 1}}), invalid_parameters);
}

TEST(FamiliesProperty, JFamilyInvariants)
{
    Rng rng = make_rng(4);
    for (int n = 2; n <= 7; ++n)
        for (int t = 0; t < 100; ++t) {
            const auto p = family::random_jparams(n, rng);
            const Pattern J = family::jfam(p);
            EXPECT_EQ(static_cast<int>(J.size()), mu(n));
            EXPECT_TRUE(is_strict(J));
            auto q = p;
            for (int &v : q.seq) v = -v;
            EXPECT_EQ(family::jfam(q), transpose(J));
        }
}

TEST(FamiliesProperty, EveryJParamIsValid)
{
    for (int n = 2; n <= 4; ++n) {
        long count = 0;
        family::for_each_jparams(n, [&](const family::JParams &p) {
            EXPECT_NO_THROW(family::validate(p));
            ++count;
        });
        long nf = 1;
        for (int k = 2; k <= n; ++k) nf *= k;
        EXPECT_EQ(count, nf * nf);
    }
}

TEST(Families, LambdaSymmetryRule)
{
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(is_symmetric(family::lambda(n)), n % 4 == 0 || n % 4 == 1) << n;
}

TEST(Families, HessShape)
{
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            const Pattern J = family::hess(k, n);
            EXPECT_EQ(static_cast<int>(J.size()), mu(n));
            EXPECT_TRUE(is_strict(J));
        }
    EXPECT_THROW(family::hess(0, 4), invalid_parameters);
}

TEST(Parse, PatternLiteral)
{
    EXPECT_EQ(io::parse_pattern("[[1,3],[2,1],[3,2]]"), family::cyclic3());
    EXPECT_EQ(io::parse_pattern("[]"), Pattern{});
    EXPECT_THROW(io::parse_pattern("[[1,2,3]]"), invalid_parameters);
    EXPECT_THROW(io::parse_pattern("[[0,1]]"), position_out_of_range);
    EXPECT_THROW(io::parse_pattern("not json"), invalid_parameters);
}

TEST(Parse, Families)
{
    EXPECT_EQ(io::parse_family("lambda:5").pattern, family::lambda(5));
    EXPECT_EQ(io::parse_family("pi:6").n, 6);
    EXPECT_EQ(io::parse_family("cyclic").pattern, family::cyclic3());
    EXPECT_EQ(io::parse_family("table2:3").pattern, family::table2(3));
    EXPECT_EQ(io::parse_family("hess:k=2,n=5").pattern, family::hess(2, 5));
    const auto j = io::parse_family("jfam:sigma=1,3,2,i=-1,1");
    EXPECT_EQ(j.n, 3);
    EXPECT_EQ(j.pattern, family::jfam({Permutation({1, 3, 2}), {-1, 1}}));
    EXPECT_THROW(io::parse_family("nosuch:3"), invalid_parameters);
    EXPECT_THROW(io::parse_family("lambda:x"), invalid_parameters);
    EXPECT_THROW(io::parse_family("jfam:sigma=1,2"), invalid_parameters);
    EXPECT_THROW(io::parse_family("table2:9"), invalid_parameters);
}

TEST(Parse, Matrices)
{
    EXPECT_EQ(io::load_matrix("zero"), orbit3::CMat::Zero(3, 3));
    const auto m = io::load_matrix("[[[1,2],[0,0]],[[0,0],[-1,-2]]]");
    EXPECT_EQ(m.rows(), 2);
    EXPECT_EQ(m(0, 0), orbit3::cd(1, 2));
    EXPECT_EQ(m(1, 1), orbit3::cd(-1, -2));
    EXPECT_THROW(io::load_matrix("[[[1,2]],[[0,0]]]"), dimension_mismatch);
}
