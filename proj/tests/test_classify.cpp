#include <gtest/gtest.h>

#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <zpat/classify.hpp>
#include <zpat/families.hpp>
#include <zpat/orbit3/cmat.hpp>
#include <zpat/rng.hpp>
#include <zpat/stabdim.hpp>

using namespace zpat;

namespace {

// Floating-point stabilizer dimension for a strict pattern: nullity of
// X -> ([X, A]_pq)_{A, (p,q) in I} over a real basis of u(n).
int svd_stab_dim(const Pattern &I, int n)
{
    using orbit3::CMat;
    std::vector<CMat> LI;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l && !I.contains({k + 1, l + 1})) {
                CMat e = CMat::Zero(n, n);
                e(k, l) = 1;
                LI.push_back(e);
            }
    for (int k = 0; k + 1 < n; ++k) {
        CMat e = CMat::Zero(n, n);
        e(k, k) = 1;
        e(k + 1, k + 1) = -1;
        LI.push_back(e);
    }
    const auto U = orbit3::skew_basis(n);
    Eigen::MatrixXd M(2 * I.size() * LI.size(), U.size());
    for (std::size_t c = 0; c < U.size(); ++c) {
        int r = 0;
        for (const auto &A : LI) {
            const CMat C = U[c] * A - A * U[c];
            for (const auto &p : I) {
                M(r++, c) = C(p.i - 1, p.j - 1).real();
                M(r++, c) = C(p.i - 1, p.j - 1).imag();
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    svd.setThreshold(1e-8);
    return static_cast<int>(U.size()) - static_cast<int>(svd.rank());
}

// Weak classes as connected components of the flip and relabeling moves.
int weak_components(int n)
{
    const auto pats = strict_patterns(n);
    std::map<Pattern, int> id;
    for (const auto &I : pats) id.emplace(I, static_cast<int>(id.size()));
    std::vector<int> parent(pats.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](const Pattern &a, const Pattern &b) { parent[find(id.at(a))] = find(id.at(b)); };
    const auto perms = all_permutations(n);
    for (const auto &I : pats) {
        for (const auto &p : I)
            if (!I.contains(p.transposed())) unite(I, flip(I, p));
        for (const auto &s : perms) unite(I, apply_perm(s, I));
    }
    std::set<int> roots;
    for (std::size_t k = 0; k < pats.size(); ++k) roots.insert(find(static_cast<int>(k)));
    return static_cast<int>(roots.size());
}

struct Row {
    int classes, nonsingular, defective, exceptional, weak;
};

const std::map<int, Row> table1{{2, {1, 1, 0, 0, 1}}, {3, {3, 3, 0, 0, 2}}, {4, {30, 19, 4, 7, 12}}};

} // namespace

TEST(Enumeration, CountsAreBinomial)
{
    for (int n = 2; n <= 4; ++n) EXPECT_EQ(strict_patterns(n).size(), binomial(2 * mu(n), mu(n)).convert_to<std::size_t>());
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(12, 6), 924);
    EXPECT_EQ(binomial(20, 10), 184756);
    EXPECT_THROW(classify_all(6), budget_exceeded);
}

TEST(Census, OrbitSizesSumToTotal)
{
    for (int n = 2; n <= 5; ++n) {
        const auto orbits = orbit_census(n);
        std::uint64_t total = 0;
        for (const auto &[m, size] : orbits) {
            total += size;
            EXPECT_EQ(MaskGroup(n).canonical(m), m);
            EXPECT_EQ((2 * factorial(n)) % size, 0);
        }
        EXPECT_EQ(BigInt(total), binomial(2 * mu(n), mu(n))) << n;
    }
}

TEST(Classify, Table1SmallRows)
{
    for (const auto &[n, want] : table1) {
        const auto c = classify_all(n);
        EXPECT_EQ(c.row.num_classes, want.classes) << n;
        EXPECT_EQ(c.row.num_nonsingular, want.nonsingular) << n;
        EXPECT_EQ(c.row.num_defective, want.defective) << n;
        EXPECT_EQ(c.row.num_exceptional, want.exceptional) << n;
        EXPECT_EQ(c.row.num_weak_classes, want.weak) << n;
    }
}

TEST(ClassifyProperty, RecordInvariants)
{
    for (int n = 2; n <= 4; ++n)
        for (const auto &r : classify_all(n).classes) {
            EXPECT_GE(r.stab_dim, n) << r.canonical_rep;
            if (r.pairing != 0) EXPECT_EQ(r.stab_dim, n) << r.canonical_rep;
            EXPECT_EQ(r.status, classify_status(r.pairing, r.stab_dim, n));
            EXPECT_EQ(r.canonical_rep.mask(n), r.mask);
            EXPECT_EQ(r.pairing, pair_naive(r.canonical_rep, n));
        }
}

TEST(ClassifyProperty, WeakPartitionMatchesMoves)
{
    for (int n = 2; n <= 4; ++n) {
        std::set<std::uint64_t> codes;
        for (const auto &I : strict_patterns(n)) codes.insert(weak_canonical_form(I, n));
        EXPECT_EQ(static_cast<int>(codes.size()), weak_components(n)) << n;
        EXPECT_EQ(weak_components(n), table1.at(n).weak) << n;
    }
}

TEST(CanonicalProperty, InvariantUnderGroup)
{
    Rng rng = make_rng(21);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + t % 5;
        const Pattern I = family::random_strict(n, rng);
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        const Permutation s(v);
        const Pattern c = canonical_form(I, n);
        EXPECT_EQ(canonical_form(apply_perm(s, I), n), c);
        EXPECT_EQ(canonical_form(transpose(I), n), c);
        EXPECT_EQ(canonical_form(c, n), c);
        EXPECT_LE(c.mask(n), I.mask(n));
        EXPECT_EQ(weak_canonical_form(apply_perm(s, I), n), weak_canonical_form(I, n));
        EXPECT_EQ(stabilizer_dim(apply_perm(s, I), n), stabilizer_dim(I, n));
        EXPECT_EQ(stabilizer_dim(transpose(I), n), stabilizer_dim(I, n));
    }
}

TEST(StabDim, Examples)
{
    EXPECT_EQ(stabilizer_dim(family::ne(4), 4), 4);
    EXPECT_FALSE(is_defective(family::ne(4), 4));
    EXPECT_EQ(stabilizer_dim({}, 3), 9);
    EXPECT_EQ(stabilizer_dim(family::complexity_one_b(4), 4), svd_stab_dim(family::complexity_one_b(4), 4));
    EXPECT_GT(stabilizer_dim(family::complexity_one_b(4), 4), 4);
    EXPECT_THROW(stabilizer_dim(family::diagonal(3), 3), unsupported_input);
}

TEST(StabDimProperty, MatchesSvdRank)
{
    Rng rng = make_rng(22);
    for (int n = 4; n <= 5; ++n)
        for (int t = 0; t < 200; ++t) {
            const Pattern I = family::random_strict(n, rng);
            ASSERT_EQ(stabilizer_dim(I, n), svd_stab_dim(I, n)) << I;
        }
    for (const auto &r : classify_all(4).classes) ASSERT_EQ(r.stab_dim, svd_stab_dim(r.canonical_rep, 4));
}

TEST(StabDimProperty, SystemRowsAreIntegral)
{
    const auto sys = stabilizer_system(family::lambda(4), 4);
    EXPECT_EQ(sys.unknowns, 16);
    EXPECT_EQ(integer_rank(sys.rows, sys.unknowns), 16 - stabilizer_dim(family::lambda(4), 4));
    EXPECT_EQ(integer_rank({{1, 2}, {2, 4}, {0, 0}}, 2), 1);
    EXPECT_EQ(integer_rank({{1, 0}, {0, 3}}, 2), 2);
}

TEST(Audits, TableTwo)
{
    const auto rep = check_table2();
    EXPECT_TRUE(rep.all_singular);
    EXPECT_TRUE(rep.all_nondefective);
    EXPECT_TRUE(rep.pairwise_distinct);
    EXPECT_EQ(rep.exceptional_classes, 7);
    EXPECT_TRUE(rep.exhausts_exceptional);
}

TEST(Audits, ComplexityOne)
{
    const auto rep = check_complexity_one(4);
    EXPECT_EQ(rep.weak_classes, 2);
    EXPECT_EQ(abs(rep.pairing_a), 12);
    EXPECT_EQ(rep.pairing_b, 0);
    EXPECT_GT(rep.stab_dim_b, 4);
    EXPECT_TRUE(rep.pass());
    EXPECT_THROW(check_complexity_one(3), invalid_parameters);
}

TEST(Audits, Hess)
{
    EXPECT_EQ(hess_formula(2, 4), -12);
    EXPECT_EQ(pair_with_vandermonde(family::hess(2, 4), 4), -12);
    for (int n = 3; n <= 7; ++n)
        for (const auto &e : verify_conjecture_hess(n)) EXPECT_EQ(e.computed, e.expected) << n << ' ' << e.k;
    EXPECT_THROW(verify_conjecture_hess(9), budget_exceeded);
}

TEST(Audits, ProblemsSmall)
{
    for (int n = 2; n <= 4; ++n) {
        const auto rep = scan_problems_31_32(n);
        EXPECT_EQ(BigInt(rep.patterns_covered), binomial(2 * mu(n), mu(n)));
        EXPECT_EQ(rep.max_abs_pairing, factorial(n));
        EXPECT_EQ(rep.min_norm, factorial(n));
        EXPECT_FALSE(rep.counterexample);
        EXPECT_TRUE(rep.max_only_at_vandermonde);
        EXPECT_TRUE(rep.min_only_at_vandermonde);
    }
}

TEST(Extension, FindsNonsingularCompletion)
{
    for (const Pattern &start : {Pattern{}, Pattern{{1, 2}}, Pattern{{2, 1}, {3, 1}}, Pattern{{1, 2}, {2, 1}}}) {
        if (!is_nonsingular_partial(start, 4)) continue;
        const auto r = search_nonsingular_extension(start, 4);
        ASSERT_TRUE(r.has_value()) << start;
        EXPECT_EQ(static_cast<int>(r->size()), mu(4));
        EXPECT_TRUE(std::includes(r->begin(), r->end(), start.begin(), start.end()));
        EXPECT_NE(pair_with_vandermonde(*r, 4), 0);
    }
    EXPECT_THROW(search_nonsingular_extension(family::table2(1), 4), invalid_parameters);
}

TEST(JFamilyClasses, SmallCounts)
{
    EXPECT_EQ(jfam_class_count(2), 1);
    EXPECT_EQ(jfam_class_count(3), 2);
    EXPECT_EQ(jfam_class_count(4), 7);
    EXPECT_EQ(jfam_class_count(5), 34);
}
