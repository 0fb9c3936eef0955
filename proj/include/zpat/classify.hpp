#ifndef ZPAT_CLASSIFY_HPP
#define ZPAT_CLASSIFY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "pattern.hpp"
#include "stabdim.hpp"
#include "symfun.hpp"

namespace zpat {

inline constexpr int max_enumeration_n = 5;

inline int bit_of(int i, int j, int n) { return (i - 1) * n + (j - 1); }

/// Bit indices of the off-diagonal cells, ascending.
inline std::vector<int> offdiagonal_bits(int n)
{
    std::vector<int> b;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) b.push_back(bit_of(i, j, n));
    return b;
}

inline void check_enumeration_n(int n)
{
    if (n < 2 || n > max_enumeration_n)
        throw budget_exceeded("enumeration of P'_n is budgeted for 2 <= n <= 5");
}

/// Calls f(mask) for every strict pattern of size mu_n in Z_n x Z_n, in
/// increasing mask order.
template <typename F>
void enumerate_strict(int n, F &&f)
{
    check_enumeration_n(n);
    const auto bits = offdiagonal_bits(n);
    const int N = static_cast<int>(bits.size()), k = mu(n);
    std::uint64_t sub = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << N;
    while (sub < end) {
        std::uint64_t m = 0, s = sub;
        while (s) {
            m |= std::uint64_t{1} << bits[std::countr_zero(s)];
            s &= s - 1;
        }
        f(m);
        const std::uint64_t c = sub & (~sub + 1), r = sub + c; // Gosper's hack
        sub = (((r ^ sub) >> 2) / c) | r;
    }
}

inline std::vector<Pattern> strict_patterns(int n)
{
    std::vector<Pattern> out;
    enumerate_strict(n, [&](std::uint64_t m) { out.push_back(Pattern::from_mask(m, n)); });
    return out;
}

/// The 2 n! transformations generated by S_n and transposition, as bit maps.
class MaskGroup {
public:
    explicit MaskGroup(int n) : n_(n)
    {
        if (n < 1 || n > max_mask_n) throw unsupported_input("occupancy masks support 1 <= n <= 8");
        for (const auto &s : all_permutations(n))
            for (int t = 0; t < 2; ++t) {
                std::vector<std::uint8_t> img(n * n);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        img[bit_of(i, j, n)] = static_cast<std::uint8_t>(t ? bit_of(s(j), s(i), n) : bit_of(s(i), s(j), n));
                maps_.push_back(std::move(img));
            }
    }

    int n() const { return n_; }
    std::size_t size() const { return maps_.size(); }

    std::uint64_t apply(std::size_t g, std::uint64_t m) const
    {
        const auto &img = maps_[g];
        std::uint64_t r = 0;
        while (m) {
            r |= std::uint64_t{1} << img[std::countr_zero(m)];
            m &= m - 1;
        }
        return r;
    }

    std::uint64_t canonical(std::uint64_t m) const
    {
        std::uint64_t best = m;
        for (std::size_t g = 0; g < maps_.size(); ++g) best = std::min(best, apply(g, m));
        return best;
    }

private:
    int n_;
    std::vector<std::vector<std::uint8_t>> maps_;
};

/// Minimum mask over all images under S_n and transposition.
inline Pattern canonical_form(const Pattern &I, int n)
{
    return Pattern::from_mask(MaskGroup(n).canonical(I.mask(n)), n);
}

/// Base-3 code of the pair-multiplicity function {i,j} -> |I n {(i,j),(j,i)}|,
/// minimized over relabelings by S_n.
inline std::uint64_t weak_canonical_form(const Pattern &I, int n)
{
    require_fits(I, n);
    std::vector<int> mult(n * n, 0);
    for (const auto &p : I)
        if (!p.is_diagonal()) ++mult[(std::min(p.i, p.j) - 1) * n + std::max(p.i, p.j) - 1];
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto &s : all_permutations(n)) {
        std::vector<int> m2(n * n, 0);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int a = std::min(s(i), s(j)), b = std::max(s(i), s(j));
                m2[(a - 1) * n + b - 1] = mult[(i - 1) * n + j - 1];
            }
        std::uint64_t code = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) code = code * 3 + m2[(i - 1) * n + j - 1];
        best = std::min(best, code);
    }
    return best;
}

enum class Status { nonsingular, defective, exceptional };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::nonsingular: return "nonsingular";
    case Status::defective: return "defective";
    default: return "exceptional";
    }
}

struct ClassRecord {
    Pattern canonical_rep;
    std::uint64_t mask = 0;
    std::uint64_t orbit_size = 0;
    BigInt pairing;
    int stab_dim = 0;
    Status status = Status::nonsingular;
    int complexity = 0;
    std::uint64_t weak_code = 0;
};

struct Table1Row {
    int n = 0;
    BigInt total_patterns;
    int num_classes = 0;
    int num_nonsingular = 0;
    int num_defective = 0;
    int num_exceptional = 0;
    int num_weak_classes = 0;
};

struct Classification {
    Table1Row row;
    std::vector<ClassRecord> classes; ///< ordered by canonical mask
};

inline Status classify_status(const BigInt &pairing, int stab_dim, int n)
{
    if (pairing != 0) return Status::nonsingular;
    return stab_dim > n ? Status::defective : Status::exceptional;
}

/// Orbit census by a single increasing-mask sweep: the first unvisited mask of
/// each orbit is its minimum, i.e. its canonical form.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> orbit_census(int n)
{
    check_enumeration_n(n);
    const MaskGroup G(n);
    std::vector<std::uint64_t> visited((std::uint64_t{1} << (n * n)) / 64 + 1, 0);
    auto test = [&](std::uint64_t m) { return (visited[m >> 6] >> (m & 63)) & 1u; };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> orbits; // (canonical mask, size)
    enumerate_strict(n, [&](std::uint64_t m) {
        if (test(m)) return;
        std::uint64_t size = 0;
        for (std::size_t g = 0; g < G.size(); ++g) {
            const std::uint64_t im = G.apply(g, m);
            if (!test(im)) {
                visited[im >> 6] |= std::uint64_t{1} << (im & 63);
                ++size;
            }
        }
        orbits.emplace_back(m, size);
    });
    return orbits;
}

inline Classification classify_all(int n, int threads = 0)
{
    const auto orbits = orbit_census(n);
    Classification out;
    out.classes.resize(orbits.size());
    parallel_for(orbits.size(), threads, [&](std::size_t k) {
        ClassRecord &r = out.classes[k];
        r.mask = orbits[k].first;
        r.orbit_size = orbits[k].second;
        r.canonical_rep = Pattern::from_mask(r.mask, n);
        r.pairing = pair_with_vandermonde(r.canonical_rep, n);
        r.stab_dim = stabilizer_dim(r.canonical_rep, n);
        r.status = classify_status(r.pairing, r.stab_dim, n);
        r.complexity = complexity(r.canonical_rep);
        r.weak_code = weak_canonical_form(r.canonical_rep, n);
    });
    Table1Row &row = out.row;
    row.n = n;
    row.total_patterns = binomial(2 * mu(n), mu(n));
    row.num_classes = static_cast<int>(out.classes.size());
    std::set<std::uint64_t> weak;
    for (const auto &c : out.classes) {
        weak.insert(c.weak_code);
        switch (c.status) {
        case Status::nonsingular: ++row.num_nonsingular; break;
        case Status::defective: ++row.num_defective; break;
        case Status::exceptional: ++row.num_exceptional; break;
        }
    }
    row.num_weak_classes = static_cast<int>(weak.size());
    return out;
}

// ---------------------------------------------------------------------------
// Audits

struct Table2Entry {
    Pattern pattern;
    BigInt pairing;
    int stab_dim = 0;
    std::uint64_t canonical_mask = 0;
};

struct Table2Report {
    std::vector<Table2Entry> rows;
    bool all_singular = false;
    bool all_nondefective = false;
    bool pairwise_distinct = false;
    int exceptional_classes = 0;
    bool exhausts_exceptional = false;
    bool pass() const { return all_singular && all_nondefective && pairwise_distinct && exhausts_exceptional; }
};

inline Table2Report check_table2(int threads = 0)
{
    constexpr int n = 4;
    Table2Report rep;
    const MaskGroup G(n);
    std::set<std::uint64_t> canon;
    rep.all_singular = rep.all_nondefective = true;
    for (int r = 1; r <= 7; ++r) {
        Table2Entry e;
        e.pattern = family::table2(r);
        e.pairing = pair_with_vandermonde(e.pattern, n);
        e.stab_dim = stabilizer_dim(e.pattern, n);
        e.canonical_mask = G.canonical(e.pattern.mask(n));
        rep.all_singular = rep.all_singular && e.pairing == 0;
        rep.all_nondefective = rep.all_nondefective && e.stab_dim <= n;
        canon.insert(e.canonical_mask);
        rep.rows.push_back(std::move(e));
    }
    rep.pairwise_distinct = canon.size() == 7;
    std::set<std::uint64_t> exc;
    const auto cls = classify_all(n, threads);
    for (const auto &c : cls.classes)
        if (c.status == Status::exceptional) exc.insert(c.mask);
    rep.exceptional_classes = static_cast<int>(exc.size());
    rep.exhausts_exceptional = exc == canon;
    return rep;
}

struct ComplexityOneReport {
    int n = 0;
    int weak_classes = 0;         ///< among complexity-one patterns
    BigInt pairing_a;             ///< at (NE_n \ {(1,2)}) u {(3,1)}
    BigInt pairing_b;             ///< at (NE_n \ {(1,2)}) u {(4,3)}
    int stab_dim_b = 0;
    bool a_classes_half_factorial = false; ///< |pairing| = n!/2 on every class weakly equivalent to a
    bool b_classes_singular = false;       ///< pairing 0 on every class weakly equivalent to b
    bool pass() const
    {
        return weak_classes == 2 && abs(pairing_a) == factorial(n) / 2 && pairing_b == 0 && stab_dim_b > n &&
               a_classes_half_factorial && b_classes_singular;
    }
};

inline ComplexityOneReport check_complexity_one(int n, int threads = 0)
{
    if (n < 4) throw invalid_parameters("check_complexity_one: n must be >= 4");
    check_enumeration_n(n);
    ComplexityOneReport rep;
    rep.n = n;
    const Pattern a = family::complexity_one_a(n), b = family::complexity_one_b(n);
    rep.pairing_a = pair_with_vandermonde(a, n);
    rep.pairing_b = pair_with_vandermonde(b, n);
    rep.stab_dim_b = stabilizer_dim(b, n);
    const std::uint64_t wa = weak_canonical_form(a, n), wb = weak_canonical_form(b, n);
    std::set<std::uint64_t> weak;
    rep.a_classes_half_factorial = rep.b_classes_singular = true;
    const auto cls = classify_all(n, threads);
    for (const auto &c : cls.classes) {
        if (c.complexity != 1) continue;
        weak.insert(c.weak_code);
        if (c.weak_code == wa)
            rep.a_classes_half_factorial = rep.a_classes_half_factorial && abs(c.pairing) == factorial(n) / 2;
        else if (c.weak_code == wb)
            rep.b_classes_singular = rep.b_classes_singular && c.pairing == 0;
    }
    rep.weak_classes = static_cast<int>(weak.size());
    return rep;
}

struct HessEntry {
    int k = 0;
    BigInt computed;
    BigInt expected;
};

inline BigInt hess_formula(int k, int n)
{
    const BigInt v = binomial(n, k) * binomial(n - 2, k - 1);
    return (n - 1) % 2 ? BigInt(-v) : v;
}

inline std::vector<HessEntry> verify_conjecture_hess(int n)
{
    if (n < 3 || n > 8) throw budget_exceeded("verify_conjecture_hess is budgeted for 3 <= n <= 8");
    std::vector<HessEntry> out;
    for (int k = 1; k <= n - 1; ++k)
        out.push_back({k, pair_with_vandermonde(family::hess(k, n), n), hess_formula(k, n)});
    return out;
}

struct ProblemsReport {
    int n = 0;
    std::uint64_t patterns_covered = 0;
    BigInt max_abs_pairing;
    BigInt min_norm;
    Pattern argmax;
    Pattern argmin;
    bool max_only_at_vandermonde = true; ///< every maximizer has chi_I = +-chi_n
    bool min_only_at_vandermonde = true;
    bool counterexample = false;         ///< pairing > n! or norm < n! somewhere
};

/// Exhaustive scan of P'_n. Norm and |pairing| are class invariants, so one
/// representative per equivalence class covers every pattern.
inline ProblemsReport scan_problems_31_32(int n, int threads = 0)
{
    const auto cls = classify_all(n, threads);
    const Poly vn = vandermonde(n);
    std::vector<BigInt> norms(cls.classes.size());
    std::vector<char> is_vn(cls.classes.size());
    parallel_for(cls.classes.size(), threads, [&](std::size_t k) {
        const Poly c = chi(cls.classes[k].canonical_rep, n);
        norms[k] = inner(c, c);
        is_vn[k] = c == vn || c == -vn;
    });
    ProblemsReport rep;
    rep.n = n;
    const BigInt nf = factorial(n);
    bool first = true;
    for (std::size_t k = 0; k < cls.classes.size(); ++k) {
        const auto &c = cls.classes[k];
        rep.patterns_covered += c.orbit_size;
        const BigInt ap = abs(c.pairing);
        if (first || ap > rep.max_abs_pairing) rep.max_abs_pairing = ap, rep.argmax = c.canonical_rep;
        if (first || norms[k] < rep.min_norm) rep.min_norm = norms[k], rep.argmin = c.canonical_rep;
        first = false;
        if (ap > nf || norms[k] < nf) rep.counterexample = true;
    }
    for (std::size_t k = 0; k < cls.classes.size(); ++k) {
        if (abs(cls.classes[k].pairing) == rep.max_abs_pairing && !is_vn[k]) rep.max_only_at_vandermonde = false;
        if (norms[k] == rep.min_norm && !is_vn[k]) rep.min_only_at_vandermonde = false;
    }
    return rep;
}

inline bool is_nonsingular_partial(const Pattern &I, int n) { return !in_coinvariant_ideal(chi(I, n), n); }

/// Greedy extension of a nonsingular strict pattern to a nonsingular member of
/// P'_n, backtracking if a greedy step dead-ends.
inline std::optional<Pattern> search_nonsingular_extension(const Pattern &I, int n)
{
    require_strict_fit(I, n);
    if (static_cast<int>(I.size()) > mu(n)) throw invalid_parameters("pattern larger than mu_n");
    if (!is_nonsingular_partial(I, n)) throw invalid_parameters("starting pattern is singular");
    std::vector<Position> cand;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) cand.push_back({i, j});
    auto rec = [&](auto &&self, const Pattern &cur) -> std::optional<Pattern> {
        if (static_cast<int>(cur.size()) == mu(n)) return cur;
        for (const auto &p : cand) {
            if (cur.contains(p)) continue;
            const Pattern next = set_union(cur, {p});
            if (is_nonsingular_partial(next, n))
                if (auto r = self(self, next)) return r;
        }
        return std::nullopt;
    };
    return rec(rec, I);
}

/// Number of equivalence classes met by the patterns J(sigma, i).
inline int jfam_class_count(int n)
{
    if (n < 2 || n > max_mask_n) throw budget_exceeded("jfam_class_count supports 2 <= n <= 8");
    const MaskGroup G(n);
    std::set<std::uint64_t> canon;
    family::for_each_jparams(n, [&](const family::JParams &p) { canon.insert(G.canonical(family::jfam(p).mask(n))); });
    return static_cast<int>(canon.size());
}

} // namespace zpat

#endif // ZPAT_CLASSIFY_HPP
