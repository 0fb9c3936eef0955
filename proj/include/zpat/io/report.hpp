#ifndef ZPAT_IO_REPORT_HPP
#define ZPAT_IO_REPORT_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../classify.hpp"
#include "../orbit3/invariants.hpp"
#include "../orbit3/studies.hpp"
#include "../verify.hpp"

namespace zpat::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json pattern_json(const Pattern &I)
{
    json a = json::array();
    for (const auto &p : I) a.push_back({p.i, p.j});
    return a;
}

inline json complex_matrix_json(const orbit3::CMat &m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline json class_json(const ClassRecord &c)
{
    return {{"canonical_rep", pattern_json(c.canonical_rep)},
            {"mask", c.mask},
            {"orbit_size", c.orbit_size},
            {"pairing", to_string(c.pairing)},
            {"stab_dim", c.stab_dim},
            {"status", to_string(c.status)},
            {"complexity", c.complexity},
            {"weak_code", c.weak_code}};
}

inline json row_json(const Table1Row &r)
{
    return {{"n", r.n},
            {"total_patterns", to_string(r.total_patterns)},
            {"classes", r.num_classes},
            {"nonsingular", r.num_nonsingular},
            {"defective", r.num_defective},
            {"exceptional", r.num_exceptional},
            {"weak_classes", r.num_weak_classes}};
}

/// Differences between a computed row and the expected counts, as "field: got vs want".
inline std::vector<std::string> row_mismatches(const Table1Row &r, const Expectations &ex, bool weak_only = false)
{
    std::vector<std::string> out;
    const auto it = ex.table1.find(r.n);
    if (it == ex.table1.end()) return out;
    const auto &e = it->second;
    auto cmp = [&](const char *f, int got, int want) {
        if (got != want) out.push_back(std::string(f) + ": " + std::to_string(got) + " vs " + std::to_string(want));
    };
    cmp("weak_classes", r.num_weak_classes, e.weak);
    if (weak_only) return out;
    cmp("classes", r.num_classes, e.classes);
    cmp("nonsingular", r.num_nonsingular, e.nonsingular);
    cmp("defective", r.num_defective, e.defective);
    cmp("exceptional", r.num_exceptional, e.exceptional);
    return out;
}

/// Audit census: stab_dim histogram of the singular classes and orbit-size totals.
inline json census_json(const Classification &c)
{
    std::map<int, int> singular_dims;
    std::map<std::uint64_t, int> sizes;
    for (const auto &r : c.classes) {
        if (r.pairing == 0) ++singular_dims[r.stab_dim];
        ++sizes[r.orbit_size];
    }
    json d = json::object(), s = json::object();
    for (auto [k, v] : singular_dims) d[std::to_string(k)] = v;
    for (auto [k, v] : sizes) s[std::to_string(k)] = v;
    return {{"singular_classes_by_stab_dim", d}, {"classes_by_orbit_size", s}};
}

inline json classification_json(const Classification &c, const Expectations &ex, bool include_classes = true)
{
    json j = {{"schema_version", schema_version}, {"table1", row_json(c.row)}};
    const auto mm = row_mismatches(c.row, ex);
    j["expected_match"] = mm.empty();
    j["mismatches"] = mm;
    const auto it = ex.table1.find(c.row.n);
    if (it != ex.table1.end()) {
        const auto &e = it->second;
        j["expected"] = {{"classes", e.classes},
                         {"nonsingular", e.nonsingular},
                         {"defective", e.defective},
                         {"exceptional", e.exceptional},
                         {"weak_classes", e.weak}};
    }
    if (!mm.empty()) j["census"] = census_json(c);
    if (include_classes || !mm.empty()) {
        json a = json::array();
        for (const auto &r : c.classes) a.push_back(class_json(r));
        j["classes"] = a;
    }
    return j;
}

inline std::string classification_csv(const Classification &c)
{
    std::ostringstream os;
    os << "mask,canonical_rep,orbit_size,pairing,stab_dim,status,complexity,weak_code\n";
    for (const auto &r : c.classes)
        os << r.mask << ",\"" << to_string(r.canonical_rep) << "\"," << r.orbit_size << ',' << to_string(r.pairing)
           << ',' << r.stab_dim << ',' << to_string(r.status) << ',' << r.complexity << ',' << r.weak_code << '\n';
    return os.str();
}

inline json suite_json(const SuiteResult &s)
{
    json checks = json::array();
    for (const auto &c : s.checks) {
        json e = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (c.informational) e["informational"] = true;
        checks.push_back(e);
    }
    return {{"suite", s.suite}, {"pass", s.pass()}, {"passed", s.passed()}, {"total", s.checks.size()}, {"checks", checks}};
}

inline std::string suite_text(const SuiteResult &s)
{
    std::ostringstream os;
    for (const auto &c : s.checks)
        os << (c.informational ? "INFO" : c.pass ? "PASS" : "FAIL") << "  " << s.suite << ": " << c.name
           << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    os << s.suite << ": " << s.passed() << "/" << s.checks.size() << (s.pass() ? " pass" : " FAIL") << '\n';
    return os.str();
}

inline json invariants_json(const orbit3::InvariantVector &i)
{
    json a = json::array();
    for (int k = 1; k <= 16; ++k) a.push_back(i[k]);
    return a;
}

inline json flag_sample_json(const orbit3::FlagSample &f)
{
    using namespace orbit3;
    json clusters = json::array();
    json p1s = json::array(), ratios = json::array(), residuals = json::array();
    for (const auto &c : f.count.clusters) {
        Mat3 B = c.rep.B / c.rep.B.norm();
        for (const auto &p : family::cyclic3()) B(p.i - 1, p.j - 1) = 0;
        B -= Mat3::Identity() * (B.trace() / 3.0);
        json ratio = nullptr;
        if (relative_P1(B) >= p2_ratio_threshold) ratio = poly_P2_ratio(B);
        p1s.push_back(c.P1);
        ratios.push_back(ratio);
        residuals.push_back(c.rep.residual);
        clusters.push_back({{"hits", c.hits}, {"P1", c.P1}, {"P2_ratio", ratio}, {"residual", c.rep.residual},
                            {"B", complex_matrix_json(c.rep.B)}});
    }
    return {{"A", complex_matrix_json(f.A)},
            {"N", f.count.N},
            {"restarts", f.count.restarts},
            {"converged", f.count.converged},
            {"budget_exhausted", f.count.budget_exhausted},
            {"z_closed", f.count.z_closed},
            {"transversal", f.count.generic},
            {"generic", f.generic},
            {"min_relative_P1", f.count.min_relative_P1},
            {"P1", p1s},
            {"P2_ratio", ratios},
            {"cluster_residuals", residuals},
            {"clusters", clusters}};
}

} // namespace zpat::io

#endif // ZPAT_IO_REPORT_HPP
