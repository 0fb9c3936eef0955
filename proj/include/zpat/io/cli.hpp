#ifndef ZPAT_IO_CLI_HPP
#define ZPAT_IO_CLI_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "../classify.hpp"
#include "../error.hpp"
#include "../orbit3/invariants.hpp"
#include "../orbit3/studies.hpp"
#include "../stabdim.hpp"
#include "../symfun.hpp"
#include "../verify.hpp"
#include "expected.hpp"
#include "parse.hpp"
#include "report.hpp"

#ifndef ZPAT_EXPECTED_PATH
#define ZPAT_EXPECTED_PATH "data/expected.json"
#endif

namespace zpat::io {

struct RunConfig {
    std::string command;
    int n = 0;
    std::string pattern;
    std::string family;
    std::string matrix = "zero";
    std::string suite;
    std::uint64_t seed = 0;
    int restarts = 2000;
    int samples = 50;
    int threads = 0;
    int max_n = 7;
    std::string out;
    std::string format = "text";
    std::string expected = ZPAT_EXPECTED_PATH;
    bool weak = false;
};

namespace cli_detail {

/// Pattern and ambient size from --pattern / --family / --n.
inline NamedPattern resolve_pattern(const RunConfig &c)
{
    if (c.pattern.empty() == c.family.empty()) throw invalid_parameters("give exactly one of --pattern or --family");
    NamedPattern p = c.family.empty() ? NamedPattern{parse_pattern(c.pattern), 0} : parse_family(c.family);
    if (c.n > 0) p.n = c.n;
    if (p.n == 0) p.n = p.pattern.max_index();
    if (p.n < 1) throw invalid_parameters("cannot infer n; pass --n");
    require_fits(p.pattern, p.n);
    return p;
}

class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback) : os_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw unsupported_input("cannot write '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream &operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream *os_;
};

inline void check_format(const std::string &f, std::initializer_list<const char *> allowed)
{
    for (const char *a : allowed)
        if (f == a) return;
    throw invalid_parameters("unsupported --format '" + f + "' for this command");
}

} // namespace cli_detail

inline int cmd_pair(const RunConfig &c, std::ostream &out)
{
    cli_detail::check_format(c.format, {"text", "json"});
    const auto p = cli_detail::resolve_pattern(c);
    const BigInt v = pair_with_vandermonde(p.pattern, p.n);
    cli_detail::Sink s(c.out, out);
    if (c.format == "json")
        *s << json{{"schema_version", schema_version}, {"n", p.n}, {"pattern", pattern_json(p.pattern)}, {"pairing", to_string(v)}}
                  .dump(2)
           << '\n';
    else
        *s << to_string(v) << '\n';
    return 0;
}

inline int cmd_classify(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    cli_detail::check_format(c.format, {"text", "json", "csv"});
    if (c.n == 0) throw invalid_parameters("classify needs --n");
    const Expectations ex = load_expectations(c.expected);
    err << "classify: n=" << c.n << " ...\n";
    const auto t0 = std::chrono::steady_clock::now();
    const Classification cls = classify_all(c.n, c.threads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << "classify: " << cls.row.num_classes << " classes in " << secs << " s\n";
    const auto mm = row_mismatches(cls.row, ex, c.weak);
    cli_detail::Sink s(c.out, out);
    if (c.format == "csv") {
        *s << classification_csv(cls);
    } else if (c.format == "json") {
        json j = classification_json(cls, ex);
        if (c.weak) j["weak_classes"] = cls.row.num_weak_classes;
        *s << j.dump(2) << '\n';
    } else if (c.weak) {
        *s << cls.row.num_weak_classes << '\n';
    } else {
        const auto &r = cls.row;
        *s << "n=" << r.n << " patterns=" << to_string(r.total_patterns) << " classes=" << r.num_classes
           << " nonsingular=" << r.num_nonsingular << " defective=" << r.num_defective
           << " exceptional=" << r.num_exceptional << " weak=" << r.num_weak_classes << '\n';
        if (!mm.empty()) *s << census_json(cls).dump(2) << '\n';
    }
    for (const auto &m : mm) err << "classify: mismatch against expected counts: " << m << '\n';
    if (!mm.empty() && c.format == "text" && !c.out.empty()) err << census_json(cls).dump(2) << '\n';
    return mm.empty() ? 0 : 1;
}

inline int cmd_verify(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    cli_detail::check_format(c.format, {"text", "json"});
    if (c.suite.empty()) throw invalid_parameters("verify needs a suite name or 'all'");
    const Expectations ex = load_expectations(c.expected);
    VerifyOptions o;
    o.seed = c.seed;
    o.threads = c.threads;
    o.max_n = c.max_n;
    std::vector<std::string> names = c.suite == "all" ? suite_names() : std::vector<std::string>{c.suite};
    bool ok = true;
    json reports = json::array();
    std::string text;
    for (const auto &name : names) {
        err << "verify: " << name << " ...\n";
        const SuiteResult r = run_suite(name, o, ex);
        ok = ok && r.pass();
        reports.push_back(suite_json(r));
        text += suite_text(r);
    }
    cli_detail::Sink s(c.out, out);
    if (c.format == "json")
        *s << json{{"schema_version", schema_version}, {"seed", c.seed}, {"pass", ok}, {"suites", reports}}.dump(2) << '\n';
    else
        *s << text;
    return ok ? 0 : 1;
}

inline int cmd_flags3(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    cli_detail::check_format(c.format, {"text", "json"});
    if (c.samples < 1 || c.restarts < 1) throw invalid_parameters("flags3 needs --samples >= 1 and --restarts >= 1");
    const Expectations ex = load_expectations(c.expected);
    json samples = json::array();
    bool ok = true;
    std::ostringstream text;
    for (int k = 0; k < c.samples; ++k) {
        const auto f = orbit3::flag_sample(c.seed, static_cast<std::uint64_t>(k), c.restarts, c.threads);
        err << "flags3: sample " << k + 1 << "/" << c.samples << " N=" << f.count.N << '\n';
        json j = flag_sample_json(f);
        const bool listed = std::find(ex.flag_counts.begin(), ex.flag_counts.end(), f.count.N) != ex.flag_counts.end();
        j["N_in_expected_set"] = listed;
        samples.push_back(j);
        if (f.generic) ok = ok && f.count.N % ex.flag_divisor == 0 && f.count.z_closed;
        text << "sample " << k << ": N=" << f.count.N << " converged=" << f.count.converged << "/" << f.count.restarts
             << " z_closed=" << (f.count.z_closed ? "yes" : "no") << " generic=" << (f.generic ? "yes" : "no") << '\n';
    }
    cli_detail::Sink s(c.out, out);
    if (c.format == "json" || !c.out.empty())
        *s << json{{"schema_version", schema_version}, {"seed", c.seed}, {"restarts", c.restarts}, {"pass", ok}, {"samples", samples}}
                  .dump(2)
           << '\n';
    else
        *s << text.str();
    return ok ? 0 : 1;
}

inline int cmd_stabdim(const RunConfig &c, std::ostream &out)
{
    cli_detail::check_format(c.format, {"text", "json"});
    const auto p = cli_detail::resolve_pattern(c);
    const int d = stabilizer_dim(p.pattern, p.n);
    const bool def = d > p.n * p.n - 2 * static_cast<int>(p.pattern.size());
    cli_detail::Sink s(c.out, out);
    if (c.format == "json")
        *s << json{{"schema_version", schema_version}, {"n", p.n}, {"pattern", pattern_json(p.pattern)}, {"stab_dim", d}, {"defective", def}}
                  .dump(2)
           << '\n';
    else
        *s << d << (def ? " defective" : " not-defective") << '\n';
    return 0;
}

inline int cmd_invariants(const RunConfig &c, std::ostream &out)
{
    cli_detail::check_format(c.format, {"text", "json"});
    const orbit3::CMat m = load_matrix(c.matrix);
    if (m.rows() != 3) throw dimension_mismatch("invariants: matrix must be 3x3");
    const orbit3::Mat3 X = m;
    if (std::abs(X.trace()) > 1e-12 * std::max(1.0, X.norm())) throw unsupported_input("invariants: matrix must be traceless");
    const auto i = orbit3::invariants(X);
    cli_detail::Sink s(c.out, out);
    if (c.format == "json") {
        *s << json{{"schema_version", schema_version}, {"invariants", invariants_json(i)}, {"P", orbit3::poly_P(i)}}.dump(2)
           << '\n';
    } else {
        std::ostringstream os;
        os.precision(17);
        for (int k = 1; k <= 16; ++k) os << i[k] << (k < 16 ? ' ' : '\n');
        *s << os.str();
    }
    return 0;
}

/// Parses argv and dispatches; returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"zpat: zero patterns, pairings, stabilizers and reducing flags"};
    app.require_subcommand(1);
    RunConfig c;
    auto common = [&](CLI::App *s) {
        s->add_option("--seed", c.seed, "random seed")->capture_default_str();
        s->add_option("--threads", c.threads, "worker threads (0 = hardware)")->capture_default_str();
        s->add_option("--out", c.out, "output file (default stdout)");
        s->add_option("--format", c.format, "json, csv or text")->capture_default_str();
        s->add_option("--expected", c.expected, "expected-values file")->capture_default_str();
    };
    auto pattern_opts = [&](CLI::App *s) {
        s->add_option("--n", c.n, "ambient size");
        s->add_option("--pattern", c.pattern, "pattern literal, e.g. [[1,2],[1,3],[2,3]]");
        s->add_option("--family", c.family, "family, e.g. lambda:5 or jfam:sigma=1,3,2,i=-1,1");
    };
    CLI::App *pair = app.add_subcommand("pair", "print <chi_I, chi_n>");
    pattern_opts(pair);
    common(pair);
    CLI::App *classify = app.add_subcommand("classify", "classify P'_n into equivalence classes");
    classify->add_option("--n", c.n, "ambient size (2..5)")->required();
    classify->add_flag("--weak", c.weak, "report the number of weak classes");
    classify->add_flag_callback("--csv", [&] { c.format = "csv"; }, "same as --format csv");
    common(classify);
    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", c.suite, "suite name or 'all'")->required();
    verify->add_option("--max-n", c.max_n, "largest n for the hess suite")->capture_default_str();
    common(verify);
    CLI::App *flags3 = app.add_subcommand("flags3", "count reducing flags for the cyclic 3x3 pattern");
    flags3->add_option("--samples", c.samples)->capture_default_str();
    flags3->add_option("--restarts", c.restarts)->capture_default_str();
    common(flags3);
    CLI::App *stab = app.add_subcommand("stabdim", "stabilizer dimension and defectiveness");
    pattern_opts(stab);
    common(stab);
    CLI::App *inv = app.add_subcommand("invariants", "the 16 invariants of a traceless 3x3 matrix");
    inv->add_option("--matrix", c.matrix, "JSON file, inline JSON, or 'zero'")->capture_default_str();
    common(inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        if (pair->parsed()) return cmd_pair(c, out);
        if (classify->parsed()) return cmd_classify(c, out, err);
        if (verify->parsed()) return cmd_verify(c, out, err);
        if (flags3->parsed()) return cmd_flags3(c, out, err);
        if (stab->parsed()) return cmd_stabdim(c, out);
        if (inv->parsed()) return cmd_invariants(c, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace zpat::io

#endif // ZPAT_IO_CLI_HPP
