#ifndef ZPAT_IO_PARSE_HPP
#define ZPAT_IO_PARSE_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../error.hpp"
#include "../families.hpp"
#include "../orbit3/cmat.hpp"
#include "../pattern.hpp"

namespace zpat::io {

/// A pattern together with the ambient size implied by its description.
struct NamedPattern {
    Pattern pattern;
    int n = 0; ///< 0 when the description does not fix it
};

/// Pattern literal `[[1,3],[2,1],[3,2]]`.
inline Pattern parse_pattern(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw invalid_parameters(std::string("pattern literal: ") + e.what());
    }
    if (!j.is_array()) throw invalid_parameters("pattern literal must be a list of [i,j] pairs");
    std::vector<Position> ps;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw invalid_parameters("pattern literal entries must be [i,j] integer pairs");
        ps.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Pattern(std::move(ps));
}

inline int parse_int(const std::string &s, const std::string &what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        throw invalid_parameters(what + ": expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw invalid_parameters(what + ": expected an integer, got '" + s + "'");
    return v;
}

/// Splits `k1=a,b,k2=c` into {k1: [a,b], k2: [c]}; a token containing '='
/// starts a new key, any other token continues the current one.
inline std::map<std::string, std::vector<std::string>> parse_keyed(const std::string &s)
{
    std::map<std::string, std::vector<std::string>> out;
    std::string key;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) {
            key = tok.substr(0, eq);
            if (out.count(key)) throw invalid_parameters("family parameter '" + key + "' given twice");
            out[key];
            tok = tok.substr(eq + 1);
            if (tok.empty()) continue;
        }
        if (key.empty()) throw invalid_parameters("family parameters must be written key=value");
        out[key].push_back(tok);
    }
    return out;
}

/// Family descriptions: `lambda:5`, `lambdap:6`, `pi:6`, `ne:4`, `sw:4`,
/// `nw:4`, `se:4`, `delta:3`, `jn:6`, `hess:k=2,n=5`, `cyclic`,
/// `table2:3`, `jfam:sigma=1,3,2,i=-1,1`.
inline NamedPattern parse_family(const std::string &text)
{
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto size_arg = [&] {
        if (arg.empty()) throw invalid_parameters("family '" + name + "' needs a size, e.g. " + name + ":4");
        return parse_int(arg, name);
    };
    using namespace family;
    if (name == "cyclic") return {cyclic3(), 3};
    if (name == "table2") return {table2(size_arg()), 4};
    if (name == "lambda") { const int n = size_arg(); return {lambda(n), n}; }
    if (name == "lambdap") { const int n = size_arg(); return {lambda_prime(n), n}; }
    if (name == "pi") { const int n = size_arg(); return {pi(n), n}; }
    if (name == "ne") { const int n = size_arg(); return {ne(n), n}; }
    if (name == "sw") { const int n = size_arg(); return {sw(n), n}; }
    if (name == "nw") { const int n = size_arg(); return {nw(n), n}; }
    if (name == "se") { const int n = size_arg(); return {se(n), n}; }
    if (name == "delta") { const int n = size_arg(); return {diagonal(n), n}; }
    if (name == "jn") { const int n = size_arg(); return {j_block(n), n}; }
    if (name == "hess") {
        const auto kv = parse_keyed(arg);
        if (!kv.count("k") || !kv.count("n") || kv.at("k").size() != 1 || kv.at("n").size() != 1)
            throw invalid_parameters("hess needs k=..,n=..");
        const int k = parse_int(kv.at("k")[0], "hess k"), n = parse_int(kv.at("n")[0], "hess n");
        return {hess(k, n), n};
    }
    if (name == "jfam") {
        const auto kv = parse_keyed(arg);
        if (!kv.count("sigma") || !kv.count("i") || kv.size() != 2) throw invalid_parameters("jfam needs sigma=..,i=..");
        std::vector<int> s, seq;
        for (const auto &t : kv.at("sigma")) s.push_back(parse_int(t, "jfam sigma"));
        for (const auto &t : kv.at("i")) seq.push_back(parse_int(t, "jfam i"));
        const int n = static_cast<int>(s.size());
        return {jfam({Permutation(std::move(s)), std::move(seq)}), n};
    }
    throw invalid_parameters("unknown family '" + name + "'");
}

/// Row-major complex matrix as nested [[re,im],...] rows; `zero` is the 3x3 zero.
inline orbit3::CMat parse_matrix_json(const nlohmann::json &j)
{
    if (!j.is_array() || j.empty()) throw invalid_parameters("matrix must be a nonempty list of rows");
    const auto n = j.size();
    orbit3::CMat m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw dimension_mismatch("matrix must be square");
        for (std::size_t c = 0; c < n; ++c) {
            const auto &e = j[r][c];
            if (e.is_number()) {
                m(r, c) = {e.get<double>(), 0.0};
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = {e[0].get<double>(), e[1].get<double>()};
            } else {
                throw invalid_parameters("matrix entries must be [re,im] pairs");
            }
        }
    }
    return m;
}

/// `zero`, a file path, or an inline JSON literal.
inline orbit3::CMat load_matrix(const std::string &arg)
{
    if (arg == "zero") return orbit3::CMat::Zero(3, 3);
    nlohmann::json j;
    try {
        if (!arg.empty() && arg.front() == '[') {
            j = nlohmann::json::parse(arg);
        } else {
            std::ifstream in(arg);
            if (!in) throw unsupported_input("cannot open matrix file '" + arg + "'");
            j = nlohmann::json::parse(in);
        }
    } catch (const nlohmann::json::exception &e) {
        throw invalid_parameters(std::string("matrix: ") + e.what());
    }
    return parse_matrix_json(j);
}

} // namespace zpat::io

#endif // ZPAT_IO_PARSE_HPP
