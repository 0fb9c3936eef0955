#ifndef ZPAT_IO_EXPECTED_HPP
#define ZPAT_IO_EXPECTED_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "../error.hpp"
#include "../verify.hpp"

namespace zpat::io {

inline constexpr int expected_schema_version = 1;

inline Expectations parse_expectations(const nlohmann::json &j)
{
    if (j.value("schema_version", 0) != expected_schema_version)
        throw unsupported_input("expected-values file has an unsupported schema_version");
    Expectations ex;
    try {
        for (const auto &[k, v] : j.at("table1").items())
            ex.table1[std::stoi(k)] = {v.at("classes").get<int>(), v.at("nonsingular").get<int>(),
                                       v.at("defective").get<int>(), v.at("exceptional").get<int>(),
                                       v.at("weak").get<int>()};
        ex.table2_classes = j.at("table2_classes").at("value").get<int>();
        ex.complexity_one_weak_classes = j.at("complexity_one_weak_classes").at("value").get<int>();
        ex.p1_gamma2 = j.at("p1_gamma2").at("value").get<double>();
        ex.p1_regular = j.at("p1_regular").at("value").get<double>();
        ex.flag_counts = j.at("flag_counts").at("value").get<std::vector<int>>();
        ex.flag_divisor = j.at("flag_divisor").at("value").get<int>();
        for (const auto &[k, v] : j.at("jfam_classes").at("value").items()) ex.jfam_classes[std::stoi(k)] = v.get<int>();
    } catch (const nlohmann::json::exception &e) {
        throw invalid_parameters(std::string("expected-values file: ") + e.what());
    }
    return ex;
}

inline Expectations load_expectations(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw unsupported_input("cannot open expected-values file '" + path + "'");
    try {
        return parse_expectations(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error &e) {
        throw invalid_parameters(std::string("expected-values file: ") + e.what());
    }
}

} // namespace zpat::io

#endif // ZPAT_IO_EXPECTED_HPP
