#pragma once

// Golden CLI cases: tests/golden/cases.json lists argument vectors, with
// @SRC@ standing for the source tree; the expected JSON output of case
// `name` lives in tests/golden/<name>.json.

#include "skewnorm/cli.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SKEWNORM_SOURCE_DIR
#error "SKEWNORM_SOURCE_DIR must be defined"
#endif

namespace testsupport {

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
};

inline std::string source_path(const std::string &rel) { return std::string(SKEWNORM_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<GoldenCase> golden_cases()
{
    const auto j = nlohmann::json::parse(slurp(source_path("tests/golden/cases.json")));
    std::vector<GoldenCase> out;
    for (const auto &c : j) {
        GoldenCase g{c.at("name").get<std::string>(), {}};
        for (const auto &a : c.at("args")) {
            std::string s = a.get<std::string>();
            if (const auto pos = s.find("@SRC@"); pos != std::string::npos) s.replace(pos, 5, SKEWNORM_SOURCE_DIR);
            g.args.push_back(s);
        }
        g.args.insert(g.args.begin(), {"--format", "json"});
        out.push_back(std::move(g));
    }
    return out;
}

inline std::string golden_path(const GoldenCase &c) { return source_path("tests/golden/" + c.name + ".json"); }

} // namespace testsupport
