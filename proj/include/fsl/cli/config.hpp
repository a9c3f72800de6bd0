// SPDX-License-Identifier: MIT
#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fsl/cli/families.hpp"
#include "fsl/common.hpp"
#include "fsl/funcrep.hpp"
#include "fsl/levy/triplet.hpp"
#include "fsl/scalecap/fat_cantor.hpp"

namespace fsl::cli {

enum class Command { energy, ladder, scale, capacity, levy, verify };

inline std::string to_string(Command c)
{
    switch (c) {
    case Command::energy: return "energy";
    case Command::ladder: return "ladder";
    case Command::scale: return "scale";
    case Command::capacity: return "capacity";
    case Command::levy: return "levy";
    case Command::verify: return "verify";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::verify;
    json params = json::object();  // command-specific; "step" overrides the default resolution
    std::uint64_t seed = 7;
    std::string out_dir;  // empty: FSL_OUT_DIR, else no files
    bool timing = false;  // wall-clock runtimes make output machine-dependent, so they are opt-in
};

inline std::string resolve_out_dir(const RunConfig& c)
{
    if (!c.out_dir.empty()) return c.out_dir;
    if (const char* env = std::getenv("FSL_OUT_DIR"); env && *env) return env;
    return {};
}

using FunctionValue = std::variant<GridFunction, StepFunction>;

namespace detail {

inline std::vector<double> parse_reals(const std::string& body, std::size_t min_n, std::size_t max_n, const std::string& literal)
{
    std::vector<double> v;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == item.size() && !item.empty(), "function literal '" + literal + "': '" + item + "' is not a number");
        v.push_back(x);
    }
    require(v.size() >= min_n && v.size() <= max_n, "function literal '" + literal + "': wrong number of arguments");
    return v;
}

} // namespace detail

// indicator:a,b | plateau:a,b,rho[,linear|smooth|concave] | bump:center,width | csv:path
// A step of 0 picks the default resolution of each family.
inline FunctionValue parse_function(const std::string& literal, double step = 0.0)
{
    const auto colon = literal.find(':');
    require(colon != std::string::npos, "function literal '" + literal + "': expected kind:arguments");
    const std::string kind = literal.substr(0, colon), body = literal.substr(colon + 1);
    if (kind == "indicator") {
        const auto v = detail::parse_reals(body, 2, 2, literal);
        require(v[0] < v[1], "function literal '" + literal + "': need a < b");
        return StepFunction::indicator(v[0], v[1]);
    }
    if (kind == "plateau") {
        const auto comma = body.find_last_of(',');
        std::string nums = body;
        PlateauSpec spec;
        if (comma != std::string::npos && !body.substr(comma + 1).empty() && std::isalpha(static_cast<unsigned char>(body[comma + 1]))) {
            spec.profile = ramp_profile_from_string(body.substr(comma + 1));
            nums = body.substr(0, comma);
        }
        const auto v = detail::parse_reals(nums, 3, 3, literal);
        spec.a = v[0];
        spec.b = v[1];
        spec.rho = v[2];
        return make_plateau(spec, step > 0 ? step : spec.rho / 16.0);
    }
    if (kind == "bump") {
        const auto v = detail::parse_reals(body, 2, 2, literal);
        require(v[1] > 0, "function literal '" + literal + "': width must be positive");
        const double half = 0.5 * v[1];
        return bump_function(v[0], half, 1.0, v[0] - half, v[0] + half, step > 0 ? step : v[1] / 256.0);
    }
    if (kind == "csv") return read_grid_function_csv(body);
    throw precondition_error("function literal '" + literal + "': unknown kind '" + kind + "'");
}

inline GridFunction require_grid(const FunctionValue& f, const std::string& what)
{
    require(std::holds_alternative<GridFunction>(f), what + " needs a sampled function (plateau, bump or csv), not an indicator");
    return std::get<GridFunction>(f);
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw precondition_error(path + ": " + e.what());
    }
}

// A JSON parameter given inline or as a path to a JSON file.
inline json inline_or_file(const json& v)
{
    if (v.is_string()) return read_json_file(v.get<std::string>());
    return v;
}

// "a,b;c,d" inline, or a JSON array of [lo, hi] pairs.
inline IntervalSet parse_interval_set(const json& v)
{
    if (!v.is_string()) return interval_set_from_json(v);
    const auto s = v.get<std::string>();
    std::vector<Interval> parts;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
        const auto r = detail::parse_reals(piece, 2, 2, s);
        require(r[0] < r[1], "interval '" + piece + "': need lo < hi");
        parts.push_back({r[0], r[1]});
    }
    return IntervalSet(std::move(parts));
}

} // namespace fsl::cli
