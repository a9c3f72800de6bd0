// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/step_function.hpp"

namespace fsl {

using json = nlohmann::json;

// Every number leaving the program goes through here: 12 significant digits.
inline std::string fmt12(double x)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline double round12(double x)
{
    if (!std::isfinite(x)) return x;
    return std::stod(fmt12(x));
}

// Finite reals become rounded numbers; infinities become the "-inf"/"inf" sentinels.
inline json number_json(double x)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return round12(x);
}

inline double number_from_json(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return inf;
        if (s == "-inf") return -inf;
        throw precondition_error("expected a number or \"inf\"/\"-inf\", got \"" + s + "\"");
    }
    require(j.is_number(), "expected a number");
    return j.get<double>();
}

inline json to_json(const GridFunction& f)
{
    json v = json::array();
    for (double x : f.values()) v.push_back(round12(x));
    return {{"origin", round12(f.origin())}, {"step", round12(f.step())}, {"values", v}};
}

inline GridFunction grid_function_from_json(const json& j)
{
    require(j.contains("origin") && j.contains("step") && j.contains("values"),
            "GridFunction JSON needs origin, step, values");
    return {j.at("origin").get<double>(), j.at("step").get<double>(), j.at("values").get<std::vector<double>>()};
}

inline json to_json(const IntervalSet& s)
{
    json a = json::array();
    for (const auto& p : s.intervals()) a.push_back({number_json(p.lo), number_json(p.hi)});
    return a;
}

inline IntervalSet interval_set_from_json(const json& j)
{
    require(j.is_array(), "IntervalSet JSON must be an array of [lo, hi] pairs");
    std::vector<Interval> parts;
    for (const auto& p : j) {
        require(p.is_array() && p.size() == 2, "IntervalSet JSON entries must be [lo, hi]");
        parts.push_back({number_from_json(p[0]), number_from_json(p[1])});
    }
    return IntervalSet(std::move(parts));
}

inline json to_json(const StepFunction& f)
{
    json b = json::array(), l = json::array();
    for (double x : f.breakpoints()) b.push_back(round12(x));
    for (double x : f.levels()) l.push_back(round12(x));
    return {{"breakpoints", b}, {"levels", l}};
}

inline std::string to_csv(const GridFunction& f)
{
    std::string out = "x,f\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out += fmt12(f.x(static_cast<std::ptrdiff_t>(i))) + "," + fmt12(f[i]) + "\n";
    return out;
}

// Reads two-column (x, f(x)) CSV on a uniform grid.  A non-numeric first line is a header.
inline GridFunction grid_function_from_csv(std::istream& in)
{
    std::vector<double> xs, vs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        require(comma != std::string::npos, "CSV line without comma: " + line);
        double x = 0, v = 0;
        try {
            std::size_t used = 0;
            x = std::stod(line.substr(0, comma), &used);
            v = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            require(first, "unparseable CSV line: " + line);
            first = false;
            continue;
        }
        first = false;
        xs.push_back(x);
        vs.push_back(v);
    }
    require(xs.size() >= 2, "CSV function needs at least 2 rows");
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    require(h > 0, "CSV abscissae must increase");
    for (std::size_t i = 0; i < xs.size(); ++i)
        require(std::abs(xs[i] - (xs.front() + static_cast<double>(i) * h)) <= 1e-9 * (1.0 + std::abs(xs[i])) + 1e-6 * h,
                "CSV abscissae must be uniformly spaced");
    return {xs.front(), h, std::move(vs)};
}

inline GridFunction read_grid_function_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return grid_function_from_csv(in);
}

// Writes via a temporary sibling and renames, so readers never see partial files.
inline void write_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

} // namespace fsl
