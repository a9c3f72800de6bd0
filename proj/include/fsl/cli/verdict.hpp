// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/io.hpp"

namespace fsl::cli {

enum class Status { pass, fail, inconclusive, divergent_as_expected };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::divergent_as_expected: return "DIVERGENT-AS-EXPECTED";
    }
    return "FAIL";
}

inline bool acceptable(Status s) { return s == Status::pass || s == Status::divergent_as_expected; }

struct VerdictRecord {
    std::string check_id;
    Status status = Status::fail;
    std::vector<double> measured;
    double tolerance = 0.0;
    std::int64_t runtime_ms = 0;
    std::string detail;  // human-readable, printed to stdout only
};

inline std::string join_measured(const std::vector<double>& m)
{
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? ";" : "") + fmt12(m[k]);
    return s;
}

inline std::string table_csv(std::span<const VerdictRecord> records)
{
    std::string out = "check_id,status,measured,tolerance,runtime_ms\n";
    for (const auto& r : records)
        out += r.check_id + "," + to_string(r.status) + "," + join_measured(r.measured) + "," + fmt12(r.tolerance) + "," +
               std::to_string(r.runtime_ms) + "\n";
    return out;
}

// Fixed schema; measured values of one record are joined with ';'.
inline void emit_table(std::span<const VerdictRecord> records, const std::string& path)
{
    write_file_atomic(path, table_csv(records));
}

inline json to_json(const VerdictRecord& r)
{
    json m = json::array();
    for (double v : r.measured) m.push_back(number_json(v));
    return {{"check_id", r.check_id}, {"status", to_string(r.status)}, {"measured", m},
            {"tolerance", round12(r.tolerance)}, {"runtime_ms", r.runtime_ms}, {"detail", r.detail}};
}

} // namespace fsl::cli
