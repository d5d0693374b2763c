#pragma once

// Deterministic dataset output: CSV with %.17g numerics and LF line endings,
// plus a flat JSON sidecar of named scalars and warnings.

#include <json.hpp>

#include <string>
#include <vector>

namespace forge {

// All floating-point serialization goes through this (17 significant digits
// round-trips a double exactly).
std::string format_g17(double v);

struct Column {
    std::string name;
    const std::vector<double>* data;
};

// Writes the columns; throws if lengths disagree or any value is NaN/Inf.
void write_csv(const std::string& path, const std::vector<Column>& cols);

void write_json(const std::string& path, const nlohmann::json& j);

// out.csv -> out.json (replaces the extension, or appends when absent).
std::string sidecar_path(const std::string& csv_path);

}  // namespace forge
