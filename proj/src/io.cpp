#include "forge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace forge {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<Column>& cols) {
    if (cols.empty()) throw std::invalid_argument("no columns to write");
    const size_t rows = cols.front().data->size();
    for (const Column& c : cols) {
        if (c.data->size() != rows)
            throw std::invalid_argument("column length mismatch in CSV output");
        for (double v : *c.data)
            if (!std::isfinite(v))
                throw std::runtime_error("refusing to emit non-finite value in column '" +
                                         c.name + "'");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (size_t c = 0; c < cols.size(); ++c)
        out << (c ? "," : "") << cols[c].name;
    out << '\n';
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols.size(); ++c)
            out << (c ? "," : "") << format_g17((*cols[c].data)[r]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string sidecar_path(const std::string& csv_path) {
    const size_t slash = csv_path.find_last_of('/');
    const size_t dot = csv_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".json";
    return csv_path.substr(0, dot) + ".json";
}

}  // namespace forge
