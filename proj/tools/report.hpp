#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rsz::cli {

using Json = nlohmann::ordered_json;

/// Structured output of one subcommand. Asserted checks and diagnostics are kept apart.
struct Report {
    Json config = Json::object();
    Json results = Json::object();
    Json checks = Json::array();
    Json diagnostic = Json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    void check(const std::string& name, bool passed, Json detail = Json::object());
    bool ok() const;
    std::string to_json(const std::string& command, std::uint64_t seed) const;
    /// Leading '#' lines carry the version and config.
    std::string to_csv(const std::string& command, std::uint64_t seed) const;
};

std::string fmt(double v);

/// Writes to `path` (CSV when it ends in .csv, JSON otherwise) or prints JSON to stdout when empty.
void emit(const Report& r, const std::string& command, std::uint64_t seed, const std::string& path);

}  // namespace rsz::cli
