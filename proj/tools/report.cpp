#include "report.hpp"

#include <charconv>
#include <iostream>

#include "rsz/common.hpp"
#include "rsz/fixtures.hpp"

namespace rsz::cli {

void Report::check(const std::string& name, bool passed, Json detail) {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", std::move(detail)}});
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.at("passed").get<bool>()) return false;
    return true;
}

std::string Report::to_json(const std::string& command, std::uint64_t seed) const {
    Json j;
    j["version"] = version();
    Json cfg = config;
    cfg["command"] = command;
    cfg["seed"] = seed;
    j["config"] = cfg;
    j["results"] = results;
    j["checks"] = checks;
    j["ok"] = ok();
    j["diagnostic"] = diagnostic;
    return j.dump(2) + "\n";
}

std::string Report::to_csv(const std::string& command, std::uint64_t seed) const {
    Json cfg = config;
    cfg["command"] = command;
    cfg["seed"] = seed;
    std::string out = std::string("# version ") + version() + "\n# config " + cfg.dump() + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
        out += "\n";
    };
    line(csv_header);
    for (const auto& r : csv_rows) line(r);
    return out;
}

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void emit(const Report& r, const std::string& command, std::uint64_t seed, const std::string& path) {
    if (path.empty()) {
        std::cout << r.to_json(command, seed);
        return;
    }
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    if (csv && r.csv_header.empty()) throw PreconditionError(command + " has no tabular output; use a .json path");
    write_text_file(path, csv ? r.to_csv(command, seed) : r.to_json(command, seed));
}

}  // namespace rsz::cli
