#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"

namespace rsz::cli {

struct Context {
    std::string command;
    std::uint64_t seed = 0;
    std::string emit_path;
    std::function<Report()> run;

    struct Entry {
        CLI::App* app;
        std::string name;
        std::function<Report()> run;
    };
    std::vector<Entry> entries;

    /// Selects the parsed subcommand; false when none was given.
    bool select();
};

void register_commands(CLI::App& app, Context& ctx);

}  // namespace rsz::cli
