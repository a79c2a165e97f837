#include <iostream>

#include "commands.hpp"
#include "rsz/common.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rsz: Rankin-Selberg coefficient, conductor, sieve and zero-density experiments"};
    app.set_version_flag("--version", std::string(rsz::version()));
    app.require_subcommand(1);
    rsz::cli::Context ctx;
    rsz::cli::register_commands(app, ctx);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    if (!ctx.select()) {
        std::cerr << app.help();
        return 2;
    }
    try {
        const auto report = ctx.run();
        rsz::cli::emit(report, ctx.command, ctx.seed, ctx.emit_path);
        if (!report.ok()) {
            std::cerr << ctx.command << ": invariant violation\n";
            return 1;
        }
    } catch (const rsz::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
