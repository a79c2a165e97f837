#pragma once

#include <cstdint>
#include <string>

namespace rsz {

struct VerifyOptions {
    std::uint64_t seed = 7;
    std::string zeros_path;  ///< optional zero table; the zero-count check is skipped when empty
};

struct VerifyResult {
    std::string report;  ///< deterministic JSON
    int checks = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

/// Runs the seeded invariant suite of every module.
VerifyResult verify_all(const VerifyOptions& options);

}  // namespace rsz
