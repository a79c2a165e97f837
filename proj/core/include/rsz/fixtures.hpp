#pragma once

#include <optional>
#include <string>

#include "rsz/local_factors.hpp"
#include "rsz/satake.hpp"

namespace rsz {

/// Satake fixture: either a seeded recipe or explicit per-prime [re, im] arrays.
struct SatakeFixture {
    int dimension = 1;
    u64 conductor = 1;
    u64 p_max = 10000;
    bool grc = false;
    std::optional<u64> seed;           ///< present for seeded recipes
    SatakeSampler sampler = SatakeSampler::Unitary;
    std::optional<SatakeData> explicit_data;

    SatakeData materialize() const;
};

std::string satake_to_json(const SatakeData& data, int indent = 2);
SatakeFixture satake_fixture_from_json(const std::string& text);
SatakeData satake_from_json(const std::string& text);

/// BZ fixture; class indices are 1-based in JSON.
std::string bz_to_json(const BZDatum& datum, int indent = 2);
BZDatum bz_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rsz
