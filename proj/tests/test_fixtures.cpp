#include <bit>
#include <filesystem>

#include "doctest.h"
#include "rsz/fixtures.hpp"

using namespace rsz;

TEST_SUITE("fixtures") {
    TEST_CASE("satake round trip is bit exact") {
        for (auto sampler : {SatakeSampler::Unitary, SatakeSampler::Grc, SatakeSampler::JacquetShalika}) {
            const auto pi = SatakeData::sample(3, 7, 500, sampler, 99);
            const auto back = satake_from_json(satake_to_json(pi));
            CHECK(back == pi);
            for (const auto& [p, ms] : pi.parameters()) {
                const auto& other = back.at(p);
                REQUIRE(other.size() == ms.size());
                for (std::size_t i = 0; i < ms.size(); ++i) {
                    CHECK(std::bit_cast<u64>(ms[i].real()) == std::bit_cast<u64>(other[i].real()));
                    CHECK(std::bit_cast<u64>(ms[i].imag()) == std::bit_cast<u64>(other[i].imag()));
                }
            }
        }
    }

    TEST_CASE("seeded recipe") {
        const auto f = satake_fixture_from_json(R"({"dimension": 2, "conductor": 5, "p_max": 300, "seed": 17, "sampler": "unitary"})");
        CHECK(f.seed.value() == 17);
        CHECK_FALSE(f.explicit_data.has_value());
        CHECK(f.materialize() == SatakeData::sample(2, 5, 300, SatakeSampler::Unitary, 17));
        CHECK(f.materialize() == f.materialize());
    }

    TEST_CASE("malformed satake fixtures") {
        CHECK_THROWS_AS(satake_from_json(R"({"dimension": 2, "seed": 1, "colour": "red"})"), PreconditionError);
        CHECK_THROWS_AS(satake_from_json(R"({"dimension": 2})"), PreconditionError);
        CHECK_THROWS_AS(satake_from_json("{not json"), PreconditionError);
        CHECK_THROWS_AS(satake_from_json(R"({"dimension": "two", "seed": 1})"), PreconditionError);
    }

    TEST_CASE("BZ round trip") {
        BZDatum d;
        d.q_v = 5;
        d.blocks = {{1, cplx(0.25, -1.5)}, {2, cplx(0.0, 0.0)}, {1, cplx(-0.1, 3.0)}};
        d.classes = {{0, 2}, {1}};
        d.e = {1, 2};
        const std::string text = bz_to_json(d);
        CHECK(text.find("\"classes\"") != std::string::npos);
        CHECK(bz_from_json(text) == d);
        CHECK_THROWS_AS(bz_from_json(R"({"q_v": 5, "blocks": [{"n_j": 1, "sigma_j": 0, "t_j": 0}], "classes": [[2]], "e": [1]})"),
                        PreconditionError);
        CHECK_THROWS_AS(bz_from_json("[]"), PreconditionError);
    }

    TEST_CASE("file helpers") {
        const std::filesystem::path dir = RSZ_TEST_TMP;
        std::filesystem::create_directories(dir);
        const auto path = (dir / "fixture_roundtrip.json").string();
        const auto pi = SatakeData::sample(2, 1, 100, SatakeSampler::Unitary, 5);
        write_text_file(path, satake_to_json(pi));
        CHECK(satake_from_json(read_text_file(path)) == pi);
        CHECK_THROWS(read_text_file((dir / "missing.json").string()));
    }
}
