#include "rsz/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rsz/common.hpp"

namespace rsz {

using nlohmann::json;

SatakeData SatakeFixture::materialize() const {
    if (explicit_data) return *explicit_data;
    if (!seed) throw PreconditionError("satake fixture: needs seed or parameters");
    return SatakeData::sample(dimension, conductor, p_max, sampler, *seed);
}

std::string satake_to_json(const SatakeData& data, int indent) {
    json j;
    j["dimension"] = data.dimension();
    j["conductor"] = data.conductor();
    j["p_max"] = data.p_max();
    j["grc"] = data.grc();
    json params = json::object();
    for (const auto& [p, ms] : data.parameters()) {
        json arr = json::array();
        for (const auto& a : ms) arr.push_back({a.real(), a.imag()});
        params[std::to_string(p)] = arr;
    }
    j["parameters"] = params;
    return j.dump(indent);
}

SatakeFixture satake_fixture_from_json(const std::string& text) {
    SatakeFixture f;
    try {
        const json j = json::parse(text);
        for (const auto& [k, v] : j.items()) {
            (void)v;
            if (k != "dimension" && k != "conductor" && k != "p_max" && k != "grc" && k != "seed" &&
                k != "sampler" && k != "parameters")
                throw PreconditionError("satake fixture: unknown key '" + k + "'");
        }
        f.dimension = j.at("dimension").get<int>();
        f.conductor = j.value("conductor", u64{1});
        f.p_max = j.value("p_max", u64{10000});
        f.grc = j.value("grc", false);
        if (j.contains("sampler")) f.sampler = parse_sampler(j.at("sampler").get<std::string>());
        if (j.contains("seed")) f.seed = j.at("seed").get<u64>();
        if (j.contains("parameters")) {
            std::map<u64, ComplexMultiset> m;
            for (const auto& [k, arr] : j.at("parameters").items()) {
                ComplexMultiset ms;
                for (const auto& pair : arr) ms.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
                m[std::stoull(k)] = std::move(ms);
            }
            f.explicit_data = SatakeData(f.dimension, f.conductor, f.p_max, std::move(m), f.grc);
        }
        if (!f.seed && !f.explicit_data) throw PreconditionError("satake fixture: needs seed or parameters");
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("satake fixture: ") + e.what());
    }
    return f;
}

SatakeData satake_from_json(const std::string& text) { return satake_fixture_from_json(text).materialize(); }

std::string bz_to_json(const BZDatum& d, int indent) {
    json j;
    j["q_v"] = d.q_v;
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back({{"n_j", b.n_j}, {"sigma_j", b.s_j.real()}, {"t_j", b.s_j.imag()}});
    j["blocks"] = blocks;
    json classes = json::array();
    for (const auto& c : d.classes) {
        json cj = json::array();
        for (int i : c) cj.push_back(i + 1);
        classes.push_back(cj);
    }
    j["classes"] = classes;
    j["e"] = d.e;
    return j.dump(indent);
}

BZDatum bz_from_json(const std::string& text) {
    BZDatum d;
    try {
        const json j = json::parse(text);
        d.q_v = j.at("q_v").get<u64>();
        for (const auto& b : j.at("blocks"))
            d.blocks.push_back({b.at("n_j").get<int>(), cplx{b.at("sigma_j").get<double>(), b.value("t_j", 0.0)}});
        for (const auto& c : j.at("classes")) {
            std::vector<int> cls;
            for (const auto& i : c) cls.push_back(i.get<int>() - 1);
            d.classes.push_back(std::move(cls));
        }
        d.e = j.at("e").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("bz fixture: ") + e.what());
    }
    d.validate();
    return d;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

}  // namespace rsz
