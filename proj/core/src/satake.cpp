#include "rsz/satake.hpp"

#include <cmath>
#include <numeric>

#include "rsz/dirichlet.hpp"
#include "rsz/random.hpp"

namespace rsz {

SatakeSampler parse_sampler(const std::string& name) {
    if (name == "unitary") return SatakeSampler::Unitary;
    if (name == "grc") return SatakeSampler::Grc;
    if (name == "js" || name == "jacquet-shalika") return SatakeSampler::JacquetShalika;
    throw PreconditionError("unknown Satake sampler: " + name);
}

std::string sampler_name(SatakeSampler s) {
    switch (s) {
        case SatakeSampler::Unitary: return "unitary";
        case SatakeSampler::Grc: return "grc";
        case SatakeSampler::JacquetShalika: return "js";
    }
    return "unknown";
}

SatakeData::SatakeData(int dimension, u64 conductor, u64 p_max, std::map<u64, ComplexMultiset> satake,
                       bool grc)
    : n_(dimension), N_(conductor), p_max_(p_max), grc_(grc), satake_(std::move(satake)) {
    if (n_ < 1) throw PreconditionError("SatakeData: dimension must be positive");
    if (N_ < 1) throw PreconditionError("SatakeData: conductor must be positive");
    for (const auto& [p, a] : satake_) {
        if (static_cast<int>(a.size()) != n_)
            throw PreconditionError("SatakeData: multiset at p=" + std::to_string(p) + " has wrong size");
        if (N_ % p == 0)
            throw PreconditionError("SatakeData: parameters given at ramified p=" + std::to_string(p));
        if (grc_)
            for (const cplx& v : a)
                if (std::abs(v) > 1.0 + 1e-12)
                    throw PreconditionError("SatakeData: GRC flag set but |alpha| > 1 at p=" +
                                            std::to_string(p));
    }
}

SatakeData SatakeData::sample(int dimension, u64 conductor, u64 p_max, SatakeSampler sampler, u64 seed) {
    Rng rng(seed);
    std::map<u64, ComplexMultiset> m;
    for (u64 p : primes_up_to(p_max)) {
        if (conductor % p == 0) continue;
        ComplexMultiset a(dimension);
        for (auto& v : a) {
            switch (sampler) {
                case SatakeSampler::Unitary: v = rng.unit_circle(); break;
                case SatakeSampler::Grc: v = rng.disc(1.0); break;
                case SatakeSampler::JacquetShalika: {
                    const double u = rng.uniform(-0.5, 0.5);
                    v = std::pow(static_cast<double>(p), u) * rng.unit_circle();
                    break;
                }
            }
        }
        m.emplace(p, std::move(a));
    }
    return SatakeData(dimension, conductor, p_max, std::move(m), sampler != SatakeSampler::JacquetShalika);
}

SatakeData SatakeData::dirichlet_character(u64 q, u64 index, u64 p_max) {
    const DirichletCharacter chi(q, index);
    std::map<u64, ComplexMultiset> m;
    for (u64 p : primes_up_to(p_max))
        if (q % p != 0) m.emplace(p, ComplexMultiset{chi(p)});
    return SatakeData(1, q, p_max, std::move(m), true);
}

const ComplexMultiset& SatakeData::at(u64 p) const {
    if (!is_unramified(p))
        throw PreconditionError("prime " + std::to_string(p) + " is ramified (divides conductor " +
                                std::to_string(N_) + ")");
    auto it = satake_.find(p);
    if (it == satake_.end())
        throw PreconditionError("no Satake parameters at p=" + std::to_string(p) + " (p_max=" +
                                std::to_string(p_max_) + ")");
    return it->second;
}

SatakeData SatakeData::contragredient() const {
    std::map<u64, ComplexMultiset> m;
    for (const auto& [p, a] : satake_) {
        ComplexMultiset c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::conj(a[i]);
        m.emplace(p, std::move(c));
    }
    return SatakeData(n_, N_, p_max_, std::move(m), grc_);
}

bool SatakeData::operator==(const SatakeData& o) const {
    return n_ == o.n_ && N_ == o.N_ && p_max_ == o.p_max_ && grc_ == o.grc_ && satake_ == o.satake_;
}

SatakeData match_central_character(const SatakeData& pi, const SatakeData& target) {
    if (pi.dimension() < 1) throw PreconditionError("match_central_character: empty dimension");
    std::map<u64, ComplexMultiset> m;
    bool grc = pi.grc();
    for (const auto& [p, a] : pi.parameters()) {
        if (!target.is_unramified(p) || !target.parameters().count(p)) continue;
        ComplexMultiset b = a;
        cplx rest = 1.0;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) rest *= b[i];
        if (std::abs(rest) == 0.0) throw PreconditionError("match_central_character: zero parameter");
        b.back() = target.central(p) / rest;
        if (std::abs(b.back()) > 1.0 + 1e-12) grc = false;
        m.emplace(p, std::move(b));
    }
    const u64 N = std::lcm(pi.conductor(), target.conductor());
    return SatakeData(pi.dimension(), N, std::min(pi.p_max(), target.p_max()), std::move(m), grc);
}

}  // namespace rsz
