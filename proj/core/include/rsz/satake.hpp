#pragma once

#include <map>
#include <string>

#include "rsz/primes.hpp"
#include "rsz/symmetric.hpp"

namespace rsz {

enum class SatakeSampler { Unitary, Grc, JacquetShalika };

SatakeSampler parse_sampler(const std::string& name);
std::string sampler_name(SatakeSampler s);

/// Unramified Satake parameters of a GL(n) proxy at primes p < p_max, p not dividing N.
class SatakeData {
public:
    SatakeData(int dimension, u64 conductor, u64 p_max, std::map<u64, ComplexMultiset> satake,
               bool grc = false);

    /// Seeded random proxy; reproducible across platforms.
    static SatakeData sample(int dimension, u64 conductor, u64 p_max, SatakeSampler sampler,
                             u64 seed);

    /// GL(1) Dirichlet character mod q given by its values on primes.
    static SatakeData dirichlet_character(u64 q, u64 index, u64 p_max);

    int dimension() const { return n_; }
    u64 conductor() const { return N_; }
    u64 p_max() const { return p_max_; }
    bool grc() const { return grc_; }
    const std::map<u64, ComplexMultiset>& parameters() const { return satake_; }

    bool is_unramified(u64 p) const { return N_ % p != 0; }
    /// Satake multiset at p; throws for ramified or out-of-range p.
    const ComplexMultiset& at(u64 p) const;
    /// Product of the Satake parameters (unramified central character value).
    cplx central(u64 p) const { return full_product(at(p)); }

    /// Parameters conjugated: the contragredient proxy.
    SatakeData contragredient() const;

    bool operator==(const SatakeData& o) const;

private:
    int n_;
    u64 N_;
    u64 p_max_;
    bool grc_;
    std::map<u64, ComplexMultiset> satake_;
};

/// Rescales the last parameter at each prime of `pi` so its central character matches `target`.
SatakeData match_central_character(const SatakeData& pi, const SatakeData& target);

}  // namespace rsz
