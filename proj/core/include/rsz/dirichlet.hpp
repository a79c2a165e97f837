#pragma once

#include <vector>

#include "rsz/common.hpp"
#include "rsz/primes.hpp"

namespace rsz {

/// Dirichlet character mod q, indexed by exponent vectors on generators of (Z/q)^*.
class DirichletCharacter {
public:
    /// index in [0, phi(q)) enumerates all characters in mixed radix.
    DirichletCharacter(u64 q, u64 index);

    u64 modulus() const { return q_; }
    u64 index() const { return index_; }
    cplx operator()(u64 m) const;
    /// Smallest d | q through which the character factors.
    u64 conductor() const;
    bool is_real() const;

private:
    struct Component {
        u64 modulus;
        std::vector<u64> gens;
        std::vector<u64> orders;
        std::vector<u64> exps;
    };
    u64 q_;
    u64 index_;
    std::vector<Component> comps_;
    // Discrete logs of every residue modulo each component modulus.
    std::vector<std::vector<std::vector<u64>>> dlog_;
};

}  // namespace rsz
