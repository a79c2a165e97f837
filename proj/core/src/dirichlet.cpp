#include "rsz/dirichlet.hpp"

#include <cmath>
#include <numbers>

namespace rsz {

namespace {

__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 multiplicative_order(u64 g, u64 m, u64 group_order) {
    u64 best = group_order;
    for (const auto& [p, e] : factorize(group_order)) {
        (void)e;
        while (best % p == 0 && powmod(g, best / p, m) == 1) best /= p;
    }
    return best;
}

}  // namespace

DirichletCharacter::DirichletCharacter(u64 q, u64 index) : q_(q), index_(index) {
    if (q == 0) throw PreconditionError("DirichletCharacter: modulus must be positive");
    for (const auto& [p, k] : factorize(q)) {
        const u64 pk = ipow(p, k);
        Component c{pk, {}, {}, {}};
        if (p == 2) {
            if (k == 2) {
                c.gens = {3};
                c.orders = {2};
            } else if (k >= 3) {
                c.gens = {pk - 1, 5};
                c.orders = {2, pk / 4};
            }
        } else {
            const u64 phi = pk / p * (p - 1);
            u64 g = 2;
            while (gcd_u64(g, p) != 1 || multiplicative_order(g, pk, phi) != phi) ++g;
            c.gens = {g};
            c.orders = {phi};
        }
        comps_.push_back(std::move(c));
    }

    u64 rest = index;
    for (auto& c : comps_) {
        for (u64 ord : c.orders) {
            c.exps.push_back(rest % ord);
            rest /= ord;
        }
    }
    if (rest != 0) throw PreconditionError("DirichletCharacter: index out of range");

    for (const auto& c : comps_) {
        std::vector<std::vector<u64>> table(c.modulus);
        if (c.gens.empty()) {
            table[1 % c.modulus] = {};
        } else if (c.gens.size() == 1) {
            u64 v = 1 % c.modulus;
            for (u64 a = 0; a < c.orders[0]; ++a) {
                table[v] = {a};
                v = mulmod(v, c.gens[0], c.modulus);
            }
        } else {
            u64 v0 = 1 % c.modulus;
            for (u64 a = 0; a < c.orders[0]; ++a) {
                u64 v = v0;
                for (u64 b = 0; b < c.orders[1]; ++b) {
                    table[v] = {a, b};
                    v = mulmod(v, c.gens[1], c.modulus);
                }
                v0 = mulmod(v0, c.gens[0], c.modulus);
            }
        }
        dlog_.push_back(std::move(table));
    }
}

cplx DirichletCharacter::operator()(u64 m) const {
    if (gcd_u64(m % q_, q_) != 1 && q_ != 1) return 0.0;
    double turns = 0.0;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        const auto& comp = comps_[c];
        const auto& dl = dlog_[c][m % comp.modulus];
        for (std::size_t g = 0; g < comp.gens.size(); ++g)
            turns += static_cast<double>((comp.exps[g] * dl[g]) % comp.orders[g]) /
                     static_cast<double>(comp.orders[g]);
    }
    turns -= std::floor(turns);
    if (turns == 0.0) return 1.0;
    if (turns == 0.5) return -1.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

u64 DirichletCharacter::conductor() const {
    // Exact triviality test on the phase numerators.
    auto trivial_at = [&](u64 m) {
        for (std::size_t c = 0; c < comps_.size(); ++c) {
            const auto& comp = comps_[c];
            const auto& dl = dlog_[c][m % comp.modulus];
            for (std::size_t g = 0; g < comp.gens.size(); ++g)
                if ((comp.exps[g] * dl[g]) % comp.orders[g] != 0) return false;
        }
        return true;
    };
    for (u64 d = 1; d <= q_; ++d) {
        if (q_ % d) continue;
        bool ok = true;
        for (u64 m = 1; m <= q_ && ok; m += d)
            if (gcd_u64(m, q_) == 1 && !trivial_at(m)) ok = false;
        if (ok) return d;
    }
    return q_;
}

bool DirichletCharacter::is_real() const {
    for (const auto& c : comps_)
        for (std::size_t g = 0; g < c.gens.size(); ++g)
            if ((2 * c.exps[g]) % c.orders[g] != 0) return false;
    return true;
}

}  // namespace rsz
