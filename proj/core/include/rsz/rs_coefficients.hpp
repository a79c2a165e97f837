#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsz/satake.hpp"

namespace rsz {

/// Positive integer with one partition of length <= n-1 per prime power exactly dividing it.
struct DecoratedIdeal {
    u64 n_ideal = 1;
    std::map<u64, Partition> decorations;

    /// Throws unless every prime power p^r || n_ideal carries a partition of r of length <= n-1.
    void validate(int n) const;
    std::string str() const;
    auto operator<=>(const DecoratedIdeal&) const = default;
};

/// All decorations of m for ambient dimension n, ordered lexicographically by prime.
std::vector<DecoratedIdeal> decorations_of(u64 m, int n);

/// Number of decorations of m: product of |P_{n-1}(r)| over p^r || m.
u64 decoration_count(u64 m, int n);

/// a_pi(p^j): complete homogeneous polynomial h_j of the Satake multiset.
cplx standard_coeff(const SatakeData& pi, u64 p, int j);

/// a_pi(m) for m with unramified support.
cplx standard_coeff_ideal(const SatakeData& pi, u64 m);

/// lambda_{pi x pi0}(m): sum_{j,j0} (alpha_j alpha0_j0)^k if m = p^k, else 0.
cplx lambda_coeff(const SatakeData& pi, const SatakeData& pi0, u64 m);

/// a_pi(n, mu) = prod_p s_{mu_p}(A_pi(p)).
cplx decorated_coeff(const SatakeData& pi, const DecoratedIdeal& ideal);

/// a_{pi x conj(pi')}(p^r) through the Schur reduction (k-sum over P_{n-1}).
cplx rs_coeff_prime_power(const SatakeData& pi, const SatakeData& pi_prime, u64 p, int r,
                          double central_tol = 1e-9);

/// Coefficient of X^r in prod_{j,k} (1 - alpha_j conj(alpha'_k) X)^{-1}.
cplx rs_coeff_oracle(const SatakeData& pi, const SatakeData& pi_prime, u64 p, int r);

/// Multiplicative assembly of a_{pi x conj(pi')}(m).
cplx rs_coeff_ideal(const SatakeData& pi, const SatakeData& pi_prime, u64 m);

/// Same coefficient as a double sum over t^n | m and decorations of m / t^n.
cplx rs_coeff_ideal_double_sum(const SatakeData& pi, const SatakeData& pi_prime, u64 m);

/// Partial sum of sum_{n <= bound} a_pi(n) conj(a_pi'(n)) n^{-s} over n coprime to both conductors.
/// A warning is appended when Re(s) <= 1.
cplx naive_rs_partial(const SatakeData& pi, const SatakeData& pi_prime, cplx s, u64 bound,
                      std::vector<std::string>* warnings = nullptr);

/// Truncated local factor 1 + sum_{j=1}^{depth} a_pi(p^j) conj(a_pi'(p^j)) p^{-js}.
cplx naive_rs_local_factor(const SatakeData& pi, const SatakeData& pi_prime, u64 p, cplx s,
                           int depth = 40);

/// prod_{p | d} (1 - L_p(s)^{-1}) with the truncated naive local factor.
cplx g_d_factor(const SatakeData& pi, const SatakeData& pi_prime, u64 d, cplx s, int depth = 40);

struct BrumleyCheck {
    cplx lambda_pair;    ///< lambda_{pi x pi'}(m)
    double lambda_pi;    ///< lambda_{pi x conj pi}(m)
    double lambda_prime; ///< lambda_{pi' x conj pi'}(m)
    bool cauchy_schwarz; ///< |lambda_pair| <= sqrt(lambda_pi lambda_prime)
    bool am_gm;          ///< sqrt(lambda_pi lambda_prime) <= (lambda_pi + lambda_prime)/2
    bool holds() const { return cauchy_schwarz && am_gm; }
};

BrumleyCheck check_brumley_cs(const SatakeData& pi, const SatakeData& pi_prime, u64 m,
                              double tol = 1e-9);

}  // namespace rsz
