#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsz/analytic.hpp"
#include "rsz/local_factors.hpp"
#include "rsz/rs_coefficients.hpp"

namespace rsz {

/// Decorated ideals of norm <= X coprime to S, ordered by ideal then decoration.
struct DecoratedIndex {
    double X = 1.0;
    std::set<u64> S;
    int n = 1;
    std::vector<DecoratedIdeal> entries;

    /// Optional block labels (a, nu) at one ramified place; structural only.
    std::vector<std::pair<int, int>> block_labels;

    std::size_t size() const { return entries.size(); }
};

inline constexpr std::size_t kIndexCap = 1000000;

DecoratedIndex build_index(double X, const std::set<u64>& S, int n, std::size_t cap = kIndexCap);

/// Attaches the (a, nu) labels of every nonempty class layer of `datum`.
void attach_block_labels(DecoratedIndex& index, const BZDatum& datum);

/// Number of index entries per ideal up to X, by a multiplicative sieve independent of build_index.
u64 index_size_sieve(double X, const std::set<u64>& S, int n);

struct EmbeddedVector {
    std::string source;
    std::vector<cplx> coords;
    std::vector<double> weights;  ///< F_X at each entry's ideal

    double norm() const;
};

/// F_X^S(m) with the index's excluded primes.
double smoothing_weight(const DecoratedIndex& index, u64 m, const TestFunction& f);

EmbeddedVector embed(const SatakeData& pi, const DecoratedIndex& index, const TestFunction& f,
                     const std::string& source = "");

struct GramComparison {
    cplx inner_product;
    cplx series_sum;
    double difference = 0.0;
    double scale = 1.0;  ///< 1 + |series_sum|
    bool ok(double tol = 1e-9) const { return difference <= tol * scale; }
};

cplx inner(const EmbeddedVector& u, const EmbeddedVector& v);

/// <v_pi, v_pi'> against sum over a coprime to S of a_{pi x conj pi'}(a) f(a / X).
/// Requires pi and pi' to share a unitary central character.
GramComparison gram_vs_series(const SatakeData& pi, const SatakeData& pi_prime, const DecoratedIndex& index,
                              const TestFunction& f);

struct QuasiOrthResult {
    bool ok = false;
    std::size_t K = 0;
    std::size_t M = 0;  ///< real dimension
    double max_cos = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    double violation_value = 0.0;
    double elementary_bound = 0.0;  ///< K + K(K-1) max_cos
};

QuasiOrthResult quasi_orth_certify(const std::vector<std::vector<double>>& vectors, double unit_tol = 1e-9);

/// Complex vectors are realified: M = 2 * complex dimension.
QuasiOrthResult quasi_orth_certify(const std::vector<std::vector<cplx>>& vectors, double unit_tol = 1e-9);

struct FamilyBoundReport {
    double D = 1.0, Q = 1.0, norm_q = 1.0, eps = 0.1;
    int n = 1;
    double log_B = 0.0;  ///< log(D^{-n^2} Norm(q)^{-2} Q^{2n})
    double X_uncond = 0.0;
    double X_cond = 0.0;
    bool N_exact = false;
    double N = 0.0;
    double N_cond = 0.0;
    bool N_cond_exact = false;
    double K_bound = 0.0;       ///< 2N
    double K_bound_cond = 0.0;  ///< 2N at the conditional X
    double residue_exponent = 0.0;  ///< 7n/4 - 5/4 + eps, diagnostic
};

/// Largest X for which the exact count is attempted.
inline constexpr double kExactCountLimit = 4.0e6;

FamilyBoundReport family_bound_report(double D, int n, double Q, double norm_q, double eps);

}  // namespace rsz
