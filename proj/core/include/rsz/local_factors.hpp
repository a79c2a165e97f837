#pragma once

#include <vector>

#include "rsz/primes.hpp"
#include "rsz/random.hpp"
#include "rsz/symmetric.hpp"

namespace rsz {

/// One segment block of the induction data: dimension n_j and analytic parameter s_j.
struct BZBlock {
    int n_j = 1;
    cplx s_j = 0.0;
    bool operator==(const BZBlock&) const = default;
};

/// Bernstein-Zelevinsky data at one finite place. Class indices are 0-based.
struct BZDatum {
    u64 q_v = 2;
    std::vector<BZBlock> blocks;
    std::vector<std::vector<int>> classes;
    std::vector<int> e;

    int n() const;
    /// z_j = q^{-s_j - n_j/2}.
    cplx z(int j) const;
    /// J_a^nu = {j in J_a : n_j >= nu}.
    std::vector<int> class_layer(int a, int nu) const;
    /// Throws on ordering, set-partition, or divisibility violations.
    void validate() const;
    bool operator==(const BZDatum&) const = default;
};

bool same_type(const BZDatum& sigma, const BZDatum& tau);

/// prod_a prod_nu prod_{j,k in J_a^nu} (1 - (q^nu z_j conj z'_k)^{e_a} q^{-e_a s})^{-1}.
cplx local_rs_factor(const BZDatum& sigma, const BZDatum& tau, cplx s, double pole_tol = 1e-12);

/// Dirichlet coefficients 0..r of the local factor in X = q^{-s}, by series division.
std::vector<cplx> local_series(const BZDatum& sigma, const BZDatum& tau, int r);

/// Completed size-n multiset {(q^{nu/2} z_j)^{e_a}} padded with zeros.
ComplexMultiset block_multiset(const BZDatum& sigma, int a, int nu);

/// Schur-pairing coefficient a(p^{e_a r}; nu, a).
cplx block_coeff(const BZDatum& sigma, const BZDatum& tau, int a, int nu, int r);

struct BlockSeries {
    int a = 0;
    int nu = 1;
    int e = 1;
    std::vector<cplx> coeffs;  ///< in the variable Y = X^e, entry 0 equal to 1
};

/// Block coefficient sequences for every (a, nu) with nonempty layer, up to Y-degree depth.
std::vector<BlockSeries> block_coefficients(const BZDatum& sigma, const BZDatum& tau, int depth = 32);

/// Coefficient of X^r assembled as the product of all block series.
cplx assembled_coeff(const BZDatum& sigma, const BZDatum& tau, int r);

struct LocalRoot {
    int a, nu, j, k;
    cplx root;        ///< q^nu z_j conj z'_k
    double modulus;
    double js_bound;  ///< q^{nu + 1 - n_j/2 - n'_k/2}
    bool js_ok;
    bool tempered_ok;
};

struct RootAuditReport {
    std::vector<LocalRoot> roots;
    int js_violations = 0;
    int tempered_violations = 0;
};

RootAuditReport root_audit(const BZDatum& sigma, const BZDatum& tau);

/// Unramified type: n singleton blocks, one class, e = 1.
BZDatum unramified_datum(u64 q, const std::vector<cplx>& s);

/// Random same-type pair with total dimension n.
std::pair<BZDatum, BZDatum> sample_bz_pair(Rng& rng, u64 q, int n, double sigma_max = 0.49);

}  // namespace rsz
