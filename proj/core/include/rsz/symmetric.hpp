#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rsz/common.hpp"

namespace rsz {

/// Integer partition with non-increasing positive parts (zeros trimmed).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// A multiset of complex numbers whose size is the ambient dimension n.
using ComplexMultiset = std::vector<cplx>;

/// Partitions of `total` into at most `max_length` parts, descending lexicographic.
std::vector<Partition> enumerate_partitions(int max_length, int total);

/// Number of partitions of `total` with at most `max_length` parts.
std::uint64_t count_partitions(int max_length, int total);

/// Schur polynomial s_mu evaluated at x.
cplx schur_eval(const Partition& mu, const ComplexMultiset& x);

/// Jacobi-Trudi evaluation det(h_{mu_i - i + j}); used beyond the tableau range.
cplx schur_jacobi_trudi(const Partition& mu, const ComplexMultiset& x);

/// Complete homogeneous symmetric polynomials h_0..h_r of x.
std::vector<cplx> complete_homogeneous(const ComplexMultiset& x, int r);

/// Power sum p_k(x).
cplx power_sum(const ComplexMultiset& x, int k);

/// Elementary symmetric e_n(x) for n = |x|, i.e. the product of entries.
cplx full_product(const ComplexMultiset& x);

/// Coefficient of X^r in the product of normalized power series.
cplx product_series_coefficient(const std::vector<std::vector<cplx>>& blocks, int r);

/// Sum over mu in P_n(r) of s_mu(A) s_mu(B).
cplx cauchy_pairing(const ComplexMultiset& A, const ComplexMultiset& B, int r);

/// Coefficients 0..r of prod_{j,k} (1 - A_j B_k X)^{-1}, by direct series expansion.
std::vector<cplx> cauchy_series(const ComplexMultiset& A, const ComplexMultiset& B, int r);

/// Truncated power series helpers (coefficient vectors, index = degree).
std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int r);
std::vector<cplx> series_inverse(const std::vector<cplx>& a, int r);

}  // namespace rsz
