#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace rsz {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Primes up to and including `limit` (simple Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

/// Calls visit(p) for every prime p <= x in increasing order (segmented sieve).
void for_each_prime(u64 x, const std::function<void(u64)>& visit);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, int>> factorize(u64 n);

bool is_prime(u64 n);
bool is_squarefree(u64 n);
int mobius(u64 n);
u64 euler_phi(u64 n);
u64 gcd_u64(u64 a, u64 b);

/// Smallest prime factor, or 0 for n = 1.
u64 smallest_prime_factor(u64 n);

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(i64 a, u64 n);

/// Kronecker symbol (d/p) for a prime p.
int kronecker_prime(i64 d, u64 p);

/// Is d a fundamental discriminant.
bool is_fundamental_discriminant(i64 d);

u64 ipow(u64 base, int exp);

}  // namespace rsz
