#include "rsz/primes.hpp"

#include <algorithm>
#include <cmath>

#include "rsz/common.hpp"

namespace rsz {

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

void for_each_prime(u64 x, const std::function<void(u64)>& visit) {
    if (x < 2) return;
    const u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(x))) + 1;
    const auto base = primes_up_to(root);
    const u64 segment = u64{1} << 18;
    std::vector<char> mark(segment);
    for (u64 lo = 2; lo <= x; lo += segment) {
        const u64 hi = std::min(x, lo + segment - 1);
        std::fill(mark.begin(), mark.end(), 0);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 j = start; j <= hi; j += p) mark[j - lo] = 1;
        }
        for (u64 v = lo; v <= hi; ++v)
            if (!mark[v - lo]) visit(v);
    }
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    if (n == 0) throw PreconditionError("factorize: zero has no factorization");
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(u64 n) {
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

int mobius(u64 n) {
    int m = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 smallest_prime_factor(u64 n) {
    if (n < 2) return 0;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

int jacobi(i64 a, u64 n) {
    if (n == 0 || n % 2 == 0) throw PreconditionError("jacobi: modulus must be odd and positive");
    i64 m = static_cast<i64>(n);
    a %= m;
    if (a < 0) a += m;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

int kronecker_prime(i64 d, u64 p) {
    if (p == 2) {
        if (d % 2 == 0) return 0;
        i64 r = d % 8;
        if (r < 0) r += 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return jacobi(d, p);
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1) return false;
    i64 r = d % 4;
    if (r < 0) r += 4;
    const u64 ad = static_cast<u64>(d < 0 ? -d : d);
    if (r == 1) return is_squarefree(ad);
    if (r != 0) return false;
    const i64 m = d / 4;
    i64 mr = m % 4;
    if (mr < 0) mr += 4;
    const u64 am = static_cast<u64>(m < 0 ? -m : m);
    return (mr == 2 || mr == 3) && is_squarefree(am);
}

u64 ipow(u64 base, int exp) {
    u64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace rsz
