#pragma once

// Brute-force reference implementations, deliberately independent of the library code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using u64 = std::uint64_t;

inline bool is_prime_td(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> primes_td(u64 x) {
    std::vector<u64> out;
    for (u64 n = 2; n <= x; ++n)
        if (is_prime_td(n)) out.push_back(n);
    return out;
}

/// Every weakly decreasing sequence of at most `len` positive parts summing to r, by filtering compositions.
inline std::vector<std::vector<int>> partitions_bruteforce(int len, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            if (std::is_sorted(cur.rbegin(), cur.rend())) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == len) return;
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            rec(left - v);
            cur.pop_back();
        }
    };
    rec(r);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Sum over all semistandard fillings of the Young diagram of mu with entries in 1..n.
inline cplx schur_ssyt_bruteforce(const std::vector<int>& mu, const std::vector<cplx>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> fill;
    cplx total = 0.0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            cplx mono = 1.0;
            for (const auto& [c, v] : fill) mono *= x[v];
            total += mono;
            return;
        }
        const auto [i, j] = cells[k];
        for (int v = 0; v < n; ++v) {
            if (j > 0 && fill[{i, j - 1}] > v) continue;
            if (i > 0 && fill[{i - 1, j}] >= v) continue;
            fill[{i, j}] = v;
            rec(k + 1);
        }
        fill.erase({i, j});
    };
    rec(0);
    return total;
}

/// Bialternant ratio det(x_i^{mu_j + n - j}) / det(x_i^{n - j}) for distinct variables.
inline cplx schur_bialternant(const std::vector<int>& mu, const std::vector<cplx>& x) {
    const int n = static_cast<int>(x.size());
    auto det = [&](const std::function<int(int)>& expo) {
        std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = std::pow(x[i], expo(j));
        cplx d = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
            if (piv != c) {
                std::swap(a[piv], a[c]);
                d = -d;
            }
            d *= a[c][c];
            if (a[c][c] == cplx(0.0)) return cplx(0.0);
            for (int r = c + 1; r < n; ++r) {
                const cplx f = a[r][c] / a[c][c];
                for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            }
        }
        return d;
    };
    auto part = [&](int j) { return j < static_cast<int>(mu.size()) ? mu[j] : 0; };
    return det([&](int j) { return part(j) + n - 1 - j; }) / det([&](int j) { return n - 1 - j; });
}

/// Coefficients 0..r of prod (1 - c X)^{-1} over all products c, by repeated naive convolution.
inline std::vector<cplx> geometric_product(const std::vector<cplx>& roots, int r) {
    std::vector<cplx> acc(r + 1, 0.0);
    acc[0] = 1.0;
    for (const auto& c : roots) {
        std::vector<cplx> geo(r + 1);
        for (int k = 0; k <= r; ++k) geo[k] = std::pow(c, k);
        std::vector<cplx> next(r + 1, 0.0);
        for (int i = 0; i <= r; ++i)
            for (int j = 0; i + j <= r; ++j) next[i + j] += acc[i] * geo[j];
        acc = next;
    }
    return acc;
}

inline std::vector<cplx> pair_roots(const std::vector<cplx>& a, const std::vector<cplx>& b, bool conj_b) {
    std::vector<cplx> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * (conj_b ? std::conj(y) : y));
    return out;
}

inline int v_p(u64 n, u64 p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Conductor exponent of the character m -> exp(2 pi i j L(m) / phi(p^K)) on (Z/p^K)^*, p odd,
/// found by testing which subgroups 1 + p^k Z it kills, with L a discrete log to base g.
inline int odd_char_exponent_by_kernel(u64 p, int K, u64 j, u64 g) {
    u64 mod = 1;
    for (int i = 0; i < K; ++i) mod *= p;
    const u64 phi = mod / p * (p - 1);
    std::vector<u64> dlog(mod, 0);
    u64 v = 1;
    for (u64 e = 0; e < phi; ++e) {
        dlog[v] = e;
        v = static_cast<u64>((static_cast<unsigned __int128>(v) * g) % mod);
    }
    auto trivial_on = [&](u64 m) { return (j * dlog[m % mod]) % phi == 0; };
    for (int k = 0; k <= K; ++k) {
        u64 pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        bool ok = true;
        if (k == 0) {
            for (u64 m = 1; m < mod && ok; ++m)
                if (m % p != 0 && !trivial_on(m)) ok = false;
        } else {
            for (u64 m = 1; m < mod && ok; m += pk)
                if (!trivial_on(m)) ok = false;
        }
        if (ok) return k;
    }
    return K;
}

}  // namespace oracle
