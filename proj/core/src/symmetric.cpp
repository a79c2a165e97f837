#include "rsz/symmetric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rsz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw PreconditionError("partition parts must be non-negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be non-increasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Remaining slots must be able to absorb what is left.
        if (static_cast<long long>(p) * slots < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_length, int total) {
    if (max_length < 0) throw PreconditionError("max_length must be non-negative");
    std::vector<Partition> out;
    if (total < 0) return out;
    std::vector<int> cur;
    partitions_rec(total, total, max_length, cur, out);
    return out;
}

std::uint64_t count_partitions(int max_length, int total) {
    if (total < 0 || max_length < 0) return 0;
    // p(k, m): partitions of m with parts of size at most k (conjugate to length ≤ k).
    std::vector<std::uint64_t> dp(total + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= max_length; ++part)
        for (int m = part; m <= total; ++m) dp[m] += dp[m - part];
    return dp[total];
}

namespace {

using Memo = std::map<std::pair<int, std::vector<int>>, cplx>;

cplx branch(const std::vector<int>& mu, int nvars, const ComplexMultiset& x, Memo& memo) {
    if (mu.empty()) return 1.0;
    if (static_cast<int>(mu.size()) > nvars) return 0.0;
    if (nvars == 1) return std::pow(x[0], mu[0]);
    auto key = std::make_pair(nvars, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Interlacing nu: mu[i+1] <= nu[i] <= mu[i], with length(nu) <= nvars - 1.
    const int len = static_cast<int>(mu.size());
    const int nu_len = std::min(len, nvars - 1);
    int mu_total = 0;
    for (int p : mu) mu_total += p;

    const cplx xn = x[nvars - 1];
    cplx total = 0.0;
    std::vector<int> nu(nu_len);
    // Odometer over nu entries.
    for (int i = 0; i < nu_len; ++i) nu[i] = (i + 1 < len) ? mu[i + 1] : 0;
    while (true) {
        int nu_total = 0;
        for (int v : nu) nu_total += v;
        std::vector<int> trimmed(nu);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += std::pow(xn, mu_total - nu_total) * branch(trimmed, nvars - 1, x, memo);

        int i = 0;
        for (; i < nu_len; ++i) {
            if (nu[i] < mu[i]) {
                ++nu[i];
                break;
            }
            nu[i] = (i + 1 < len) ? mu[i + 1] : 0;
        }
        if (i == nu_len) break;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::vector<cplx> complete_homogeneous(const ComplexMultiset& x, int r) {
    std::vector<cplx> h(r + 1, 0.0);
    h[0] = 1.0;
    // Multiply geometric series (1 - x_i X)^{-1} one at a time.
    for (const cplx& xi : x)
        for (int d = 1; d <= r; ++d) h[d] += xi * h[d - 1];
    return h;
}

cplx power_sum(const ComplexMultiset& x, int k) {
    cplx s = 0.0;
    for (const cplx& v : x) s += std::pow(v, k);
    return s;
}

cplx full_product(const ComplexMultiset& x) {
    cplx p = 1.0;
    for (const cplx& v : x) p *= v;
    return p;
}

cplx schur_jacobi_trudi(const Partition& mu, const ComplexMultiset& x) {
    const int l = mu.length();
    if (l > static_cast<int>(x.size())) throw PreconditionError("partition longer than multiset");
    if (l == 0) return 1.0;
    const int top = mu[0] + l;
    const auto h = complete_homogeneous(x, top);
    auto hk = [&](int k) -> cplx { return (k < 0) ? cplx(0.0) : h[k]; };

    std::vector<std::vector<cplx>> m(l, std::vector<cplx>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = hk(mu[i] - i + j);

    // Gaussian elimination with partial pivoting.
    cplx det = 1.0;
    for (int c = 0; c < l; ++c) {
        int piv = c;
        for (int i = c + 1; i < l; ++i)
            if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
        if (std::abs(m[piv][c]) == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < l; ++i) {
            const cplx f = m[i][c] / m[c][c];
            for (int j = c; j < l; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

cplx schur_eval(const Partition& mu, const ComplexMultiset& x) {
    const int n = static_cast<int>(x.size());
    if (mu.length() > n) throw PreconditionError("schur_eval: length(mu) exceeds multiset size");
    if (mu.length() == 0) return 1.0;
    if (mu.size() > 12 || n > 6) return schur_jacobi_trudi(mu, x);
    Memo memo;
    return branch(mu.parts(), n, x, memo);
}

std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int r) {
    std::vector<cplx> out(r + 1, 0.0);
    for (int i = 0; i <= r && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == cplx(0.0)) continue;
        for (int j = 0; i + j <= r && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<cplx> series_inverse(const std::vector<cplx>& a, int r) {
    if (a.empty() || a[0] == cplx(0.0)) throw PreconditionError("series_inverse: zero constant term");
    std::vector<cplx> inv(r + 1, 0.0);
    inv[0] = 1.0 / a[0];
    for (int d = 1; d <= r; ++d) {
        cplx s = 0.0;
        for (int i = 1; i <= d && i < static_cast<int>(a.size()); ++i) s += a[i] * inv[d - i];
        inv[d] = -s * inv[0];
    }
    return inv;
}

cplx product_series_coefficient(const std::vector<std::vector<cplx>>& blocks, int r) {
    if (r < 0) throw PreconditionError("product_series_coefficient: r must be non-negative");
    std::vector<cplx> acc{1.0};
    for (const auto& b : blocks) {
        if (b.empty() || std::abs(b[0] - cplx(1.0)) > 1e-12)
            throw PreconditionError("product_series_coefficient: block not normalized (leading coefficient != 1)");
        acc = series_mul(acc, b, r);
    }
    return r < static_cast<int>(acc.size()) ? acc[r] : cplx(0.0);
}

cplx cauchy_pairing(const ComplexMultiset& A, const ComplexMultiset& B, int r) {
    if (A.size() != B.size()) throw PreconditionError("cauchy_pairing: multiset sizes differ");
    cplx total = 0.0;
    for (const auto& mu : enumerate_partitions(static_cast<int>(A.size()), r))
        total += schur_eval(mu, A) * schur_eval(mu, B);
    return total;
}

std::vector<cplx> cauchy_series(const ComplexMultiset& A, const ComplexMultiset& B, int r) {
    std::vector<cplx> c(r + 1, 0.0);
    c[0] = 1.0;
    for (const cplx& a : A)
        for (const cplx& b : B) {
            const cplx w = a * b;
            for (int d = 1; d <= r; ++d) c[d] += w * c[d - 1];
        }
    return c;
}

}  // namespace rsz
