#include "rsz/family.hpp"

#include <cmath>

#include "rsz/common.hpp"

namespace rsz {

namespace {

bool coprime_to(u64 m, const std::set<u64>& S) {
    for (u64 p : S)
        if (p > 1 && m % p == 0) return false;
    return true;
}

u64 floor_x(double X) { return X < 1.0 ? 0 : static_cast<u64>(std::floor(X + 1e-9)); }

}  // namespace

DecoratedIndex build_index(double X, const std::set<u64>& S, int n, std::size_t cap) {
    if (!(X >= 1.0)) throw PreconditionError("build_index: need X >= 1");
    if (n < 1) throw PreconditionError("build_index: need n >= 1");
    DecoratedIndex idx;
    idx.X = X;
    idx.S = S;
    idx.n = n;
    const u64 top = floor_x(X);
    for (u64 m = 1; m <= top; ++m) {
        if (!coprime_to(m, S)) continue;
        if (idx.entries.size() + decoration_count(m, n) > cap)
            throw PreconditionError("build_index: entry count exceeds cap " + std::to_string(cap));
        for (auto& d : decorations_of(m, n)) idx.entries.push_back(std::move(d));
    }
    return idx;
}

void attach_block_labels(DecoratedIndex& index, const BZDatum& datum) {
    datum.validate();
    index.block_labels.clear();
    for (int a = 0; a < static_cast<int>(datum.classes.size()); ++a)
        for (int nu = 1;; ++nu) {
            if (datum.class_layer(a, nu).empty()) break;
            index.block_labels.emplace_back(a, nu);
        }
}

u64 index_size_sieve(double X, const std::set<u64>& S, int n) {
    const u64 top = floor_x(X);
    if (top == 0) return 0;
    std::vector<u64> f(top + 1, 1);
    f[0] = 0;
    for (u64 p : primes_up_to(top)) {
        const bool excluded = S.count(p) > 0;
        u64 pr = p;
        for (int r = 1;; ++r) {
            const u64 c = excluded ? 0 : count_partitions(n - 1, r);
            for (u64 k = pr; k <= top; k += pr)
                if ((k / pr) % p != 0) f[k] *= c;
            if (pr > top / p) break;
            pr *= p;
        }
    }
    u64 total = 0;
    for (u64 m = 1; m <= top; ++m) total += f[m];
    return total;
}

double EmbeddedVector::norm() const {
    double s = 0.0;
    for (const auto& c : coords) s += std::norm(c);
    return std::sqrt(s);
}

double smoothing_weight(const DecoratedIndex& index, u64 m, const TestFunction& f) {
    return smoothing_sum_F(m, index.X, index.n, f, std::vector<u64>(index.S.begin(), index.S.end()));
}

EmbeddedVector embed(const SatakeData& pi, const DecoratedIndex& index, const TestFunction& f,
                     const std::string& source) {
    if (pi.dimension() != index.n) throw PreconditionError("embed: dimension mismatch");
    EmbeddedVector v;
    v.source = source;
    v.coords.reserve(index.size());
    v.weights.reserve(index.size());
    u64 last = 0;
    double w = 0.0;
    for (const auto& e : index.entries) {
        for (const auto& [p, mu] : e.decorations) {
            (void)mu;
            if (!pi.is_unramified(p)) throw PreconditionError("embed: ramified prime " + std::to_string(p) + " not in S");
        }
        if (e.n_ideal != last) {
            w = smoothing_weight(index, e.n_ideal, f);
            last = e.n_ideal;
        }
        v.weights.push_back(w);
        v.coords.push_back(w > 0.0 ? std::sqrt(w) * decorated_coeff(pi, e) : cplx{0.0, 0.0});
    }
    return v;
}

cplx inner(const EmbeddedVector& u, const EmbeddedVector& v) {
    if (u.coords.size() != v.coords.size()) throw PreconditionError("inner: length mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * std::conj(v.coords[i]);
    return s;
}

GramComparison gram_vs_series(const SatakeData& pi, const SatakeData& pi_prime, const DecoratedIndex& index,
                              const TestFunction& f) {
    if (pi.dimension() != pi_prime.dimension()) throw PreconditionError("gram_vs_series: dimension mismatch");
    const u64 top = floor_x(index.X * f.support_hi());
    for (u64 p : primes_up_to(top)) {
        if (index.S.count(p)) continue;
        if (!pi.is_unramified(p) || !pi_prime.is_unramified(p))
            throw PreconditionError("gram_vs_series: ramified prime " + std::to_string(p) + " not in S");
        const cplx c = pi.central(p), c2 = pi_prime.central(p);
        if (std::abs(std::abs(c) - 1.0) > 1e-9 || std::abs(c - c2) > 1e-9)
            throw PreconditionError("gram_vs_series: central characters must agree and be unitary");
    }
    GramComparison g;
    g.inner_product = inner(embed(pi, index, f), embed(pi_prime, index, f));
    cplx s = 0.0;
    for (u64 a = 1; a <= top; ++a) {
        if (!coprime_to(a, index.S)) continue;
        const double w = f(static_cast<double>(a) / index.X);
        if (w != 0.0) s += rs_coeff_ideal(pi, pi_prime, a) * w;
    }
    g.series_sum = s;
    g.difference = std::abs(g.inner_product - g.series_sum);
    g.scale = 1.0 + std::abs(g.series_sum);
    return g;
}

namespace {

QuasiOrthResult certify_real(const std::vector<std::vector<double>>& vs, double unit_tol) {
    QuasiOrthResult r;
    r.K = vs.size();
    r.M = vs.empty() ? 0 : vs.front().size();
    for (const auto& v : vs) {
        if (v.size() != r.M) throw PreconditionError("quasi_orth_certify: dimension mismatch");
        double s = 0.0;
        for (double x : v) s += x * x;
        if (std::abs(std::sqrt(s) - 1.0) > unit_tol) throw PreconditionError("quasi_orth_certify: non-unit vector");
    }
    const double thr = r.M ? 1.0 / static_cast<double>(r.M) : 0.0;
    for (std::size_t i = 0; i < r.K; ++i)
        for (std::size_t j = i + 1; j < r.K; ++j) {
            double d = 0.0;
            for (std::size_t t = 0; t < r.M; ++t) d += vs[i][t] * vs[j][t];
            const double a = std::abs(d);
            r.max_cos = std::max(r.max_cos, a);
            if (!r.violation && !(a < thr)) {
                r.violation = std::make_pair(i, j);
                r.violation_value = a;
            }
        }
    const double K = static_cast<double>(r.K);
    r.elementary_bound = K + K * (K - 1.0) * r.max_cos;
    r.ok = !r.violation;
    if (r.ok && r.K > r.M) throw std::logic_error("quasi_orth_certify: K > M with all pairs below 1/M");
    return r;
}

}  // namespace

QuasiOrthResult quasi_orth_certify(const std::vector<std::vector<double>>& vectors, double unit_tol) {
    return certify_real(vectors, unit_tol);
}

QuasiOrthResult quasi_orth_certify(const std::vector<std::vector<cplx>>& vectors, double unit_tol) {
    std::vector<std::vector<double>> re;
    re.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<double> w;
        w.reserve(2 * v.size());
        for (const auto& c : v) {
            w.push_back(c.real());
            w.push_back(c.imag());
        }
        re.push_back(std::move(w));
    }
    return certify_real(re, unit_tol);
}

namespace {

void count_at(double X, int n, double& N, bool& exact) {
    if (X <= kExactCountLimit) {
        N = static_cast<double>(index_size_sieve(X, {}, n));
        exact = true;
        return;
    }
    // Mean value of prod |P_{n-1}(r)| is prod_{i=2}^{n-1} zeta(i).
    double c = 1.0;
    for (int i = 2; i <= n - 1; ++i) c *= std::riemann_zeta(static_cast<double>(i));
    N = X * c;
    exact = false;
}

}  // namespace

FamilyBoundReport family_bound_report(double D, int n, double Q, double norm_q, double eps) {
    if (!(D > 0.0 && Q > 0.0 && norm_q > 0.0 && eps > 0.0) || n < 1)
        throw PreconditionError("family_bound_report: parameters must be positive");
    FamilyBoundReport r;
    r.D = D;
    r.n = n;
    r.Q = Q;
    r.norm_q = norm_q;
    r.eps = eps;
    r.log_B = -static_cast<double>(n * n) * std::log(D) - 2.0 * std::log(norm_q) + 2.0 * n * std::log(Q);
    r.X_uncond = std::exp((1.0 + eps) * r.log_B);
    r.X_cond = std::exp((0.5 + eps) * r.log_B);
    count_at(r.X_uncond, n, r.N, r.N_exact);
    count_at(r.X_cond, n, r.N_cond, r.N_cond_exact);
    r.K_bound = 2.0 * r.N;
    r.K_bound_cond = 2.0 * r.N_cond;
    r.residue_exponent = 7.0 * n / 4.0 - 1.25 + eps;
    return r;
}

}  // namespace rsz
