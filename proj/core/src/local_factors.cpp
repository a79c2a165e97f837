#include "rsz/local_factors.hpp"

#include <algorithm>
#include <cmath>

namespace rsz {

int BZDatum::n() const {
    int s = 0;
    for (const auto& b : blocks) s += b.n_j;
    return s;
}

cplx BZDatum::z(int j) const {
    const double lq = std::log(static_cast<double>(q_v));
    return std::exp(-(blocks.at(j).s_j + 0.5 * blocks.at(j).n_j) * lq);
}

std::vector<int> BZDatum::class_layer(int a, int nu) const {
    std::vector<int> out;
    for (int j : classes.at(a))
        if (blocks.at(j).n_j >= nu) out.push_back(j);
    return out;
}

void BZDatum::validate() const {
    if (q_v < 2) throw PreconditionError("BZDatum: q_v must be at least 2");
    if (blocks.empty()) throw PreconditionError("BZDatum: no blocks");
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].n_j < 1) throw PreconditionError("BZDatum: block dimension must be positive");
        if (j > 0 && blocks[j].s_j.real() > blocks[j - 1].s_j.real() + 1e-15)
            throw PreconditionError("BZDatum: real parts of s_j must be non-increasing");
    }
    std::vector<int> seen(blocks.size(), 0);
    for (const auto& cls : classes) {
        if (cls.empty()) throw PreconditionError("BZDatum: empty class");
        for (int j : cls) {
            if (j < 0 || j >= static_cast<int>(blocks.size()))
                throw PreconditionError("BZDatum: class index out of range");
            ++seen[j];
        }
    }
    for (int c : seen)
        if (c != 1) throw PreconditionError("BZDatum: classes must partition the block indices");
    if (e.size() != classes.size()) throw PreconditionError("BZDatum: one torsion number per class required");
    const int total = n();
    for (int ea : e)
        if (ea < 1 || total % ea != 0) throw PreconditionError("BZDatum: each e_a must divide n");
}

bool same_type(const BZDatum& sigma, const BZDatum& tau) {
    if (sigma.q_v != tau.q_v || sigma.classes != tau.classes || sigma.e != tau.e) return false;
    if (sigma.blocks.size() != tau.blocks.size()) return false;
    for (std::size_t j = 0; j < sigma.blocks.size(); ++j)
        if (sigma.blocks[j].n_j != tau.blocks[j].n_j) return false;
    return true;
}

namespace {

void check_pair(const BZDatum& sigma, const BZDatum& tau) {
    sigma.validate();
    tau.validate();
    if (!same_type(sigma, tau)) throw PreconditionError("local factor: mismatched combinatorial types");
}

int max_block(const BZDatum& d) {
    int m = 0;
    for (const auto& b : d.blocks) m = std::max(m, b.n_j);
    return m;
}

// Calls f(a, nu, j, k, W) with W = (q^nu z_j conj z'_k)^{e_a}.
template <class F>
void for_each_root(const BZDatum& sigma, const BZDatum& tau, F&& f) {
    const double q = static_cast<double>(sigma.q_v);
    for (int a = 0; a < static_cast<int>(sigma.classes.size()); ++a)
        for (int nu = 1; nu <= max_block(sigma); ++nu) {
            const auto layer = sigma.class_layer(a, nu);
            for (int j : layer)
                for (int k : layer) {
                    const cplx root = std::pow(q, nu) * sigma.z(j) * std::conj(tau.z(k));
                    f(a, nu, j, k, root);
                }
        }
}

}  // namespace

cplx local_rs_factor(const BZDatum& sigma, const BZDatum& tau, cplx s, double pole_tol) {
    check_pair(sigma, tau);
    const double lq = std::log(static_cast<double>(sigma.q_v));
    cplx value = 1.0;
    for_each_root(sigma, tau, [&](int a, int, int, int, cplx root) {
        const int ea = sigma.e[a];
        const cplx factor = 1.0 - std::pow(root, ea) * std::exp(-static_cast<double>(ea) * s * lq);
        if (std::abs(factor) < pole_tol) throw PoleError("local_rs_factor: evaluation at a pole");
        value /= factor;
    });
    return value;
}

std::vector<cplx> local_series(const BZDatum& sigma, const BZDatum& tau, int r) {
    check_pair(sigma, tau);
    std::vector<cplx> poly{1.0};
    for_each_root(sigma, tau, [&](int a, int, int, int, cplx root) {
        const int ea = sigma.e[a];
        std::vector<cplx> factor(ea + 1, 0.0);
        factor[0] = 1.0;
        factor[ea] = -std::pow(root, ea);
        poly = series_mul(poly, factor, r);
    });
    return series_inverse(poly, r);
}

ComplexMultiset block_multiset(const BZDatum& sigma, int a, int nu) {
    const int n = sigma.n();
    const int ea = sigma.e.at(a);
    const double half = std::pow(static_cast<double>(sigma.q_v), 0.5 * nu);
    ComplexMultiset out(n, 0.0);
    const auto layer = sigma.class_layer(a, nu);
    for (std::size_t i = 0; i < layer.size(); ++i) out[i] = std::pow(half * sigma.z(layer[i]), ea);
    return out;
}

cplx block_coeff(const BZDatum& sigma, const BZDatum& tau, int a, int nu, int r) {
    check_pair(sigma, tau);
    const int n = sigma.n();
    if (a < 0 || a >= static_cast<int>(sigma.classes.size()))
        throw PreconditionError("block_coeff: class index out of range");
    if (nu < 1 || nu > n) throw PreconditionError("block_coeff: nu must lie in [1, n]");
    if (r < 0) throw PreconditionError("block_coeff: r must be non-negative");
    const ComplexMultiset A = block_multiset(sigma, a, nu);
    ComplexMultiset B = block_multiset(tau, a, nu);
    for (auto& b : B) b = std::conj(b);

    // Layer k carries (e_n(A) e_n(B))^k, which vanishes whenever padding zeros are present.
    const cplx w = full_product(A) * full_product(B);
    cplx total = 0.0, wk = 1.0;
    for (int k = 0; n * k <= r; ++k) {
        if (wk == cplx(0.0) && k > 0) break;
        for (const auto& mu : enumerate_partitions(n - 1, r - n * k))
            total += wk * schur_eval(mu, A) * schur_eval(mu, B);
        wk *= w;
    }
    return total;
}

std::vector<BlockSeries> block_coefficients(const BZDatum& sigma, const BZDatum& tau, int depth) {
    check_pair(sigma, tau);
    std::vector<BlockSeries> out;
    for (int a = 0; a < static_cast<int>(sigma.classes.size()); ++a)
        for (int nu = 1; nu <= max_block(sigma); ++nu) {
            if (sigma.class_layer(a, nu).empty()) continue;
            BlockSeries b{a, nu, sigma.e[a], {}};
            b.coeffs.reserve(depth + 1);
            for (int r = 0; r <= depth; ++r) b.coeffs.push_back(block_coeff(sigma, tau, a, nu, r));
            out.push_back(std::move(b));
        }
    return out;
}

cplx assembled_coeff(const BZDatum& sigma, const BZDatum& tau, int r) {
    std::vector<std::vector<cplx>> expanded;
    for (const auto& b : block_coefficients(sigma, tau, r)) {
        std::vector<cplx> x(r + 1, 0.0);
        for (int i = 0; i <= r; i += b.e) x[i] = b.coeffs[i / b.e];
        expanded.push_back(std::move(x));
    }
    return product_series_coefficient(expanded, r);
}

RootAuditReport root_audit(const BZDatum& sigma, const BZDatum& tau) {
    check_pair(sigma, tau);
    const double q = static_cast<double>(sigma.q_v);
    RootAuditReport rep;
    for_each_root(sigma, tau, [&](int a, int nu, int j, int k, cplx root) {
        LocalRoot lr{a, nu, j, k, root, std::abs(root), 0.0, true, true};
        lr.js_bound = std::pow(q, nu + 1 - 0.5 * sigma.blocks[j].n_j - 0.5 * tau.blocks[k].n_j);
        lr.js_ok = lr.modulus < lr.js_bound && lr.modulus < q;
        lr.tempered_ok = lr.modulus <= 1.0 + 1e-12;
        if (!lr.js_ok) ++rep.js_violations;
        if (!lr.tempered_ok) ++rep.tempered_violations;
        rep.roots.push_back(lr);
    });
    return rep;
}

BZDatum unramified_datum(u64 q, const std::vector<cplx>& s) {
    BZDatum d;
    d.q_v = q;
    std::vector<int> cls;
    for (std::size_t j = 0; j < s.size(); ++j) {
        d.blocks.push_back({1, s[j]});
        cls.push_back(static_cast<int>(j));
    }
    d.classes = {cls};
    d.e = {1};
    return d;
}

std::pair<BZDatum, BZDatum> sample_bz_pair(Rng& rng, u64 q, int n, double sigma_max) {
    BZDatum sigma;
    sigma.q_v = q;
    // Random composition of n.
    int left = n;
    std::vector<int> dims;
    while (left > 0) {
        const int d = static_cast<int>(rng.range(1, left));
        dims.push_back(d);
        left -= d;
    }
    const int r = static_cast<int>(dims.size());
    // Random set partition by restricted growth string.
    std::vector<int> label(r);
    int classes = 0;
    for (int j = 0; j < r; ++j) {
        label[j] = static_cast<int>(rng.below(classes + 1));
        if (label[j] == classes) ++classes;
    }
    sigma.classes.assign(classes, {});
    for (int j = 0; j < r; ++j) sigma.classes[label[j]].push_back(j);
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (int a = 0; a < classes; ++a) sigma.e.push_back(divisors[rng.below(divisors.size())]);

    BZDatum tau = sigma;
    auto analytic = [&](BZDatum& d) {
        std::vector<double> re(r);
        for (auto& v : re) v = rng.uniform(-sigma_max, sigma_max);
        std::sort(re.begin(), re.end(), std::greater<>());
        d.blocks.clear();
        for (int j = 0; j < r; ++j) d.blocks.push_back({dims[j], cplx(re[j], rng.uniform(-5.0, 5.0))});
    };
    analytic(sigma);
    analytic(tau);
    return {sigma, tau};
}

}  // namespace rsz
