#include "rsz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rsz {

namespace {

template <class T, class F>
T trapezoid_impl(const F& f, double a, double b, double rel_tol, int max_levels) {
    if (!(b > a)) return T(0.0);
    int n = 64;
    double h = (b - a) / n;
    T sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) sum += f(a + i * h);
    T est = sum * h;
    for (int level = 0; level < max_levels; ++level) {
        T mid = 0.0;
        for (int i = 0; i < n; ++i) mid += f(a + (i + 0.5) * h);
        sum += mid;
        n *= 2;
        h *= 0.5;
        const T next = sum * h;
        const double diff = std::abs(next - est);
        est = next;
        if (level >= 2 && diff <= rel_tol * std::abs(next) + 1e-300) break;
    }
    return est;
}

}  // namespace

double integrate_trapezoid(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           int max_levels) {
    return trapezoid_impl<double>(f, a, b, rel_tol, max_levels);
}

cplx integrate_trapezoid_complex(const std::function<cplx(double)>& f, double a, double b, double rel_tol,
                         int max_levels) {
    return trapezoid_impl<cplx>(f, a, b, rel_tol, max_levels);
}

TestFunction::TestFunction(Kind kind) : kind_(kind) {
    switch (kind_) {
        case Kind::UnitBump: lo_ = 0.5; hi_ = 1.0; break;
        case Kind::CompactBump: lo_ = -1.5; hi_ = 1.5; break;
        case Kind::ExplicitPhi: lo_ = -0.5; hi_ = 0.0; break;
    }
    if (kind_ == Kind::UnitBump) {
        const double mass = integrate_trapezoid([this](double x) { return (*this)(x); }, lo_, hi_, 1e-14);
        scale_ = 1.0 / mass;
    }
}

double TestFunction::operator()(double x) const {
    if (!(x > lo_ && x < hi_)) return 0.0;
    switch (kind_) {
        case Kind::UnitBump: return scale_ * std::exp(-1.0 / ((x - 0.5) * (1.0 - x)));
        case Kind::CompactBump: {
            const double y = x / 1.5;
            return std::exp(-1.0 / (1.0 - y * y));
        }
        case Kind::ExplicitPhi: return std::exp(16.0 + 1.0 / (x * (x + 0.5)));
    }
    return 0.0;
}

double TestFunction::integral() const {
    return integrate_trapezoid([this](double x) { return (*this)(x); }, lo_, hi_, 1e-12);
}

cplx TestFunction::transform(cplx s, double rel_tol) const {
    if (kind_ == Kind::UnitBump)
        return integrate_trapezoid_complex(
            [&](double x) -> cplx { return (*this)(x) * std::exp((s - 1.0) * std::log(x)); }, lo_, hi_, rel_tol);
    return integrate_trapezoid_complex([&](double y) -> cplx { return (*this)(y) * std::exp(s * y); }, lo_, hi_, rel_tol);
}

double smoothing_sum_F(u64 n, double X, int n_dim, const TestFunction& f, const std::vector<u64>& excluded) {
    double total = 0.0;
    for (u64 m = 1;; ++m) {
        const double v = static_cast<double>(n) * std::pow(static_cast<double>(m), n_dim) / X;
        if (v >= f.support_hi()) break;
        bool coprime = true;
        for (u64 p : excluded)
            if (m % p == 0) coprime = false;
        if (coprime) total += f(v);
    }
    return total;
}

double log_j_k(double u, int k) {
    if (u < 0.0) throw PreconditionError("j_k: u must be non-negative");
    if (k == 0) return -u;
    if (u == 0.0) return -std::numeric_limits<double>::infinity();
    return k * std::log(u) - u - std::lgamma(k + 1.0);
}

double j_k(double u, int k) { return std::exp(log_j_k(u, k)); }

double j_k_derivative(double u, int k) {
    if (k == 0) return -std::exp(-u);
    return j_k(u, k - 1) - j_k(u, k);
}

bool j_bound_holds(int k, double eta, double log_n) {
    const double lhs = log_j_k(eta * log_n, k);
    const double rhs = -k * std::log(110.0) - 0.5 * eta * log_n;
    return lhs <= rhs;
}

JBoundScan j_bound_scan(const std::vector<int>& Ks, const std::vector<double>& etas, int samples_per_side) {
    JBoundScan scan;
    scan.min_log_margin = std::numeric_limits<double>::infinity();
    auto check = [&](int k, double eta, double L) {
        const double margin = -k * std::log(110.0) - 0.5 * eta * L - log_j_k(eta * L, k);
        ++scan.checked;
        if (margin < 0.0) ++scan.violations;
        scan.min_log_margin = std::min(scan.min_log_margin, margin);
    };
    for (int K : Ks)
        for (double eta : etas) {
            const double logA1 = K / (300.0 * eta);
            const double logA2 = 40.0 * K / eta;
            for (int k = K; k <= 2 * K; ++k)
                for (int i = 0; i < samples_per_side; ++i) {
                    // Below A1: log n in [0, log A1).
                    check(k, eta, logA1 * i / samples_per_side);
                    // Above A2: geometric spread over (log A2, 1000 log A2].
                    const double t = static_cast<double>(i + 1) / samples_per_side;
                    check(k, eta, logA2 * std::pow(1000.0, t) * (1.0 + 1e-12));
                }
        }
    return scan;
}

PowerSumResult sos_turan(const std::vector<cplx>& z, int K) {
    if (z.empty()) throw PreconditionError("sos_turan: empty instance");
    if (K < 1) throw PreconditionError("sos_turan: K must be positive");
    if (static_cast<int>(z.size()) > K) throw PreconditionError("sos_turan: requires nu <= K");
    std::vector<std::complex<long double>> pw(z.size(), 1.0L);
    const long double base = std::abs(z[0]) / 50.0L;
    PowerSumResult best;
    for (int k = 1; k <= 2 * K; ++k) {
        std::complex<long double> s = 0.0L;
        for (std::size_t i = 0; i < z.size(); ++i) {
            pw[i] *= std::complex<long double>(z[i].real(), z[i].imag());
            s += pw[i];
        }
        if (k < K) continue;
        const long double value = std::abs(s);
        const long double threshold = std::pow(base, static_cast<long double>(k));
        if (value >= threshold) return {k, static_cast<double>(value), static_cast<double>(threshold), true};
        if (k == K || value > best.value) best = {k, static_cast<double>(value), static_cast<double>(threshold), false};
    }
    return best;
}

GallagherResult gallagher_ratio(const std::map<u64, cplx>& a, double T, double rel_tol) {
    if (T < 1.0) throw PreconditionError("gallagher_ratio: T must be at least 1");
    GallagherResult res;
    std::vector<std::pair<double, cplx>> terms;
    for (const auto& [n, v] : a)
        if (v != cplx(0.0)) terms.emplace_back(std::log(static_cast<double>(n)), v);
    if (terms.empty()) return res;

    res.lhs = integrate_trapezoid(
        [&](double t) {
            cplx s = 0.0;
            for (const auto& [ln, v] : terms) s += v * std::polar(1.0, -t * ln);
            return std::norm(s);
        },
        -T, T, rel_tol);

    // Step function in v = log x: n contributes on [log n - 1/T, log n).
    std::vector<double> br;
    for (const auto& [ln, v] : terms) {
        (void)v;
        br.push_back(ln - 1.0 / T);
        br.push_back(ln);
    }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        const double mid = 0.5 * (br[i] + br[i + 1]);
        cplx s = 0.0;
        for (const auto& [ln, v] : terms)
            if (ln - 1.0 / T <= mid && mid < ln) s += v;
        integral += std::norm(s) * (br[i + 1] - br[i]);
    }
    res.rhs = T * T * integral;
    res.ratio = res.rhs > 0.0 ? res.lhs / res.rhs : std::numeric_limits<double>::infinity();
    return res;
}

SelbergSieve::SelbergSieve(const std::function<double(u64)>& g, double z, u64 N) : z_(z) {
    for (u64 p : primes_up_to(z > 2 ? static_cast<u64>(std::ceil(z)) : 1)) {
        if (static_cast<double>(p) >= z || N % p == 0) continue;
        const double gp = g(p);
        if (!(gp >= 0.0) || gp >= 1.0) throw PreconditionError("SelbergSieve: need 0 <= g(p) < 1");
        if (gp == 0.0) continue;
        g_[p] = gp;
        primes_.push_back(p);
    }
    // Squarefree products of sieve primes not exceeding z.
    std::function<void(std::size_t, u64)> dfs = [&](std::size_t start, u64 d) {
        support_.push_back(d);
        for (std::size_t i = start; i < primes_.size(); ++i) {
            if (static_cast<double>(d) * static_cast<double>(primes_[i]) > z_) break;
            dfs(i + 1, d * primes_[i]);
        }
    };
    dfs(0, 1);
    std::sort(support_.begin(), support_.end());

    for (u64 d : support_) G_ += h_of(d);
    for (u64 d : support_) {
        if (d == 1) {
            rho_[1] = 1.0;
            continue;
        }
        double Gd = 0.0;
        const double y = z_ / static_cast<double>(d);
        for (u64 m : support_) {
            if (static_cast<double>(m) > y) break;
            if (gcd_u64(m, d) == 1) Gd += h_of(m);
        }
        double inv = 1.0;
        for (const auto& [p, e] : factorize(d)) {
            (void)e;
            inv /= 1.0 - g_.at(p);
        }
        rho_[d] = mobius(d) * inv * Gd / G_;
    }
}

double SelbergSieve::g_of(u64 d) const {
    double v = 1.0;
    for (const auto& [p, e] : factorize(d)) {
        (void)e;
        v *= g_.at(p);
    }
    return v;
}

double SelbergSieve::h_of(u64 d) const {
    double v = 1.0;
    for (const auto& [p, e] : factorize(d)) {
        (void)e;
        const double gp = g_.at(p);
        v *= gp / (1.0 - gp);
    }
    return v;
}

double SelbergSieve::rho(u64 d) const {
    auto it = rho_.find(d);
    return it == rho_.end() ? 0.0 : it->second;
}

double SelbergSieve::w(u64 n) const {
    std::vector<u64> ps;
    for (u64 p : primes_)
        if (n % p == 0) ps.push_back(p);
    double s = 0.0;
    std::function<void(std::size_t, u64)> dfs = [&](std::size_t start, u64 d) {
        s += rho(d);
        for (std::size_t i = start; i < ps.size(); ++i) {
            if (static_cast<double>(d) * static_cast<double>(ps[i]) > z_) continue;
            dfs(i + 1, d * ps[i]);
        }
    };
    dfs(0, 1);
    return s * s;
}

double SelbergSieve::main_term_lhs() const {
    long double total = 0.0L;
    for (const auto& [d1, r1] : rho_)
        for (const auto& [d2, r2] : rho_) {
            const u64 l = d1 / gcd_u64(d1, d2) * d2;
            total += static_cast<long double>(r1) * r2 * g_of(l);
        }
    return static_cast<double>(total);
}

SelbergSieve::Conditions SelbergSieve::check_conditions(double tol) const {
    Conditions c;
    c.rho_one = rho(1) == 1.0;
    c.support_ok = true;
    for (const auto& [d, r] : rho_) {
        (void)r;
        if (!std::binary_search(support_.begin(), support_.end(), d)) c.support_ok = false;
    }
    for (const auto& [d, r] : rho_) {
        (void)d;
        c.max_abs_rho = std::max(c.max_abs_rho, std::abs(r));
    }
    c.bounded = c.max_abs_rho <= 1.0 + tol;
    return c;
}

MicroReport micro_inequalities(int u_points, int k_max, int x_points) {
    MicroReport rep;
    rep.log_min_margin = std::numeric_limits<double>::infinity();
    rep.hyp_min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < u_points; ++i) {
        const double u = std::pow(1e6, static_cast<double>(i) / (u_points - 1));
        const double lu = std::log(u);
        for (int k = 1; k <= k_max; ++k) {
            ++rep.log_checks;
            // Compare logs; (log u)^k = 0 at u = 1.
            const double rhs = std::lgamma(k + 1.0) + lu;
            const double margin = (lu > 0.0) ? rhs - k * std::log(lu) : std::numeric_limits<double>::infinity();
            if (margin < 0.0) ++rep.log_violations;
            rep.log_min_margin = std::min(rep.log_min_margin, margin);
        }
    }
    for (int i = 0; i < x_points; ++i) {
        const double x = 2.5 * i / (x_points - 1);
        ++rep.hyp_checks;
        const double margin = 2.0 * std::log1p(x) - x;
        if (margin < 0.0) ++rep.hyp_violations;
        rep.hyp_min_margin = std::min(rep.hyp_min_margin, margin);
    }
    return rep;
}

double weiss_factor(double A1, double A2, double beta_chi, double eta, const std::function<cplx(u64)>& chi) {
    if (beta_chi < 0.5 || beta_chi > 1.0) throw PreconditionError("weiss_factor: need 1/2 <= beta <= 1");
    if (!(A2 > A1)) throw PreconditionError("weiss_factor: need A1 < A2");
    double total = 0.0;
    for_each_prime(static_cast<u64>(std::floor(A2)), [&](u64 p) {
        const double dp = static_cast<double>(p);
        if (dp <= A1) return;
        const cplx term = 1.0 + chi(p) * std::pow(dp, beta_chi - 1.0);
        total += std::norm(term) * std::log(dp) / dp;
    });
    return eta * total;
}

std::vector<double> laplace_decay_constants(const TestFunction& phi, double re_max, double im_max, int grid) {
    std::vector<double> c(3, 0.0);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double re = -re_max + 2.0 * re_max * i / (grid - 1);
            const double im = -im_max + 2.0 * im_max * j / (grid - 1);
            const cplx s(re, im);
            const double v = std::abs(phi.transform(s, 1e-8)) * std::exp(-2.0 * std::abs(re));
            for (int k = 0; k < 3; ++k) c[k] = std::max(c[k], v * std::pow(std::abs(s), k));
        }
    return c;
}

}  // namespace rsz
