#include "rsz/rs_coefficients.hpp"

#include <cmath>
#include <sstream>

namespace rsz {

void DecoratedIdeal::validate(int n) const {
    const auto fac = factorize(n_ideal);
    if (fac.size() != decorations.size())
        throw PreconditionError("decorated ideal " + std::to_string(n_ideal) +
                                ": decorations do not match prime factors");
    for (const auto& [p, r] : fac) {
        auto it = decorations.find(p);
        if (it == decorations.end())
            throw PreconditionError("decorated ideal: prime " + std::to_string(p) + " undecorated");
        if (it->second.size() != r || it->second.length() > n - 1)
            throw PreconditionError("decorated ideal: decoration at p=" + std::to_string(p) +
                                    " is not in P_{n-1}(r)");
    }
}

std::string DecoratedIdeal::str() const {
    std::ostringstream os;
    os << n_ideal;
    for (const auto& [p, mu] : decorations) os << ' ' << p << ':' << mu.str();
    return os.str();
}

std::vector<DecoratedIdeal> decorations_of(u64 m, int n) {
    std::vector<DecoratedIdeal> out{DecoratedIdeal{m, {}}};
    for (const auto& [p, r] : factorize(m)) {
        const auto parts = enumerate_partitions(n - 1, r);
        std::vector<DecoratedIdeal> next;
        next.reserve(out.size() * parts.size());
        for (const auto& base : out)
            for (const auto& mu : parts) {
                DecoratedIdeal d = base;
                d.decorations.emplace(p, mu);
                next.push_back(std::move(d));
            }
        out = std::move(next);
    }
    return out;
}

u64 decoration_count(u64 m, int n) {
    u64 c = 1;
    for (const auto& [p, r] : factorize(m)) c *= count_partitions(n - 1, r);
    return c;
}

cplx standard_coeff(const SatakeData& pi, u64 p, int j) {
    if (j < 0) throw PreconditionError("standard_coeff: negative exponent");
    return complete_homogeneous(pi.at(p), j)[j];
}

cplx standard_coeff_ideal(const SatakeData& pi, u64 m) {
    cplx v = 1.0;
    for (const auto& [p, r] : factorize(m)) v *= standard_coeff(pi, p, r);
    return v;
}

cplx lambda_coeff(const SatakeData& pi, const SatakeData& pi0, u64 m) {
    const auto fac = factorize(m);
    if (fac.size() != 1) return 0.0;
    const auto [p, k] = fac.front();
    return power_sum(pi.at(p), k) * power_sum(pi0.at(p), k);
}

cplx decorated_coeff(const SatakeData& pi, const DecoratedIdeal& ideal) {
    ideal.validate(pi.dimension());
    cplx v = 1.0;
    for (const auto& [p, mu] : ideal.decorations) v *= schur_eval(mu, pi.at(p));
    return v;
}

namespace {

ComplexMultiset conjugated(const ComplexMultiset& a) {
    ComplexMultiset c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::conj(a[i]);
    return c;
}

}  // namespace

cplx rs_coeff_prime_power(const SatakeData& pi, const SatakeData& pi_prime, u64 p, int r,
                          double central_tol) {
    const int n = pi.dimension();
    if (pi_prime.dimension() != n) throw PreconditionError("rs_coeff_prime_power: dimensions differ");
    if (r < 0) throw PreconditionError("rs_coeff_prime_power: negative exponent");
    const ComplexMultiset& A = pi.at(p);
    const ComplexMultiset B = conjugated(pi_prime.at(p));
    const cplx c = full_product(A);
    const cplx c_prime = full_product(pi_prime.at(p));
    if (std::abs(c - c_prime) > central_tol * std::max(1.0, std::abs(c)))
        throw PreconditionError("rs_coeff_prime_power: central characters differ at p=" + std::to_string(p));

    // s_mu(A) = e_n(A)^k s_{mu-hat}(A) when mu has n nonzero parts, so the k-th layer
    // carries the weight (e_n(A) e_n(B))^k.
    const cplx w = c * full_product(B);
    cplx total = 0.0;
    cplx wk = 1.0;
    for (int k = 0; n * k <= r; ++k) {
        for (const auto& mu : enumerate_partitions(n - 1, r - n * k))
            total += wk * schur_eval(mu, A) * schur_eval(mu, B);
        wk *= w;
    }
    return total;
}

cplx rs_coeff_oracle(const SatakeData& pi, const SatakeData& pi_prime, u64 p, int r) {
    return cauchy_series(pi.at(p), conjugated(pi_prime.at(p)), r)[r];
}

cplx rs_coeff_ideal(const SatakeData& pi, const SatakeData& pi_prime, u64 m) {
    cplx v = 1.0;
    for (const auto& [p, r] : factorize(m)) v *= rs_coeff_prime_power(pi, pi_prime, p, r);
    return v;
}

cplx rs_coeff_ideal_double_sum(const SatakeData& pi, const SatakeData& pi_prime, u64 m) {
    const int n = pi.dimension();
    if (pi_prime.dimension() != n) throw PreconditionError("rs_coeff_ideal_double_sum: dimensions differ");
    const auto fac = factorize(m);
    for (const auto& [p, r] : fac) {
        (void)r;
        const cplx c = pi.central(p), c_prime = pi_prime.central(p);
        if (std::abs(c - c_prime) > 1e-9 * std::max(1.0, std::abs(c)))
            throw PreconditionError("rs_coeff_ideal_double_sum: central characters differ at p=" +
                                    std::to_string(p));
    }

    // Enumerate t with t^n | m through exponent vectors k_p <= r_p / n.
    cplx total = 0.0;
    std::vector<int> k(fac.size(), 0);
    while (true) {
        u64 t_pow = 1;
        cplx weight = 1.0;
        for (std::size_t i = 0; i < fac.size(); ++i) {
            const u64 p = fac[i].first;
            t_pow *= ipow(p, n * k[i]);
            weight *= std::pow(pi.central(p) * std::conj(pi_prime.central(p)), k[i]);
        }
        const u64 rest = m / t_pow;
        cplx inner = 0.0;
        for (const auto& dec : decorations_of(rest, n))
            inner += decorated_coeff(pi, dec) * std::conj(decorated_coeff(pi_prime, dec));
        total += weight * inner;

        std::size_t i = 0;
        for (; i < fac.size(); ++i) {
            if (n * (k[i] + 1) <= fac[i].second) {
                ++k[i];
                break;
            }
            k[i] = 0;
        }
        if (i == fac.size()) break;
    }
    return total;
}

cplx naive_rs_partial(const SatakeData& pi, const SatakeData& pi_prime, cplx s, u64 bound,
                      std::vector<std::string>* warnings) {
    if (warnings && s.real() <= 1.0)
        warnings->push_back("naive_rs_partial: Re(s) <= 1, partial sums need not converge");
    const u64 N = pi.conductor(), Np = pi_prime.conductor();
    cplx total = 0.0;
    for (u64 n = 1; n <= bound; ++n) {
        if (gcd_u64(n, N) != 1 || gcd_u64(n, Np) != 1) continue;
        const cplx a = standard_coeff_ideal(pi, n) * std::conj(standard_coeff_ideal(pi_prime, n));
        total += a * std::exp(-s * std::log(static_cast<double>(n)));
    }
    return total;
}

cplx naive_rs_local_factor(const SatakeData& pi, const SatakeData& pi_prime, u64 p, cplx s, int depth) {
    const auto h = complete_homogeneous(pi.at(p), depth);
    const auto hp = complete_homogeneous(pi_prime.at(p), depth);
    const cplx x = std::exp(-s * std::log(static_cast<double>(p)));
    cplx total = 1.0, xj = 1.0;
    for (int j = 1; j <= depth; ++j) {
        xj *= x;
        total += h[j] * std::conj(hp[j]) * xj;
    }
    return total;
}

cplx g_d_factor(const SatakeData& pi, const SatakeData& pi_prime, u64 d, cplx s, int depth) {
    if (d == 0 || !is_squarefree(d)) throw PreconditionError("g_d_factor: d must be squarefree");
    cplx g = 1.0;
    for (const auto& [p, e] : factorize(d)) {
        (void)e;
        g *= 1.0 - 1.0 / naive_rs_local_factor(pi, pi_prime, p, s, depth);
    }
    return g;
}

BrumleyCheck check_brumley_cs(const SatakeData& pi, const SatakeData& pi_prime, u64 m, double tol) {
    const auto fac = factorize(m);
    if (fac.size() != 1) throw PreconditionError("check_brumley_cs: m must be a prime power");
    BrumleyCheck c{};
    c.lambda_pair = lambda_coeff(pi, pi_prime, m);
    c.lambda_pi = lambda_coeff(pi, pi.contragredient(), m).real();
    c.lambda_prime = lambda_coeff(pi_prime, pi_prime.contragredient(), m).real();
    const double gm = std::sqrt(std::max(0.0, c.lambda_pi * c.lambda_prime));
    const double scale = 1.0 + std::abs(c.lambda_pi) + std::abs(c.lambda_prime);
    c.cauchy_schwarz = std::abs(c.lambda_pair) <= gm + tol * scale;
    c.am_gm = gm <= 0.5 * (c.lambda_pi + c.lambda_prime) + tol * scale;
    return c;
}

}  // namespace rsz
