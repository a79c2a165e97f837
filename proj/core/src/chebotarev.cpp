#include "rsz/chebotarev.hpp"

#include <cmath>

#include "rsz/common.hpp"

namespace rsz {

AbelianFieldSpec AbelianFieldSpec::cyclotomic(u64 q) {
    if (q < 3) throw PreconditionError("cyclotomic field needs q >= 3");
    AbelianFieldSpec f;
    f.kind = Kind::Cyclotomic;
    f.q = q;
    return f;
}

AbelianFieldSpec AbelianFieldSpec::quadratic(i64 d) {
    if (!is_fundamental_discriminant(d))
        throw PreconditionError("quadratic field needs a fundamental discriminant, got " + std::to_string(d));
    AbelianFieldSpec f;
    f.kind = Kind::Quadratic;
    f.d = d;
    return f;
}

u64 AbelianFieldSpec::group_order() const { return kind == Kind::Cyclotomic ? euler_phi(q) : 2; }

double AbelianFieldSpec::log_D() const {
    if (log_D_override > 0.0) return log_D_override;
    if (kind == Kind::Cyclotomic) return static_cast<double>(euler_phi(q)) * std::log(static_cast<double>(q));
    return std::log(std::abs(static_cast<double>(d)));
}

double AbelianFieldSpec::log_D_exact() const {
    if (kind == Kind::Quadratic) return std::log(std::abs(static_cast<double>(d)));
    double s = std::log(static_cast<double>(q));
    for (const auto& [p, e] : factorize(q)) {
        (void)e;
        s -= std::log(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
    }
    return static_cast<double>(euler_phi(q)) * s;
}

bool AbelianFieldSpec::is_ramified(u64 p) const {
    if (kind == Kind::Cyclotomic) {
        // Q(zeta_q) = Q(zeta_{q/2}) for q = 2 mod 4, where 2 is unramified.
        if (p == 2 && q % 4 == 2) return false;
        return q % p == 0;
    }
    const u64 ad = static_cast<u64>(d < 0 ? -d : d);
    return ad % p == 0;
}

std::string AbelianFieldSpec::str() const {
    return kind == Kind::Cyclotomic ? "Q(zeta_" + std::to_string(q) + ")" : "Q(sqrt(" + std::to_string(d) + "))";
}

std::vector<ClassSpec> all_classes(const AbelianFieldSpec& field) {
    std::vector<ClassSpec> out;
    if (field.kind == AbelianFieldSpec::Kind::Quadratic) return {ClassSpec::split(), ClassSpec::inert()};
    for (u64 a = 1; a < field.q; ++a)
        if (gcd_u64(a, field.q) == 1) out.push_back({static_cast<i64>(a)});
    return out;
}

ClassSpec frobenius(const AbelianFieldSpec& field, u64 p) {
    if (field.kind == AbelianFieldSpec::Kind::Cyclotomic) return {static_cast<i64>(p % field.q)};
    return {kronecker_prime(field.d, p)};
}

namespace {

void check_capacity(double x) {
    if (x > kSieveCapacity) throw PreconditionError("x exceeds sieve capacity 1e9");
}

}  // namespace

ClassCounts class_counts(const AbelianFieldSpec& field, double x) {
    check_capacity(x);
    ClassCounts c;
    c.x = x < 2.0 ? 0 : static_cast<u64>(std::floor(x));
    for (const auto& cls : all_classes(field)) c.per_class[cls.a] = 0;
    for_each_prime(c.x, [&](u64 p) {
        ++c.pi_x;
        if (field.is_ramified(p)) {
            ++c.ramified;
            return;
        }
        ++c.per_class[frobenius(field, p).a];
    });
    return c;
}

u64 pi_C(const AbelianFieldSpec& field, const ClassSpec& cls, double x) {
    if (field.kind == AbelianFieldSpec::Kind::Cyclotomic &&
        (cls.a < 0 || gcd_u64(static_cast<u64>(cls.a), field.q) != 1))
        throw PreconditionError("pi_C: class must be a unit modulo q");
    const auto counts = class_counts(field, x);
    const i64 key = field.kind == AbelianFieldSpec::Kind::Cyclotomic ? cls.a % static_cast<i64>(field.q) : cls.a;
    auto it = counts.per_class.find(key);
    if (it == counts.per_class.end()) throw PreconditionError("pi_C: unknown class");
    return it->second;
}

u64 split_prime_count(const AbelianFieldSpec& field, double X) {
    if (X < 2.0) return 0;
    return pi_C(field, field.kind == AbelianFieldSpec::Kind::Cyclotomic ? ClassSpec{1} : ClassSpec::split(), X);
}

QuasiGrhBound quasi_grh_bound(double delta, double T, double log_D, int n_L, u64 G_order, double x, double c,
                              u64 C_size) {
    if (!(delta > 0.0 && delta <= 0.5)) throw PreconditionError("quasi_grh_bound: need 0 < delta <= 1/2");
    if (x <= 1.0 || T <= 0.0 || log_D <= 0.0) throw PreconditionError("quasi_grh_bound: need x > 1, T > 0, log D > 0");
    QuasiGrhBound b;
    const double lx = std::log(x);
    const double t24 = std::pow(T, -1.0 / 24.0);
    b.relative = std::exp(-delta / 8.0 * lx) + t24 * std::exp(-std::sqrt(c * lx / n_L) / 24.0) +
                 t24 * std::exp(-c * lx / (24.0 * log_D));
    b.value = static_cast<double>(C_size) / static_cast<double>(G_order) * x / lx * b.relative;
    b.x_valid = lx >= 16.0 / delta * std::log(log_D);
    b.T_valid = std::log(T) >= 24.0 * std::log(log_D);
    if (!b.x_valid) b.warnings.push_back("x below (log D)^{16/delta}");
    if (!b.T_valid) b.warnings.push_back("T below (log D)^{24}");
    return b;
}

PrimeCountReport error_report(const AbelianFieldSpec& field, const ClassSpec& cls, double x,
                              const QuasiGrhParams& qp) {
    PrimeCountReport r;
    r.x = x;
    const auto counts = class_counts(field, x);
    r.pi_x = counts.pi_x;
    const i64 key = field.kind == AbelianFieldSpec::Kind::Cyclotomic ? cls.a % static_cast<i64>(field.q) : cls.a;
    auto it = counts.per_class.find(key);
    if (it == counts.per_class.end()) throw PreconditionError("error_report: unknown class");
    r.pi_C = it->second;
    const u64 G = field.group_order();
    // |G| pi_C - pi(x) is exact in integers before the single division.
    const i64 num = static_cast<i64>(G * r.pi_C) - static_cast<i64>(r.pi_x);
    r.expected = static_cast<double>(r.pi_x) / static_cast<double>(G);
    r.E_C = std::abs(static_cast<double>(num)) / static_cast<double>(G);
    if (x >= 2.0) {
        r.grh_bound = std::sqrt(x) * (field.log_D() + static_cast<double>(G) * std::log(x)) / static_cast<double>(G);
        r.grh_ratio = r.E_C / r.grh_bound;
        r.quasi_grh_bound =
            quasi_grh_bound(qp.delta, qp.T, field.log_D(), static_cast<int>(G), G, x, qp.c).value;
    }
    return r;
}

EvBound ev_torsion_bound(double D_K, int n, int ell, double eps, u64 M) {
    if (n < 2 || ell < 1 || !(D_K > 1.0)) throw PreconditionError("ev_torsion_bound: need n >= 2, l >= 1, D > 1");
    EvBound b;
    b.theta = 1.0 / (2.0 * ell * (n - 1));
    if (!(eps > 0.0 && eps < b.theta)) throw PreconditionError("ev_torsion_bound: need 0 < eps < 1/(2 l (n-1))");
    const double lD = std::log(D_K);
    // M = 0 carries no information and is treated as the trivial bound M = 1.
    const double lM = M > 1 ? std::log(static_cast<double>(M)) : 0.0;
    b.exponent = 0.5 + eps - lM / lD;
    b.M_threshold = std::exp((b.theta - eps) * lD);
    return b;
}

}  // namespace rsz
