#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsz/common.hpp"
#include "rsz/primes.hpp"

namespace rsz {

/// Cyclotomic field Q(zeta_q) or quadratic field of fundamental discriminant d.
struct AbelianFieldSpec {
    enum class Kind { Cyclotomic, Quadratic } kind = Kind::Cyclotomic;
    u64 q = 3;
    i64 d = -4;
    /// Optional override of the discriminant proxy; defaults below when unset (<= 0).
    double log_D_override = -1.0;

    static AbelianFieldSpec cyclotomic(u64 q);
    static AbelianFieldSpec quadratic(i64 d);

    u64 group_order() const;
    /// Cyclotomic: phi(q) log q. Quadratic: log |d|.
    double log_D() const;
    /// Exact log discriminant of Q(zeta_q): phi(q) (log q - sum_{p | q} log p / (p - 1)).
    double log_D_exact() const;
    bool is_ramified(u64 p) const;
    std::string str() const;
};

/// Residue class a mod q (cyclotomic) or split / inert (quadratic, a = +1 / -1).
struct ClassSpec {
    i64 a = 1;
    static ClassSpec split() { return {1}; }
    static ClassSpec inert() { return {-1}; }
};

/// Default sieve capacity.
inline constexpr double kSieveCapacity = 1e9;

/// All Frobenius classes of the field.
std::vector<ClassSpec> all_classes(const AbelianFieldSpec& field);

/// Class of an unramified prime.
ClassSpec frobenius(const AbelianFieldSpec& field, u64 p);

struct ClassCounts {
    u64 x = 0;
    u64 pi_x = 0;
    u64 ramified = 0;
    std::map<i64, u64> per_class;
};

/// One sieve pass counting every class.
ClassCounts class_counts(const AbelianFieldSpec& field, double x);

u64 pi_C(const AbelianFieldSpec& field, const ClassSpec& cls, double x);

/// Unramified completely split primes up to X.
u64 split_prime_count(const AbelianFieldSpec& field, double X);

struct PrimeCountReport {
    double x = 0.0;
    u64 pi_C = 0;
    u64 pi_x = 0;
    double expected = 0.0;  ///< (|C|/|G|) pi(x)
    double E_C = 0.0;
    double grh_bound = 0.0;  ///< (|C|/|G|) x^{1/2} log(D x^{|G|})
    double quasi_grh_bound = 0.0;
    double grh_ratio = 0.0;  ///< E_C / grh_bound, diagnostic only
};

struct QuasiGrhParams {
    double delta = 0.5;
    double T = 1e6;
    double c = 0.1;
};

PrimeCountReport error_report(const AbelianFieldSpec& field, const ClassSpec& cls, double x,
                              const QuasiGrhParams& qp = {});

struct QuasiGrhBound {
    double value = 0.0;
    double relative = 0.0;  ///< value divided by (|C|/|G|) x / log x
    bool x_valid = false;   ///< x >= (log D)^{16/delta}
    bool T_valid = false;   ///< T >= (log D)^{24}
    std::vector<std::string> warnings;
};

/// (|C|/|G|)(x/log x)(x^{-delta/8} + T^{-1/24} e^{-sqrt(c log x / n_L)/24} + T^{-1/24} e^{-c log x / (24 log D)}).
QuasiGrhBound quasi_grh_bound(double delta, double T, double log_D, int n_L, u64 G_order, double x,
                              double c = 0.1, u64 C_size = 1);

struct EvBound {
    double exponent = 0.0;     ///< log_D of D^{1/2 + eps} / M
    double M_threshold = 0.0;  ///< D^{1/(2 l (n-1)) - eps}
    double theta = 0.0;        ///< 1/(2 l (n-1))
};

EvBound ev_torsion_bound(double D_K, int n, int ell, double eps, u64 M);

}  // namespace rsz
