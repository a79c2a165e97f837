#pragma once

#include <functional>
#include <map>
#include <vector>

#include "rsz/common.hpp"
#include "rsz/primes.hpp"

namespace rsz {

/// Composite trapezoid on [a, b], doubling until successive estimates agree to rel_tol.
double integrate_trapezoid(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-6, int max_levels = 24);
cplx integrate_trapezoid_complex(const std::function<cplx(double)>& f, double a, double b, double rel_tol = 1e-6,
                         int max_levels = 24);

/// Smooth compactly supported test functions used by the smoothing and sieve arguments.
class TestFunction {
public:
    enum class Kind {
        UnitBump,     ///< supported in [1/2, 1], unit mass; transform is the Mellin transform
        CompactBump,  ///< supported in [-3/2, 3/2], inside (-2, 2); transform is the Laplace transform
        ExplicitPhi,  ///< exp(16 + 1/(t(t+1/2))) on (-1/2, 0); Laplace transform
    };

    explicit TestFunction(Kind kind);
    static TestFunction unit_bump() { return TestFunction(Kind::UnitBump); }

    Kind kind() const { return kind_; }
    double operator()(double x) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    double integral() const;
    /// Mellin transform int f(x) x^s dx/x for UnitBump; Laplace int phi(y) e^{sy} dy otherwise.
    cplx transform(cplx s, double rel_tol = 1e-10) const;

private:
    Kind kind_;
    double lo_, hi_;
    double scale_ = 1.0;
};

/// F_X(n) = sum over m >= 1 coprime to the excluded primes of f(n m^{n_dim} / X).
double smoothing_sum_F(u64 n, double X, int n_dim, const TestFunction& f,
                       const std::vector<u64>& excluded = {});

/// j_k(u) = u^k e^{-u} / k!, evaluated in log space.
double j_k(double u, int k);
double log_j_k(double u, int k);
/// j_k'(u) = j_{k-1}(u) - j_k(u), with j_0 = e^{-u}.
double j_k_derivative(double u, int k);

/// Checks j_k(eta log n) <= 110^{-k} n^{-eta/2} given log n.
bool j_bound_holds(int k, double eta, double log_n);

struct JBoundScan {
    long checked = 0;
    long violations = 0;
    double min_log_margin = 0.0;  ///< smallest (log bound - log j_k) seen
};

/// Scans k in [K, 2K] and log n outside [K/(300 eta), 40K/eta].
JBoundScan j_bound_scan(const std::vector<int>& Ks, const std::vector<double>& etas, int samples_per_side = 200);

struct PowerSumResult {
    int k = 0;
    double value = 0.0;      ///< |sum z_i^k| at the witness
    double threshold = 0.0;  ///< (|z_1|/50)^k
    bool certified = false;
};

/// Searches k in [K, 2K] for |sum z_i^k| >= (|z_1|/50)^k.
PowerSumResult sos_turan(const std::vector<cplx>& z, int K);

struct GallagherResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// int_{-T}^{T} |sum a_n n^{-it}|^2 dt against T^2 int |sum_{x<n<=xe^{1/T}} a_n|^2 dx/x.
GallagherResult gallagher_ratio(const std::map<u64, cplx>& a, double T, double rel_tol = 1e-6);

/// Selberg sieve weights for a density g on primes below z.
class SelbergSieve {
public:
    SelbergSieve(const std::function<double(u64)>& g, double z, u64 N = 1);

    double z() const { return z_; }
    const std::vector<u64>& sieve_primes() const { return primes_; }
    /// Squarefree d <= z built from sieve primes.
    const std::vector<u64>& support() const { return support_; }
    double rho(u64 d) const;
    const std::map<u64, double>& weights() const { return rho_; }
    /// w_z(n) = (sum_{d | (n, P(z))} rho_d)^2.
    double w(u64 n) const;
    /// G(z) = sum_{d <= z, d | P(z)} h(d).
    double G() const { return G_; }
    /// sum rho_{d1} rho_{d2} g([d1, d2]).
    double main_term_lhs() const;
    /// 1 / G(z), the minimum of the quadratic form.
    double main_term_rhs() const { return 1.0 / G_; }

    struct Conditions {
        bool rho_one = false;
        bool support_ok = false;
        bool bounded = false;
        double max_abs_rho = 0.0;
        bool all() const { return rho_one && support_ok && bounded; }
    };
    Conditions check_conditions(double tol = 1e-12) const;

private:
    double g_of(u64 d) const;
    double h_of(u64 d) const;

    double z_;
    std::map<u64, double> g_;
    std::vector<u64> primes_;
    std::vector<u64> support_;
    std::map<u64, double> rho_;
    double G_ = 0.0;
};

struct MicroReport {
    long log_checks = 0;
    long log_violations = 0;
    double log_min_margin = 0.0;  ///< min of log(k! u) - k log log u
    long hyp_checks = 0;
    long hyp_violations = 0;
    double hyp_min_margin = 0.0;  ///< min of 2 log(x+1) - x
    bool ok() const { return log_violations == 0 && hyp_violations == 0; }
};

/// Grid check of (log u)^k <= k! u and x <= 2 log(x+1) on [0, 5/2].
MicroReport micro_inequalities(int u_points = 2000, int k_max = 60, int x_points = 20001);

/// eta sum_{A1 < p <= A2} |1 + chi(p) p^{beta-1}|^2 log p / p.
double weiss_factor(double A1, double A2, double beta_chi, double eta,
                    const std::function<cplx(u64)>& chi);

/// Fitted c_k = max |phi^(s)| |s|^k e^{-2|Re s|} over a grid, for k = 0, 1, 2.
std::vector<double> laplace_decay_constants(const TestFunction& phi, double re_max = 6.0, double im_max = 40.0,
                                            int grid = 13);

}  // namespace rsz
