#pragma once

#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsz/satake.hpp"

namespace rsz {

struct Zero {
    double beta = 0.5;
    double gamma = 0.0;
};

/// Nontrivial zeros with gamma >= 0; conjugates are implied.
struct ZeroTable {
    std::vector<Zero> zeros;
    std::string provenance;
};

class ZeroParseError : public std::runtime_error {
public:
    ZeroParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Accepts "gamma" (beta = 1/2) or "beta gamma" per line; '#' lines and blank lines are skipped.
ZeroTable parse_zeros(std::istream& in, const std::string& provenance);
ZeroTable load_zeros(const std::string& path);

/// #{rho : beta >= sigma, |gamma| <= T}, counting conjugate pairs.
long count_zeros(const ZeroTable& table, double sigma, double T);

struct ExceptionalZero {
    double beta_chi = 0.5;
    u64 conductor = 1;
    bool exists = false;
};

/// Piecewise zero-free region width Delta(t) on [3, infinity).
class ZeroFreeRegionModel {
public:
    struct Piece {
        enum class Kind { Constant, Classical } kind;
        double t_lo;
        double t_hi;  ///< may be +infinity
        double delta = 0.0;  ///< Constant
        double c = 0.1;      ///< Classical: c / (log D + n log t)
        double log_D = 1.0;
        int n = 1;
    };

    explicit ZeroFreeRegionModel(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    double delta(double t) const;

    static ZeroFreeRegionModel constant(double delta);
    /// delta on [3, T], classical beyond T.
    static ZeroFreeRegionModel quasi_grh(double delta, double T, double c, double log_D, int n);

private:
    std::vector<Piece> pieces_;
};

ZeroFreeRegionModel classical_delta(double log_D, int n_L, double c = 0.1);

/// eta(x) = inf_{t >= 3} [Delta(t) log x + log t] by closed form on each piece.
double eta_of_x(const ZeroFreeRegionModel& model, double x);
/// Same quantity from log x, for x beyond double range.
double eta_of_log_x(const ZeroFreeRegionModel& model, double log_x);
/// Grid search over log t with local golden-section refinement.
double eta_grid_search(const ZeroFreeRegionModel& model, double log_x, int grid = 20000);

struct DetectionWindow {
    double L = 0.0;  ///< log(C q Q T)
    double eta = 0.0;
    double K = 0.0;
    double log_A1 = 0.0;
    double log_A2 = 0.0;
    double A1 = 0.0;  ///< may be +inf when out of double range
    double A2 = 0.0;
    double tau_threshold = 0.0;  ///< 200 eta
};

/// Requires 1/L <= eta <= 1/(10^7 (m0 m)^2); K = 4000 (m0 m)^2 eta L + slack.
DetectionWindow detection_window(double eta, double C_pi0, double q, double Q, double T, int m0, int m,
                                 double slack = 0.0);
DetectionWindow detection_window_log(double eta, double log_CqQT, int m0, int m, double slack = 0.0);

using Gl1Character = std::function<cplx(u64)>;

/// sum_{A1 < p <= u} lambda_{pi x pi0}(p) log p / p^{1 + i tau} (1 + chi(p) p^{beta - 1}).
cplx detection_polynomial(const SatakeData& pi, const SatakeData& pi0, double tau, double u, double A1,
                          const Gl1Character& chi = nullptr, std::optional<double> beta_chi = std::nullopt);

struct SumByPartsCheck {
    cplx direct;    ///< eta sum_p j_k(eta log p) b_p
    cplx boundary;  ///< eta j_k(eta log A2) P(A2)
    cplx integral;  ///< eta int_{A1}^{A2} eta j_k'(eta log u) P(u) du / u
    double rel_error = 0.0;
};

/// Compares the smoothed prime sum with its summation-by-parts form.
SumByPartsCheck sum_by_parts_check(const SatakeData& pi, const SatakeData& pi0, double tau, double eta, int k,
                                   double A1, double A2, const Gl1Character& chi = nullptr,
                                   std::optional<double> beta_chi = std::nullopt);

enum class DensityKind { Lfzde, LandauSiegel };

struct BoundValue {
    double log_value = 0.0;
    double value = 0.0;
};

/// (C Q T)^{10^7 (m0 m)^4 (1 - sigma)}, times min{1, (1 - beta) log(QT)} for LandauSiegel.
BoundValue density_bound(DensityKind kind, double C_pi0, double Q, double T, int m0, int m, double sigma,
                         std::optional<double> beta_chi = std::nullopt);

/// |t| <= T and sigma >= 1 - A / (10^7 (m0 m)^4 log(C Q (T + 2))).
bool page_region(double sigma, double t, double A, double C_pi0, double Q, double T, int m0, int m);

/// C(pi, t) = N prod_j (1 + |i t + mu_j|).
double analytic_conductor(double N, const std::vector<cplx>& mu, double t = 0.0);

}  // namespace rsz
