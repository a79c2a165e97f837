#include "rsz/zero_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rsz/analytic.hpp"
#include "rsz/rs_coefficients.hpp"

namespace rsz {

ZeroTable parse_zeros(std::istream& in, const std::string& provenance) {
    ZeroTable table;
    table.provenance = provenance;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> vals;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            double v;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw ZeroParseError(lineno, "not a decimal number: '" + tok + "'");
            }
            if (used != tok.size() || !std::isfinite(v))
                throw ZeroParseError(lineno, "not a decimal number: '" + tok + "'");
            vals.push_back(v);
        }
        Zero z;
        if (vals.size() == 1) {
            z.gamma = vals[0];
        } else if (vals.size() == 2) {
            z.beta = vals[0];
            z.gamma = vals[1];
        } else {
            throw ZeroParseError(lineno, "expected 'gamma' or 'beta gamma'");
        }
        if (!(z.beta > 0.0 && z.beta < 1.0)) throw ZeroParseError(lineno, "beta must lie in (0, 1)");
        if (z.gamma < 0.0) throw ZeroParseError(lineno, "gamma must be non-negative");
        table.zeros.push_back(z);
    }
    std::stable_sort(table.zeros.begin(), table.zeros.end(),
                     [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
    return table;
}

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zero file: " + path);
    return parse_zeros(in, path);
}

long count_zeros(const ZeroTable& table, double sigma, double T) {
    long count = 0;
    for (const auto& z : table.zeros)
        if (z.beta >= sigma && z.gamma <= T) count += (z.gamma > 0.0) ? 2 : 1;
    return count;
}

ZeroFreeRegionModel::ZeroFreeRegionModel(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw PreconditionError("ZeroFreeRegionModel: no pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (!(p.t_lo >= 3.0) || !(p.t_hi > p.t_lo))
            throw PreconditionError("ZeroFreeRegionModel: piece bounds must satisfy 3 <= t_lo < t_hi");
        if (i > 0 && p.t_lo < pieces_[i - 1].t_hi)
            throw PreconditionError("ZeroFreeRegionModel: pieces must be ordered and disjoint");
        if (p.kind == Piece::Kind::Constant && !(p.delta > 0.0))
            throw PreconditionError("ZeroFreeRegionModel: constant piece must be positive");
        if (p.kind == Piece::Kind::Classical && (!(p.c > 0.0) || p.log_D < 0.0 || p.n < 1))
            throw PreconditionError("ZeroFreeRegionModel: classical piece needs c > 0, log D >= 0, n >= 1");
    }
}

double ZeroFreeRegionModel::delta(double t) const {
    for (const auto& p : pieces_) {
        if (t < p.t_lo || t > p.t_hi) continue;
        if (p.kind == Piece::Kind::Constant) return p.delta;
        return p.c / (p.log_D + p.n * std::log(t));
    }
    throw PreconditionError("ZeroFreeRegionModel: t outside the model domain");
}

ZeroFreeRegionModel ZeroFreeRegionModel::constant(double delta) {
    Piece p{Piece::Kind::Constant, 3.0, std::numeric_limits<double>::infinity(), delta};
    return ZeroFreeRegionModel({p});
}

ZeroFreeRegionModel ZeroFreeRegionModel::quasi_grh(double delta, double T, double c, double log_D, int n) {
    Piece a{Piece::Kind::Constant, 3.0, T, delta};
    Piece b{Piece::Kind::Classical, T, std::numeric_limits<double>::infinity(), 0.0, c, log_D, n};
    return ZeroFreeRegionModel({a, b});
}

ZeroFreeRegionModel classical_delta(double log_D, int n_L, double c) {
    if (!(log_D > 0.0) || n_L < 1) throw PreconditionError("classical_delta: need log D > 0 and n >= 1");
    using Piece = ZeroFreeRegionModel::Piece;
    Piece p{Piece::Kind::Classical, 3.0, std::numeric_limits<double>::infinity(), 0.0, c, log_D, n_L};
    return ZeroFreeRegionModel({p});
}

namespace {

double piece_value(const ZeroFreeRegionModel::Piece& p, double L, double u) {
    if (p.kind == ZeroFreeRegionModel::Piece::Kind::Constant) return p.delta * L + u;
    return p.c * L / (p.log_D + p.n * u) + u;
}

}  // namespace

double eta_of_log_x(const ZeroFreeRegionModel& model, double L) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : model.pieces()) {
        const double ulo = std::log(p.t_lo), uhi = std::log(p.t_hi);
        if (p.kind == ZeroFreeRegionModel::Piece::Kind::Constant) {
            best = std::min(best, piece_value(p, L, ulo));
        } else {
            // c L / (log D + n u) + u is convex in u; its stationary point is clamped to the piece.
            const double u0 = std::sqrt(p.c * L / p.n) - p.log_D / p.n;
            best = std::min(best, piece_value(p, L, std::clamp(u0, ulo, uhi)));
        }
    }
    return best;
}

double eta_of_x(const ZeroFreeRegionModel& model, double x) {
    if (!(x >= 3.0)) throw PreconditionError("eta_of_x: x must be at least 3");
    return eta_of_log_x(model, std::log(x));
}

double eta_grid_search(const ZeroFreeRegionModel& model, double L, int grid) {
    // Evaluated in log t so that large t does not overflow.
    auto f = [&](double u) {
        for (const auto& p : model.pieces())
            if (u >= std::log(p.t_lo) && u <= std::log(p.t_hi)) return piece_value(p, L, u);
        throw PreconditionError("ZeroFreeRegionModel: t outside the model domain");
    };
    const double u0 = std::log(3.0);
    // f(u) >= u, so the infimum lies in [log 3, f(log 3)].
    const double span = std::max(10.0, 2.0 * f(u0));
    const double u1 = u0 + span;
    std::vector<double> cands;
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    const double h = span / grid;
    for (int i = 0; i <= grid; ++i) {
        const double u = u0 + i * h;
        double v;
        try {
            v = f(u);
        } catch (const PreconditionError&) {
            continue;
        }
        if (v < best) {
            best = v;
            arg = i;
        }
    }
    // Golden-section refinement in the neighbouring cells.
    double a = u0 + std::max(0, arg - 1) * h, b = std::min(u1, u0 + (arg + 1) * h);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
        if (f(c) < f(d)) b = d;
        else a = c;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    best = std::min(best, f(0.5 * (a + b)));
    // Piece endpoints, where Delta may jump; each side uses its own piece's formula.
    for (const auto& p : model.pieces()) {
        best = std::min(best, piece_value(p, L, std::log(p.t_lo)));
        if (std::isfinite(p.t_hi)) best = std::min(best, piece_value(p, L, std::log(p.t_hi)));
    }
    return best;
}

DetectionWindow detection_window_log(double eta, double L, int m0, int m, double slack) {
    if (m0 < 1 || m < 1) throw PreconditionError("detection_window: m0 and m must be positive");
    const double mm = static_cast<double>(m0) * m;
    const double lo = 1.0 / L, hi = 1.0 / (1e7 * mm * mm);
    if (!(L > 0.0) || eta < lo || eta > hi)
        throw PreconditionError("detection_window: eta outside [1/log(CqQT), 1/(10^7 (m0 m)^2)] = [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    DetectionWindow w;
    w.L = L;
    w.eta = eta;
    w.K = 4000.0 * mm * mm * eta * L + slack;
    w.log_A1 = w.K / (300.0 * eta);
    w.log_A2 = 40.0 * w.K / eta;
    w.A1 = std::exp(w.log_A1);
    w.A2 = std::exp(w.log_A2);
    w.tau_threshold = 200.0 * eta;
    return w;
}

DetectionWindow detection_window(double eta, double C_pi0, double q, double Q, double T, int m0, int m,
                                 double slack) {
    return detection_window_log(eta, std::log(C_pi0) + std::log(q) + std::log(Q) + std::log(T), m0, m, slack);
}

namespace {

cplx detection_term(const SatakeData& pi, const SatakeData& pi0, double tau, u64 p, const Gl1Character& chi,
                    std::optional<double> beta_chi) {
    const double dp = static_cast<double>(p), lp = std::log(dp);
    cplx term = lambda_coeff(pi, pi0, p) * lp * std::exp(-cplx(1.0, tau) * lp);
    if (chi && beta_chi) term *= 1.0 + chi(p) * std::pow(dp, *beta_chi - 1.0);
    return term;
}

}  // namespace

cplx detection_polynomial(const SatakeData& pi, const SatakeData& pi0, double tau, double u, double A1,
                          const Gl1Character& chi, std::optional<double> beta_chi) {
    if (u <= A1) return 0.0;
    cplx total = 0.0;
    for_each_prime(static_cast<u64>(std::floor(u)), [&](u64 p) {
        if (static_cast<double>(p) <= A1) return;
        total += detection_term(pi, pi0, tau, p, chi, beta_chi);
    });
    return total;
}

SumByPartsCheck sum_by_parts_check(const SatakeData& pi, const SatakeData& pi0, double tau, double eta, int k,
                                   double A1, double A2, const Gl1Character& chi, std::optional<double> beta_chi) {
    if (!(A2 > A1) || A1 < 1.0) throw PreconditionError("sum_by_parts_check: need 1 <= A1 < A2");
    std::vector<std::pair<double, cplx>> pts;  // (p, b_p)
    for_each_prime(static_cast<u64>(std::floor(A2)), [&](u64 p) {
        if (static_cast<double>(p) > A1) pts.emplace_back(static_cast<double>(p), detection_term(pi, pi0, tau, p, chi, beta_chi));
    });

    SumByPartsCheck out;
    cplx direct = 0.0, partial = 0.0;
    for (const auto& [p, b] : pts) direct += j_k(eta * std::log(p), k) * b;
    for (const auto& [p, b] : pts) partial += b;
    out.direct = eta * direct;
    out.boundary = eta * j_k(eta * std::log(A2), k) * partial;

    // P(u) is constant between consecutive primes; integrate j_k'(v) in v = eta log u with
    // 8-point Gauss-Legendre on each segment.
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    auto seg = [&](double lo, double hi) {
        const double a = eta * std::log(lo), b = eta * std::log(hi);
        double s = 0.0;
        for (int i = 0; i < 8; ++i) s += gw[i] * j_k_derivative(0.5 * (a + b) + 0.5 * (b - a) * gx[i], k);
        return 0.5 * (b - a) * s;
    };
    cplx integral = 0.0;
    partial = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        partial += pts[i].second;
        const double hi = (i + 1 < pts.size()) ? pts[i + 1].first : A2;
        if (hi > pts[i].first) integral += partial * seg(pts[i].first, hi);
    }
    out.integral = eta * integral;
    const cplx rhs = out.boundary - out.integral;
    out.rel_error = std::abs(out.direct - rhs) / std::max(1e-300, std::abs(out.direct) + std::abs(rhs));
    return out;
}

BoundValue density_bound(DensityKind kind, double C_pi0, double Q, double T, int m0, int m, double sigma,
                         std::optional<double> beta_chi) {
    if (sigma < 0.5 || sigma > 1.0) throw PreconditionError("density_bound: need 1/2 <= sigma <= 1");
    const double mm = static_cast<double>(m0) * m;
    BoundValue b;
    b.log_value = 1e7 * mm * mm * mm * mm * (1.0 - sigma) * std::log(C_pi0 * Q * T);
    if (kind == DensityKind::LandauSiegel) {
        if (!beta_chi) throw PreconditionError("density_bound: Landau-Siegel bound needs beta_chi");
        const double factor = std::min(1.0, (1.0 - *beta_chi) * std::log(Q * T));
        if (factor <= 0.0) {
            b.log_value = -std::numeric_limits<double>::infinity();
            b.value = 0.0;
            return b;
        }
        b.log_value += std::log(factor);
    }
    b.value = std::exp(b.log_value);
    return b;
}

bool page_region(double sigma, double t, double A, double C_pi0, double Q, double T, int m0, int m) {
    if (std::abs(t) > T) return false;
    const double mm = static_cast<double>(m0) * m;
    return sigma >= 1.0 - A / (1e7 * mm * mm * mm * mm * std::log(C_pi0 * Q * (T + 2.0)));
}

double analytic_conductor(double N, const std::vector<cplx>& mu, double t) {
    double c = N;
    for (const cplx& m : mu) c *= 1.0 + std::abs(cplx(0.0, t) + m);
    return c;
}

}  // namespace rsz
