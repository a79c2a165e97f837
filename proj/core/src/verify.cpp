#include "rsz/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "rsz/analytic.hpp"
#include "rsz/chebotarev.hpp"
#include "rsz/common.hpp"
#include "rsz/conductor.hpp"
#include "rsz/family.hpp"
#include "rsz/local_factors.hpp"
#include "rsz/rs_coefficients.hpp"
#include "rsz/zero_lab.hpp"

#ifndef RSZ_VERSION
#define RSZ_VERSION "0.0.0"
#endif

namespace rsz {

const char* version() { return RSZ_VERSION; }

namespace {

using nlohmann::ordered_json;

struct Suite {
    ordered_json checks = ordered_json::array();
    ordered_json diagnostic = ordered_json::object();
    int count = 0;
    int failures = 0;

    void add(const std::string& name, bool passed, ordered_json detail = ordered_json::object()) {
        ++count;
        if (!passed) ++failures;
        ordered_json c;
        c["name"] = name;
        c["passed"] = passed;
        c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
    }

    // A thrown exception is a failed check rather than an aborted run.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, {{"exception", e.what()}});
        }
    }
};

double rel_err(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

void check_symmetric(Suite& s) {
    s.guarded("partitions.count", [&] {
        bool ok = true;
        for (int len = 0; len <= 5; ++len)
            for (int r = 0; r <= 12; ++r)
                ok = ok && enumerate_partitions(len, r).size() == count_partitions(len, r);
        s.add("partitions.count", ok);
    });
}

void check_cauchy(Suite& s, std::uint64_t seed) {
    s.guarded("rs.cauchy_vs_oracle", [&] {
        double worst = 0.0;
        long cases = 0;
        for (int n = 1; n <= 4; ++n)
            for (int i = 0; i < 60; ++i) {
                const auto pi = SatakeData::sample(n, 1, 30, SatakeSampler::Unitary, seed * 1000 + n * 100 + i);
                const auto other = SatakeData::sample(n, 1, 30, SatakeSampler::Grc, seed * 7919 + n * 100 + i);
                const auto pi2 = match_central_character(other, pi);
                for (u64 p : {2, 5, 13})
                    for (int r = 0; r <= 6; ++r) {
                        worst = std::max(worst, rel_err(rs_coeff_prime_power(pi, pi2, p, r),
                                                        rs_coeff_oracle(pi, pi2, p, r)));
                        ++cases;
                    }
            }
        s.add("rs.cauchy_vs_oracle", worst <= 1e-9, {{"cases", cases}, {"max_rel_err", worst}});
    });
    s.guarded("rs.double_sum_vs_multiplicative", [&] {
        double worst = 0.0;
        for (int n = 1; n <= 3; ++n) {
            const auto pi = SatakeData::sample(n, 1, 1000, SatakeSampler::Unitary, seed + 11 * n);
            for (u64 m = 1; m <= 500; ++m)
                worst = std::max(worst, rel_err(rs_coeff_ideal_double_sum(pi, pi, m), rs_coeff_ideal(pi, pi, m)));
        }
        s.add("rs.double_sum_vs_multiplicative", worst <= 1e-9, {{"max_rel_err", worst}});
    });
    s.guarded("rs.brumley_cs", [&] {
        int bad = 0;
        const auto pi = SatakeData::sample(2, 1, 200, SatakeSampler::JacquetShalika, seed + 3);
        const auto pi0 = SatakeData::sample(3, 1, 200, SatakeSampler::JacquetShalika, seed + 4);
        for (u64 m = 2; m <= 199; ++m)
            if (factorize(m).size() == 1 && !check_brumley_cs(pi, pi0, m).holds()) ++bad;
        s.add("rs.brumley_cs", bad == 0, {{"violations", bad}});
    });
}

void check_local(Suite& s, std::uint64_t seed) {
    s.guarded("local.assembly", [&] {
        Rng rng(seed ^ 0x10ca1ULL);
        double worst = 0.0;
        int pairs = 0;
        for (u64 q : {2, 3, 5})
            for (int i = 0; i < 20; ++i) {
                const int n = static_cast<int>(rng.range(1, 4));
                const auto [sigma, tau] = sample_bz_pair(rng, q, n);
                const auto series = local_series(sigma, tau, 6);
                for (int r = 0; r <= 6; ++r) worst = std::max(worst, rel_err(assembled_coeff(sigma, tau, r), series[r]));
                ++pairs;
            }
        s.add("local.assembly", worst <= 1e-9, {{"pairs", pairs}, {"max_rel_err", worst}});
    });
    s.guarded("local.root_audit", [&] {
        Rng rng(seed ^ 0xa0d17ULL);
        int js = 0;
        for (int i = 0; i < 50; ++i) {
            const auto [sigma, tau] = sample_bz_pair(rng, 3, static_cast<int>(rng.range(1, 4)));
            js += root_audit(sigma, tau).js_violations;
        }
        s.add("local.root_audit", js == 0, {{"js_violations", js}});
    });
}

void check_conductor(Suite& s, std::uint64_t seed) {
    s.guarded("conductor.pair_bounds", [&] {
        Rng rng(seed ^ 0xc0dULL);
        int bad_artin = 0, bad_swan = 0;
        const int draws = 2000;
        for (int i = 0; i < draws; ++i) {
            const u64 p = std::array<u64, 3>{2, 3, 5}[rng.below(3)];
            const auto [sigma, tau] = sample_character_pair(rng, p, 4, 5, true);
            const auto ws = sigma.as_wd(), wt = tau.as_wd();
            if (Rational(tensor_conductor_exact(sigma, tau)) > pair_bound(ws, wt, true)) ++bad_artin;
            if (Rational(tensor_swan_exact(sigma, tau)) > swan_pair_bound(ws, wt, true)) ++bad_swan;
        }
        s.add("conductor.pair_bounds", bad_artin == 0 && bad_swan == 0,
              {{"instances", draws}, {"artin_violations", bad_artin}, {"swan_violations", bad_swan}});
    });
    s.guarded("conductor.tightness", [&] {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int a = 1; a <= 4; ++a) {
                const auto w = bh_tightness_witness(n, a);
                ok = ok && w.exact_value == (2 * n - 2) * a &&
                     Rational(w.exact_value) == pair_bound(w.sigma.as_wd(), w.tau.as_wd(), true);
            }
        s.add("conductor.tightness", ok);
    });
}

void check_family(Suite& s, std::uint64_t seed, Suite& diag_holder) {
    s.guarded("family.gram_identity", [&] {
        const auto f = TestFunction::unit_bump();
        double worst = 0.0;
        int cases = 0;
        for (u64 q = 3; q <= 12; ++q)
            for (u64 idx = 0; idx < euler_phi(q); idx += 2) {
                const auto chi = SatakeData::dirichlet_character(q, idx, 200);
                std::set<u64> S;
                for (const auto& [p, e] : factorize(q)) {
                    (void)e;
                    S.insert(p);
                }
                const auto index = build_index(150, S, 1);
                const auto g = gram_vs_series(chi, chi, index, f);
                worst = std::max(worst, g.difference / g.scale);
                ++cases;
            }
        for (int i = 0; i < 3; ++i) {
            const auto pi = SatakeData::sample(2, 1, 100, SatakeSampler::Unitary, seed + 500 + i);
            const auto other = SatakeData::sample(2, 1, 100, SatakeSampler::Unitary, seed + 600 + i);
            const auto pi2 = match_central_character(other, pi);
            const auto g = gram_vs_series(pi, pi2, build_index(60, {}, 2), f);
            worst = std::max(worst, g.difference / g.scale);
            ++cases;
        }
        s.add("family.gram_identity", worst <= 1e-9, {{"cases", cases}, {"max_scaled_diff", worst}});
    });
    s.guarded("family.index_size", [&] {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (double X : {1.0, 4.0, 37.0, 300.0})
                ok = ok && build_index(X, {2}, n).size() == index_size_sieve(X, {2}, n);
        s.add("family.index_size", ok);
    });
    s.guarded("family.sphere_lemma", [&] {
        Rng rng(seed ^ 0x5badULL);
        bool ok = true;
        for (std::size_t M : {4u, 10u}) {
            std::vector<std::vector<double>> basis(M, std::vector<double>(M, 0.0));
            for (std::size_t i = 0; i < M; ++i) basis[i][i] = 1.0;
            ok = ok && quasi_orth_certify(basis).ok;
            for (int t = 0; t < 20; ++t) {
                std::vector<std::vector<double>> vs;
                for (std::size_t k = 0; k <= M; ++k) {
                    std::vector<double> v(M);
                    double nn = 0.0;
                    for (auto& x : v) {
                        x = rng.normal();
                        nn += x * x;
                    }
                    for (auto& x : v) x /= std::sqrt(nn);
                    vs.push_back(std::move(v));
                }
                ok = ok && !quasi_orth_certify(vs).ok;
            }
        }
        s.add("family.sphere_lemma", ok);
    });
    const auto r = family_bound_report(1.0, 2, 10.0, 1.0, 0.1);
    diag_holder.diagnostic["family_bound"] = {{"X_uncond", r.X_uncond}, {"X_cond", r.X_cond}, {"N", r.N},
                                              {"N_exact", r.N_exact}, {"K_bound", r.K_bound},
                                              {"residue_exponent", r.residue_exponent}};
}

void check_analytic(Suite& s, std::uint64_t seed) {
    s.guarded("analytic.sos_turan", [&] {
        Rng rng(seed ^ 0x7a1ULL);
        int failed = 0;
        const int draws = 2000;
        for (int i = 0; i < draws; ++i) {
            const int K = static_cast<int>(rng.range(1, 12));
            const int nu = static_cast<int>(rng.range(1, std::min(8, K)));
            std::vector<cplx> z(nu);
            for (auto& x : z) x = rng.disc(1.0);
            std::sort(z.begin(), z.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
            if (!sos_turan(z, K).certified) ++failed;
        }
        s.add("analytic.sos_turan", failed == 0, {{"instances", draws}, {"uncertified", failed}});
    });
    s.guarded("analytic.selberg", [&] {
        bool ok = true;
        double worst = 0.0;
        Rng rng(seed ^ 0x5e1ULL);
        for (double z : {10.0, 30.0}) {
            SelbergSieve sv([](u64 p) { return 1.0 / static_cast<double>(p); }, z);
            ok = ok && sv.check_conditions().all();
            const double d = std::abs(sv.main_term_lhs() - sv.main_term_rhs());
            worst = std::max(worst, d);
            for (int i = 0; i < 200; ++i) {
                u64 n = static_cast<u64>(rng.range(1, 100000));
                if (n != 1 && static_cast<double>(smallest_prime_factor(n)) <= z) continue;
                ok = ok && std::abs(sv.w(n) - 1.0) <= 1e-12;
            }
        }
        s.add("analytic.selberg", ok && worst <= 1e-12, {{"main_term_abs_diff", worst}});
    });
    s.guarded("analytic.j_bound", [&] {
        const auto scan = j_bound_scan({1, 2, 5, 10, 40}, {1e-3, 0.01, 0.1, 0.5});
        const auto micro = micro_inequalities(500, 40, 5001);
        s.add("analytic.j_bound", scan.violations == 0 && micro.ok(),
              {{"j_checked", scan.checked}, {"j_violations", scan.violations},
               {"log_violations", micro.log_violations}, {"hyp_violations", micro.hyp_violations}});
    });
}

void check_chebotarev(Suite& s, Suite& d) {
    s.guarded("chebotarev.partition", [&] {
        bool ok = true;
        for (u64 q : {3, 4, 5, 8, 12}) {
            const auto field = AbelianFieldSpec::cyclotomic(q);
            const auto c = class_counts(field, 1e4);
            u64 total = c.ramified;
            for (const auto& [a, k] : c.per_class) {
                (void)a;
                total += k;
            }
            ok = ok && total == c.pi_x;
        }
        const u64 v = pi_C(AbelianFieldSpec::cyclotomic(4), {1}, 100);
        s.add("chebotarev.partition", ok && v == 11, {{"pi_C_100_q4_a1", v}});
    });
    ordered_json rows = ordered_json::array();
    for (u64 q : {5, 8}) {
        const auto field = AbelianFieldSpec::cyclotomic(q);
        const auto r = error_report(field, {1}, 1e5);
        rows.push_back({{"q", q}, {"E_C", r.E_C}, {"grh_bound", r.grh_bound}, {"grh_ratio", r.grh_ratio}});
    }
    d.diagnostic["chebotarev_grh_ratio"] = rows;
}

void check_zero_lab(Suite& s, std::uint64_t seed, const std::string& zeros_path) {
    s.guarded("zeros.eta_closed_form", [&] {
        Rng rng(seed ^ 0xe7aULL);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double delta = rng.uniform(0.01, 0.5);
            const double T = std::exp(rng.uniform(2.0, 12.0));
            const double logD = rng.uniform(0.5, 20.0);
            const int n = static_cast<int>(rng.range(1, 6));
            const auto model = ZeroFreeRegionModel::quasi_grh(delta, T, 0.1, logD, n);
            const double lx = rng.uniform(1.0, 200.0);
            const double a = eta_of_log_x(model, lx), b = eta_grid_search(model, lx, 4000);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
        s.add("zeros.eta_closed_form", worst <= 1e-6, {{"max_rel_err", worst}});
    });
    s.guarded("zeros.eta_monotone", [&] {
        const auto model = classical_delta(5.0, 2);
        bool ok = true;
        double prev = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double lx = 0.5 * i;
            const double e = eta_of_log_x(model, lx);
            ok = ok && e >= prev - 1e-12 && eta_of_log_x(model, lx / 2.0) >= e / 2.0 - 1e-12;
            prev = e;
        }
        s.add("zeros.eta_monotone", ok);
    });
    if (zeros_path.empty()) {
        s.diagnostic["zeros.count"] = "skipped: no zero table supplied";
        return;
    }
    s.guarded("zeros.count", [&] {
        const auto table = load_zeros(zeros_path);
        const long c = count_zeros(table, 0.5, 100.0);
        s.add("zeros.count", c == 58, {{"count", c}, {"table_size", table.zeros.size()}});
    });
}

}  // namespace

VerifyResult verify_all(const VerifyOptions& options) {
    Suite s;
    check_symmetric(s);
    check_cauchy(s, options.seed);
    check_local(s, options.seed);
    check_conductor(s, options.seed);
    check_family(s, options.seed, s);
    check_analytic(s, options.seed);
    check_chebotarev(s, s);
    check_zero_lab(s, options.seed, options.zeros_path);

    ordered_json report;
    report["version"] = version();
    report["config"] = {{"command", "verify-all"}, {"seed", options.seed}, {"zeros_path", options.zeros_path}};
    report["checks"] = s.checks;
    report["summary"] = {{"checks", s.count}, {"failures", s.failures}, {"ok", s.failures == 0}};
    report["diagnostic"] = s.diagnostic;

    VerifyResult r;
    r.report = report.dump(2) + "\n";
    r.checks = s.count;
    r.failures = s.failures;
    return r;
}

}  // namespace rsz
