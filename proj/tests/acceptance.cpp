#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "rsz/analytic.hpp"
#include "rsz/chebotarev.hpp"
#include "rsz/conductor.hpp"
#include "rsz/dirichlet.hpp"
#include "rsz/family.hpp"
#include "rsz/local_factors.hpp"
#include "rsz/random.hpp"
#include "rsz/rs_coefficients.hpp"
#include "rsz/zero_lab.hpp"

using namespace rsz;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 for none
    std::function<Outcome()> run;
};

double rel_err(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

std::string num(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Outcome cauchy_identity() {
    double worst = 0.0;
    long cases = 0;
    const std::array<SatakeSampler, 3> samplers{SatakeSampler::Unitary, SatakeSampler::Grc,
                                                SatakeSampler::JacquetShalika};
    for (int n = 1; n <= 4; ++n)
        for (u64 i = 0; i < 500; ++i) {
            const auto sampler = samplers[i % 3];
            const auto pi = SatakeData::sample(n, 1, 14, sampler, 1000 * n + i);
            const auto other = SatakeData::sample(n, 1, 14, samplers[(i + 1) % 3], 50000 + 1000 * n + i);
            const auto pi2 = match_central_character(other, pi);
            const u64 p = std::array<u64, 6>{2, 3, 5, 7, 11, 13}[i % 6];
            for (int r = 0; r <= 8; ++r) {
                worst = std::max(worst, rel_err(rs_coeff_prime_power(pi, pi2, p, r), rs_coeff_oracle(pi, pi2, p, r)));
                ++cases;
            }
        }
    return {worst <= 1e-9, "cases=" + std::to_string(cases) + " max_rel_err=" + num(worst)};
}

Outcome ramified_assembly() {
    Rng rng(202);
    double worst = 0.0;
    int pairs = 0;
    for (int i = 0; i < 200; ++i) {
        const u64 q = std::array<u64, 3>{2, 3, 5}[i % 3];
        const int n = static_cast<int>(rng.range(1, 4));
        const auto [sigma, tau] = sample_bz_pair(rng, q, n);
        const auto series = local_series(sigma, tau, 6);
        for (int r = 0; r <= 6; ++r) worst = std::max(worst, rel_err(assembled_coeff(sigma, tau, r), series[r]));
        ++pairs;
    }
    return {worst <= 1e-9, "pairs=" + std::to_string(pairs) + " max_rel_err=" + num(worst)};
}

Outcome conductor_bounds() {
    Rng rng(303);
    int bad_artin = 0, bad_swan = 0, bad_det = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const u64 p = std::array<u64, 4>{2, 3, 5, 7}[rng.below(4)];
        const auto [sigma, tau] = sample_character_pair(rng, p, 5, 6, true);
        PPChar det{0, 0};
        for (const auto& c : sigma.chars()) det = sigma.multiply(det, c);
        for (const auto& c : tau.chars()) det = sigma.multiply(det, c);
        if (sigma.exponent(det) != 0) ++bad_det;
        const auto ws = sigma.as_wd(), wt = tau.as_wd();
        if (Rational(tensor_conductor_exact(sigma, tau)) > pair_bound(ws, wt, true)) ++bad_artin;
        if (Rational(tensor_swan_exact(sigma, tau)) > swan_pair_bound(ws, wt, true)) ++bad_swan;
    }
    bool tight = true;
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a <= 6; ++a) {
            const auto w = bh_tightness_witness(n, a);
            tight = tight && w.exact_value == (2 * n - 2) * a &&
                    Rational(w.exact_value) == pair_bound(w.sigma.as_wd(), w.tau.as_wd(), true);
        }
    return {bad_artin == 0 && bad_swan == 0 && bad_det == 0 && tight,
            "instances=" + std::to_string(draws) + " artin_violations=" + std::to_string(bad_artin) +
                " swan_violations=" + std::to_string(bad_swan) + " witnesses_tight=" + (tight ? "yes" : "no")};
}

Outcome gram_identity() {
    const auto f = TestFunction::unit_bump();
    double worst = 0.0;
    int cases = 0;
    for (u64 q = 3; q <= 20; ++q) {
        std::set<u64> S;
        for (const auto& [p, e] : factorize(q)) S.insert(p);
        const auto index = build_index(500, S, 1);
        for (u64 j = 0; j < euler_phi(q); ++j) {
            const auto chi = SatakeData::dirichlet_character(q, j, 600);
            const auto g = gram_vs_series(chi, chi, index, f);
            worst = std::max(worst, g.difference / g.scale);
            ++cases;
        }
    }
    const auto index2 = build_index(100, {}, 2);
    for (u64 i = 0; i < 10; ++i) {
        const auto pi = SatakeData::sample(2, 1, 200, SatakeSampler::Unitary, 700 + i);
        const auto pi2 = match_central_character(SatakeData::sample(2, 1, 200, SatakeSampler::Grc, 800 + i), pi);
        const auto g = gram_vs_series(pi, pi2, index2, f);
        worst = std::max(worst, g.difference / g.scale);
        ++cases;
    }
    return {worst <= 1e-9, "cases=" + std::to_string(cases) + " max_scaled_diff=" + num(worst)};
}

Outcome sphere_lemma() {
    Rng rng(505);
    bool ok = true;
    int violations = 0;
    for (std::size_t M : {4u, 10u, 50u}) {
        std::vector<std::vector<double>> basis(M, std::vector<double>(M, 0.0));
        for (std::size_t i = 0; i < M; ++i) basis[i][i] = 1.0;
        ok = ok && quasi_orth_certify(basis).ok;
        for (int t = 0; t < 100; ++t) {
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
            const auto r = quasi_orth_certify(vs);
            if (r.violation) ++violations;
            ok = ok && !r.ok;
        }
    }
    return {ok && violations == 300, "draws_with_violation=" + std::to_string(violations) + "/300"};
}

Outcome sos_turan_instances() {
    Rng rng(606);
    int failed = 0;
    for (int i = 0; i < 10000; ++i) {
        const int K = static_cast<int>(rng.range(1, 12));
        const int nu = static_cast<int>(rng.range(1, std::min(8, K)));
        std::vector<cplx> z(nu);
        for (auto& x : z) x = rng.disc(1.0);
        std::size_t big = 0;
        for (std::size_t j = 1; j < z.size(); ++j)
            if (std::abs(z[j]) > std::abs(z[big])) big = j;
        std::swap(z[0], z[big]);
        if (!sos_turan(z, K).certified) ++failed;
    }
    return {failed == 0, "instances=10000 uncertified=" + std::to_string(failed)};
}

Outcome selberg_sieve() {
    Rng rng(707);
    bool cond = true;
    double worst = 0.0;
    int sampled = 0, bad_w = 0;
    for (double z : {10.0, 30.0}) {
        SelbergSieve sv([](u64 p) { return 1.0 / static_cast<double>(p); }, z);
        cond = cond && sv.check_conditions().all();
        worst = std::max(worst, std::abs(sv.main_term_lhs() - sv.main_term_rhs()));
        int got = 0;
        while (got < 1000) {
            const u64 n = static_cast<u64>(rng.range(2, 10000000));
            if (static_cast<double>(smallest_prime_factor(n)) <= z) continue;
            ++got;
            if (std::abs(sv.w(n) - 1.0) > 1e-12) ++bad_w;
        }
        sampled += got;
    }
    return {cond && worst <= 1e-12 && bad_w == 0,
            "main_term_abs_diff=" + num(worst) + " w_samples=" + std::to_string(sampled) +
                " w_failures=" + std::to_string(bad_w)};
}

Outcome j_bounds() {
    const auto scan = j_bound_scan({1, 2, 5, 10, 20, 40, 80}, {1e-3, 1e-2, 0.1, 0.5});
    const auto micro = micro_inequalities();
    return {scan.violations == 0 && micro.ok(),
            "j_checked=" + std::to_string(scan.checked) + " j_violations=" + std::to_string(scan.violations) +
                " micro_violations=" + std::to_string(micro.log_violations + micro.hyp_violations)};
}

Outcome chebotarev_exactness() {
    bool ok = true;
    int classes = 0;
    for (u64 q : {3, 4, 5, 8, 12}) {
        const auto field = AbelianFieldSpec::cyclotomic(q);
        for (double x : {1e4, 1e6}) {
            const auto c = class_counts(field, x);
            u64 total = c.ramified;
            for (const auto& cls : all_classes(field)) {
                total += c.per_class.at(cls.a);
                ++classes;
            }
            ok = ok && total == c.pi_x;
        }
    }
    // Enumeration oracle for the small value.
    u64 oracle = 0;
    for (u64 p = 2; p <= 100; ++p) {
        bool prime = true;
        for (u64 d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime && p % 4 == 1) ++oracle;
    }
    const u64 v = pi_C(AbelianFieldSpec::cyclotomic(4), {1}, 100);
    return {ok && v == 11 && oracle == 11,
            "classes_checked=" + std::to_string(classes) + " pi_C(100;4,1)=" + std::to_string(v)};
}

Outcome eta_checks() {
    Rng rng(1010);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double delta = rng.uniform(1e-4, 0.3);
        const double T = std::exp(rng.uniform(2.0, 30.0));
        const auto m = ZeroFreeRegionModel::quasi_grh(delta, T, rng.uniform(0.05, 0.5), rng.uniform(1.0, 300.0),
                                                      static_cast<int>(rng.range(1, 24)));
        const double lx = std::exp(rng.uniform(0.0, 14.0));
        const double a = eta_of_log_x(m, lx), b = eta_grid_search(m, lx);
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    }
    bool mono = true, half = true;
    for (double logD : {1.0, 10.0, 100.0})
        for (int n : {1, 4, 16}) {
            const auto m = classical_delta(logD, n);
            double prev = -1.0;
            for (double lx = 1.0; lx < 1e8; lx *= 1.3) {
                const double e = eta_of_log_x(m, lx);
                mono = mono && e >= prev;
                half = half && eta_of_log_x(m, lx / 2) >= e / 2 - 1e-12 * e;
                prev = e;
            }
        }
    return {worst <= 1e-6 && mono && half,
            "models=1000 max_rel_err=" + num(worst) + " monotone=" + (mono ? "yes" : "no") +
                " sqrt_half=" + (half ? "yes" : "no")};
}

Outcome zero_count() {
    const auto table = load_zeros(RSZ_TEST_ZEROS);
    const long c = count_zeros(table, 0.5, 100.0);
    std::ifstream in(RSZ_TEST_ZEROS);
    std::string line;
    long scan = 0, rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++rows;
        if (std::stod(line) <= 100.0) ++scan;
    }
    return {c == 58 && 2 * scan == c && rows == 100,
            "count=" + std::to_string(c) + " scan=" + std::to_string(2 * scan) + " rows=" + std::to_string(rows)};
}

std::pair<int, std::string> run_capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
#ifndef RSZ_CLI_PATH
    return {false, "command-line tool not built"};
#else
    const std::string cmd = std::string("\"") + RSZ_CLI_PATH + "\" verify-all --seed 7 --zeros \"" + RSZ_TEST_ZEROS + "\"";
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = run_capture(cmd);
    const auto b = run_capture(cmd);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool same = !a.second.empty() && a.second == b.second;
    return {a.first == 0 && b.first == 0 && same && secs < 180.0,
            "exit=" + std::to_string(a.first) + "," + std::to_string(b.first) + " identical=" + (same ? "yes" : "no") +
                " bytes=" + std::to_string(a.second.size()) + " wall=" + num(secs) + "s"};
#endif
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "cauchy_identity", 10, cauchy_identity},
        {2, "ramified_assembly", 30, ramified_assembly},
        {3, "conductor_bounds", 5, conductor_bounds},
        {4, "gram_identity", 20, gram_identity},
        {5, "sphere_lemma", 5, sphere_lemma},
        {6, "sos_turan", 5, sos_turan_instances},
        {7, "selberg_sieve", 0, selberg_sieve},
        {8, "j_bound_micro", 0, j_bounds},
        {9, "chebotarev_exactness", 30, chebotarev_exactness},
        {10, "eta_closed_form", 0, eta_checks},
        {11, "zero_count", 0, zero_count},
        {12, "determinism", 180, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.time_limit <= 0 || secs < c.time_limit;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << num(secs) << " s"
                  << (in_time ? "" : ", over time limit") << ") " << o.detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
