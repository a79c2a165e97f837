#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "rsz/random.hpp"
#include "rsz/zero_lab.hpp"

using namespace rsz;

namespace {

ZeroTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse_zeros(in, "inline");
}

}  // namespace

TEST_SUITE("zero_lab") {
    TEST_CASE("parsing") {
        const auto t = parse("# header\n14.134725\n\n0.5 21.022040\n  # indented comment\n0.75 30.5\n");
        REQUIRE(t.zeros.size() == 3);
        CHECK(t.zeros[0].beta == 0.5);
        CHECK(t.zeros[0].gamma == doctest::Approx(14.134725));
        CHECK(t.zeros[2].beta == 0.75);
        CHECK(t.provenance == "inline");
        CHECK(parse("").zeros.empty());
        try {
            parse("14.1\n21.0\nabc\n");
            FAIL("expected a parse error");
        } catch (const ZeroParseError& e) {
            CHECK(e.line() == 3);
        }
        CHECK_THROWS_AS(parse("1 2 3\n"), ZeroParseError);
        CHECK_THROWS(load_zeros("/nonexistent/zeros.txt"));
    }

    TEST_CASE("zero counts") {
        const auto t = load_zeros(RSZ_TEST_ZEROS);
        REQUIRE(t.zeros.size() == 100);
        CHECK(count_zeros(t, 0.6, 100) == 0);
        CHECK(count_zeros(t, 0.5, 15) == 2);
        CHECK(count_zeros(t, 0.5, 100) == 58);
        long prev = 0;
        for (double T = 0; T <= 240; T += 3) {
            const long c = count_zeros(t, 0.5, T);
            CHECK(c >= prev);
            prev = c;
        }
        const auto off = parse("0.8 10\n0.6 20\n");
        CHECK(count_zeros(off, 0.7, 50) == 2);
        CHECK(count_zeros(off, 0.5, 50) == 4);
        CHECK(count_zeros(off, 0.5, 15) == 2);
    }

    TEST_CASE("eta closed form") {
        const auto c = ZeroFreeRegionModel::constant(0.01);
        CHECK(eta_of_log_x(c, 500.0) == doctest::Approx(0.01 * 500.0 + std::log(3.0)));
        CHECK(eta_of_x(c, std::exp(500.0)) == doctest::Approx(eta_of_log_x(c, 500.0)));

        const auto cl = classical_delta(100.0, 4);
        CHECK(eta_of_log_x(cl, 1000.0) == doctest::Approx(eta_grid_search(cl, 1000.0)).epsilon(1e-6));

        // Minimiser beyond the double range of t.
        const auto far = classical_delta(288.6, 1, 0.48);
        CHECK(eta_of_log_x(far, 968894.0) == doctest::Approx(eta_grid_search(far, 968894.0)).epsilon(1e-9));
        CHECK(eta_of_log_x(far, 968894.0) > 1000.0);

        Rng rng(5);
        for (int i = 0; i < 1000; ++i) {
            const double delta = rng.uniform(1e-4, 0.2);
            const double T = std::exp(rng.uniform(2.0, 25.0));
            const double logD = rng.uniform(1.0, 200.0);
            const int n = 1 + static_cast<int>(rng.below(20));
            const auto m = ZeroFreeRegionModel::quasi_grh(delta, T, 0.1, logD, n);
            const double lx = std::exp(rng.uniform(0.0, 12.0));
            const double closed = eta_of_log_x(m, lx), grid = eta_grid_search(m, lx);
            REQUIRE(closed == doctest::Approx(grid).epsilon(1e-6));
            CHECK(eta_of_log_x(m, lx / 2) >= closed / 2 - 1e-12);
            CHECK(eta_of_log_x(m, lx * 1.5) >= closed);
        }
    }

    TEST_CASE("zero-free models") {
        const auto m = ZeroFreeRegionModel::quasi_grh(0.1, 100.0, 0.1, 10.0, 2);
        CHECK(m.delta(50.0) == doctest::Approx(0.1));
        CHECK(m.delta(1000.0) == doctest::Approx(0.1 / (10.0 + 2 * std::log(1000.0))));
        CHECK_THROWS_AS(m.delta(2.0), PreconditionError);
    }

    TEST_CASE("detection window") {
        const auto w = detection_window_log(1e-8, 1e9, 1, 1);
        CHECK(w.K == doctest::Approx(40000.0));
        CHECK(w.log_A2 - w.log_A1 == doctest::Approx(w.K / w.eta * (40.0 - 1.0 / 300.0)));
        CHECK(w.log_A2 / w.log_A1 == doctest::Approx(12000.0));
        CHECK(w.tau_threshold == doctest::Approx(2e-6));
        CHECK(std::isinf(w.A2));
        const auto s = detection_window_log(1e-8, 1e9, 1, 1, 5.0);
        CHECK(s.K == doctest::Approx(40005.0));
        const auto two = detection_window_log(1e-9, 1e10, 1, 2);
        CHECK(two.K == doctest::Approx(4000.0 * 4 * 1e-9 * 1e10));
        CHECK_THROWS_AS(detection_window(1e-3, 1, 1, 1e3, 1e3, 1, 1), PreconditionError);
        CHECK_THROWS_AS(detection_window_log(1e-10, 1e9, 1, 1), PreconditionError);
    }

    TEST_CASE("detection polynomial") {
        const auto pi = SatakeData::sample(2, 1, 2000, SatakeSampler::Unitary, 3);
        const auto pi0 = SatakeData::sample(1, 1, 2000, SatakeSampler::Unitary, 4);
        CHECK(detection_polynomial(pi, pi0, 0.5, 10.0, 20.0) == cplx(0.0));
        const cplx base = detection_polynomial(pi, pi0, 0.5, 1500.0, 20.0);
        const cplx doubled = detection_polynomial(pi, pi0, 0.5, 1500.0, 20.0, [](u64) { return cplx(1, 0); }, 1.0);
        const cplx killed = detection_polynomial(pi, pi0, 0.5, 1500.0, 20.0, [](u64) { return cplx(-1, 0); }, 1.0);
        CHECK(std::abs(doubled - 2.0 * base) < 1e-9 * (1 + std::abs(base)));
        CHECK(std::abs(killed) < 1e-9);
    }

    TEST_CASE("summation by parts") {
        const auto pi = SatakeData::sample(2, 1, 3000, SatakeSampler::Unitary, 8);
        const auto pi0 = SatakeData::sample(2, 1, 3000, SatakeSampler::Unitary, 9);
        for (int k : {1, 3, 6}) {
            const auto r = sum_by_parts_check(pi, pi0, 0.3, 0.5, k, 10.0, 2500.0);
            CHECK(r.rel_error < 1e-4);
        }
        CHECK_THROWS_AS(sum_by_parts_check(pi, pi0, 0.3, 0.5, 2, 100.0, 50.0), PreconditionError);
    }

    TEST_CASE("density and region") {
        CHECK(density_bound(DensityKind::Lfzde, 10, 10, 10, 1, 1, 1.0).value == doctest::Approx(1.0));
        const auto l = density_bound(DensityKind::Lfzde, 10, 10, 10, 1, 1, 1.0 - 1e-8);
        CHECK(l.log_value == doctest::Approx(1e7 * 1e-8 * std::log(1000.0)));
        const auto ls = density_bound(DensityKind::LandauSiegel, 10, 10, 10, 1, 1, 1.0 - 1e-8, 1.0 - 1e-3);
        CHECK(ls.log_value == doctest::Approx(l.log_value + std::log(1e-3 * std::log(100.0))));
        CHECK(density_bound(DensityKind::LandauSiegel, 10, 10, 10, 1, 1, 0.9, 1.0).value == 0.0);
        CHECK_THROWS_AS(density_bound(DensityKind::LandauSiegel, 10, 10, 10, 1, 1, 0.9), PreconditionError);
        CHECK_THROWS_AS(density_bound(DensityKind::Lfzde, 10, 10, 10, 1, 1, 0.4), PreconditionError);

        CHECK(page_region(1.0, 0.0, 1.0, 10, 10, 10, 1, 1));
        CHECK_FALSE(page_region(1.0, 11.0, 1.0, 10, 10, 10, 1, 1));
        CHECK_FALSE(page_region(0.9, 0.0, 1.0, 10, 10, 10, 1, 1));

        CHECK(analytic_conductor(5, {}) == 5.0);
        CHECK(analytic_conductor(3, {cplx(0, 0), cplx(1, 0)}, 0.0) == doctest::Approx(6.0));
        CHECK(analytic_conductor(1, {cplx(0, 0)}, 4.0) == doctest::Approx(5.0));
    }
}
