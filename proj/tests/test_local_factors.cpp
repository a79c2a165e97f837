#include "doctest.h"
#include "oracles.hpp"
#include "rsz/local_factors.hpp"
#include "rsz/rs_coefficients.hpp"

using namespace rsz;

namespace {

bool close(cplx a, cplx b, double rel = 1e-9) { return std::abs(a - b) <= rel * (1.0 + std::abs(b)); }

BZDatum single_block(u64 q, int n, cplx s) {
    BZDatum d;
    d.q_v = q;
    d.blocks = {{n, s}};
    d.classes = {{0}};
    d.e = {1};
    return d;
}

}  // namespace

TEST_SUITE("local_factors") {
    TEST_CASE("BZDatum validation") {
        auto d = unramified_datum(3, {0.2, 0.1});
        CHECK_NOTHROW(d.validate());
        CHECK(d.n() == 2);
        auto bad = unramified_datum(3, {0.1, 0.2});
        CHECK_THROWS_AS(bad.validate(), PreconditionError);
        bad = d;
        bad.classes = {{0}, {0, 1}};
        bad.e = {1, 1};
        CHECK_THROWS_AS(bad.validate(), PreconditionError);
        bad = d;
        bad.e = {3};
        CHECK_THROWS_AS(bad.validate(), PreconditionError);
        bad = d;
        bad.q_v = 1;
        CHECK_THROWS_AS(bad.validate(), PreconditionError);
        auto other = single_block(3, 2, 0.0);
        CHECK_FALSE(same_type(d, other));
        CHECK_THROWS_AS(local_rs_factor(d, other, 2.0), PreconditionError);
    }

    TEST_CASE("unramified type reduces to the Satake product") {
        const std::vector<cplx> s{cplx(0.2, 1.0), cplx(0.0, -0.3), cplx(-0.1, 2.0)};
        const std::vector<cplx> t{cplx(0.3, 0.5), cplx(0.1, 0.0), cplx(-0.2, 1.0)};
        const auto sig = unramified_datum(5, s), tau = unramified_datum(5, t);
        std::vector<cplx> a, b;
        for (const auto& v : s) a.push_back(std::pow(5.0, -v));
        for (const auto& v : t) b.push_back(std::pow(5.0, -v));
        for (double x : {1.5, 2.0, 3.0}) {
            cplx ref = 1.0;
            for (const auto& u : a)
                for (const auto& w : b) ref /= 1.0 - u * std::conj(w) * std::pow(5.0, -x);
            CHECK(close(local_rs_factor(sig, tau, x), ref));
        }
        const auto series = local_series(sig, tau, 6);
        const auto ref = oracle::geometric_product(oracle::pair_roots(a, b, true), 6);
        for (int r = 0; r <= 6; ++r) CHECK(close(series[r], ref[r]));
    }

    TEST_CASE("single block is a product over nu") {
        const auto sig = single_block(3, 3, cplx(0.1, 0.4)), tau = single_block(3, 3, cplx(-0.2, 1.1));
        const cplx x = std::pow(3.0, -2.0);
        cplx ref = 1.0;
        for (int nu = 1; nu <= 3; ++nu) ref /= 1.0 - std::pow(3.0, nu) * sig.z(0) * std::conj(tau.z(0)) * x;
        CHECK(close(local_rs_factor(sig, tau, 2.0), ref));
        CHECK(close(local_rs_factor(sig, tau, 60.0), 1.0, 1e-12));
    }

    TEST_CASE("pole detection") {
        // q z conj z' q^{-s} = 1 at s = 1 for s_j = -1/2 and a one-dimensional block.
        const auto d = unramified_datum(2, {cplx(-0.5, 0.0)});
        CHECK_THROWS_AS(local_rs_factor(d, d, 1.0), PoleError);
    }

    TEST_CASE("block coefficients") {
        Rng rng(1);
        const auto [sig, tau] = sample_bz_pair(rng, 3, 4);
        for (int a = 0; a < static_cast<int>(sig.classes.size()); ++a) {
            CHECK(close(block_coeff(sig, tau, a, 1, 0), 1.0));
            CHECK_THROWS_AS(block_coeff(sig, tau, a, 5, 2), PreconditionError);
        }
        for (const auto& b : block_coefficients(sig, tau, 5)) CHECK(close(b.coeffs[0], 1.0));
    }

    TEST_CASE("block_coeff at unramified type equals the Cauchy product") {
        const std::vector<cplx> s{cplx(0.2, 1.0), cplx(0.1, -0.3), cplx(-0.1, 2.0)};
        const std::vector<cplx> t{cplx(0.2, 0.5), cplx(0.1, 0.2), cplx(-0.1, 1.3)};
        const auto sig = unramified_datum(7, s), tau = unramified_datum(7, t);
        ComplexMultiset a, b;
        for (const auto& v : s) a.push_back(std::pow(7.0, -v));
        for (const auto& v : t) b.push_back(std::pow(7.0, -v));
        const SatakeData pi(3, 1, 7, {{7, a}}), pi2(3, 1, 7, {{7, b}});
        for (int r = 0; r <= 6; ++r) CHECK(close(block_coeff(sig, tau, 0, 1, r), rs_coeff_oracle(pi, pi2, 7, r)));
    }

    TEST_CASE("assembly identity on random pairs") {
        Rng rng(2);
        for (u64 q : {2, 3, 5})
            for (int i = 0; i < 30; ++i) {
                const int n = static_cast<int>(rng.range(1, 4));
                const auto [sig, tau] = sample_bz_pair(rng, q, n);
                const auto series = local_series(sig, tau, 6);
                for (int r = 0; r <= 6; ++r) CHECK(close(assembled_coeff(sig, tau, r), series[r]));
                // The truncated series converges to the factor at large Re(s).
                cplx sum = 0.0;
                const auto long_series = local_series(sig, tau, 40);
                const double X = std::pow(static_cast<double>(q), -6.0);
                for (int r = 40; r >= 0; --r) sum = sum * X + long_series[r];
                CHECK(close(sum, local_rs_factor(sig, tau, 6.0), 1e-9));
            }
    }

    TEST_CASE("root audit") {
        Rng rng(3);
        for (int i = 0; i < 40; ++i) {
            auto [sig, tau] = sample_bz_pair(rng, 5, static_cast<int>(rng.range(1, 4)));
            const auto rep = root_audit(sig, tau);
            CHECK(rep.js_violations == 0);
            for (const auto& r : rep.roots) CHECK(r.modulus < 5.0);
            for (auto* d : {&sig, &tau})
                for (auto& b : d->blocks) b.s_j = cplx(0.0, b.s_j.imag());
            const auto tempered = root_audit(sig, tau);
            CHECK(tempered.tempered_violations == 0);
        }
        const auto d = unramified_datum(3, {0.0, 0.0});
        for (const auto& r : root_audit(d, d).roots) CHECK(std::abs(r.modulus - 1.0) < 1e-12);
    }
}
