#include "doctest.h"
#include "oracles.hpp"
#include "rsz/conductor.hpp"
#include "rsz/dirichlet.hpp"
#include "rsz/primes.hpp"

using namespace rsz;

namespace {

WDRep chars_rep(std::initializer_list<int> exps) {
    WDRep w;
    for (int k : exps) w.summands.push_back({1, Rational(k), Rational(std::max(k - 1, 0))});
    return w;
}

}  // namespace

TEST_SUITE("conductor") {
    TEST_CASE("rational arithmetic") {
        CHECK(Rational(2, 4) == Rational(1, 2));
        CHECK(Rational(1, -2) == Rational(-1, 2));
        CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
        CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
        CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(rmin(Rational(3), Rational(5, 2)) == Rational(5, 2));
        CHECK(Rational(7, 3).str() == "7/3");
    }

    TEST_CASE("WD slopes") {
        WDRep w;
        w.summands = {{2, Rational(3), Rational(1)}, {1, Rational(1), Rational(0)}};
        CHECK(w.dim() == 3);
        CHECK(w.artin() == Rational(4));
        const auto s = w.slopes();
        REQUIRE(s.size() == 3);
        CHECK(s[0] == Rational(1));
        CHECK(s[1] == Rational(3, 2));
        CHECK(s[2] == Rational(3, 2));
    }

    TEST_CASE("pair_bound examples") {
        CHECK(pair_bound(chars_rep({3}), chars_rep({3}), true) == Rational(0));
        for (int n = 1; n <= 5; ++n) {
            WDRep s;
            s.summands = {{n, Rational(7), Rational(0)}};
            CHECK(pair_bound(s, s, true) == Rational((2 * n - 2) * 7));
        }
        WDRep s, t;
        s.summands = {{2, Rational(5), Rational(0)}};
        t.summands = {{3, Rational(1), Rational(0)}};
        CHECK(pair_bound(s, t, false) == Rational(16));
    }

    TEST_CASE("indecomp_pair examples") {
        auto r = indecomp_pair(1, Rational(2), 1, Rational(3));
        CHECK(r.bound == Rational(3));
        CHECK(r.exact);
        r = indecomp_pair(2, Rational(2), 3, Rational(3));
        CHECK(r.bound == Rational(6));
        CHECK_FALSE(r.exact);
        r = indecomp_pair(2, Rational(3), 1, Rational(1));
        CHECK(r.bound == Rational(3));
        CHECK(r.exact);
    }

    TEST_CASE("det_bound examples") {
        CHECK(det_bound(chars_rep({4})) == Rational(4));
        for (int n = 2; n <= 5; ++n) {
            WDRep st;
            st.summands = {{n, Rational(n - 1), Rational(0)}};
            CHECK(det_bound(st) == Rational(n - 1, n));
        }
        WDRep mixed;
        mixed.summands = {{2, Rational(3), Rational(1)}, {3, Rational(2), Rational(0)}, {1, Rational(1), Rational(0)}};
        CHECK(det_bound(mixed) == Rational(3, 2));
    }

    TEST_CASE("swan_pair_bound examples") {
        CHECK(swan_pair_bound(chars_rep({0, 1}), chars_rep({1}), true) == Rational(0));
        CHECK(swan_pair_bound(chars_rep({3}), chars_rep({3}), true) == Rational(0));
    }

    TEST_CASE("character exponents agree with Dirichlet conductors") {
        Rng rng(1);
        for (u64 p : {3, 5}) {
            const int K = 4;
            CharacterRep probe(p, {}, K);
            const u64 q = ipow(p, K);
            u64 g = 2;
            while (true) {
                bool prim = true;
                u64 phi = q / p * (p - 1), v = 1;
                for (u64 e = 1; e < phi; ++e) {
                    v = v * g % q;
                    if (v == 1) prim = false;
                }
                if (prim) break;
                ++g;
            }
            for (u64 j = 0; j < q / p * (p - 1); j += 7) {
                const int e = probe.exponent({j, 0});
                CHECK(e == oracle::odd_char_exponent_by_kernel(p, K, j, g));
                CHECK(ipow(p, e) == DirichletCharacter(q, j).conductor());
            }
            for (int k = 0; k <= K; ++k) CHECK(probe.exponent(probe.primitive(k, rng)) == k);
        }
        CharacterRep two(2, {}, 6);
        for (u64 j = 0; j < 16; ++j)
            for (int e = 0; e <= 1; ++e)
                CHECK(ipow(2, two.exponent({j, e})) == DirichletCharacter(64, e + 2 * j).conductor());
        for (int k : {0, 2, 3, 4, 5, 6}) CHECK(two.exponent(two.primitive(k, rng)) == k);
        CHECK_THROWS_AS(two.primitive(1, rng), PreconditionError);
    }

    TEST_CASE("tensor conductor examples") {
        Rng rng(2);
        CharacterRep probe(3, {}, 8);
        const PPChar chi = probe.primitive(2, rng);
        CHECK(tensor_conductor_exact(CharacterRep(3, {chi}), CharacterRep(3, {probe.inverse(chi)})) == 0);
        const PPChar a = probe.primitive(3, rng), b = probe.primitive(2, rng);
        CHECK(tensor_conductor_exact(CharacterRep(3, {a}), CharacterRep(3, {b})) == 3);
        CHECK(tensor_conductor_exact(CharacterRep(3, {{0, 0}}), CharacterRep(3, {{0, 0}})) == 0);
        CHECK_THROWS_AS(tensor_conductor_exact(CharacterRep(3, {a}), CharacterRep(5, {{0, 0}})), PreconditionError);
    }

    TEST_CASE("tightness witness") {
        CHECK(bh_tightness_witness(2, 2).exact_value == 4);
        CHECK(bh_tightness_witness(3, 1).exact_value == 4);
        CHECK(bh_tightness_witness(2, 0).exact_value == 0);
        for (int n = 2; n <= 4; ++n)
            for (int a = 1; a <= 6; ++a) {
                const auto w = bh_tightness_witness(n, a);
                CHECK(w.exact_value == (2 * n - 2) * a);
                CHECK(Rational(w.exact_value) == pair_bound(w.sigma.as_wd(), w.tau.as_wd(), true));
                CHECK(w.sigma.det_exponent() + w.tau.det_exponent() >= 0);
            }
    }

    TEST_CASE("pair bounds on random character sums") {
        Rng rng(3);
        for (int i = 0; i < 10000; ++i) {
            const u64 p = std::array<u64, 4>{2, 3, 5, 7}[rng.below(4)];
            const bool flag = i % 2 == 0;
            const auto [s, t] = sample_character_pair(rng, p, 5, 6, flag);
            if (flag) {
                PPChar det{0, 0};
                for (const auto& c : s.chars()) det = s.multiply(det, c);
                for (const auto& c : t.chars()) det = s.multiply(det, c);
                REQUIRE(s.exponent(det) == 0);
            }
            const auto ws = s.as_wd(), wt = t.as_wd();
            CHECK(Rational(tensor_conductor_exact(s, t)) <= pair_bound(ws, wt, flag));
            CHECK(Rational(tensor_swan_exact(s, t)) <= swan_pair_bound(ws, wt, flag));
            CHECK(Rational(s.det_exponent()) <= det_bound(ws));
        }
    }

    TEST_CASE("character-level indecomposable equality") {
        Rng rng(4);
        for (u64 p : {2, 3, 5, 7}) {
            CharacterRep probe(p, {}, 8);
            for (int i = 0; i < 400; ++i) {
                int k, l;
                do {
                    k = static_cast<int>(rng.range(0, 6));
                    l = static_cast<int>(rng.range(0, 6));
                } while (p == 2 && (k == 1 || l == 1));
                const auto x = probe.primitive(k, rng), y = probe.primitive(l, rng);
                const int e = probe.exponent(probe.multiply(x, y));
                if (k != l) CHECK(e == std::max(k, l));
                else CHECK(e <= k);
            }
        }
    }
}
