#include "rsz/conductor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rsz/common.hpp"
#include "rsz/primes.hpp"

namespace rsz {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / (g ? g : 1);
    den_ = den / (g ? g : 1);
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(Rational a, Rational b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(Rational a, Rational b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

int WDRep::dim() const {
    int d = 0;
    for (const auto& s : summands) d += s.dim;
    return d;
}

Rational WDRep::artin() const {
    Rational a;
    for (const auto& s : summands) a = a + s.artin;
    return a;
}

Rational WDRep::swan() const {
    Rational a;
    for (const auto& s : summands) a = a + s.swan;
    return a;
}

std::vector<Rational> WDRep::slopes() const {
    std::vector<Rational> out;
    for (const auto& s : summands)
        for (int i = 0; i < s.dim; ++i) out.push_back(s.artin / Rational(s.dim));
    std::sort(out.begin(), out.end());
    return out;
}

Rational pair_bound(const WDRep& sigma, const WDRep& tau, bool same_det_unramified) {
    const Rational n(sigma.dim()), m(tau.dim());
    const Rational a = sigma.artin(), b = tau.artin();
    const Rational drop = same_det_unramified ? Rational(2) * rmin(a, b) : rmin(a, b);
    return m * a + n * b - drop;
}

IndecompBound indecomp_pair(int n, Rational a, int m, Rational b) {
    if (n < 1 || m < 1) throw PreconditionError("indecomp_pair: dimensions must be positive");
    const Rational sa = a / Rational(n), sb = b / Rational(m);
    return {Rational(static_cast<std::int64_t>(n) * m) * rmax(sa, sb), sa != sb};
}

Rational det_bound(const WDRep& sigma) {
    const auto s = sigma.slopes();
    return s.empty() ? Rational(0) : s.back();
}

Rational swan_pair_bound(const WDRep& sigma, const WDRep& tau, bool sw_det_zero) {
    const Rational n(sigma.dim()), m(tau.dim());
    const Rational a = sigma.swan(), b = tau.swan();
    const Rational drop = sw_det_zero ? Rational(2) * rmin(a, b) : rmin(a, b);
    return m * a + n * b - drop;
}

CharacterRep::CharacterRep(std::uint64_t p, std::vector<PPChar> chars, int ambient)
    : p_(p), K_(ambient), chars_(std::move(chars)) {
    if (!is_prime(p)) throw PreconditionError("CharacterRep: p must be prime");
    if (K_ < 1 || (p == 2 && K_ < 3)) throw PreconditionError("CharacterRep: ambient exponent too small");
    order_ = (p == 2) ? (std::uint64_t{1} << (K_ - 2)) : ipow(p, K_ - 1) * (p - 1);
    for (const auto& c : chars_)
        if (c.j >= order_ || c.e < 0 || c.e > 1 || (p != 2 && c.e != 0))
            throw PreconditionError("CharacterRep: character index out of range");
}

int CharacterRep::exponent(const PPChar& c) const {
    if (c.j == 0 && c.e == 0) return 0;
    if (p_ == 2) {
        if (c.j == 0) return 2;
        return K_ - std::countr_zero(c.j);
    }
    int v = 0;
    for (std::uint64_t j = c.j; j % p_ == 0; j /= p_) ++v;
    return K_ - std::min(v, K_ - 1);
}

PPChar CharacterRep::multiply(const PPChar& a, const PPChar& b) const {
    return {(a.j + b.j) % order_, (a.e + b.e) % 2};
}

PPChar CharacterRep::inverse(const PPChar& a) const { return {(order_ - a.j) % order_, a.e}; }

PPChar CharacterRep::primitive(int k, Rng& rng) const {
    if (k < 0 || k > K_) throw PreconditionError("primitive: exponent outside ambient range");
    if (k == 0) return {0, 0};
    if (p_ == 2) {
        if (k == 1) throw PreconditionError("primitive: no character of conductor 2");
        const int e = static_cast<int>(rng.below(2));
        if (k == 2) return {0, 1};
        const std::uint64_t span = std::uint64_t{1} << (k - 3);  // odd u in [1, 2^{k-2})
        const std::uint64_t u = 2 * rng.below(span) + 1;
        return {(u << (K_ - k)) % order_, e};
    }
    if (k == 1) return {(1 + rng.below(p_ - 2)) * ipow(p_, K_ - 1), 0};
    const std::uint64_t bound = (p_ - 1) * ipow(p_, k - 1);
    std::uint64_t u;
    do u = 1 + rng.below(bound - 1);
    while (u % p_ == 0);
    return {u * ipow(p_, K_ - k), 0};
}

int CharacterRep::artin() const {
    int a = 0;
    for (const auto& c : chars_) a += exponent(c);
    return a;
}

int CharacterRep::swan() const {
    int a = 0;
    for (const auto& c : chars_) a += std::max(exponent(c) - 1, 0);
    return a;
}

int CharacterRep::det_exponent() const {
    PPChar d{0, 0};
    for (const auto& c : chars_) d = multiply(d, c);
    return exponent(d);
}

CharacterRep CharacterRep::contragredient() const {
    std::vector<PPChar> inv;
    for (const auto& c : chars_) inv.push_back(inverse(c));
    return CharacterRep(p_, std::move(inv), K_);
}

WDRep CharacterRep::as_wd() const {
    WDRep w;
    for (const auto& c : chars_) {
        const int k = exponent(c);
        w.summands.push_back({1, Rational(k), Rational(std::max(k - 1, 0))});
    }
    return w;
}

namespace {

void check_compatible(const CharacterRep& s, const CharacterRep& t) {
    if (s.prime() != t.prime()) throw PreconditionError("tensor_conductor_exact: mismatched primes");
    if (s.ambient() != t.ambient()) throw PreconditionError("tensor_conductor_exact: mismatched ambient moduli");
}

}  // namespace

int tensor_conductor_exact(const CharacterRep& sigma, const CharacterRep& tau) {
    check_compatible(sigma, tau);
    int total = 0;
    for (const auto& x : sigma.chars())
        for (const auto& y : tau.chars()) total += sigma.exponent(sigma.multiply(x, y));
    return total;
}

int tensor_swan_exact(const CharacterRep& sigma, const CharacterRep& tau) {
    check_compatible(sigma, tau);
    int total = 0;
    for (const auto& x : sigma.chars())
        for (const auto& y : tau.chars()) total += std::max(sigma.exponent(sigma.multiply(x, y)) - 1, 0);
    return total;
}

TightnessWitness bh_tightness_witness(int n, int a, std::uint64_t p) {
    if (n < 2 || a < 0) throw PreconditionError("bh_tightness_witness: need n >= 2 and a >= 0");
    const int K = std::max({CharacterRep::kDefaultAmbient, a, 3});
    Rng rng(0x5eed + static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(a));
    CharacterRep probe(p, {}, K);
    std::vector<PPChar> chars(n - 1, PPChar{0, 0});
    chars.push_back(probe.primitive(a, rng));
    CharacterRep sigma(p, std::move(chars), K);
    CharacterRep tau = sigma.contragredient();
    const int exact = tensor_conductor_exact(sigma, tau);
    return {std::move(sigma), std::move(tau), exact};
}

std::pair<CharacterRep, CharacterRep> sample_character_pair(Rng& rng, std::uint64_t p, int max_size,
                                                            int max_exponent, bool unramified_det) {
    CharacterRep probe(p, {}, CharacterRep::kDefaultAmbient);
    auto draw = [&]() {
        int k;
        do k = static_cast<int>(rng.range(0, max_exponent));
        while (p == 2 && k == 1);
        return probe.primitive(k, rng);
    };
    const int n = static_cast<int>(rng.range(1, max_size));
    const int m = static_cast<int>(rng.range(1, max_size));
    std::vector<PPChar> s, t;
    PPChar det{0, 0};
    for (int i = 0; i < n; ++i) {
        s.push_back(draw());
        det = probe.multiply(det, s.back());
    }
    for (int i = 0; i < m; ++i) {
        if (unramified_det && i == m - 1) {
            t.push_back(probe.inverse(det));
            break;
        }
        t.push_back(draw());
        det = probe.multiply(det, t.back());
    }
    return {CharacterRep(p, std::move(s)), CharacterRep(p, std::move(t))};
}

}  // namespace rsz
