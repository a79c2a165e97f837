#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rsz/random.hpp"

namespace rsz {

/// Exact rational with positive denominator in lowest terms.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_, den_;
};

Rational rmin(const Rational& a, const Rational& b);
Rational rmax(const Rational& a, const Rational& b);

/// Indecomposable summand: dimension, Artin exponent, Swan exponent.
struct WDSummand {
    int dim = 1;
    Rational artin;
    Rational swan;
};

/// Weil-Deligne representation as a list of indecomposables.
struct WDRep {
    std::vector<WDSummand> summands;

    int dim() const;
    Rational artin() const;
    Rational swan() const;
    /// dim copies of artin/dim per summand, sorted non-decreasing.
    std::vector<Rational> slopes() const;
};

/// ma + nb - 2 min(a,b) with the flag, ma + nb - min(a,b) without.
Rational pair_bound(const WDRep& sigma, const WDRep& tau, bool same_det_unramified);

struct IndecompBound {
    Rational bound;
    bool exact;
};
/// nm max(a/n, b/m); exact iff slopes differ.
IndecompBound indecomp_pair(int n, Rational a, int m, Rational b);

/// Largest slope of sigma.
Rational det_bound(const WDRep& sigma);

/// Swan analogue of pair_bound.
Rational swan_pair_bound(const WDRep& sigma, const WDRep& tau, bool sw_det_zero);

/// Character of Z_p^* realized modulo p^K. For odd p: exponent j of a generator.
/// For p = 2: value (-1)^e on -1 and exp(2 pi i j / 2^{K-2}) on 5.
struct PPChar {
    std::uint64_t j = 0;
    int e = 0;
    bool operator==(const PPChar&) const = default;
};

/// Direct sum of characters of Z_p^* of prime-power conductor.
class CharacterRep {
public:
    static constexpr int kDefaultAmbient = 8;

    CharacterRep(std::uint64_t p, std::vector<PPChar> chars, int ambient = kDefaultAmbient);

    std::uint64_t prime() const { return p_; }
    int ambient() const { return K_; }
    const std::vector<PPChar>& chars() const { return chars_; }
    int size() const { return static_cast<int>(chars_.size()); }

    /// Conductor exponent of one character.
    int exponent(const PPChar& c) const;
    PPChar multiply(const PPChar& a, const PPChar& b) const;
    PPChar inverse(const PPChar& a) const;
    /// A primitive character with conductor exponent k (k = 1 impossible when p = 2).
    PPChar primitive(int k, Rng& rng) const;

    int artin() const;
    int swan() const;
    int det_exponent() const;
    CharacterRep contragredient() const;
    WDRep as_wd() const;

private:
    std::uint64_t p_;
    int K_;
    std::uint64_t order_;  // cyclic part: phi(p^K) for odd p, 2^{K-2} for p = 2
    std::vector<PPChar> chars_;
};

/// Artin exponent of sigma (x) tau computed character by character.
int tensor_conductor_exact(const CharacterRep& sigma, const CharacterRep& tau);

/// Swan exponent of sigma (x) tau.
int tensor_swan_exact(const CharacterRep& sigma, const CharacterRep& tau);

struct TightnessWitness {
    CharacterRep sigma;
    CharacterRep tau;
    int exact_value;
};

/// (n-1) trivial characters plus one of exponent a, paired with its contragredient.
TightnessWitness bh_tightness_witness(int n, int a, std::uint64_t p = 3);

/// Random pair with unramified determinant product (when requested).
std::pair<CharacterRep, CharacterRep> sample_character_pair(Rng& rng, std::uint64_t p, int max_size,
                                                            int max_exponent, bool unramified_det);

}  // namespace rsz
