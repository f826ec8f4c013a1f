#pragma once

// Exact arithmetic on the universal cover of the circle of charge directions,
// and the lifted action of autoequivalence generator letters on it.
//
// A charge class (r, d) maps to Z = -d + i*r; its direction in the plane is
// u = (-d, r).  A point of the cover is a primitive integer vector u together
// with a sheet index m, encoding the phase x = alpha(u) + 2m where
// alpha(u) = arg(u)/pi in (-1, 1].  Phases are never materialized as floats:
// every comparison reduces to integer sign tests (half-plane membership and
// cross products) plus sheet comparison.

#include "taulab/numeric.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace taulab {

// Class in the charge lattice.  Nonzero by construction.
struct ChargeVector {
    BigInt rank;
    BigInt deg;

    ChargeVector(BigInt r, BigInt d) : rank(std::move(r)), deg(std::move(d)) {
        if (rank == 0 && deg == 0) throw std::invalid_argument("ChargeVector: (0,0) is not a class");
    }

    // r > 0, or r = 0 with d > 0; phases of such classes lie in (0, 1].
    bool in_sheaf_cone() const { return rank > 0 || (rank == 0 && deg > 0); }

    bool operator==(const ChargeVector&) const = default;
};

// d_b*r_a ... Euler pairing chi(a, b) = r_a*d_b - d_a*r_b.
inline BigInt euler_pairing(const ChargeVector& a, const ChargeVector& b) {
    return a.rank * b.deg - a.deg * b.rank;
}

class LiftedRay {
  public:
    // Normalizes (dx, dy) to its primitive part (gcd reduction preserves the
    // direction).  Throws on the zero vector.
    LiftedRay(BigInt dx, BigInt dy, BigInt sheet = 0);

    const BigInt& dir_x() const { return ux_; }
    const BigInt& dir_y() const { return uy_; }
    const BigInt& sheet() const { return m_; }

    // alpha(u) in (0, 1], i.e. u in the open upper half-plane or on the
    // negative real axis.
    bool upper() const { return uy_ > 0 || (uy_ == 0 && ux_ < 0); }

    // Exact translation by an integer k (the k-fold deck move x -> x + k).
    LiftedRay translated(const BigInt& k) const;

    // Diagnostic only; never used on a correctness path.
    double approx_phase() const;

    bool operator==(const LiftedRay& o) const { return ux_ == o.ux_ && uy_ == o.uy_ && m_ == o.m_; }
    std::strong_ordering operator<=>(const LiftedRay& o) const;

    std::string str() const;

  private:
    BigInt ux_, uy_;  // primitive direction
    BigInt m_;        // sheet index
};

// Total order on directions by alpha alone (ignoring sheets): -1, 0, +1.
int alpha_compare(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by);

// Phase of the direction of Z(r,d) = -d + i*r for a sheaf-cone class, on
// sheet 0; the resulting phase lies in (0, 1].
LiftedRay ray_from_sheaf_class(const ChargeVector& c);

// Canonical cut-0 ray, phase 0 (direction of the positive real axis).
inline LiftedRay phase_zero_ray() { return LiftedRay(1, 0, 0); }

// Skyscraper ray, phase 1.
inline LiftedRay skyscraper_ray() { return LiftedRay(-1, 0, 0); }

enum class Letter : std::uint8_t {
    mukai,
    mukai_inv,
    twist,
    twist_inv,
    shift_up,
    shift_down,
};

constexpr std::array<Letter, 6> all_letters = {Letter::mukai,  Letter::mukai_inv,  Letter::twist,
                                               Letter::twist_inv, Letter::shift_up, Letter::shift_down};

Letter inverse_letter(Letter g);

// An autoequivalence as a word in the generator letters, applied left to
// right: {A, B} means apply A first, then B.  The empty word is the identity.
struct FunctorWord {
    std::vector<Letter> letters;

    FunctorWord() = default;
    explicit FunctorWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    bool operator==(const FunctorWord&) const = default;
};

FunctorWord concat(const FunctorWord& first, const FunctorWord& then);
FunctorWord inverse_word(const FunctorWord& w);
FunctorWord word_pow(const FunctorWord& w, long long k);  // k may be negative

// Row-major [[a, b], [c, d]], determinant 1.
struct Sl2zMatrix {
    BigInt a, b, c, d;

    Sl2zMatrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_);
    static Sl2zMatrix identity() { return {1, 0, 0, 1}; }

    BigInt trace() const { return a + d; }
    Sl2zMatrix operator*(const Sl2zMatrix& rhs) const;
    bool operator==(const Sl2zMatrix&) const = default;
};

Sl2zMatrix letter_matrix(Letter g);

// Matrix of the whole word acting on direction vectors: with left-to-right
// application, word_matrix(w1 . w2) = word_matrix(w2) * word_matrix(w1).
Sl2zMatrix word_matrix(const FunctorWord& w);

enum class MatrixKind {
    plus_identity,
    minus_identity,
    elliptic,
    parabolic,
    hyperbolic,
};

struct Classification {
    MatrixKind kind;
    int order;  // order in SL(2,Z): 1, 2, or 3/4/6 for elliptic; 0 otherwise

    bool operator==(const Classification&) const = default;
};

Classification classify(const Sl2zMatrix& m);

const char* matrix_kind_name(MatrixKind k);

// Lifted action of one generator letter.  Strictly increasing in the phase
// order; shift_up is x -> x+1 exactly, mukai is x -> x-1/2 exactly, twists
// move every phase by strictly less than 1 (sheet resolved by that bound).
LiftedRay apply_letter(Letter g, const LiftedRay& x);

LiftedRay apply_word(const FunctorWord& w, const LiftedRay& x);

// The unique integer k with phase(x) - phase(cut) in (k, k+1], decided by
// exact ray comparisons (ties on the boundary by exact ray equality).
BigInt heart_degree(const LiftedRay& x, const LiftedRay& cut);

// phase(to) - phase(from) for two rays on the same line through the origin
// (equal or antipodal directions), where the difference is an exact integer.
// Throws when the directions are not collinear.
BigInt integer_displacement(const LiftedRay& from, const LiftedRay& to);

}  // namespace taulab
