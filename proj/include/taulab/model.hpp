#pragma once

// Desk-scale model of the derived category of an elliptic curve.  Objects are
// formal multisets of "atoms": shifted stable classes, each carried by one
// LiftedRay.  The ray alone determines the underlying sheaf class and the
// shift: phases in (0,1] are honest sheaves, and translating by k shifts the
// complex by k.  Hearts are phase tilts, parametrized by a cut ray s with
// heart = phases in (s, s+1].  Ext tables come from the slope rules for
// stable sheaves plus Serre duality (the Serre functor is [1]).

#include "taulab/cover.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace taulab {

// One shifted stable class.  tag distinguishes non-isomorphic stables with
// the same class (line bundles of equal degree, distinct points); mult counts
// direct-sum repetitions.
struct Atom {
    LiftedRay ray;
    int tag = 0;
    BigInt mult = 1;

    Atom(LiftedRay r, int t = 0, BigInt m = 1);

    // Underlying sheaf-cone class: the ray direction, or its antipode when
    // the phase sits in the lower half (odd shift).
    ChargeVector cls() const;
    // Heart degree at cut 0: phases in (0,1] are shift 0.
    BigInt shift() const;
};

bool operator==(const Atom& a, const Atom& b);

// Formal direct sum of atoms.  Empty = zero object.  Atoms with equal
// (ray, tag) are merged; storage is sorted so equality is structural.
struct DObject {
    std::vector<Atom> atoms;

    DObject() = default;
    explicit DObject(std::vector<Atom> parts);

    bool is_zero() const { return atoms.empty(); }
    DObject shifted(const BigInt& k) const;
};

bool operator==(const DObject& a, const DObject& b);
DObject direct_sum(const DObject& a, const DObject& b);

struct HeartCut {
    LiftedRay s;

    explicit HeartCut(LiftedRay cut) : s(std::move(cut)) {}
    static HeartCut coh() { return HeartCut(phase_zero_ray()); }
};

// dim Ext^k by degree k; zero entries are not stored.
using ExtTable = std::map<BigInt, BigInt>;

// How to pair distinct atoms carrying the same class: "generic" stables of
// equal class have no Homs between them, "isomorphic" identifies them.
enum class EqualClassPolicy { generic, isomorphic };

// O + O(h), two atoms with distinct tags, both in the heart at cut 0.
// h <= 0 is rejected; h in {1,2} works but is below the very-ample degree 3,
// which is the intended regime, so a note goes to *warnings when given.
DObject standard_generator(const BigInt& h = 3, std::ostream* warnings = nullptr);

DObject apply_word_obj(const FunctorWord& w, const DObject& e);

// Extremal heart degrees over the atoms.  Zero objects are rejected.
BigInt phi_plus(const HeartCut& cut, const DObject& e);
BigInt phi_minus(const HeartCut& cut, const DObject& e);

// Atoms grouped by heart degree, degrees strictly decreasing, each piece
// unshifted into the heart: e = sum of piece[k] over the returned pairs.
std::vector<std::pair<BigInt, DObject>> heart_filtration(const HeartCut& cut, const DObject& e);

// Ext^*(a, b) for a pair of atoms, degrees translated by the shifts.  For
// unshifted stables the table is concentrated in degrees {0,1}: the Euler
// pairing chi = r_a d_b - d_a r_b lands in Hom when positive (slope of a
// below slope of b) and in Ext^1 when negative; equal slope pairs have no
// maps unless the classes coincide and the policy identifies them.
ExtTable ext_dims(const Atom& a, const Atom& b, EqualClassPolicy policy);

// Aggregated table over all atom pairs of two objects.
ExtTable ext_total(const DObject& e1, const DObject& e2, EqualClassPolicy policy);

struct NoNonzeroHom : std::runtime_error {
    NoNonzeroHom() : std::runtime_error("no nonzero Hom in any degree") {}
};

// Extremal k with Hom(e1, e2[-k]) != 0, read off the aggregated table
// (entry at degree j contributes k = -j).  Throws NoNonzeroHom when the
// table is empty.
BigInt eps_plus(const DObject& e1, const DObject& e2, EqualClassPolicy policy);
BigInt eps_minus(const DObject& e1, const DObject& e2, EqualClassPolicy policy);

}  // namespace taulab
