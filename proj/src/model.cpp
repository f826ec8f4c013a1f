#include "taulab/model.hpp"

#include <algorithm>
#include <ostream>

namespace taulab {

Atom::Atom(LiftedRay r, int t, BigInt m) : ray(std::move(r)), tag(t), mult(std::move(m)) {
    if (mult <= 0) throw std::invalid_argument("Atom: multiplicity must be positive");
}

ChargeVector Atom::cls() const {
    if (ray.upper()) return ChargeVector{ray.dir_y(), -ray.dir_x()};
    return ChargeVector{-ray.dir_y(), ray.dir_x()};
}

BigInt Atom::shift() const {
    return ray.upper() ? BigInt(2 * ray.sheet()) : BigInt(2 * ray.sheet() - 1);
}

bool operator==(const Atom& a, const Atom& b) {
    return a.ray == b.ray && a.tag == b.tag && a.mult == b.mult;
}

namespace {

bool atom_key_less(const Atom& a, const Atom& b) {
    auto c = a.ray <=> b.ray;
    if (c != 0) return c < 0;
    return a.tag < b.tag;
}

}  // namespace

DObject::DObject(std::vector<Atom> parts) {
    std::sort(parts.begin(), parts.end(), atom_key_less);
    for (Atom& p : parts) {
        if (!atoms.empty() && atoms.back().ray == p.ray && atoms.back().tag == p.tag)
            atoms.back().mult += p.mult;
        else
            atoms.push_back(std::move(p));
    }
}

bool operator==(const DObject& a, const DObject& b) { return a.atoms == b.atoms; }

DObject DObject::shifted(const BigInt& k) const {
    std::vector<Atom> parts;
    parts.reserve(atoms.size());
    for (const Atom& a : atoms) parts.emplace_back(a.ray.translated(k), a.tag, a.mult);
    return DObject(std::move(parts));
}

DObject direct_sum(const DObject& a, const DObject& b) {
    std::vector<Atom> parts = a.atoms;
    parts.insert(parts.end(), b.atoms.begin(), b.atoms.end());
    return DObject(std::move(parts));
}

DObject standard_generator(const BigInt& h, std::ostream* warnings) {
    if (h <= 0) throw std::invalid_argument("standard_generator: degree must be positive");
    if (warnings && h < 3)
        *warnings << "warning: generator degree " << h
                  << " is below the very-ample threshold 3; results remain exact\n";
    std::vector<Atom> parts;
    parts.emplace_back(ray_from_sheaf_class({1, 0}), 0);
    parts.emplace_back(ray_from_sheaf_class({1, h}), 1);
    return DObject(std::move(parts));
}

DObject apply_word_obj(const FunctorWord& w, const DObject& e) {
    std::vector<Atom> parts;
    parts.reserve(e.atoms.size());
    for (const Atom& a : e.atoms) parts.emplace_back(apply_word(w, a.ray), a.tag, a.mult);
    return DObject(std::move(parts));
}

BigInt phi_plus(const HeartCut& cut, const DObject& e) {
    if (e.is_zero()) throw std::invalid_argument("phi_plus: zero object");
    BigInt best = heart_degree(e.atoms.front().ray, cut.s);
    for (const Atom& a : e.atoms) best = std::max(best, heart_degree(a.ray, cut.s));
    return best;
}

BigInt phi_minus(const HeartCut& cut, const DObject& e) {
    if (e.is_zero()) throw std::invalid_argument("phi_minus: zero object");
    BigInt best = heart_degree(e.atoms.front().ray, cut.s);
    for (const Atom& a : e.atoms) best = std::min(best, heart_degree(a.ray, cut.s));
    return best;
}

std::vector<std::pair<BigInt, DObject>> heart_filtration(const HeartCut& cut, const DObject& e) {
    std::map<BigInt, std::vector<Atom>, std::greater<BigInt>> grouped;
    for (const Atom& a : e.atoms) {
        BigInt k = heart_degree(a.ray, cut.s);
        grouped[k].emplace_back(a.ray.translated(-k), a.tag, a.mult);
    }
    std::vector<std::pair<BigInt, DObject>> out;
    out.reserve(grouped.size());
    for (auto& [k, parts] : grouped) out.emplace_back(k, DObject(std::move(parts)));
    return out;
}

ExtTable ext_dims(const Atom& a, const Atom& b, EqualClassPolicy policy) {
    const ChargeVector ca = a.cls(), cb = b.cls();
    const BigInt chi = euler_pairing(ca, cb);
    const BigInt base = a.shift() - b.shift();
    const BigInt scale = a.mult * b.mult;
    ExtTable t;
    if (chi > 0) {
        t[base] = chi * scale;
    } else if (chi < 0) {
        t[base + 1] = -chi * scale;
    } else if (ca == cb && (a.tag == b.tag || policy == EqualClassPolicy::isomorphic)) {
        // Calabi-Yau-1 pair: Hom = C and, by duality, Ext^1 = C.
        t[base] = scale;
        t[base + 1] = scale;
    }
    return t;
}

ExtTable ext_total(const DObject& e1, const DObject& e2, EqualClassPolicy policy) {
    ExtTable total;
    for (const Atom& a : e1.atoms)
        for (const Atom& b : e2.atoms)
            for (const auto& [deg, dim] : ext_dims(a, b, policy)) total[deg] += dim;
    return total;
}

BigInt eps_plus(const DObject& e1, const DObject& e2, EqualClassPolicy policy) {
    ExtTable t = ext_total(e1, e2, policy);
    if (t.empty()) throw NoNonzeroHom();
    return -t.begin()->first;
}

BigInt eps_minus(const DObject& e1, const DObject& e2, EqualClassPolicy policy) {
    ExtTable t = ext_total(e1, e2, policy);
    if (t.empty()) throw NoNonzeroHom();
    return -t.rbegin()->first;
}

}  // namespace taulab
