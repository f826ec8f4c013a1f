#include "taulab/cover.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cassert>
#include <cmath>
#include <sstream>

namespace taulab {

LiftedRay::LiftedRay(BigInt dx, BigInt dy, BigInt sheet)
    : ux_(std::move(dx)), uy_(std::move(dy)), m_(std::move(sheet)) {
    if (ux_ == 0 && uy_ == 0) throw std::invalid_argument("LiftedRay: zero direction");
    BigInt g = boost::multiprecision::gcd(abs(ux_), abs(uy_));
    if (g > 1) {
        ux_ /= g;
        uy_ /= g;
    }
}

LiftedRay LiftedRay::translated(const BigInt& k) const {
    LiftedRay r = *this;
    r.m_ += floor_div(k, 2);
    if (k % 2 != 0) r = apply_letter(Letter::shift_up, r);
    return r;
}

double LiftedRay::approx_phase() const {
    double a = std::atan2(static_cast<double>(uy_), static_cast<double>(ux_)) / M_PI;
    // atan2 returns -pi for (-x, -0.0) style corners only with signed zero;
    // integer inputs give arg in (-pi, pi], so a is already in (-1, 1].
    return a + 2.0 * static_cast<double>(m_);
}

int alpha_compare(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by) {
    const bool ua = ay > 0 || (ay == 0 && ax < 0);
    const bool ub = by > 0 || (by == 0 && bx < 0);
    if (ua != ub) return ua ? 1 : -1;  // (0,1] beats (-1,0]
    // Same half-open half-plane: angles differ by less than pi, so the sign
    // of the cross product decides.
    BigInt cross = ax * by - ay * bx;
    return cross > 0 ? -1 : (cross < 0 ? 1 : 0);
}

std::strong_ordering LiftedRay::operator<=>(const LiftedRay& o) const {
    // x = alpha(u) + 2m with alpha spanning an interval of width exactly 2,
    // so the order is lexicographic on (m, alpha).
    if (m_ != o.m_) return m_ < o.m_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = alpha_compare(ux_, uy_, o.ux_, o.uy_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string LiftedRay::str() const {
    std::ostringstream os;
    os << "(u=(" << ux_ << "," << uy_ << "), m=" << m_ << ")";
    return os.str();
}

LiftedRay ray_from_sheaf_class(const ChargeVector& c) {
    if (!c.in_sheaf_cone()) throw std::invalid_argument("ray_from_sheaf_class: class outside the sheaf cone");
    return LiftedRay(-c.deg, c.rank, 0);
}

Letter inverse_letter(Letter g) {
    switch (g) {
        case Letter::mukai: return Letter::mukai_inv;
        case Letter::mukai_inv: return Letter::mukai;
        case Letter::twist: return Letter::twist_inv;
        case Letter::twist_inv: return Letter::twist;
        case Letter::shift_up: return Letter::shift_down;
        case Letter::shift_down: return Letter::shift_up;
    }
    throw std::logic_error("inverse_letter: bad letter");
}

FunctorWord concat(const FunctorWord& first, const FunctorWord& then) {
    FunctorWord w = first;
    w.letters.insert(w.letters.end(), then.letters.begin(), then.letters.end());
    return w;
}

FunctorWord inverse_word(const FunctorWord& w) {
    FunctorWord inv;
    inv.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) inv.letters.push_back(inverse_letter(*it));
    return inv;
}

FunctorWord word_pow(const FunctorWord& w, long long k) {
    const FunctorWord base = k >= 0 ? w : inverse_word(w);
    FunctorWord out;
    for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) out = concat(out, base);
    return out;
}

Sl2zMatrix::Sl2zMatrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw std::invalid_argument("Sl2zMatrix: determinant must be 1");
}

Sl2zMatrix Sl2zMatrix::operator*(const Sl2zMatrix& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

Sl2zMatrix letter_matrix(Letter g) {
    switch (g) {
        case Letter::mukai: return {0, 1, -1, 0};       // quarter turn, x -> x - 1/2
        case Letter::mukai_inv: return {0, -1, 1, 0};
        case Letter::twist: return {1, -1, 0, 1};       // (r,d) -> (r, d+r) on classes
        case Letter::twist_inv: return {1, 1, 0, 1};
        case Letter::shift_up: return {-1, 0, 0, -1};   // antipode
        case Letter::shift_down: return {-1, 0, 0, -1};
    }
    throw std::logic_error("letter_matrix: bad letter");
}

Sl2zMatrix word_matrix(const FunctorWord& w) {
    Sl2zMatrix m = Sl2zMatrix::identity();
    for (Letter g : w.letters) m = letter_matrix(g) * m;  // later letters act on the left
    return m;
}

Classification classify(const Sl2zMatrix& m) {
    const Sl2zMatrix id = Sl2zMatrix::identity();
    if (m == id) return {MatrixKind::plus_identity, 1};
    if (m.a == -1 && m.b == 0 && m.c == 0 && m.d == -1) return {MatrixKind::minus_identity, 2};
    BigInt tr = m.trace();
    if (tr == 0) return {MatrixKind::elliptic, 4};
    if (tr == 1) return {MatrixKind::elliptic, 6};
    if (tr == -1) return {MatrixKind::elliptic, 3};
    if (tr == 2 || tr == -2) return {MatrixKind::parabolic, 0};
    return {MatrixKind::hyperbolic, 0};
}

const char* matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::plus_identity: return "plus_identity";
        case MatrixKind::minus_identity: return "minus_identity";
        case MatrixKind::elliptic: return "elliptic";
        case MatrixKind::parabolic: return "parabolic";
        case MatrixKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

namespace {

// Sheet fixup for a letter that moves every phase by strictly less than 1:
// the new direction determines the phase up to 2Z, and the |delta| < 1 bound
// pins the sheet.  delta = alpha(u') - alpha(u) lies in (-2, 2); it exceeds
// +1 only when alpha(u) <= 0 and alpha(u') > alpha(-u), and drops below -1
// symmetrically.
LiftedRay resolve_sheet(const LiftedRay& x, BigInt nx, BigInt ny) {
    const BigInt &ox = x.dir_x(), &oy = x.dir_y();
    assert(!(nx == -ox && ny == -oy) && "letter displacement hit +-1");
    int c = alpha_compare(nx, ny, ox, oy);
    BigInt m = x.sheet();
    if (c > 0 && !x.upper() && alpha_compare(nx, ny, -ox, -oy) > 0) m -= 1;
    if (c < 0 && x.upper() && alpha_compare(nx, ny, -ox, -oy) < 0) m += 1;
    return LiftedRay(std::move(nx), std::move(ny), std::move(m));
}

}  // namespace

LiftedRay apply_letter(Letter g, const LiftedRay& x) {
    const BigInt &ux = x.dir_x(), &uy = x.dir_y();
    switch (g) {
        case Letter::shift_up:
            return LiftedRay(-ux, -uy, x.sheet() + (x.upper() ? 1 : 0));
        case Letter::shift_down:
            // upper(-u) = !upper(u), exactly one of u, -u is in (0, 1]
            return LiftedRay(-ux, -uy, x.sheet() - (x.upper() ? 0 : 1));
        case Letter::mukai:
            return resolve_sheet(x, uy, -ux);
        case Letter::mukai_inv:
            return resolve_sheet(x, -uy, ux);
        case Letter::twist:
            return resolve_sheet(x, ux - uy, uy);
        case Letter::twist_inv:
            return resolve_sheet(x, ux + uy, uy);
    }
    throw std::logic_error("apply_letter: bad letter");
}

LiftedRay apply_word(const FunctorWord& w, const LiftedRay& x) {
    LiftedRay y = x;
    for (Letter g : w.letters) y = apply_letter(g, y);
    return y;
}

BigInt integer_displacement(const LiftedRay& from, const LiftedRay& to) {
    if (to.dir_x() == from.dir_x() && to.dir_y() == from.dir_y())
        return 2 * (to.sheet() - from.sheet());
    if (to.dir_x() == -from.dir_x() && to.dir_y() == -from.dir_y()) {
        // alpha flips by -1 from the upper range (0,1] and by +1 from (-1,0]
        return 2 * (to.sheet() - from.sheet()) + (from.upper() ? -1 : 1);
    }
    throw std::invalid_argument("integer_displacement: rays are not collinear");
}

BigInt heart_degree(const LiftedRay& x, const LiftedRay& cut) {
    // phase(x) - phase(cut) differs from 2*(m_x - m_cut) by less than 2 in
    // absolute value, so four candidates suffice.
    BigInt base = 2 * (x.sheet() - cut.sheet());
    for (BigInt k = base - 2; k <= base + 1; ++k) {
        if (cut.translated(k) < x && x <= cut.translated(k + 1)) return k;
    }
    throw std::logic_error("heart_degree: no candidate matched");
}

}  // namespace taulab
