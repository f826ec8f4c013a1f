#include "taulab/dynamics.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace taulab {

const char* tau_method_name(TauMethod m) {
    switch (m) {
        case TauMethod::exact: return "exact";
        case TauMethod::heart_limit: return "heart_limit";
        case TauMethod::ext_limit: return "ext_limit";
    }
    return "?";
}

namespace {

TauResult exact_point(Rational v, std::optional<Classification> c) {
    TauResult r;
    r.value = std::move(v);
    r.method = TauMethod::exact;
    r.certificate = c;
    r.enclosure_lo = r.value;
    r.enclosure_hi = r.value;
    return r;
}

// Direction fixed by a trace-2 matrix n != identity: a nonzero row of
// n - identity annihilates it (the difference has rank 1).
LiftedRay parabolic_fixed_ray(const Sl2zMatrix& n) {
    if (n.b != 0 || n.a != 1) return LiftedRay(n.b, 1 - n.a, 0);
    return LiftedRay(1 - n.d, n.c, 0);
}

double log_big(const BigInt& v) {
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits < 900) return std::log(static_cast<double>(v));
    const unsigned drop = bits - 64;
    return std::log(static_cast<double>(v >> drop)) + drop * std::log(2.0);
}

}  // namespace

TauResult tau_exact(const FunctorWord& w) {
    const Sl2zMatrix m = word_matrix(w);
    const Classification cls = classify(m);
    const LiftedRay x0 = skyscraper_ray();
    switch (cls.kind) {
        case MatrixKind::plus_identity:
        case MatrixKind::minus_identity:
            // The lift is a rigid translation; one evaluation reads it off.
            return exact_point(Rational(integer_displacement(x0, apply_word(w, x0))), cls);
        case MatrixKind::elliptic: {
            // The q-th power covers the identity, so it is an integer
            // translation c and tau = c/q.
            LiftedRay y = x0;
            for (int i = 0; i < cls.order; ++i) y = apply_word(w, y);
            return exact_point(Rational(integer_displacement(x0, y), BigInt(cls.order)), cls);
        }
        case MatrixKind::parabolic: {
            const Sl2zMatrix n = m.trace() == 2 ? m : Sl2zMatrix(-m.a, -m.b, -m.c, -m.d);
            const LiftedRay xs = parabolic_fixed_ray(n);
            return exact_point(Rational(integer_displacement(xs, apply_word(w, xs))), cls);
        }
        case MatrixKind::hyperbolic: {
            // tau is an integer whose parity matches the eigenvalue sign
            // (positive eigenvalues fix a direction: even displacement;
            // negative ones reverse it: odd).  One step at x0 confines tau
            // to the open interval (delta - 1, delta + 1), which holds at
            // most one integer of a fixed parity; membership is the pair of
            // exact comparisons below.
            const LiftedRay y = apply_word(w, x0);
            const bool even = m.trace() > 2;
            const auto len = static_cast<long long>(w.size());
            for (BigInt c = -(len + 1); c <= len + 1; ++c) {
                if ((c % 2 == 0) != even) continue;
                if (x0.translated(c - 1) < y && y < x0.translated(c + 1))
                    return exact_point(Rational(c), cls);
            }
            throw std::logic_error("tau_exact: no parity candidate in the Poincare interval");
        }
    }
    throw std::logic_error("tau_exact: unreachable");
}

TauResult tau_heart_limit(const FunctorWord& w, const HeartCut& cut, const DObject& g, long long max_n) {
    if (max_n < 1) throw std::invalid_argument("tau_heart_limit: max_n must be at least 1");
    if (g.is_zero()) throw std::invalid_argument("tau_heart_limit: zero generator");
    TauResult r;
    r.method = TauMethod::heart_limit;
    r.n = max_n;
    r.ratios.reserve(static_cast<std::size_t>(max_n));
    DObject e = g;
    BigInt last = 0;
    for (long long n = 1; n <= max_n; ++n) {
        e = apply_word_obj(w, e);
        last = phi_plus(cut, e);
        r.ratios.emplace_back(last, BigInt(n));
    }
    r.value = r.ratios.back();
    r.enclosure_lo = Rational(last - 2, BigInt(max_n));
    r.enclosure_hi = Rational(last + 2, BigInt(max_n));
    return r;
}

TauResult tau_ext_limit(const FunctorWord& w, const DObject& g, long long max_n, ExtSign sign,
                        EqualClassPolicy policy) {
    if (max_n < 1) throw std::invalid_argument("tau_ext_limit: max_n must be at least 1");
    if (g.is_zero()) throw std::invalid_argument("tau_ext_limit: zero generator");
    TauResult r;
    r.method = TauMethod::ext_limit;
    r.n = max_n;
    r.ratios.reserve(static_cast<std::size_t>(max_n));
    DObject e = g;
    BigInt last = 0;
    for (long long n = 1; n <= max_n; ++n) {
        e = apply_word_obj(w, e);
        last = sign == ExtSign::plus ? eps_plus(g, e, policy) : eps_minus(g, e, policy);
        r.ratios.emplace_back(last, BigInt(n));
    }
    r.value = r.ratios.back();
    r.enclosure_lo = Rational(last - 4, BigInt(max_n));
    r.enclosure_hi = Rational(last + 4, BigInt(max_n));
    return r;
}

BigInt tilde_tau(const FunctorWord& w, const DObject& g) {
    return phi_plus(HeartCut::coh(), apply_word_obj(w, g));
}

EntropyBound entropy_lower_bound(const FunctorWord& w, const DObject& g, const Rational& t, long long n) {
    if (t == 0) throw std::invalid_argument("entropy_lower_bound: t must be nonzero");
    if (n < 1) throw std::invalid_argument("entropy_lower_bound: n must be at least 1");
    const HeartCut cut = HeartCut::coh();
    DObject e = g;
    for (long long i = 0; i < n; ++i) e = apply_word_obj(w, e);
    const BigInt growth =
        t > 0 ? phi_plus(cut, e) - phi_plus(cut, g) : phi_minus(cut, e) - phi_minus(cut, g);
    return EntropyBound{t, n, t * Rational(growth, BigInt(n))};
}

double ext_growth_entropy(const FunctorWord& w, const DObject& g, const Rational& t, long long n,
                          EqualClassPolicy policy) {
    if (n < 1) throw std::invalid_argument("ext_growth_entropy: n must be at least 1");
    DObject e = g;
    for (long long i = 0; i < n; ++i) e = apply_word_obj(w, e);
    const ExtTable table = ext_total(g, e, policy);
    if (table.empty()) return -std::numeric_limits<double>::infinity();
    const double td = static_cast<double>(t);
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    terms.reserve(table.size());
    for (const auto& [deg, dim] : table) {
        terms.push_back(log_big(dim) - static_cast<double>(deg) * td);
        peak = std::max(peak, terms.back());
    }
    double sum = 0.0;
    for (double term : terms) sum += std::exp(term - peak);
    return (peak + std::log(sum)) / static_cast<double>(n);
}

SpreadReport spread_report(const FunctorWord& w) {
    // Images of sheaf phases fill (y0, y0 + 1] where y0 is the image of
    // phase 0, so the realized heart degrees are floor(y0) and ceil(y0).
    const LiftedRay y0 = apply_word(w, phase_zero_ray());
    BigInt fl = 2 * y0.sheet();
    if (y0.dir_y() < 0)
        fl -= 1;
    else if (y0.dir_y() == 0 && y0.dir_x() < 0)
        fl += 1;
    const BigInt ce = y0.dir_y() == 0 ? fl : fl + 1;
    return SpreadReport{fl, ce, ce - fl, 1};
}

ProductWord::ProductWord(std::vector<FunctorWord> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw std::invalid_argument("ProductWord: needs at least one factor");
}

ProductWord product_concat(const ProductWord& first, const ProductWord& then) {
    if (first.dim() != then.dim())
        throw std::invalid_argument("product_concat: dimension mismatch");
    std::vector<FunctorWord> fs;
    fs.reserve(first.factors.size());
    for (std::size_t i = 0; i < first.factors.size(); ++i)
        fs.push_back(concat(first.factors[i], then.factors[i]));
    return ProductWord(std::move(fs));
}

ProductObject product_generator(int dim, const BigInt& h) {
    if (dim < 1) throw std::invalid_argument("product_generator: dimension must be positive");
    return ProductObject(static_cast<std::size_t>(dim), standard_generator(h));
}

ProductObject product_apply(const ProductWord& pw, const ProductObject& e) {
    if (static_cast<std::size_t>(pw.dim()) != e.size())
        throw std::invalid_argument("product_apply: dimension mismatch");
    ProductObject out;
    out.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back(apply_word_obj(pw.factors[i], e[i]));
    return out;
}

ProductObject product_shifted(const ProductObject& e, const BigInt& k) {
    // A global shift lands entirely in the first factor.
    if (e.empty()) throw std::invalid_argument("product_shifted: empty product");
    ProductObject out = e;
    out[0] = out[0].shifted(k);
    return out;
}

BigInt product_phi_plus(const HeartCut& cut, const ProductObject& e) {
    BigInt sum = 0;
    for (const DObject& f : e) sum += phi_plus(cut, f);
    return sum;
}

BigInt product_phi_minus(const HeartCut& cut, const ProductObject& e) {
    BigInt sum = 0;
    for (const DObject& f : e) sum += phi_minus(cut, f);
    return sum;
}

ExtTable product_ext_total(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy) {
    if (e1.size() != e2.size() || e1.empty())
        throw std::invalid_argument("product_ext_total: dimension mismatch");
    ExtTable acc = ext_total(e1[0], e2[0], policy);
    for (std::size_t i = 1; i < e1.size(); ++i) {
        ExtTable next;
        for (const auto& [da, va] : acc)
            for (const auto& [db, vb] : ext_total(e1[i], e2[i], policy)) next[da + db] += va * vb;
        acc = std::move(next);
    }
    return acc;
}

BigInt product_eps_plus(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy) {
    if (e1.size() != e2.size() || e1.empty())
        throw std::invalid_argument("product_eps_plus: dimension mismatch");
    BigInt sum = 0;
    for (std::size_t i = 0; i < e1.size(); ++i) sum += eps_plus(e1[i], e2[i], policy);
    return sum;
}

BigInt product_eps_minus(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy) {
    if (e1.size() != e2.size() || e1.empty())
        throw std::invalid_argument("product_eps_minus: dimension mismatch");
    BigInt sum = 0;
    for (std::size_t i = 0; i < e1.size(); ++i) sum += eps_minus(e1[i], e2[i], policy);
    return sum;
}

BigInt product_tilde_tau(const ProductWord& pw, const ProductObject& g) {
    return product_phi_plus(HeartCut::coh(), product_apply(pw, g));
}

SpreadReport product_spread(const ProductWord& pw) {
    SpreadReport total{0, 0, 0, pw.dim()};
    for (const FunctorWord& f : pw.factors) {
        const SpreadReport r = spread_report(f);
        total.n_f += r.n_f;
        total.max_degree += r.max_degree;
        total.spread += r.spread;
    }
    return total;
}

TauResult product_tau(const ProductWord& pw, TauMethod method, long long max_n, const BigInt& h,
                      EqualClassPolicy policy) {
    if (method == TauMethod::exact) {
        Rational sum = 0;
        for (const FunctorWord& f : pw.factors) sum += tau_exact(f).value;
        return exact_point(std::move(sum), std::nullopt);
    }
    if (max_n < 1) throw std::invalid_argument("product_tau: max_n must be at least 1");
    const ProductObject g = product_generator(pw.dim(), h);
    TauResult r;
    r.method = method;
    r.n = max_n;
    r.ratios.reserve(static_cast<std::size_t>(max_n));
    ProductObject e = g;
    BigInt last = 0;
    for (long long n = 1; n <= max_n; ++n) {
        e = product_apply(pw, e);
        last = method == TauMethod::heart_limit ? product_phi_plus(HeartCut::coh(), e)
                                                : product_eps_plus(g, e, policy);
        r.ratios.emplace_back(last, BigInt(n));
    }
    const BigInt width = BigInt(method == TauMethod::heart_limit ? 2 : 4) * pw.dim();
    r.value = r.ratios.back();
    r.enclosure_lo = Rational(last - width, BigInt(max_n));
    r.enclosure_hi = Rational(last + width, BigInt(max_n));
    return r;
}

}  // namespace taulab
