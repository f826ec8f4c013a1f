#pragma once

// Shifting numbers three ways (exact translation number, heart-degree limit,
// ext-degree limit), entropy lower bounds, image spread, and the d-fold
// product model where all degree data adds across factors.

#include "taulab/model.hpp"

#include <optional>
#include <vector>

namespace taulab {

enum class TauMethod { exact, heart_limit, ext_limit };

const char* tau_method_name(TauMethod m);

struct TauResult {
    Rational value;
    TauMethod method = TauMethod::exact;
    // Exact method: the matrix classification the algorithm dispatched on.
    std::optional<Classification> certificate;
    // Certified interval containing the exact value; degenerate for exact.
    Rational enclosure_lo;
    Rational enclosure_hi;
    // Limit methods: last n evaluated, and the partial ratios for 1..n.
    long long n = 0;
    std::vector<Rational> ratios;
};

struct EntropyBound {
    Rational t;
    long long n = 1;
    Rational lower_bound;
};

struct SpreadReport {
    BigInt n_f;         // minimal heart degree over images of sheaf atoms
    BigInt max_degree;  // maximal such degree
    BigInt spread;      // max_degree - n_f
    int dim = 1;
};

// External product F_1 x ... x F_d, one word per factor.
struct ProductWord {
    std::vector<FunctorWord> factors;

    explicit ProductWord(std::vector<FunctorWord> fs);
    int dim() const { return static_cast<int>(factors.size()); }
};

// Product object tracked factor-wise.
using ProductObject = std::vector<DObject>;

// Exact translation number of the lifted circle map of w, dispatching on the
// charge matrix: finite order gives an integer orbit displacement divided by
// the order, parabolic words are evaluated at their rational fixed ray, and
// hyperbolic words pin the unique integer of the forced parity inside the
// one-step Poincare interval.
TauResult tau_exact(const FunctorWord& w);

// Partial ratios phi_plus(cut, w^n G)/n for n = 1..max_n, with the certified
// enclosure [(phi_N - 2)/N, (phi_N + 2)/N].  The stored value is the final
// ratio; the exact number is only promised to lie in the enclosure.
TauResult tau_heart_limit(const FunctorWord& w, const HeartCut& cut, const DObject& g, long long max_n);

enum class ExtSign { plus, minus };

// Same shape with eps_{sign}(G, w^n G)/n and enclosure width 4/N.
TauResult tau_ext_limit(const FunctorWord& w, const DObject& g, long long max_n, ExtSign sign,
                        EqualClassPolicy policy = EqualClassPolicy::generic);

// Integer-valued companion of tau: phi_plus at cut 0 of w applied to g.
BigInt tilde_tau(const FunctorWord& w, const DObject& g);

// Exact lower bound t*(phi^+(F^n G) - phi^+(G))/n for t > 0 (phi^- for
// t < 0) at cut 0.  Rejects t = 0.
EntropyBound entropy_lower_bound(const FunctorWord& w, const DObject& g, const Rational& t, long long n);

// Diagnostic estimator (1/n) log sum_k dim Ext^k(G, F^n G) e^{-kt}.  The one
// non-exact number in the library; output paths label it approximate.
double ext_growth_entropy(const FunctorWord& w, const DObject& g, const Rational& t, long long n,
                          EqualClassPolicy policy = EqualClassPolicy::generic);

// Extremal heart degrees of w(E) over every stable sheaf E, read exactly
// from the image of the phase interval (0, 1] (an interval of length 1).
SpreadReport spread_report(const FunctorWord& w);

// Factor-wise composition (same dimension required).
ProductWord product_concat(const ProductWord& first, const ProductWord& then);

ProductObject product_generator(int dim, const BigInt& h = 3);
ProductObject product_apply(const ProductWord& pw, const ProductObject& e);
ProductObject product_shifted(const ProductObject& e, const BigInt& k);

// Heart degrees add across factors.
BigInt product_phi_plus(const HeartCut& cut, const ProductObject& e);
BigInt product_phi_minus(const HeartCut& cut, const ProductObject& e);

// Ext table of a product pair is the convolution of the factor tables.
ExtTable product_ext_total(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy);
BigInt product_eps_plus(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy);
BigInt product_eps_minus(const ProductObject& e1, const ProductObject& e2, EqualClassPolicy policy);

BigInt product_tilde_tau(const ProductWord& pw, const ProductObject& g);

// Factor-wise sums of the per-factor reports; spread <= 3d is the bound the
// audit asserts.
SpreadReport product_spread(const ProductWord& pw);

// Exact method: sum of factor translation numbers.  heart_limit: ratios of
// product_phi_plus over (pw)^n applied to the product generator, enclosure
// width 2d/N.  ext_limit: analogous with product eps and width 4d/N.
TauResult product_tau(const ProductWord& pw, TauMethod method, long long max_n = 32,
                      const BigInt& h = 3, EqualClassPolicy policy = EqualClassPolicy::generic);

}  // namespace taulab
