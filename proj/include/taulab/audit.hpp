#pragma once

// Randomized verification harness.  Samples word pairs from a seeded stream,
// measures the additivity defects of tau and of its integer companion, the
// image spread, the per-n inequalities and enclosure checks, and merges
// everything into a report that is identical for every thread count.

#include "taulab/dynamics.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace taulab {

struct WordSampler {
    std::uint64_t seed = 0;
    int max_len = 16;
    // One weight per letter, in the order of all_letters.
    std::array<Rational, 6> weights = {1, 1, 1, 1, 1, 1};
    std::uint64_t next_index = 0;
};

// Word at a fixed stream position: a pure function of (config, index), so
// concurrent evaluation order cannot change any sampled word.
FunctorWord word_at(const WordSampler& s, std::uint64_t index);

// Next word of the sampler's own stream.
FunctorWord sample_word(WordSampler& s);

// |tau(w1 w2) - tau(w1) - tau(w2)| with exact tau.
Rational defect(const FunctorWord& w1, const FunctorWord& w2);

// Same shape for the integer companion at cut 0.
BigInt tilde_defect(const FunctorWord& w1, const FunctorWord& w2, const DObject& g);

struct InequalityCheck {
    long long n = 1;
    // phi_plus(F^n G) - eps_plus(G, F^n G) - phi_minus(G); must be >= 0.
    BigInt margin_low;
    // phi_plus(G[1]) - phi_minus(F^n G) + eps_minus(G, F^n G); must be >= 0.
    BigInt margin_high;
    BigInt eps_gap;  // eps_plus - eps_minus; must lie in [0, 4]
    bool heart_axiom_ok = false;
    // n * tau inside [eps - 4, eps + 4] for both eps signs.
    bool enclosure_ok = false;

    bool pass() const;
};

struct InequalityResult {
    std::vector<InequalityCheck> checks;
    long long violations = 0;

    bool pass() const { return violations == 0; }
};

InequalityResult inequality_suite(const FunctorWord& w, const DObject& g, long long max_n,
                                  EqualClassPolicy policy = EqualClassPolicy::generic);

struct PairOutcome {
    Rational tau_defect;
    BigInt tilde_defect_value;
    BigInt max_spread;
    long long inequality_violations = 0;
    std::string error;  // nonempty if evaluation threw
};

// Full evaluation of one (product) pair: defects of the pair, spreads of
// both words and their composition, inequality suites of every factor word.
PairOutcome audit_one(const ProductWord& pw1, const ProductWord& pw2, const ProductObject& g,
                      long long ineq_max_n, EqualClassPolicy policy);

struct AuditViolation {
    std::uint64_t pair_index = 0;
    std::string kind;
    std::string detail;
};

struct AuditReport {
    std::uint64_t seed = 0;
    int max_len = 16;
    long long pairs_tested = 0;
    int dim = 1;
    long long ineq_max_n = 16;
    Rational max_tau_defect;
    BigInt max_tilde_defect;
    BigInt max_spread;
    long long inequality_violations = 0;
    std::map<Rational, long long> histogram;      // tau defect value -> count
    std::map<BigInt, long long> histogram_tilde;  // integer defect -> count
    std::vector<AuditViolation> violations;

    bool pass() const { return violations.empty(); }
};

// Asserted bounds, all linear in the dimension: the integer defect at 6d,
// the tau defect at 12d (homogenization at most doubles it), spread at 3d.
AuditReport audit_run(const WordSampler& s, long long pairs, int dim, int threads = 1,
                      EqualClassPolicy policy = EqualClassPolicy::generic, long long ineq_max_n = 16);

}  // namespace taulab
