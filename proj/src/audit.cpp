#include "taulab/audit.hpp"
#include "taulab/word_text.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace taulab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform-enough draw in [0, bound): an extra 64-bit limb keeps the modulo
// bias far below anything a deterministic audit could notice.
BigInt draw_mod(std::mt19937_64& rng, const BigInt& bound) {
    const unsigned limbs = boost::multiprecision::msb(bound) / 64 + 2;
    BigInt r = 0;
    for (unsigned i = 0; i < limbs; ++i) r = (r << 64) | BigInt(rng());
    return r % bound;
}

}  // namespace

FunctorWord word_at(const WordSampler& s, std::uint64_t index) {
    if (s.max_len < 1) throw std::invalid_argument("WordSampler: max_len must be positive");
    BigInt denom = 1;
    for (const Rational& w : s.weights) {
        if (w < 0) throw std::invalid_argument("WordSampler: negative letter weight");
        denom = boost::multiprecision::lcm(denom, BigInt(boost::multiprecision::denominator(w)));
    }
    std::array<BigInt, 6> scaled;
    BigInt total = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        scaled[i] = BigInt(boost::multiprecision::numerator(s.weights[i])) *
                    (denom / BigInt(boost::multiprecision::denominator(s.weights[i])));
        total += scaled[i];
    }
    if (total == 0) throw std::invalid_argument("WordSampler: all letter weights are zero");

    // The raw engine output is pinned by the standard, so the stream is
    // identical across platforms; library distributions are not and are
    // deliberately avoided.
    std::mt19937_64 rng(splitmix64(s.seed) ^ splitmix64(index + 0x51ed2701));
    const auto len = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(s.max_len));
    FunctorWord w;
    w.letters.reserve(static_cast<std::size_t>(len));
    for (long long i = 0; i < len; ++i) {
        BigInt r = draw_mod(rng, total);
        for (std::size_t j = 0; j < 6; ++j) {
            if (r < scaled[j]) {
                w.letters.push_back(all_letters[j]);
                break;
            }
            r -= scaled[j];
        }
    }
    return w;
}

FunctorWord sample_word(WordSampler& s) { return word_at(s, s.next_index++); }

Rational defect(const FunctorWord& w1, const FunctorWord& w2) {
    return abs(tau_exact(concat(w1, w2)).value - tau_exact(w1).value - tau_exact(w2).value);
}

BigInt tilde_defect(const FunctorWord& w1, const FunctorWord& w2, const DObject& g) {
    return abs(tilde_tau(concat(w1, w2), g) - tilde_tau(w1, g) - tilde_tau(w2, g));
}

bool InequalityCheck::pass() const {
    return margin_low >= 0 && margin_high >= 0 && eps_gap >= 0 && eps_gap <= 4 &&
           heart_axiom_ok && enclosure_ok;
}

namespace {

// Spot check of the vanishing axiom: unshift e into heart pieces, bump the
// first generator atom up by one, and require every Ext degree against the
// pieces to be >= 1 (no Homs downward).
bool heart_axiom_spot(const DObject& e, const DObject& g, EqualClassPolicy policy) {
    const HeartCut cut = HeartCut::coh();
    const Atom bumped(g.atoms.front().ray.translated(1), g.atoms.front().tag, 1);
    for (const auto& [k, piece] : heart_filtration(cut, e)) {
        for (const Atom& b : piece.atoms) {
            const ExtTable t = ext_dims(bumped, b, policy);
            if (!t.empty() && t.begin()->first < 1) return false;
        }
    }
    return true;
}

}  // namespace

InequalityResult inequality_suite(const FunctorWord& w, const DObject& g, long long max_n,
                                  EqualClassPolicy policy) {
    if (max_n < 1) throw std::invalid_argument("inequality_suite: max_n must be at least 1");
    if (g.is_zero()) throw std::invalid_argument("inequality_suite: zero generator");
    const HeartCut cut = HeartCut::coh();
    const BigInt phi_minus_g = phi_minus(cut, g);
    const BigInt phi_plus_g1 = phi_plus(cut, g) + 1;
    const Rational tau = tau_exact(w).value;

    InequalityResult result;
    result.checks.reserve(static_cast<std::size_t>(max_n));
    DObject e = g;
    for (long long n = 1; n <= max_n; ++n) {
        e = apply_word_obj(w, e);
        const BigInt ep = eps_plus(g, e, policy);
        const BigInt em = eps_minus(g, e, policy);
        InequalityCheck c;
        c.n = n;
        c.margin_low = phi_plus(cut, e) - ep - phi_minus_g;
        c.margin_high = phi_plus_g1 - phi_minus(cut, e) + em;
        c.eps_gap = ep - em;
        c.heart_axiom_ok = heart_axiom_spot(e, g, policy);
        const Rational nt = tau * n;
        c.enclosure_ok = Rational(ep - 4) <= nt && nt <= Rational(ep + 4) &&
                         Rational(em - 4) <= nt && nt <= Rational(em + 4);
        if (!c.pass()) ++result.violations;
        result.checks.push_back(std::move(c));
    }
    return result;
}

PairOutcome audit_one(const ProductWord& pw1, const ProductWord& pw2, const ProductObject& g,
                      long long ineq_max_n, EqualClassPolicy policy) {
    PairOutcome out;
    const ProductWord both = product_concat(pw1, pw2);
    out.tau_defect = abs(product_tau(both, TauMethod::exact).value -
                         product_tau(pw1, TauMethod::exact).value -
                         product_tau(pw2, TauMethod::exact).value);
    out.tilde_defect_value =
        abs(product_tilde_tau(both, g) - product_tilde_tau(pw1, g) - product_tilde_tau(pw2, g));
    out.max_spread = std::max({product_spread(pw1).spread, product_spread(pw2).spread,
                               product_spread(both).spread});
    for (const ProductWord* pw : {&pw1, &pw2})
        for (std::size_t i = 0; i < pw->factors.size(); ++i)
            out.inequality_violations +=
                inequality_suite(pw->factors[i], g[i], ineq_max_n, policy).violations;
    return out;
}

AuditReport audit_run(const WordSampler& s, long long pairs, int dim, int threads,
                      EqualClassPolicy policy, long long ineq_max_n) {
    if (pairs < 1) throw std::invalid_argument("audit_run: pairs must be at least 1");
    if (dim < 1) throw std::invalid_argument("audit_run: dimension must be positive");
    threads = std::clamp(threads, 1, 256);
    const ProductObject g = product_generator(dim);

    std::vector<PairOutcome> outcomes(static_cast<std::size_t>(pairs));
    std::atomic<long long> cursor{0};
    auto worker = [&] {
        for (;;) {
            const long long p = cursor.fetch_add(1);
            if (p >= pairs) return;
            try {
                const std::uint64_t base =
                    static_cast<std::uint64_t>(p) * 2 * static_cast<std::uint64_t>(dim);
                std::vector<FunctorWord> f1, f2;
                for (int i = 0; i < dim; ++i) f1.push_back(word_at(s, base + static_cast<std::uint64_t>(i)));
                for (int i = 0; i < dim; ++i)
                    f2.push_back(word_at(s, base + static_cast<std::uint64_t>(dim + i)));
                outcomes[static_cast<std::size_t>(p)] =
                    audit_one(ProductWord(std::move(f1)), ProductWord(std::move(f2)), g, ineq_max_n, policy);
            } catch (const std::exception& ex) {
                outcomes[static_cast<std::size_t>(p)].error = ex.what();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    AuditReport r;
    r.seed = s.seed;
    r.max_len = s.max_len;
    r.pairs_tested = pairs;
    r.dim = dim;
    r.ineq_max_n = ineq_max_n;
    const BigInt tilde_bound = 6 * BigInt(dim);
    const Rational tau_bound = 12 * BigInt(dim);
    const BigInt spread_bound = 3 * BigInt(dim);
    for (long long p = 0; p < pairs; ++p) {
        const PairOutcome& o = outcomes[static_cast<std::size_t>(p)];
        const auto idx = static_cast<std::uint64_t>(p);
        if (!o.error.empty()) {
            r.violations.push_back({idx, "exception", o.error});
            continue;
        }
        r.max_tau_defect = std::max(r.max_tau_defect, o.tau_defect);
        r.max_tilde_defect = std::max(r.max_tilde_defect, o.tilde_defect_value);
        r.max_spread = std::max(r.max_spread, o.max_spread);
        r.inequality_violations += o.inequality_violations;
        ++r.histogram[o.tau_defect];
        ++r.histogram_tilde[o.tilde_defect_value];
        if (o.tilde_defect_value > tilde_bound)
            r.violations.push_back({idx, "tilde_defect", to_string(o.tilde_defect_value)});
        if (o.tau_defect > tau_bound)
            r.violations.push_back({idx, "tau_defect", to_string(o.tau_defect)});
        if (o.max_spread > spread_bound)
            r.violations.push_back({idx, "spread", to_string(o.max_spread)});
        if (o.inequality_violations > 0)
            r.violations.push_back({idx, "inequality", std::to_string(o.inequality_violations)});
    }
    return r;
}

}  // namespace taulab
