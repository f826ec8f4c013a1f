#pragma once

// Cross-checks independent of the code paths under test: a floating-point
// angle oracle for rays with small coordinates, an orbit-return translation
// oracle that never looks at the matrix classification, and a tiny word/ray
// generator separate from the library sampler.

#include "taulab/dynamics.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

namespace taulab::testing {

// Translation number by direct iteration: once the orbit direction of the
// skyscraper ray returns to +-u0 at step n, the n-th power is a rigid
// translation and tau is its exact displacement over n.
inline std::optional<Rational> orbit_return_tau(const FunctorWord& w, int cap = 24) {
    const LiftedRay x0 = skyscraper_ray();
    LiftedRay y = x0;
    for (int n = 1; n <= cap; ++n) {
        y = apply_word(w, y);
        const bool same = y.dir_x() == x0.dir_x() && y.dir_y() == x0.dir_y();
        const bool anti = y.dir_x() == -x0.dir_x() && y.dir_y() == -x0.dir_y();
        if (same || anti) return Rational(integer_displacement(x0, y), BigInt(n));
    }
    return std::nullopt;
}

// Small deterministic generator for property tests.
struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed * 2862933555777941757ull + 3037000493ull) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline FunctorWord random_word(TestRng& rng, int max_len) {
    FunctorWord w;
    const std::uint64_t len = 1 + rng.below(static_cast<std::uint64_t>(max_len));
    for (std::uint64_t i = 0; i < len; ++i)
        w.letters.push_back(all_letters[rng.below(all_letters.size())]);
    return w;
}

inline LiftedRay random_ray(TestRng& rng) {
    for (;;) {
        const auto x = static_cast<long long>(rng.below(21)) - 10;
        const auto y = static_cast<long long>(rng.below(21)) - 10;
        if (x == 0 && y == 0) continue;
        const auto m = static_cast<long long>(rng.below(9)) - 4;
        return LiftedRay(x, y, m);
    }
}

// Coordinates small enough that approx_phase is trustworthy to ~1e-12.
inline bool float_safe(const LiftedRay& r) {
    const BigInt bound = BigInt(1) << 50;
    return abs(r.dir_x()) < bound && abs(r.dir_y()) < bound && abs(r.sheet()) < bound;
}

}  // namespace taulab::testing
