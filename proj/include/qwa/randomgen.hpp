#pragma once

#include <cstdint>
#include <random>

#include "qwa/dixmier.hpp"
#include "qwa/homs.hpp"
#include "qwa/oracle.hpp"

namespace qwa {

// Deterministic random source for data generation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // uniform in [lo, hi], inclusive
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    int pick_nonzero(int bound) {
        int v = range(1, bound);
        return coin() ? v : -v;
    }
    bool coin() { return (next() & 1) != 0; }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

struct AlgebraOptions {
    int min_n = 1, max_n = 3;
    int min_d = 1, max_d = 3;
    bool root_mode = false;
    bool uniform_c = false;  // all q_i equal
};

AlgebraPtr random_algebra(Rng& rng, const AlgebraOptions& opts);

Scalar random_unit_scalar(Rng& rng, const ScalarFieldPtr& field);

struct BundleOptions {
    int max_abs_m = 2;
    bool allow_tau = true;
    bool endo = false;  // source config = target config
};

// A bundle passing validate, built by solving the coefficient equation for p'
// after choosing everything else.
HomData random_valid_bundle(Rng& rng, const AlgebraPtr& target,
                            const BundleOptions& opts = {});

// A valid endomorphism bundle of automorphism form (w bijective, m = +-1,
// monomial coefficients).
HomData random_automorphism_bundle(Rng& rng, const AlgebraPtr& target);

// A bundle whose validation fails at the given equation. For E1, E2 and E3
// the reported failure set is exactly that single equation; an E4 violation
// necessarily drags E3 along (E1 and E3 force E4 over a field), so there the
// guarantee is that E4 is among the failures.
HomData random_violation(Rng& rng, const AlgebraPtr& target, HomEquation eq);

GwaElement random_element(Rng& rng, const AlgebraPtr& alg, int max_terms,
                          int max_exp, int max_grade);

WordSum random_word(Rng& rng, const AlgebraPtr& alg, int length);

}  // namespace qwa
