#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qwa/homs.hpp"

namespace qwa {

// Automorphism of a single tensor factor k[h^{+-1}](sigma, h^d - 1):
//   h -> gamma h^{(-1)^tau},  x -> u x^{1-tau} y^tau,  y -> x^tau y^{1-tau} u'
// with u u' = (-h^{-d})^tau and gamma^d = (q^{-d})^tau; u, u' are monomials.
struct SingleFactorAut {
    int tau = 0;
    Scalar gamma;
    LaurentPoly u, uprime;  // univariate monomials
};

struct PermGen {
    std::vector<int> w;  // permutation of the factors
};

struct FactorGen {
    int factor = 0;
    SingleFactorAut aut;
};

// A unit of the algebra per factor, as (scalar, h-exponent vector) monomials.
struct UnitMono {
    Scalar coeff;
    ExpVec hexp;
};

// x_i -> u_i x_i, y_i -> y_i u_i^{-1}, h_i fixed; requires the compatibility
// u_i sigma_i(u_l) = u_l sigma_l(u_i) for i != l.
struct UnitTwistGen {
    std::vector<UnitMono> units;
};

using TameGenerator = std::variant<PermGen, FactorGen, UnitTwistGen>;

// The bundle of a single generator acting on the given algebra. Throws
// InvariantViolation when the generator data violates its family invariants
// (incompatible unit vector, broken single-factor constraints, or a
// permutation that is not an automorphism of the configuration).
HomData generator_to_hom(const TameGenerator& gen, const AlgebraPtr& alg);

// Left-to-right composition: the first list element is applied first.
// The empty chain is the identity.
HomData compose_chain(const std::vector<TameGenerator>& gens, const AlgebraPtr& alg);

// Constructive decomposition of a valid automorphism-form endomorphism with
// q_i all equal into at most n + 2 generators, emitted in the canonical order
// [Perm, Factor(ascending), UnitTwist] with identity generators dropped;
// compose_chain(decompose(psi)) = psi exactly.
std::vector<TameGenerator> decompose(const HomData& data);

// Recognizes bundles that are a single generator (used to express inverses
// within the same family).
std::optional<TameGenerator> as_single_generator(const HomData& data);

// Inverse of a generator, expressed as a generator of the same family.
TameGenerator invert_generator(const TameGenerator& gen, const AlgebraPtr& alg);

}  // namespace qwa
