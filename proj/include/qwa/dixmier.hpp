#pragma once

#include <optional>

#include "qwa/homs.hpp"

namespace qwa {

// The composite units e_i = p_i b_i h^{t_i} and e'_i = p'_i b_i^{-1} h^{-t_i}
// of an endomorphism bundle, as (scalar, h-exponent) monomials. Requires p_i
// (resp. p'_i) to be a monomial.
std::pair<Scalar, ExpVec> composite_unit(const HomData& data, int i);
std::pair<Scalar, ExpVec> composite_unit_prime(const HomData& data, int i);

// True iff w is a bijection, every m_i is +-1, and p_i, p'_i are monomials.
// Requires validate(data).ok() and source = target.
bool is_automorphism_form(const HomData& data);

// Constructs the inverse bundle of a valid automorphism-form endomorphism:
//   phi(h_{w(i)}) = gamma_i^{-m_i} h_i^{m_i}
//   phi(x_{w(i)}) = phi(e_i)^{-(1-tau_i)} sigma_i^{-1}(phi(e'_i)^{-tau_i}) x_i^{1-tau_i} y_i^{tau_i}
//   phi(y_{w(i)}) = x_i^{tau_i} y_i^{1-tau_i} sigma_i^{-1}(phi(e_i)^{-tau_i}) phi(e'_i)^{-(1-tau_i)}
// returned in canonical form. Composition with the input is the identity on
// both sides.
HomData invert_hom(const HomData& data);

// Multiplicative order of q_i in root-of-unity mode (0 in transcendental mode).
long q_factor_order(const AlgebraPtr& alg, int factor);

// The non-invertible endomorphism at a root of unity: on the chosen factor,
// with t the order of q_i,
//   h -> h^{t+1},  x -> U(h) x,  y -> y,  U(h) = sum_{l=0}^{t} q_i^{ld} h^{dl},
// and the identity on every other factor. Requires root mode, t >= 2.
HomData root_counterexample(const AlgebraPtr& target, int factor);

// Exhaustive search for an inverse among classified bundles with |m| bounded.
// For each candidate (w, tau, m) the remaining parameters are forced by the
// requirement that the composite fixes the h's; surviving candidates are
// verified by exact two-sided composition. Returns the inverse if one exists
// in range.
std::optional<HomData> bounded_inverse_search(const HomData& data, int m_bound);

}  // namespace qwa
