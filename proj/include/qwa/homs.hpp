#pragma once

#include <string>
#include <vector>

#include "qwa/algebra.hpp"

namespace qwa {

// Parameter bundle determining a homomorphism from an r-factor algebra (the
// source, with tilded generators) to an n-factor algebra (the target):
// an injective map w, sign bits tau, exponents m, units gamma and b, an
// integer twist matrix t, and univariate Laurent coefficients p, p'.
// The generator images are
//   h~_i  -> gamma_i h_{w(i)}^{m_i}
//   x~_i  -> p_i(h_{w(i)}) b_i h^{t_i} x_{w(i)}^{1-tau_i} y_{w(i)}^{tau_i}
//   y~_i  -> x_{w(i)}^{tau_i} y_{w(i)}^{1-tau_i} p'_i(h_{w(i)}) b_i^{-1} h^{-t_i}.
struct HomData {
    AlgebraPtr source;  // r factors
    AlgebraPtr target;  // n factors
    std::vector<int> w;    // size r, injective into [0, n)
    std::vector<int> tau;  // 0 or 1
    std::vector<int> m;    // nonzero
    std::vector<Scalar> gamma;  // nonzero
    std::vector<Scalar> b;      // nonzero
    std::vector<std::vector<int>> t;  // r x n
    std::vector<LaurentPoly> p;       // univariate, nonzero
    std::vector<LaurentPoly> pprime;  // univariate, nonzero
};

enum class HomEquation { E1, E2, E3, E4 };

std::string equation_name(HomEquation eq);

struct EquationFailure {
    HomEquation equation;
    int i;       // offending source index (0-based)
    int l = -1;  // second index for E2

    friend bool operator==(const EquationFailure&, const EquationFailure&) = default;
};

struct ValidationReport {
    std::vector<std::string> structural;    // empty when well-formed
    std::vector<EquationFailure> failures;  // empty when all equations hold

    bool ok() const { return structural.empty() && failures.empty(); }
    bool fails(HomEquation eq) const;
    std::string to_string() const;
};

// Checks well-formedness and the four validity equations:
//   E1: q_{w(i)}^{(-1)^{tau_i} m_i} = q~_i
//   E2: q_{w(i)}^{t_{l,w(i)}(1-2 tau_i)} q_{w(l)}^{-t_{i,w(l)}(1-2 tau_l)} = 1
//   E3: p_i p'_i a_d(q_{w(i)}^{1-tau_i} h) = a_d(q~_i gamma_i h^{m_i})
//   E4: gamma_i^d = q~_i^{-tau_i d}
// Structural problems are reported separately from semantic failures.
ValidationReport validate(const HomData& data);

struct GeneratorImages {
    std::vector<GwaElement> h, h_inv, x, y;
};

// Builds the generator images; requires validate(data).ok().
GeneratorImages build_images(const HomData& data);
// Same construction without semantic validation (structural checks only).
// Used to test the converse direction of the classification.
GeneratorImages build_images_unchecked(const HomData& data);

// Ring-homomorphism extension of the generator images to a whole element.
GwaElement apply_hom(const HomData& data, const GwaElement& a);

// True iff the images satisfy every defining relation of the source algebra
// (exact element identities in the target). Works on structurally well-formed
// data whether or not validate passes.
bool check_relations(const HomData& data);

// Bundle of g after f (apply f first); both must be valid and composable.
HomData compose(const HomData& f, const HomData& g);

// Recovers a canonical bundle from classified-shape images: b_i = 1,
// t_{i,w(i)} = 0, all axis content folded into p_i. Throws NotClassifiedForm
// when the images do not have the classified shape.
HomData extract_hom_data(const GeneratorImages& images, const AlgebraPtr& source,
                         const AlgebraPtr& target);

HomData identity_hom(const AlgebraPtr& alg);
// extract . build: the canonical representative of a valid bundle.
HomData canonicalize(const HomData& data);
// Equality of the underlying homomorphisms (canonical forms compared).
bool hom_equal(const HomData& a, const HomData& b);
bool is_identity(const HomData& data);

}  // namespace qwa
