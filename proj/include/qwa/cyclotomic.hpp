#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "qwa/errors.hpp"

namespace qwa {

using Rational = mpq_class;

// Coefficients of the L-th cyclotomic polynomial, ascending degree, monic.
// Computed exactly: x^L - 1 divided by the product of all proper divisors'
// cyclotomic polynomials.
std::vector<Rational> cyclotomic_polynomial(int L);

class CyclotomicField;
using CycloFieldPtr = std::shared_ptr<const CyclotomicField>;

// The number field Q(zeta_L), represented as Q[x] modulo the L-th cyclotomic
// polynomial. Immutable; shared between all elements of the field.
class CyclotomicField {
public:
    static CycloFieldPtr make(int L);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    explicit CyclotomicField(int L);

    int order_;
    std::vector<Rational> modulus_;
};

// An element of Q(zeta_L): a polynomial in zeta of degree < deg Phi_L, stored
// as a fixed-width coefficient vector (trailing zeros retained).
class CycloElem {
public:
    CycloElem(CycloFieldPtr field, std::vector<Rational> coeffs);

    static CycloElem zero(const CycloFieldPtr& field);
    static CycloElem one(const CycloFieldPtr& field);
    static CycloElem from_rational(const CycloFieldPtr& field, const Rational& r);
    // zeta_L^k for any integer k (reduced mod L).
    static CycloElem zeta_power(const CycloFieldPtr& field, long k);

    const CycloFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // The rational value when the element lies in Q, otherwise nullopt.
    std::optional<Rational> as_rational() const;

    CycloElem operator-() const;
    CycloElem inv() const;  // throws DivisionByZero on zero

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator/(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

private:
    CycloFieldPtr field_;
    std::vector<Rational> coeffs_;  // size == field degree
};

}  // namespace qwa
