#pragma once

#include <memory>
#include <vector>

#include "qwa/cyclotomic.hpp"

namespace qwa {

enum class QMode { Transcendental, RootOfUnity };

// Ground-field description: coefficients live in Q(zeta_L); the deformation
// parameter q is either a formal variable or the concrete root zeta_L^e.
struct FieldConfig {
    int L = 1;
    QMode mode = QMode::Transcendental;
    int e = 0;  // only meaningful in root-of-unity mode; canonical 0 <= e < L

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

class Scalar;
class ScalarField;
using ScalarFieldPtr = std::shared_ptr<const ScalarField>;

// Shared, immutable context for Scalar values.
class ScalarField : public std::enable_shared_from_this<ScalarField> {
public:
    static ScalarFieldPtr make(const FieldConfig& cfg);

    const FieldConfig& config() const { return cfg_; }
    const CycloFieldPtr& cyclotomic() const { return cyclo_; }
    bool root_mode() const { return cfg_.mode == QMode::RootOfUnity; }

    // Decides q^c = 1. Transcendental: only c = 0. Root mode: L | e*c.
    bool is_one_of_power(long c) const;
    // Multiplicative order of q in root mode (0 in transcendental mode).
    long q_order() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_rational(const Rational& r) const;
    Scalar from_int(long v) const;
    Scalar from_cyclo(const CycloElem& c) const;
    Scalar q_power(long c) const;
    Scalar zeta_power(long k) const;

    bool compatible(const ScalarField& other) const { return cfg_ == other.cfg_; }

private:
    explicit ScalarField(const FieldConfig& cfg);

    FieldConfig cfg_;
    CycloFieldPtr cyclo_;
};

// An element of the ground field, stored as num/den polynomials in q over
// Q(zeta_L). Canonical form: gcd(num, den) = 1, den monic, zero = 0/1.
// In root-of-unity mode q is already substituted, so num is a constant and
// den = 1.
class Scalar {
public:
    const ScalarFieldPtr& field() const { return field_; }
    const std::vector<CycloElem>& num() const { return num_; }
    const std::vector<CycloElem>& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    Scalar operator-() const;
    Scalar inv() const;  // throws DivisionByZero
    Scalar pow(long k) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

private:
    friend class ScalarField;
    Scalar(ScalarFieldPtr field, std::vector<CycloElem> num,
           std::vector<CycloElem> den);
    void canonicalize();

    ScalarFieldPtr field_;
    std::vector<CycloElem> num_, den_;  // ascending powers of q
};

}  // namespace qwa
