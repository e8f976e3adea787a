#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qwa/scalar.hpp"

namespace qwa {

using ExpVec = std::vector<int>;

// Laurent polynomial in h_1..h_n over the ground field: a finitely supported
// map from integer exponent vectors to nonzero scalars. Keys are ordered
// lexicographically, so iteration order is canonical.
class LaurentPoly {
public:
    static LaurentPoly zero(ScalarFieldPtr field, int arity);
    static LaurentPoly one(ScalarFieldPtr field, int arity);
    static LaurentPoly constant(ScalarFieldPtr field, int arity, const Scalar& c);
    static LaurentPoly monomial(ScalarFieldPtr field, const Scalar& c, ExpVec exps);
    // h_axis^k in an arity-n ring
    static LaurentPoly var_power(ScalarFieldPtr field, int arity, int axis, int k);

    const ScalarFieldPtr& field() const { return field_; }
    int arity() const { return arity_; }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // (coefficient, exponent) when the support is a single point
    std::optional<std::pair<Scalar, ExpVec>> as_monomial() const;

    void add_term(const ExpVec& e, const Scalar& c);  // accumulate, drop zeros

    LaurentPoly operator-() const;
    LaurentPoly scalar_mul(const Scalar& c) const;
    // substitution h_axis -> c * h_axis
    LaurentPoly scale_var(int axis, const Scalar& c) const;
    // inverse of a monomial; throws NotInvertible otherwise
    LaurentPoly inv_monomial() const;

    // reinterpret an arity-1 polynomial as an arity-n one supported on `axis`
    LaurentPoly embed(int n, int axis) const;
    LaurentPoly shifted(const ExpVec& offset) const;  // multiply by h^offset

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Exact division in the univariate Laurent ring; nullopt when not exact.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                                   const LaurentPoly& b);

private:
    LaurentPoly(ScalarFieldPtr field, int arity);

    ScalarFieldPtr field_;
    int arity_;
    std::map<ExpVec, Scalar> terms_;
};

}  // namespace qwa
