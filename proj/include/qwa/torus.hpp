#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qwa/algebra.hpp"

namespace qwa {

// Element of the quantum torus on u_1..u_n, v_1..v_n with u_i v_i = q_i v_i u_i
// and commuting distinct factors. Normal form keeps u-powers left of v-powers;
// the key concatenates (u-exponents, v-exponents).
class TorusElement {
public:
    static TorusElement zero(AlgebraPtr alg);
    static TorusElement one(AlgebraPtr alg);
    static TorusElement monomial(AlgebraPtr alg, const Scalar& c, ExpVec u_exps,
                                 ExpVec v_exps);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add_term(const ExpVec& key, const Scalar& c);
    std::optional<std::pair<Scalar, ExpVec>> as_monomial() const;

    TorusElement operator-() const;
    TorusElement scalar_mul(const Scalar& c) const;
    TorusElement pow(int k) const;  // k >= 0

    friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend bool operator==(const TorusElement& a, const TorusElement& b);
    friend bool operator!=(const TorusElement& a, const TorusElement& b) {
        return !(a == b);
    }

private:
    explicit TorusElement(AlgebraPtr alg);

    AlgebraPtr alg_;
    std::map<ExpVec, Scalar> terms_;  // key: u-exps followed by v-exps, size 2n
};

// The two torus embeddings used to classify units.
//   phi:  x_i -> u_i,            y_i -> a_d(v_i) u_i^{-1},  h_i -> v_i
//   phi': x_i -> a_d(q_i v_i) u_i,  y_i -> u_i^{-1},        h_i -> v_i
// Both extend multiplicatively over the graded normal form.
TorusElement embed_phi(const GwaElement& a);
TorusElement embed_phi_prime(const GwaElement& a);

}  // namespace qwa
