#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwa/laurent.hpp"

namespace qwa {

struct AlgebraConfig;
using AlgebraPtr = std::shared_ptr<const AlgebraConfig>;

// Configuration of the algebra A(n, d, q): n tensor factors of the
// generalized Weyl algebra k[h^{+-1}](sigma, h^d - 1) with sigma(h) = q_i h
// and q_i = q^{c_i}. Requires q_i^d != 1 for every factor.
struct AlgebraConfig {
    ScalarFieldPtr field;
    int n = 1;
    int d = 1;
    std::vector<int> c;  // q_i = q^{c_i}, c_i != 0

    static AlgebraPtr make(ScalarFieldPtr field, int n, int d, std::vector<int> c);

    Scalar q_power(int factor, long k) const;  // q_factor^k
    bool same_as(const AlgebraConfig& other) const;
};

using GradeVec = std::vector<int>;

// Element of A(n, d, q) in graded normal form: a finitely supported map from
// a grade vector k to the left Laurent coefficient of w_k, where
// w_k = w_{k_1}(1)...w_{k_n}(n) and w_m(i) = x_i^m, w_{-m}(i) = y_i^m (m >= 0).
class GwaElement {
public:
    static GwaElement zero(AlgebraPtr alg);
    static GwaElement one(AlgebraPtr alg);
    static GwaElement from_scalar(AlgebraPtr alg, const Scalar& c);
    static GwaElement from_coeff(AlgebraPtr alg, const LaurentPoly& f);  // grade 0
    static GwaElement monomial(AlgebraPtr alg, const Scalar& c, ExpVec h_exps,
                               GradeVec grade);
    static GwaElement gen_x(AlgebraPtr alg, int i);
    static GwaElement gen_y(AlgebraPtr alg, int i);
    static GwaElement gen_h(AlgebraPtr alg, int i, int k = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<GradeVec, LaurentPoly>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }
    void add_component(const GradeVec& grade, const LaurentPoly& f);

    GwaElement operator-() const;
    GwaElement scalar_mul(const Scalar& c) const;
    GwaElement pow(int k) const;  // k >= 0

    friend GwaElement operator+(const GwaElement& a, const GwaElement& b);
    friend GwaElement operator-(const GwaElement& a, const GwaElement& b);
    friend GwaElement operator*(const GwaElement& a, const GwaElement& b);
    friend bool operator==(const GwaElement& a, const GwaElement& b);
    friend bool operator!=(const GwaElement& a, const GwaElement& b) {
        return !(a == b);
    }

private:
    explicit GwaElement(AlgebraPtr alg);

    AlgebraPtr alg_;
    std::map<GradeVec, LaurentPoly> comps_;
};

// The defining coefficient a_d(alpha * h_i) = alpha^d h_i^d - 1 as an
// n-variate Laurent polynomial.
LaurentPoly defining_poly(const AlgebraPtr& alg, int factor, const Scalar& alpha);

// sigma^k applied to a coefficient: each monomial h^a picks up
// prod_i q_i^{k_i a_i}.
LaurentPoly sigma_action(const AlgebraPtr& alg, const LaurentPoly& f,
                         const GradeVec& k);

// Left coefficient c(h_i) with w_k(i) w_s(i) = c(h_i) w_{k+s}(i). Closed form:
// a product of a_d(q_i^l h_i) factors when the grades have opposite signs,
// and 1 otherwise.
LaurentPoly straighten(const AlgebraPtr& alg, int factor, int k, int s);

// Recognizes invertible elements: returns (gamma, m) when the element equals
// gamma * h_1^{m_1} ... h_n^{m_n} with gamma != 0, otherwise nullopt.
std::optional<std::pair<Scalar, ExpVec>> recognize_unit(const GwaElement& a);

// Checks every defining relation of the presentation as an exact element
// identity (single-factor relations plus all cross-factor commutations).
bool relations_hold(const AlgebraPtr& alg, std::string* first_failure = nullptr);

}  // namespace qwa
