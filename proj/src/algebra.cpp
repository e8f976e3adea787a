#include "qwa/algebra.hpp"

#include <algorithm>

namespace qwa {

AlgebraPtr AlgebraConfig::make(ScalarFieldPtr field, int n, int d,
                               std::vector<int> c) {
    if (n < 1) throw StructuralError("algebra config: n must be positive");
    if (d < 1) throw StructuralError("algebra config: d must be positive");
    if (static_cast<int>(c.size()) != n)
        throw StructuralError("algebra config: c must have one entry per factor");
    for (int ci : c) {
        if (ci == 0) throw StructuralError("algebra config: c_i must be nonzero");
        if (field->is_one_of_power(static_cast<long>(ci) * d))
            throw StructuralError("algebra config: q_i^d = 1 is excluded");
    }
    auto cfg = std::make_shared<AlgebraConfig>();
    cfg->field = std::move(field);
    cfg->n = n;
    cfg->d = d;
    cfg->c = std::move(c);
    return cfg;
}

Scalar AlgebraConfig::q_power(int factor, long k) const {
    return field->q_power(static_cast<long>(c[factor]) * k);
}

bool AlgebraConfig::same_as(const AlgebraConfig& other) const {
    return n == other.n && d == other.d && c == other.c &&
           field->config() == other.field->config();
}

namespace {

void check_same_algebra(const GwaElement& a, const GwaElement& b) {
    if (!a.algebra()->same_as(*b.algebra()))
        throw AlgebraMismatch("elements of different algebras");
}

}  // namespace

GwaElement::GwaElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

GwaElement GwaElement::zero(AlgebraPtr alg) { return GwaElement(std::move(alg)); }

GwaElement GwaElement::one(AlgebraPtr alg) {
    return from_coeff(alg, LaurentPoly::one(alg->field, alg->n));
}

GwaElement GwaElement::from_scalar(AlgebraPtr alg, const Scalar& c) {
    return from_coeff(alg, LaurentPoly::constant(alg->field, alg->n, c));
}

GwaElement GwaElement::from_coeff(AlgebraPtr alg, const LaurentPoly& f) {
    GwaElement e(std::move(alg));
    e.add_component(GradeVec(e.alg_->n, 0), f);
    return e;
}

GwaElement GwaElement::monomial(AlgebraPtr alg, const Scalar& c, ExpVec h_exps,
                                GradeVec grade) {
    GwaElement e(alg);
    e.add_component(grade,
                    LaurentPoly::monomial(alg->field, c, std::move(h_exps)));
    return e;
}

GwaElement GwaElement::gen_x(AlgebraPtr alg, int i) {
    GradeVec g(alg->n, 0);
    g[i] = 1;
    return monomial(alg, alg->field->one(), ExpVec(alg->n, 0), std::move(g));
}

GwaElement GwaElement::gen_y(AlgebraPtr alg, int i) {
    GradeVec g(alg->n, 0);
    g[i] = -1;
    return monomial(alg, alg->field->one(), ExpVec(alg->n, 0), std::move(g));
}

GwaElement GwaElement::gen_h(AlgebraPtr alg, int i, int k) {
    ExpVec e(alg->n, 0);
    e[i] = k;
    return monomial(alg, alg->field->one(), std::move(e), GradeVec(alg->n, 0));
}

void GwaElement::add_component(const GradeVec& grade, const LaurentPoly& f) {
    if (static_cast<int>(grade.size()) != alg_->n)
        throw AlgebraMismatch("grade vector arity mismatch");
    if (f.is_zero()) return;
    auto it = comps_.find(grade);
    if (it == comps_.end()) {
        comps_.emplace(grade, f);
    } else {
        LaurentPoly sum = it->second + f;
        if (sum.is_zero())
            comps_.erase(it);
        else
            it->second = std::move(sum);
    }
}

GwaElement GwaElement::operator-() const {
    GwaElement r(alg_);
    for (const auto& [g, f] : comps_) r.comps_.emplace(g, -f);
    return r;
}

GwaElement GwaElement::scalar_mul(const Scalar& c) const {
    GwaElement r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [g, f] : comps_) r.comps_.emplace(g, f.scalar_mul(c));
    return r;
}

GwaElement GwaElement::pow(int k) const {
    if (k < 0) throw Error("GwaElement::pow expects a nonnegative exponent");
    GwaElement acc = one(alg_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

GwaElement operator+(const GwaElement& a, const GwaElement& b) {
    check_same_algebra(a, b);
    GwaElement r = a;
    for (const auto& [g, f] : b.comps_) r.add_component(g, f);
    return r;
}

GwaElement operator-(const GwaElement& a, const GwaElement& b) {
    return a + (-b);
}

GwaElement operator*(const GwaElement& a, const GwaElement& b) {
    check_same_algebra(a, b);
    const auto& alg = a.alg_;
    GwaElement r(alg);
    for (const auto& [k, f] : a.comps_) {
        for (const auto& [s, g] : b.comps_) {
            // (f w_k)(g w_s) = f sigma^k(g) prod_i straighten(i, k_i, s_i) w_{k+s}
            LaurentPoly coeff = f * sigma_action(alg, g, k);
            for (int i = 0; i < alg->n; ++i) {
                if (k[i] != 0 && s[i] != 0 && (k[i] > 0) != (s[i] > 0))
                    coeff = coeff * straighten(alg, i, k[i], s[i]);
            }
            GradeVec grade = k;
            for (int i = 0; i < alg->n; ++i) grade[i] += s[i];
            r.add_component(grade, coeff);
        }
    }
    return r;
}

bool operator==(const GwaElement& a, const GwaElement& b) {
    check_same_algebra(a, b);
    return a.comps_ == b.comps_;
}

LaurentPoly defining_poly(const AlgebraPtr& alg, int factor, const Scalar& alpha) {
    LaurentPoly p = LaurentPoly::var_power(alg->field, alg->n, factor, alg->d)
                        .scalar_mul(alpha.pow(alg->d));
    return p - LaurentPoly::one(alg->field, alg->n);
}

LaurentPoly sigma_action(const AlgebraPtr& alg, const LaurentPoly& f,
                         const GradeVec& k) {
    LaurentPoly r = LaurentPoly::zero(alg->field, alg->n);
    for (const auto& [e, c] : f.terms()) {
        long long shift = 0;
        for (int i = 0; i < alg->n; ++i)
            shift += static_cast<long long>(alg->c[i]) * k[i] * e[i];
        r.add_term(e, c * alg->field->q_power(shift));
    }
    return r;
}

LaurentPoly straighten(const AlgebraPtr& alg, int factor, int k, int s) {
    LaurentPoly c = LaurentPoly::one(alg->field, alg->n);
    if (k == 0 || s == 0 || (k > 0) == (s > 0)) return c;
    if (k > 0) {
        // w_k w_s with k > 0 > s: t = min(k, -s) cancellations
        int t = std::min(k, -s);
        for (int l = k - t + 1; l <= k; ++l)
            c = c * defining_poly(alg, factor, alg->q_power(factor, l));
    } else {
        // k < 0 < s
        int t = std::min(-k, s);
        for (int j = (-k) - t; j <= (-k) - 1; ++j)
            c = c * defining_poly(alg, factor, alg->q_power(factor, -j));
    }
    return c;
}

std::optional<std::pair<Scalar, ExpVec>> recognize_unit(const GwaElement& a) {
    if (a.components().size() != 1) return std::nullopt;
    const auto& [grade, coeff] = *a.components().begin();
    if (std::any_of(grade.begin(), grade.end(), [](int g) { return g != 0; }))
        return std::nullopt;
    return coeff.as_monomial();
}

bool relations_hold(const AlgebraPtr& alg, std::string* first_failure) {
    auto fail = [&](const std::string& what) {
        if (first_failure) *first_failure = what;
        return false;
    };
    const auto one = GwaElement::one(alg);
    for (int i = 0; i < alg->n; ++i) {
        auto xi = GwaElement::gen_x(alg, i);
        auto yi = GwaElement::gen_y(alg, i);
        auto hi = GwaElement::gen_h(alg, i);
        auto hi_inv = GwaElement::gen_h(alg, i, -1);
        Scalar qi = alg->q_power(i, 1);

        if (xi * hi != (hi * xi).scalar_mul(qi)) return fail("x h = q h x");
        if (yi * hi != (hi * yi).scalar_mul(qi.inv())) return fail("y h = q^-1 h y");
        if (xi * yi != GwaElement::from_coeff(alg, defining_poly(alg, i, qi)))
            return fail("x y = a_d(q h)");
        if (yi * xi !=
            GwaElement::from_coeff(alg, defining_poly(alg, i, alg->field->one())))
            return fail("y x = a_d(h)");
        if (hi * hi_inv != one || hi_inv * hi != one) return fail("h h^-1 = 1");

        for (int j = 0; j < alg->n; ++j) {
            if (j == i) continue;
            auto xj = GwaElement::gen_x(alg, j);
            auto yj = GwaElement::gen_y(alg, j);
            auto hj = GwaElement::gen_h(alg, j);
            if (hi * hj != hj * hi) return fail("h_i h_j = h_j h_i");
            if (hi * xj != xj * hi) return fail("h_i x_j = x_j h_i");
            if (hi * yj != yj * hi) return fail("h_i y_j = y_j h_i");
            if (xi * xj != xj * xi) return fail("x_i x_j = x_j x_i");
            if (xi * yj != yj * xi) return fail("x_i y_j = y_j x_i");
            if (yi * yj != yj * yi) return fail("y_i y_j = y_j y_i");
        }
    }
    return true;
}

}  // namespace qwa
