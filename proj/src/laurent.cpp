#include "qwa/laurent.hpp"

#include <algorithm>

namespace qwa {

namespace {

void check_compat(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity() != b.arity() || !a.field()->compatible(*b.field()))
        throw AlgebraMismatch("laurent polynomials from different rings");
}

}  // namespace

LaurentPoly::LaurentPoly(ScalarFieldPtr field, int arity)
    : field_(std::move(field)), arity_(arity) {}

LaurentPoly LaurentPoly::zero(ScalarFieldPtr field, int arity) {
    return LaurentPoly(std::move(field), arity);
}

LaurentPoly LaurentPoly::one(ScalarFieldPtr field, int arity) {
    LaurentPoly p(field, arity);
    p.add_term(ExpVec(arity, 0), field->one());
    return p;
}

LaurentPoly LaurentPoly::constant(ScalarFieldPtr field, int arity, const Scalar& c) {
    LaurentPoly p(std::move(field), arity);
    p.add_term(ExpVec(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(ScalarFieldPtr field, const Scalar& c, ExpVec exps) {
    LaurentPoly p(std::move(field), static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::var_power(ScalarFieldPtr field, int arity, int axis, int k) {
    ExpVec e(arity, 0);
    e[axis] = k;
    LaurentPoly p(field, arity);
    p.add_term(e, field->one());
    return p;
}

bool LaurentPoly::is_one() const {
    auto m = as_monomial();
    return m && m->first.is_one() &&
           std::all_of(m->second.begin(), m->second.end(),
                       [](int e) { return e == 0; });
}

std::optional<std::pair<Scalar, ExpVec>> LaurentPoly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return std::make_pair(c, e);
}

void LaurentPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != arity_)
        throw AlgebraMismatch("exponent vector arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scalar_mul(const Scalar& c) const {
    LaurentPoly r(field_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::scale_var(int axis, const Scalar& c) const {
    LaurentPoly r(field_, arity_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c.pow(e[axis]));
    return r;
}

LaurentPoly LaurentPoly::inv_monomial() const {
    auto m = as_monomial();
    if (!m) throw NotInvertible("laurent polynomial is not a monomial");
    ExpVec e = m->second;
    for (auto& x : e) x = -x;
    return monomial(field_, m->first.inv(), std::move(e));
}

LaurentPoly LaurentPoly::embed(int n, int axis) const {
    if (arity_ != 1) throw AlgebraMismatch("embed expects a univariate polynomial");
    LaurentPoly r(field_, n);
    for (const auto& [e, c] : terms_) {
        ExpVec v(n, 0);
        v[axis] = e[0];
        r.terms_.emplace(std::move(v), c);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& offset) const {
    if (static_cast<int>(offset.size()) != arity_)
        throw AlgebraMismatch("shift arity mismatch");
    LaurentPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) {
        ExpVec v = e;
        for (int i = 0; i < arity_; ++i) v[i] += offset[i];
        r.terms_.emplace(std::move(v), c);
    }
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    LaurentPoly r(a.field_, a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e = ea;
            for (int i = 0; i < a.arity_; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    check_compat(a, b);
    return a.terms_ == b.terms_;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a,
                                                     const LaurentPoly& b) {
    check_compat(a, b);
    if (a.arity() != 1) throw AlgebraMismatch("divide_exact expects univariate operands");
    if (b.is_zero()) throw DivisionByZero("laurent division by zero");
    if (a.is_zero()) return zero(a.field(), 1);

    // Shift both operands into ordinary polynomials, divide, shift back.
    int amin = a.terms_.begin()->first[0];
    int bmin = b.terms_.begin()->first[0];
    int bmax = b.terms_.rbegin()->first[0];
    int amax = a.terms_.rbegin()->first[0];
    int alen = amax - amin + 1, blen = bmax - bmin + 1;
    if (blen > alen) return std::nullopt;

    const auto& fld = a.field();
    std::vector<Scalar> pa(alen, fld->zero()), pb(blen, fld->zero());
    for (const auto& [e, c] : a.terms_) pa[e[0] - amin] = c;
    for (const auto& [e, c] : b.terms_) pb[e[0] - bmin] = c;

    std::vector<Scalar> q(alen - blen + 1, fld->zero());
    Scalar lead_inv = pb.back().inv();
    for (int i = alen - 1; i >= blen - 1; --i) {
        if (pa[i].is_zero()) continue;
        Scalar f = pa[i] * lead_inv;
        int shift = i - (blen - 1);
        q[shift] = f;
        for (int j = 0; j < blen; ++j) pa[shift + j] = pa[shift + j] - f * pb[j];
    }
    for (const auto& c : pa)
        if (!c.is_zero()) return std::nullopt;

    LaurentPoly r(fld, 1);
    for (std::size_t i = 0; i < q.size(); ++i)
        if (!q[i].is_zero())
            r.terms_.emplace(ExpVec{static_cast<int>(i) + amin - bmin}, q[i]);
    return r;
}

}  // namespace qwa
