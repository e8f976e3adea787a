#include "qwa/torus.hpp"

namespace qwa {

namespace {

void check_same(const TorusElement& a, const TorusElement& b) {
    if (!a.algebra()->same_as(*b.algebra()))
        throw AlgebraMismatch("torus elements of different algebras");
}

}  // namespace

TorusElement::TorusElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

TorusElement TorusElement::zero(AlgebraPtr alg) {
    return TorusElement(std::move(alg));
}

TorusElement TorusElement::one(AlgebraPtr alg) {
    int n = alg->n;
    Scalar c = alg->field->one();
    return monomial(std::move(alg), c, ExpVec(n, 0), ExpVec(n, 0));
}

TorusElement TorusElement::monomial(AlgebraPtr alg, const Scalar& c, ExpVec u_exps,
                                    ExpVec v_exps) {
    TorusElement t(alg);
    ExpVec key = std::move(u_exps);
    key.insert(key.end(), v_exps.begin(), v_exps.end());
    t.add_term(key, c);
    return t;
}

void TorusElement::add_term(const ExpVec& key, const Scalar& c) {
    if (static_cast<int>(key.size()) != 2 * alg_->n)
        throw AlgebraMismatch("torus key arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::pair<Scalar, ExpVec>> TorusElement::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return std::make_pair(c, e);
}

TorusElement TorusElement::operator-() const {
    TorusElement r(alg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TorusElement TorusElement::scalar_mul(const Scalar& c) const {
    TorusElement r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

TorusElement TorusElement::pow(int k) const {
    if (k < 0) throw Error("TorusElement::pow expects a nonnegative exponent");
    TorusElement acc = one(alg_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
    check_same(a, b);
    TorusElement r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    check_same(a, b);
    const auto& alg = a.alg_;
    const int n = alg->n;
    TorusElement r(alg);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // v_i^b u_i^a = q_i^{-ab} u_i^a v_i^b when reordering a's v-part
            // past b's u-part.
            long long phase = 0;
            for (int i = 0; i < n; ++i)
                phase -= static_cast<long long>(alg->c[i]) * ka[n + i] * kb[i];
            ExpVec key = ka;
            for (int i = 0; i < 2 * n; ++i) key[i] += kb[i];
            r.add_term(key, ca * cb * alg->field->q_power(phase));
        }
    }
    return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    check_same(a, b);
    return a.terms_ == b.terms_;
}

namespace {

// a_d(alpha v_i) = alpha^d v_i^d - 1 inside the torus.
TorusElement torus_defining(const AlgebraPtr& alg, int i, const Scalar& alpha) {
    int n = alg->n;
    ExpVec v(n, 0);
    v[i] = alg->d;
    TorusElement t =
        TorusElement::monomial(alg, alpha.pow(alg->d), ExpVec(n, 0), std::move(v));
    return t + TorusElement::monomial(alg, -alg->field->one(), ExpVec(n, 0),
                                      ExpVec(n, 0));
}

TorusElement unit_mono(const AlgebraPtr& alg, int i, int k) {
    ExpVec u(alg->n, 0);
    u[i] = k;
    return TorusElement::monomial(alg, alg->field->one(), std::move(u),
                                  ExpVec(alg->n, 0));
}

// Shared multiplicative extension over the normal form; the per-generator
// images are supplied by the two embeddings.
template <typename ImX, typename ImY>
TorusElement embed_with(const GwaElement& a, ImX image_x, ImY image_y) {
    const auto& alg = a.algebra();
    const int n = alg->n;
    TorusElement acc = TorusElement::zero(alg);
    for (const auto& [grade, coeff] : a.components()) {
        // h^e -> v^e with the scalar untouched
        TorusElement part = TorusElement::zero(alg);
        for (const auto& [e, c] : coeff.terms())
            part = part + TorusElement::monomial(alg, c, ExpVec(n, 0), e);
        for (int i = 0; i < n; ++i) {
            if (grade[i] > 0)
                part = part * image_x(alg, i).pow(grade[i]);
            else if (grade[i] < 0)
                part = part * image_y(alg, i).pow(-grade[i]);
        }
        acc = acc + part;
    }
    return acc;
}

}  // namespace

TorusElement embed_phi(const GwaElement& a) {
    auto image_x = [](const AlgebraPtr& alg, int i) { return unit_mono(alg, i, 1); };
    auto image_y = [](const AlgebraPtr& alg, int i) {
        return torus_defining(alg, i, alg->field->one()) * unit_mono(alg, i, -1);
    };
    return embed_with(a, image_x, image_y);
}

TorusElement embed_phi_prime(const GwaElement& a) {
    auto image_x = [](const AlgebraPtr& alg, int i) {
        return torus_defining(alg, i, alg->q_power(i, 1)) * unit_mono(alg, i, 1);
    };
    auto image_y = [](const AlgebraPtr& alg, int i) { return unit_mono(alg, i, -1); };
    return embed_with(a, image_x, image_y);
}

}  // namespace qwa
