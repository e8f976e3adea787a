#include "qwa/scalar.hpp"

#include <numeric>
#include <utility>

#include "qwa/detail/qpoly.hpp"

namespace qwa {

namespace {

using detail::QPoly;

void check_fields(const Scalar& a, const Scalar& b) {
    if (!a.field()->compatible(*b.field()))
        throw AlgebraMismatch("scalars from different ground fields");
}

}  // namespace

ScalarField::ScalarField(const FieldConfig& cfg)
    : cfg_(cfg), cyclo_(CyclotomicField::make(cfg.L)) {}

ScalarFieldPtr ScalarField::make(const FieldConfig& cfg) {
    if (cfg.L < 1) throw StructuralError("field config: L must be positive");
    if (cfg.mode == QMode::RootOfUnity) {
        if (cfg.e < 0 || cfg.e >= cfg.L)
            throw StructuralError("field config: root exponent must satisfy 0 <= e < L");
        if (cfg.e == 0)
            throw StructuralError("field config: q = 1 is not allowed in root mode");
    }
    return ScalarFieldPtr(new ScalarField(cfg));
}

bool ScalarField::is_one_of_power(long c) const {
    if (!root_mode()) return c == 0;
    return (static_cast<long long>(cfg_.e) * c) % cfg_.L == 0;
}

long ScalarField::q_order() const {
    if (!root_mode()) return 0;
    return cfg_.L / std::gcd(static_cast<long>(cfg_.e), static_cast<long>(cfg_.L));
}

Scalar ScalarField::zero() const {
    return Scalar(shared_from_this(), {}, {CycloElem::one(cyclo_)});
}

Scalar ScalarField::one() const { return from_rational(Rational(1)); }

Scalar ScalarField::from_rational(const Rational& r) const {
    return from_cyclo(CycloElem::from_rational(cyclo_, r));
}

Scalar ScalarField::from_int(long v) const { return from_rational(Rational(v)); }

Scalar ScalarField::from_cyclo(const CycloElem& c) const {
    return Scalar(shared_from_this(), {c}, {CycloElem::one(cyclo_)});
}

Scalar ScalarField::q_power(long c) const {
    if (root_mode())
        return from_cyclo(CycloElem::zeta_power(cyclo_, static_cast<long>(cfg_.e) * c));
    QPoly num, den;
    if (c >= 0) {
        num.assign(static_cast<std::size_t>(c) + 1, CycloElem::zero(cyclo_));
        num.back() = CycloElem::one(cyclo_);
        den = {CycloElem::one(cyclo_)};
    } else {
        num = {CycloElem::one(cyclo_)};
        den.assign(static_cast<std::size_t>(-c) + 1, CycloElem::zero(cyclo_));
        den.back() = CycloElem::one(cyclo_);
    }
    return Scalar(shared_from_this(), std::move(num), std::move(den));
}

Scalar ScalarField::zeta_power(long k) const {
    return from_cyclo(CycloElem::zeta_power(cyclo_, k));
}

Scalar::Scalar(ScalarFieldPtr field, std::vector<CycloElem> num,
               std::vector<CycloElem> den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void Scalar::canonicalize() {
    const auto& cf = field_->cyclotomic();
    detail::trim(num_);
    detail::trim(den_);
    if (den_.empty()) throw DivisionByZero("scalar with zero denominator");
    if (num_.empty()) {
        den_ = {CycloElem::one(cf)};
        return;
    }
    if (den_.size() > 1) {
        QPoly g = detail::gcd_monic(num_, den_, cf);
        if (g.size() > 1) {
            num_ = detail::divrem(std::move(num_), g, cf).first;
            den_ = detail::divrem(std::move(den_), g, cf).first;
        }
    }
    // normalize the denominator to be monic
    if (!den_.back().is_one()) {
        CycloElem lead_inv = den_.back().inv();
        for (auto& c : num_) c = c * lead_inv;
        for (auto& c : den_) c = c * lead_inv;
    }
    if (field_->root_mode() && (num_.size() > 1 || den_.size() > 1))
        throw Error("internal: root-mode scalar with q-degree > 0");
}

bool Scalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0].is_one() &&
           den_[0].is_one();
}

Scalar Scalar::operator-() const {
    return Scalar(field_, detail::negate(num_), den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(field_, den_, num_);
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Scalar acc = field_->one();
    Scalar base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    const auto& cf = a.field()->cyclotomic();
    QPoly num = detail::add(detail::mul(a.num_, b.den_, cf),
                            detail::mul(b.num_, a.den_, cf));
    QPoly den = detail::mul(a.den_, b.den_, cf);
    return Scalar(a.field_, std::move(num), std::move(den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    const auto& cf = a.field()->cyclotomic();
    return Scalar(a.field_, detail::mul(a.num_, b.num_, cf),
                  detail::mul(a.den_, b.den_, cf));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace qwa
