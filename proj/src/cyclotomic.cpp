#include "qwa/cyclotomic.hpp"

#include <algorithm>

namespace qwa {

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of univariate rational polynomials; remainder must vanish.
Poly div_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.empty()) return q;
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (int i = static_cast<int>(a.size()) - 1;
         i >= static_cast<int>(b.size()) - 1; --i) {
        if (a[i] == 0) continue;
        Rational f = a[i] / lead;
        int shift = i - (static_cast<int>(b.size()) - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    trim(a);
    if (!a.empty()) throw Error("cyclotomic: inexact polynomial division");
    return q;
}

Poly cyclotomic_rec(int L, std::vector<Poly>& cache) {
    if (!cache[L].empty()) return cache[L];
    // x^L - 1
    Poly num(L + 1, Rational(0));
    num[0] = -1;
    num[L] = 1;
    for (int d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        num = div_exact(num, cyclotomic_rec(d, cache));
    }
    cache[L] = num;
    return num;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int L) {
    if (L < 1) throw Error("cyclotomic_polynomial: order must be positive");
    std::vector<Poly> cache(L + 1);
    return cyclotomic_rec(L, cache);
}

CyclotomicField::CyclotomicField(int L)
    : order_(L), modulus_(cyclotomic_polynomial(L)) {}

CycloFieldPtr CyclotomicField::make(int L) {
    return CycloFieldPtr(new CyclotomicField(L));
}

namespace {

// Reduce an arbitrary-degree polynomial modulo the (monic) field modulus.
std::vector<Rational> reduce_mod(std::vector<Rational> p,
                                 const std::vector<Rational>& mod) {
    const int deg = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
        if (p[i] == 0) continue;
        Rational f = p[i];
        int shift = i - deg;
        for (std::size_t j = 0; j < mod.size(); ++j) p[shift + j] -= f * mod[j];
    }
    p.resize(deg, Rational(0));
    return p;
}

}  // namespace

CycloElem::CycloElem(CycloFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    const auto deg = static_cast<std::size_t>(field_->degree());
    if (coeffs_.size() > deg) {
        coeffs_ = reduce_mod(std::move(coeffs_), field_->modulus());
    } else {
        coeffs_.resize(deg, Rational(0));
    }
    for (auto& c : coeffs_) c.canonicalize();
}

CycloElem CycloElem::zero(const CycloFieldPtr& field) {
    return CycloElem(field, {});
}

CycloElem CycloElem::one(const CycloFieldPtr& field) {
    return from_rational(field, Rational(1));
}

CycloElem CycloElem::from_rational(const CycloFieldPtr& field, const Rational& r) {
    std::vector<Rational> c(1, r);
    return CycloElem(field, std::move(c));
}

CycloElem CycloElem::zeta_power(const CycloFieldPtr& field, long k) {
    long L = field->order();
    long r = ((k % L) + L) % L;
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1, Rational(0));
    c.back() = 1;
    return CycloElem(field, std::move(c));
}

bool CycloElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycloElem::is_one() const {
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<Rational> CycloElem::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycloElem CycloElem::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return CycloElem(field_, std::move(c));
}

namespace {

void check_fields(const CycloElem& a, const CycloElem& b) {
    if (a.field()->order() != b.field()->order())
        throw AlgebraMismatch("cyclotomic elements from different fields");
}

}  // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_fields(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return CycloElem(a.field(), std::move(c));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    check_fields(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return CycloElem(a.field(), std::move(c));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_fields(a, b);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Rational> c(x.size() + y.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            c[i + j] += x[i] * y[j];
        }
    }
    return CycloElem(a.field(), std::move(c));
}

CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inv();
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    check_fields(a, b);
    return a.coeffs() == b.coeffs();
}

CycloElem CycloElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    // Extended Euclid in Q[x] against the irreducible modulus: s*a + t*Phi = g
    // with g a nonzero constant, so a^{-1} = s/g.
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto sub_scaled = [](Poly& a, const Poly& b, const Rational& f, int shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    };

    Poly r0 = field_->modulus();
    Poly r1(coeffs_);
    trim(r1);
    Poly s0{}, s1{Rational(1)};

    while (true) {
        trim(r1);
        if (r1.empty()) throw Error("cyclotomic: modulus not coprime to element");
        if (r1.size() == 1) break;  // nonzero constant gcd reached
        // one full division step: r0 = q*r1 + r, updating the Bezout row
        Poly rem = r0;
        Poly snew = s0;
        trim(rem);
        const Rational& lead = r1.back();
        while (rem.size() >= r1.size()) {
            Rational f = rem.back() / lead;
            int shift = static_cast<int>(rem.size() - r1.size());
            sub_scaled(rem, r1, f, shift);
            sub_scaled(snew, s1, f, shift);
            trim(rem);
            if (rem.empty()) break;
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(snew);
    }

    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return CycloElem(field_, std::move(s1));
}

}  // namespace qwa
