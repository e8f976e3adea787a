#include "qwa/dixmier.hpp"

#include <algorithm>
#include <numeric>

namespace qwa {

namespace {

void require_valid(const HomData& d, const char* who) {
    auto rep = validate(d);
    if (!rep.ok())
        throw InvalidData(std::string(who) + ": invalid bundle\n" + rep.to_string());
}

// Unit monomials gamma * h^e with exact arithmetic.
struct Mono {
    Scalar c;
    ExpVec e;
};

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r{a.c * b.c, a.e};
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

Mono mono_inv(const Mono& a) {
    Mono r{a.c.inv(), a.e};
    for (auto& v : r.e) v = -v;
    return r;
}

Mono mono_sigma_inv(const AlgebraPtr& alg, int factor, const Mono& a) {
    return {a.c * alg->q_power(factor, -a.e[factor]), a.e};
}

}  // namespace

std::pair<Scalar, ExpVec> composite_unit(const HomData& d, int i) {
    auto mono = d.p[i].as_monomial();
    if (!mono) throw NotClassifiedForm("composite unit requires a monomial p_i");
    ExpVec e(d.t[i].begin(), d.t[i].end());
    e[d.w[i]] += mono->second[0];
    return {mono->first * d.b[i], std::move(e)};
}

std::pair<Scalar, ExpVec> composite_unit_prime(const HomData& d, int i) {
    auto mono = d.pprime[i].as_monomial();
    if (!mono) throw NotClassifiedForm("composite unit requires a monomial p'_i");
    ExpVec e(d.t[i].size(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = -d.t[i][j];
    e[d.w[i]] += mono->second[0];
    return {mono->first * d.b[i].inv(), std::move(e)};
}

bool is_automorphism_form(const HomData& d) {
    require_valid(d, "is_automorphism_form");
    if (!d.source->same_as(*d.target))
        throw InvalidData("is_automorphism_form: source and target configs differ");
    const int n = d.target->n;
    if (static_cast<int>(d.w.size()) != n) return false;  // w not bijective
    for (int i = 0; i < n; ++i) {
        if (d.m[i] != 1 && d.m[i] != -1) return false;
        if (!d.p[i].as_monomial() || !d.pprime[i].as_monomial()) return false;
    }
    return true;
}

namespace {

struct InverseShape {
    std::vector<int> w, tau, m;  // indexed by the inverse's source factor
};

InverseShape forced_inverse_shape(const HomData& d) {
    const int n = d.target->n;
    InverseShape s;
    s.w.resize(n);
    s.tau.resize(n);
    s.m.resize(n);
    for (int i = 0; i < n; ++i) {
        s.w[d.w[i]] = i;
        s.tau[d.w[i]] = d.tau[i];
        s.m[d.w[i]] = d.m[i];
    }
    return s;
}

HomData build_inverse(const HomData& d) {
    const auto& alg = d.target;
    const int n = alg->n;
    InverseShape shape = forced_inverse_shape(d);

    // phi on an h-monomial, extended multiplicatively from
    // phi(h_{w(i)}) = gamma_i^{-m_i} h_i^{m_i}.
    auto phi_mono = [&](const Mono& a) {
        Mono r{a.c, ExpVec(n, 0)};
        for (int j = 0; j < n; ++j) {
            if (a.e[j] == 0) continue;
            int i = shape.w[j];
            r.c = r.c * d.gamma[i].pow(-static_cast<long>(shape.m[j]) * a.e[j]);
            r.e[i] += shape.m[j] * a.e[j];
        }
        return r;
    };

    GeneratorImages im;
    for (int j = 0; j < n; ++j) {
        const int i = shape.w[j];  // source index of d with w(i) = j
        const int tau = d.tau[i];

        ExpVec he(n, 0);
        he[i] = shape.m[j];
        im.h.push_back(GwaElement::monomial(alg, d.gamma[i].pow(-shape.m[j]), he,
                                            GradeVec(n, 0)));
        ExpVec hei(n, 0);
        hei[i] = -shape.m[j];
        im.h_inv.push_back(
            GwaElement::monomial(alg, d.gamma[i].pow(shape.m[j]), hei, GradeVec(n, 0)));

        auto [ec, ee] = composite_unit(d, i);
        auto [epc, epe] = composite_unit_prime(d, i);
        Mono e_img = phi_mono({ec, ee});
        Mono ep_img = phi_mono({epc, epe});

        if (tau == 0) {
            Mono cx = mono_inv(e_img);
            GradeVec gx(n, 0);
            gx[i] = 1;
            im.x.push_back(GwaElement::monomial(alg, cx.c, cx.e, gx));
            Mono cy = mono_inv(ep_img);
            im.y.push_back(GwaElement::gen_y(alg, i) *
                           GwaElement::monomial(alg, cy.c, cy.e, GradeVec(n, 0)));
        } else {
            Mono cx = mono_sigma_inv(alg, i, mono_inv(ep_img));
            GradeVec gx(n, 0);
            gx[i] = -1;
            im.x.push_back(GwaElement::monomial(alg, cx.c, cx.e, gx));
            Mono cy = mono_sigma_inv(alg, i, mono_inv(e_img));
            im.y.push_back(GwaElement::gen_x(alg, i) *
                           GwaElement::monomial(alg, cy.c, cy.e, GradeVec(n, 0)));
        }
    }
    return extract_hom_data(im, alg, alg);
}

}  // namespace

HomData invert_hom(const HomData& d) {
    if (!is_automorphism_form(d))
        throw NotInvertible("invert: bundle is not of automorphism form");
    return build_inverse(d);
}

long q_factor_order(const AlgebraPtr& alg, int factor) {
    const auto& cfg = alg->field->config();
    if (cfg.mode != QMode::RootOfUnity) return 0;
    long L = cfg.L;
    long ec = (static_cast<long long>(cfg.e) * alg->c[factor]) % L;
    if (ec < 0) ec += L;
    if (ec == 0) return 1;
    return L / std::gcd(ec, L);
}

HomData root_counterexample(const AlgebraPtr& target, int factor) {
    if (factor < 0 || factor >= target->n)
        throw PreconditionFailed("counterexample: factor index out of range");
    if (!target->field->root_mode())
        throw PreconditionFailed("counterexample: requires root-of-unity mode");
    const long t = q_factor_order(target, factor);
    if (t < 2)
        throw PreconditionFailed("counterexample: q_i must have order at least 2");

    HomData d = identity_hom(target);
    d.m[factor] = static_cast<int>(t) + 1;
    // U(h) = sum_{l=0}^{t} q_i^{ld} h^{dl}, a telescoping cofactor of a_d(q_i h)
    LaurentPoly U = LaurentPoly::zero(target->field, 1);
    for (long l = 0; l <= t; ++l)
        U.add_term(ExpVec{static_cast<int>(l) * target->d},
                   target->q_power(factor, l * target->d));
    d.p[factor] = std::move(U);

    auto rep = validate(d);
    if (!rep.ok())
        throw Error("internal: counterexample bundle fails validation\n" +
                    rep.to_string());
    return d;
}

std::optional<HomData> bounded_inverse_search(const HomData& d, int m_bound) {
    require_valid(d, "bounded_inverse_search");
    if (!d.source->same_as(*d.target))
        throw ConfigMismatch("bounded_inverse_search: endomorphism bundle expected");
    const int n = d.target->n;

    // Necessary conditions from the action on the h's: a left inverse g must
    // satisfy w_g = w^{-1}, tau_g matching, and m_{g,w(i)} m_i = 1 over the
    // integers. Enumerate the whole (w_g, tau_g, m_g) box and filter.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned tmask = 0; tmask < (1u << n); ++tmask) {
            std::vector<int> mg(n, -m_bound);
            while (true) {
                bool admissible = true;
                for (int i = 0; i < n && admissible; ++i) {
                    const int j = d.w[i];
                    if (perm[j] != i || mg[j] == 0 ||
                        mg[j] * d.m[i] != 1 ||
                        static_cast<int>((tmask >> j) & 1u) != d.tau[i])
                        admissible = false;
                }
                if (admissible) {
                    // All parameters of the candidate are now forced; it exists
                    // only when the coefficient units are monomials.
                    bool monomial_units = true;
                    for (int i = 0; i < n; ++i)
                        if (!d.p[i].as_monomial() || !d.pprime[i].as_monomial())
                            monomial_units = false;
                    if (monomial_units) {
                        HomData cand = build_inverse(d);
                        if (validate(cand).ok() &&
                            is_identity(compose(d, cand)) &&
                            is_identity(compose(cand, d)))
                            return cand;
                    }
                }
                // advance the m_g odometer over [-bound, bound]^n
                int pos = 0;
                while (pos < n) {
                    if (++mg[pos] > m_bound) {
                        mg[pos] = -m_bound;
                        ++pos;
                    } else {
                        break;
                    }
                }
                if (pos == n) break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace qwa
