#include "qwa/tame.hpp"

#include <algorithm>

#include "qwa/dixmier.hpp"

namespace qwa {

namespace {

bool is_identity_perm(const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != static_cast<int>(i)) return false;
    return true;
}

void check_permutation(const std::vector<int>& w, int n) {
    if (static_cast<int>(w.size()) != n)
        throw InvariantViolation("permutation has the wrong length");
    std::vector<bool> hit(n, false);
    for (int v : w) {
        if (v < 0 || v >= n || hit[v])
            throw InvariantViolation("not a permutation of the factors");
        hit[v] = true;
    }
}

HomData validated(HomData d, const char* what) {
    auto rep = validate(d);
    if (!rep.ok())
        throw InvariantViolation(std::string(what) + ": generator data invalid\n" +
                                 rep.to_string());
    return d;
}

}  // namespace

HomData generator_to_hom(const TameGenerator& gen, const AlgebraPtr& alg) {
    const int n = alg->n;
    HomData d = identity_hom(alg);

    if (const auto* perm = std::get_if<PermGen>(&gen)) {
        check_permutation(perm->w, n);
        d.w = perm->w;
        return validated(std::move(d), "perm generator");
    }

    if (const auto* fac = std::get_if<FactorGen>(&gen)) {
        const int j = fac->factor;
        if (j < 0 || j >= n) throw InvariantViolation("factor index out of range");
        const auto& g = fac->aut;
        if (g.tau != 0 && g.tau != 1)
            throw InvariantViolation("single-factor tau must be 0 or 1");
        auto mu = g.u.as_monomial();
        auto mup = g.uprime.as_monomial();
        if (!mu || !mup)
            throw InvariantViolation("single-factor units must be monomials");
        // u u' = (-h^{-d})^tau and gamma^d = (q_j^{-d})^tau
        LaurentPoly prod = g.u * g.uprime;
        LaurentPoly expect =
            g.tau ? LaurentPoly::monomial(alg->field, -alg->field->one(),
                                          ExpVec{-alg->d})
                  : LaurentPoly::one(alg->field, 1);
        if (prod != expect)
            throw InvariantViolation("single-factor units do not multiply to (-h^-d)^tau");
        if (g.gamma.pow(alg->d) != alg->q_power(j, -static_cast<long>(g.tau) * alg->d))
            throw InvariantViolation("single-factor gamma fails gamma^d = (q^-d)^tau");

        d.tau[j] = g.tau;
        d.m[j] = g.tau ? -1 : 1;
        d.gamma[j] = g.gamma;
        d.p[j] = g.u;
        d.pprime[j] = g.uprime;
        return validated(std::move(d), "factor generator");
    }

    const auto& twist = std::get<UnitTwistGen>(gen);
    if (static_cast<int>(twist.units.size()) != n)
        throw InvariantViolation("unit twist needs one unit per factor");
    for (int i = 0; i < n; ++i) {
        const auto& u = twist.units[i];
        if (u.coeff.is_zero() || static_cast<int>(u.hexp.size()) != n)
            throw InvariantViolation("unit twist entries must be nonzero units");
    }
    // compatibility u_i sigma_i(u_l) = u_l sigma_l(u_i), i.e.
    // q_i^{a_l[i]} = q_l^{a_i[l]} on the exponent vectors
    for (int i = 0; i < n; ++i) {
        for (int l = i + 1; l < n; ++l) {
            long long diff =
                static_cast<long long>(alg->c[i]) * twist.units[l].hexp[i] -
                static_cast<long long>(alg->c[l]) * twist.units[i].hexp[l];
            if (!alg->field->is_one_of_power(diff))
                throw InvariantViolation("incompatible unit vector for a twist");
        }
    }
    for (int i = 0; i < n; ++i) {
        const auto& u = twist.units[i];
        d.p[i] = LaurentPoly::monomial(alg->field, u.coeff, ExpVec{u.hexp[i]});
        d.pprime[i] =
            LaurentPoly::monomial(alg->field, u.coeff.inv(), ExpVec{-u.hexp[i]});
        d.t[i] = std::vector<int>(u.hexp.begin(), u.hexp.end());
        d.t[i][i] = 0;
    }
    return validated(std::move(d), "unit twist generator");
}

HomData compose_chain(const std::vector<TameGenerator>& gens, const AlgebraPtr& alg) {
    HomData acc = identity_hom(alg);
    for (const auto& gen : gens) acc = compose(acc, generator_to_hom(gen, alg));
    return acc;
}

std::vector<TameGenerator> decompose(const HomData& data) {
    auto rep = validate(data);
    if (!rep.ok())
        throw NotAutomorphism("decompose: bundle invalid\n" + rep.to_string());
    if (!data.source->same_as(*data.target) || !is_automorphism_form(data))
        throw NotAutomorphism("decompose: bundle is not an automorphism of the "
                              "classified form");
    const auto& alg = data.target;
    const int n = alg->n;
    if (!std::all_of(alg->c.begin(), alg->c.end(),
                     [&](int ci) { return ci == alg->c[0]; }))
        throw UnsupportedConfig("decompose: requires q_i all equal");

    const HomData d = canonicalize(data);
    std::vector<int> winv(n);
    for (int i = 0; i < n; ++i) winv[d.w[i]] = i;

    std::vector<TameGenerator> chain;
    if (!is_identity_perm(d.w)) chain.push_back(PermGen{d.w});

    // Factor generators strip tau and gamma; a unit twist absorbs the rest.
    std::vector<UnitMono> residual;
    residual.reserve(n);
    bool any_unit = false;
    for (int j = 0; j < n; ++j) {
        const int i = winv[j];
        auto [ec, ee] = composite_unit(d, i);
        if (d.tau[i] == 1) {
            chain.push_back(
                FactorGen{j, SingleFactorAut{1, d.gamma[i], d.p[i], d.pprime[i]}});
            // residual twist V_j = sigma_j(e_i^{-1} p_i), a pure h-monomial
            auto pm = *d.p[i].as_monomial();
            Scalar coeff = pm.first / ec;
            ExpVec he = ee;
            for (auto& v : he) v = -v;
            he[j] += pm.second[0];
            coeff = coeff * alg->q_power(j, he[j]);
            residual.push_back({std::move(coeff), std::move(he)});
        } else {
            if (!d.gamma[i].is_one()) {
                chain.push_back(FactorGen{
                    j, SingleFactorAut{0, d.gamma[i], LaurentPoly::one(alg->field, 1),
                                       LaurentPoly::one(alg->field, 1)}});
            }
            residual.push_back({ec, ee});
        }
        if (!residual.back().coeff.is_one() ||
            std::any_of(residual.back().hexp.begin(), residual.back().hexp.end(),
                        [](int v) { return v != 0; }))
            any_unit = true;
    }
    if (any_unit) chain.push_back(UnitTwistGen{std::move(residual)});
    return chain;
}

std::optional<TameGenerator> as_single_generator(const HomData& data) {
    if (!data.source->same_as(*data.target)) return std::nullopt;
    if (!validate(data).ok() || !is_automorphism_form(data)) return std::nullopt;
    const HomData d = canonicalize(data);
    const auto& alg = d.target;
    const int n = alg->n;

    auto factor_trivial = [&](int i) {
        return d.tau[i] == 0 && d.gamma[i].is_one() && d.p[i].is_one() &&
               d.pprime[i].is_one() &&
               std::all_of(d.t[i].begin(), d.t[i].end(),
                           [](int v) { return v == 0; });
    };

    if (!is_identity_perm(d.w)) {
        for (int i = 0; i < n; ++i)
            if (!factor_trivial(i)) return std::nullopt;
        return TameGenerator(PermGen{d.w});
    }

    // identity permutation: single nontrivial factor automorphism, or a twist
    int special = -1;
    for (int i = 0; i < n; ++i) {
        if (d.tau[i] == 1 || !d.gamma[i].is_one()) {
            if (special >= 0) return std::nullopt;
            special = i;
        }
    }
    if (special >= 0) {
        for (int i = 0; i < n; ++i)
            if (i != special && !factor_trivial(i)) return std::nullopt;
        if (std::any_of(d.t[special].begin(), d.t[special].end(),
                        [](int v) { return v != 0; }))
            return std::nullopt;
        return TameGenerator(FactorGen{
            special, SingleFactorAut{d.tau[special], d.gamma[special], d.p[special],
                                     d.pprime[special]}});
    }

    std::vector<UnitMono> units;
    for (int i = 0; i < n; ++i) {
        auto [ec, ee] = composite_unit(d, i);
        units.push_back({ec, ee});
    }
    return TameGenerator(UnitTwistGen{std::move(units)});
}

TameGenerator invert_generator(const TameGenerator& gen, const AlgebraPtr& alg) {
    if (const auto* perm = std::get_if<PermGen>(&gen)) {
        check_permutation(perm->w, alg->n);
        std::vector<int> winv(perm->w.size());
        for (std::size_t i = 0; i < perm->w.size(); ++i) winv[perm->w[i]] = i;
        return PermGen{std::move(winv)};
    }
    if (const auto* twist = std::get_if<UnitTwistGen>(&gen)) {
        std::vector<UnitMono> units;
        for (const auto& u : twist->units) {
            ExpVec e = u.hexp;
            for (auto& v : e) v = -v;
            units.push_back({u.coeff.inv(), std::move(e)});
        }
        return UnitTwistGen{std::move(units)};
    }
    auto inv = as_single_generator(invert_hom(generator_to_hom(gen, alg)));
    if (!inv)
        throw Error("internal: inverse of a factor generator left the family");
    return *inv;
}

}  // namespace qwa
