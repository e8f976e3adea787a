#include "qwa/randomgen.hpp"

#include <algorithm>
#include <numeric>

namespace qwa {

namespace {

const int kMaxAttempts = 1000;

[[noreturn]] void give_up(const char* what) {
    throw Error(std::string("random generation failed: ") + what);
}

std::vector<int> random_injection(Rng& rng, int r, int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(all[i], all[rng.range(0, i)]);
    all.resize(r);
    return all;
}

// gamma = rho * qt^{-tau} with rho a random d-th root of unity in Q(zeta_L)
Scalar random_gamma(Rng& rng, const ScalarFieldPtr& field, int d, long c_source,
                    int tau) {
    long L = field->config().L;
    long g = std::gcd(L, static_cast<long>(d));
    long step = L / g;
    Scalar rho = field->zeta_power(step * rng.range(0, static_cast<int>(g - 1)));
    if (tau == 0) return rho;
    return rho * field->q_power(-c_source);
}

LaurentPoly a_d_univariate(const ScalarFieldPtr& field, int d, const Scalar& inner,
                           int m) {
    // a_d(inner * h^m) = inner^d h^{md} - 1
    LaurentPoly p =
        LaurentPoly::var_power(field, 1, 0, m * d).scalar_mul(inner.pow(d));
    return p - LaurentPoly::one(field, 1);
}

// Solves p' from the coefficient equation given p and the rest of the data.
LaurentPoly solve_pprime(const HomData& d, int i) {
    const auto& field = d.target->field;
    Scalar inner = field->q_power(d.source->c[i]) * d.gamma[i];
    LaurentPoly rhs = a_d_univariate(field, d.target->d, inner, d.m[i]);
    LaurentPoly divisor = a_d_univariate(
        field, d.target->d, d.target->q_power(d.w[i], 1 - d.tau[i]), 1);
    auto u = LaurentPoly::divide_exact(rhs, divisor);
    if (!u) give_up("coefficient equation has no exact solution");
    return *u * d.p[i].inv_monomial();
}

void fill_t_matrix(Rng& rng, HomData& d) {
    const int r = static_cast<int>(d.w.size());
    const int n = d.target->n;
    std::vector<bool> in_image(n, false);
    for (int j : d.w) in_image[j] = true;

    std::vector<std::vector<int>> s(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int l = i; l < r; ++l) s[i][l] = s[l][i] = rng.range(-1, 1);

    d.t.assign(r, std::vector<int>(n, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!in_image[j]) {
                d.t[i][j] = rng.range(-2, 2);
            }
        }
        for (int l = 0; l < r; ++l) {
            if (l == i) {
                d.t[i][d.w[i]] = rng.range(-2, 2);
            } else {
                // symmetric ansatz keeps the commutation exponent balanced
                d.t[i][d.w[l]] =
                    d.target->c[d.w[i]] * (1 - 2 * d.tau[i]) * s[i][l];
            }
        }
    }
}

HomData assemble_bundle(Rng& rng, const AlgebraPtr& target, const AlgebraPtr& source,
                        std::vector<int> w, std::vector<int> tau, std::vector<int> m,
                        int max_p_exp) {
    HomData d;
    d.source = source;
    d.target = target;
    d.w = std::move(w);
    d.tau = std::move(tau);
    d.m = std::move(m);
    const int r = source->n;
    const auto& field = target->field;
    for (int i = 0; i < r; ++i) {
        d.gamma.push_back(
            random_gamma(rng, field, target->d, source->c[i], d.tau[i]));
        d.b.push_back(random_unit_scalar(rng, field));
    }
    fill_t_matrix(rng, d);
    for (int i = 0; i < r; ++i) {
        Scalar coeff = random_unit_scalar(rng, field);
        d.p.push_back(LaurentPoly::monomial(field, coeff,
                                            ExpVec{rng.range(-max_p_exp, max_p_exp)}));
        d.pprime.push_back(solve_pprime(d, i));
    }
    auto rep = validate(d);
    if (!rep.ok()) give_up("assembled bundle fails validation");
    return d;
}

}  // namespace

AlgebraPtr random_algebra(Rng& rng, const AlgebraOptions& opts) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int n = rng.range(opts.min_n, opts.max_n);
        int d = rng.range(opts.min_d, opts.max_d);
        FieldConfig cfg;
        if (opts.root_mode) {
            cfg.mode = QMode::RootOfUnity;
            const int choices[][2] = {{3, 1}, {5, 1}, {5, 2}, {7, 3}, {12, 5}};
            auto pick = choices[rng.range(0, 4)];
            cfg.L = pick[0];
            cfg.e = pick[1];
        } else {
            cfg.mode = QMode::Transcendental;
            cfg.L = d * rng.range(1, 2);  // d-th roots of unity available
        }
        auto field = ScalarField::make(cfg);
        std::vector<int> c(n);
        int shared = rng.pick_nonzero(2);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            c[i] = opts.uniform_c ? shared : rng.pick_nonzero(2);
            if (field->is_one_of_power(static_cast<long>(c[i]) * d)) ok = false;
        }
        if (!ok) continue;
        return AlgebraConfig::make(field, n, d, std::move(c));
    }
    give_up("no admissible algebra configuration found");
}

Scalar random_unit_scalar(Rng& rng, const ScalarFieldPtr& field) {
    switch (rng.range(0, 5)) {
        case 0: return field->one();
        case 1: return -field->one();
        case 2: return field->from_int(2);
        case 3: return field->from_rational(Rational(1, 2));
        case 4: return field->q_power(rng.coin() ? 1 : -1);
        default:
            return field->config().L > 1 ? field->zeta_power(1) : field->from_int(3);
    }
}

HomData random_valid_bundle(Rng& rng, const AlgebraPtr& target,
                            const BundleOptions& opts) {
    const int n = target->n;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int r = opts.endo ? n : rng.range(1, n);
        std::vector<int> w = random_injection(rng, r, n);
        std::vector<int> tau(r), m(r);
        AlgebraPtr source;
        if (opts.endo) {
            // solve E1 for (tau, m) against the fixed source = target
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                std::vector<std::pair<int, int>> cands;
                for (int t = 0; t <= (opts.allow_tau ? 1 : 0); ++t) {
                    for (int mm = -opts.max_abs_m; mm <= opts.max_abs_m; ++mm) {
                        if (mm == 0) continue;
                        long long diff =
                            static_cast<long long>(target->c[w[i]]) *
                                (t ? -1 : 1) * mm -
                            target->c[i];
                        if (target->field->is_one_of_power(diff))
                            cands.emplace_back(t, mm);
                    }
                }
                if (cands.empty()) {
                    ok = false;
                } else {
                    auto pick = cands[rng.range(0, static_cast<int>(cands.size()) - 1)];
                    tau[i] = pick.first;
                    m[i] = pick.second;
                }
            }
            if (!ok) continue;
            source = target;
        } else {
            // derive the source deformation exponents from E1
            std::vector<int> cs(r);
            bool ok = true;
            for (int i = 0; i < r; ++i) {
                tau[i] = opts.allow_tau && rng.coin() ? 1 : 0;
                m[i] = rng.pick_nonzero(opts.max_abs_m);
                long long csi = static_cast<long long>(target->c[w[i]]) *
                                (tau[i] ? -1 : 1) * m[i];
                if (csi == 0 ||
                    target->field->is_one_of_power(csi * target->d)) {
                    ok = false;
                    break;
                }
                cs[i] = static_cast<int>(csi);
            }
            if (!ok) continue;
            source = AlgebraConfig::make(target->field, r, target->d, std::move(cs));
        }
        return assemble_bundle(rng, target, source, std::move(w), std::move(tau),
                               std::move(m), 2);
    }
    give_up("no valid bundle found");
}

HomData random_automorphism_bundle(Rng& rng, const AlgebraPtr& target) {
    const int n = target->n;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<int> w = random_injection(rng, n, n);
        std::vector<int> tau(n), m(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::vector<std::pair<int, int>> cands;
            for (int t = 0; t <= 1; ++t) {
                for (int mm : {-1, 1}) {
                    long long diff = static_cast<long long>(target->c[w[i]]) *
                                         (t ? -1 : 1) * mm -
                                     target->c[i];
                    if (target->field->is_one_of_power(diff)) cands.emplace_back(t, mm);
                }
            }
            if (cands.empty()) {
                ok = false;
            } else {
                auto pick = cands[rng.range(0, static_cast<int>(cands.size()) - 1)];
                tau[i] = pick.first;
                m[i] = pick.second;
            }
        }
        if (!ok) continue;
        HomData d = assemble_bundle(rng, target, target, std::move(w), std::move(tau),
                                    std::move(m), 2);
        if (!is_automorphism_form(d)) continue;
        return d;
    }
    give_up("no automorphism bundle found");
}

HomData random_violation(Rng& rng, const AlgebraPtr& target, HomEquation eq) {
    const auto& field = target->field;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (eq == HomEquation::E1) {
            // force tau = 1 at the perturbed index so the coefficient equation
            // stays solvable for the shifted source exponent
            BundleOptions opts;
            HomData d = random_valid_bundle(rng, target, opts);
            const int r = d.source->n;
            int i0 = -1;
            for (int i = 0; i < r; ++i)
                if (d.tau[i] == 1) i0 = i;
            if (i0 < 0) continue;
            int delta = rng.pick_nonzero(2);
            std::vector<int> cs = d.source->c;
            long long moved = static_cast<long long>(cs[i0]) + delta;
            if (moved == 0 || field->is_one_of_power(moved * target->d)) continue;
            long long e1 = static_cast<long long>(d.target->c[d.w[i0]]) * (-1) *
                               d.m[i0] -
                           moved;
            if (field->is_one_of_power(e1)) continue;  // still satisfied mod order
            cs[i0] = static_cast<int>(moved);
            d.source = AlgebraConfig::make(field, r, target->d, std::move(cs));
            d.gamma[i0] = random_gamma(rng, field, target->d, d.source->c[i0], 1);
            d.pprime[i0] = solve_pprime(d, i0);
            auto rep = validate(d);
            if (rep.structural.empty() && rep.failures.size() == 1 &&
                rep.failures[0].equation == HomEquation::E1)
                return d;
            continue;
        }

        if (eq == HomEquation::E2) {
            if (target->n < 2) throw PreconditionFailed("E2 violation needs n >= 2");
            BundleOptions opts;
            opts.endo = true;  // guarantees r = n >= 2
            HomData d = random_valid_bundle(rng, target, opts);
            const int r = d.source->n;
            int i0 = rng.range(0, r - 1);
            int l0 = (i0 + 1 + rng.range(0, r - 2)) % r;
            d.t[i0][d.w[l0]] += 1;  // asymmetric bump breaks the balance
            auto rep = validate(d);
            if (rep.structural.empty() && rep.failures.size() == 1 &&
                rep.failures[0].equation == HomEquation::E2)
                return d;
            continue;
        }

        if (eq == HomEquation::E3) {
            HomData d = random_valid_bundle(rng, target, {});
            int i0 = rng.range(0, d.source->n - 1);
            LaurentPoly bump =
                LaurentPoly::one(field, 1) + LaurentPoly::var_power(field, 1, 0, 1);
            d.p[i0] = d.p[i0] * bump;
            auto rep = validate(d);
            if (rep.structural.empty() && rep.failures.size() == 1 &&
                rep.failures[0].equation == HomEquation::E3)
                return d;
            continue;
        }

        // E4: scaling gamma by 2 breaks gamma^d = q~^{-tau d}; the coefficient
        // equation necessarily breaks alongside.
        HomData d = random_valid_bundle(rng, target, {});
        int i0 = rng.range(0, d.source->n - 1);
        d.gamma[i0] = d.gamma[i0] * field->from_int(2);
        auto rep = validate(d);
        if (rep.structural.empty() && rep.fails(HomEquation::E4)) return d;
    }
    give_up("no violation bundle found");
}

GwaElement random_element(Rng& rng, const AlgebraPtr& alg, int max_terms,
                          int max_exp, int max_grade) {
    GwaElement e = GwaElement::zero(alg);
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        ExpVec exps(alg->n);
        GradeVec grade(alg->n);
        for (int i = 0; i < alg->n; ++i) {
            exps[i] = rng.range(-max_exp, max_exp);
            grade[i] = rng.range(-max_grade, max_grade);
        }
        e = e + GwaElement::monomial(alg, random_unit_scalar(rng, alg->field),
                                     std::move(exps), std::move(grade));
    }
    return e;
}

WordSum random_word(Rng& rng, const AlgebraPtr& alg, int length) {
    FreeWord w;
    for (int i = 0; i < length; ++i) {
        LetterKind kind;
        switch (rng.range(0, 3)) {
            case 0: kind = LetterKind::H; break;
            case 1: kind = LetterKind::HInv; break;
            case 2: kind = LetterKind::X; break;
            default: kind = LetterKind::Y; break;
        }
        w.push_back({kind, rng.range(0, alg->n - 1)});
    }
    WordSum ws;
    ws.terms.emplace_back(alg->field->one(), std::move(w));
    return ws;
}

}  // namespace qwa
