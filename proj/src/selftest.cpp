#include "qwa/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "qwa/dixmier.hpp"
#include "qwa/literal.hpp"
#include "qwa/randomgen.hpp"
#include "qwa/serialize.hpp"
#include "qwa/tame.hpp"
#include "qwa/torus.hpp"

namespace qwa {

namespace {

int scaled(double scale, int full, int floor_count) {
    return std::max(floor_count, static_cast<int>(std::lround(full * scale)));
}

// ------------------------------------------------------------------ C3 oracle
//
// Bounded inverse search, independent of the element engine: candidate
// inverses v = sum c_{s,j} h^j w_s range over a box, the products a * h^j w_s
// are computed by the free-word rewriter, and the linear system "a v = 1" is
// solved exactly by Gaussian elimination over the ground field.

GwaElement oracle_product(const GwaElement& a, int exp, int grade) {
    const auto& alg = a.algebra();
    WordSum ws = word_of_element(a);
    for (auto& [c, w] : ws.terms) {
        for (int k = 0; k < exp; ++k) w.push_back({LetterKind::H, 0});
        for (int k = 0; k < -exp; ++k) w.push_back({LetterKind::HInv, 0});
        for (int k = 0; k < grade; ++k) w.push_back({LetterKind::X, 0});
        for (int k = 0; k < -grade; ++k) w.push_back({LetterKind::Y, 0});
    }
    return rewrite_to_normal_form(ws, alg);
}

bool bounded_inverse_exists(const GwaElement& a, int grade_box, int exp_box) {
    const auto& alg = a.algebra();
    if (alg->n != 1) throw Error("bounded_inverse_exists supports n = 1 only");
    const auto& field = alg->field;

    struct Key {
        int grade, exp;
        bool operator<(const Key& o) const {
            return grade != o.grade ? grade < o.grade : exp < o.exp;
        }
    };

    std::vector<std::pair<int, int>> basis;
    std::vector<GwaElement> products;
    std::map<Key, int> rows;
    auto row_of = [&rows](int grade, int exp) {
        return rows.emplace(Key{grade, exp}, static_cast<int>(rows.size()))
            .first->second;
    };
    row_of(0, 0);  // the right-hand side lives at grade 0, exponent 0

    for (int s = -grade_box; s <= grade_box; ++s) {
        for (int j = -exp_box; j <= exp_box; ++j) {
            basis.emplace_back(s, j);
            products.push_back(oracle_product(a, j, s));
            for (const auto& [g, coeff] : products.back().components())
                for (const auto& [e, c] : coeff.terms()) row_of(g[0], e[0]);
        }
    }

    const int R = static_cast<int>(rows.size());
    const int C = static_cast<int>(basis.size());
    std::vector<std::vector<Scalar>> M(R, std::vector<Scalar>(C + 1, field->zero()));
    for (int col = 0; col < C; ++col)
        for (const auto& [g, coeff] : products[col].components())
            for (const auto& [e, c] : coeff.terms())
                M[row_of(g[0], e[0])][col] = c;
    M[row_of(0, 0)][C] = field->one();

    // forward elimination with exact arithmetic
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int pr = -1;
        for (int r = row; r < R; ++r) {
            if (!M[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        Scalar inv = M[row][col].inv();
        for (int c2 = col; c2 <= C; ++c2)
            if (!M[row][c2].is_zero()) M[row][c2] = M[row][c2] * inv;
        for (int r = 0; r < R; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            Scalar f = M[r][col];
            for (int c2 = col; c2 <= C; ++c2) {
                if (M[row][c2].is_zero()) continue;
                M[r][c2] = M[r][c2] - f * M[row][c2];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < R; ++r)
        if (!M[r][C].is_zero()) return false;  // inconsistent: no inverse in the box

    // a solution exists; reconstruct it and confirm a * v = 1 by the oracle
    std::vector<Scalar> x(C, field->zero());
    for (int pr = row - 1; pr >= 0; --pr) x[pivot_col[pr]] = M[pr][C];
    GwaElement check = GwaElement::zero(a.algebra());
    for (int col = 0; col < C; ++col)
        if (!x[col].is_zero()) check = check + products[col].scalar_mul(x[col]);
    return check == GwaElement::one(a.algebra());
}

// ------------------------------------------------------------------ criteria

struct Ctx {
    SelfTestOptions opts;
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() < 500) detail << what << "; ";
        }
    }
};

AlgebraPtr make_algebra(QMode mode, int L, int e, int n, int d,
                        const std::vector<int>& c) {
    FieldConfig cfg;
    cfg.L = L;
    cfg.mode = mode;
    cfg.e = e;
    return AlgebraConfig::make(ScalarField::make(cfg), n, d, c);
}

void criterion_relations(Ctx& ctx) {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 1; d <= 3; ++d) {
            std::vector<int> c;
            for (int i = 0; i < n; ++i) c.push_back(i % 2 == 0 ? 1 : 2);
            std::string failure;
            auto trans = make_algebra(QMode::Transcendental, 6, 0, n, d, c);
            ctx.expect(relations_hold(trans, &failure),
                       "transcendental n=" + std::to_string(n) + " d=" +
                           std::to_string(d) + ": " + failure);
            auto root = make_algebra(QMode::RootOfUnity, 5, 2, n, d, c);
            ctx.expect(relations_hold(root, &failure),
                       "root n=" + std::to_string(n) + " d=" + std::to_string(d) +
                           ": " + failure);
        }
    }
}

void criterion_oracle(Ctx& ctx) {
    const int words = scaled(ctx.opts.scale, 1000, 50);
    Rng rng(ctx.opts.seed + 2);
    for (int mode = 0; mode < 2; ++mode) {
        AlgebraPtr alg =
            mode == 0 ? make_algebra(QMode::Transcendental, 1, 0, 2, 2, {1, 2})
                      : make_algebra(QMode::RootOfUnity, 5, 1, 2, 2, {1, 2});
        for (int it = 0; it < words; ++it) {
            WordSum ws = random_word(rng, alg, rng.range(0, 6));
            GwaElement via_oracle = rewrite_to_normal_form(ws, alg);
            // same word folded through graded multiplication
            GwaElement via_mul = GwaElement::one(alg);
            for (const auto& letter : ws.terms[0].second) {
                GwaElement g = GwaElement::zero(alg);
                switch (letter.kind) {
                    case LetterKind::H: g = GwaElement::gen_h(alg, letter.factor); break;
                    case LetterKind::HInv:
                        g = GwaElement::gen_h(alg, letter.factor, -1);
                        break;
                    case LetterKind::X: g = GwaElement::gen_x(alg, letter.factor); break;
                    case LetterKind::Y: g = GwaElement::gen_y(alg, letter.factor); break;
                }
                via_mul = via_mul * g;
            }
            ctx.expect(via_oracle == via_mul, "oracle/mul mismatch");
            if (!ctx.ok) return;
        }
    }
}

void criterion_units(Ctx& ctx) {
    // brute-force agreement on the 1- and 2-term family
    auto alg = make_algebra(QMode::Transcendental, 1, 0, 1, 1, {1});
    std::vector<GwaElement> family;
    std::vector<GwaElement> monos;
    for (int k = -2; k <= 2; ++k)
        for (int a = -2; a <= 2; ++a)
            monos.push_back(GwaElement::monomial(alg, alg->field->one(), ExpVec{a},
                                                 GradeVec{k}));
    for (const auto& m : monos) family.push_back(m);
    const int stride =
        std::max(1, static_cast<int>(std::lround(1.0 / std::max(0.05, ctx.opts.scale))));
    int pair_index = 0;
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = i + 1; j < monos.size(); ++j)
            if (pair_index++ % stride == 0) family.push_back(monos[i] + monos[j]);

    for (const auto& elem : family) {
        bool recognized = recognize_unit(elem).has_value();
        bool searched = bounded_inverse_exists(elem, 2, 4);
        ctx.expect(recognized == searched, "unit recognizer disagrees with search");
        if (recognized) {
            auto [gam, exps] = *recognize_unit(elem);
            ExpVec neg = exps;
            for (auto& v : neg) v = -v;
            GwaElement inv = GwaElement::monomial(alg, gam.inv(), neg,
                                                  GradeVec(alg->n, 0));
            ctx.expect(elem * inv == GwaElement::one(alg),
                       "claimed unit is not invertible");
        }
        if (!ctx.ok) return;
    }

    // torus embeddings preserve random products
    const int pairs = scaled(ctx.opts.scale, 500, 25);
    Rng rng(ctx.opts.seed + 3);
    auto alg2 = make_algebra(QMode::Transcendental, 2, 0, 2, 2, {1, 2});
    for (int it = 0; it < pairs; ++it) {
        GwaElement a = random_element(rng, alg2, 2, 2, 1);
        GwaElement b = random_element(rng, alg2, 2, 2, 1);
        GwaElement ab = a * b;
        ctx.expect(embed_phi(ab) == embed_phi(a) * embed_phi(b),
                   "phi does not preserve a product");
        ctx.expect(embed_phi_prime(ab) == embed_phi_prime(a) * embed_phi_prime(b),
                   "phi' does not preserve a product");
        ctx.expect((embed_phi(a) == TorusElement::zero(alg2)) == a.is_zero(),
                   "phi kernel evidence failed");
        if (!ctx.ok) return;
    }
}

void criterion_classification(Ctx& ctx) {
    const int bundles = scaled(ctx.opts.scale, 200, 12);
    Rng rng(ctx.opts.seed + 4);
    for (int it = 0; it < bundles; ++it) {
        AlgebraOptions aopts;
        aopts.root_mode = it % 2 == 1;
        AlgebraPtr target = random_algebra(rng, aopts);
        BundleOptions bopts;
        bopts.endo = rng.coin();
        HomData d = random_valid_bundle(rng, target, bopts);
        ctx.expect(validate(d).ok(), "generated bundle fails validation");
        ctx.expect(check_relations(d), "valid bundle violates a relation");
        if (!ctx.ok) return;
    }

    const int violations = scaled(ctx.opts.scale, 20, 4);
    for (HomEquation eq : {HomEquation::E1, HomEquation::E2, HomEquation::E3,
                           HomEquation::E4}) {
        for (int it = 0; it < violations; ++it) {
            AlgebraOptions aopts;
            aopts.root_mode = it % 2 == 1;
            if (eq == HomEquation::E2) aopts.min_n = 2;
            AlgebraPtr target = random_algebra(rng, aopts);
            HomData d = random_violation(rng, target, eq);
            auto rep = validate(d);
            ctx.expect(rep.fails(eq),
                       "violation generator missed " + equation_name(eq));
            ctx.expect(!check_relations(d),
                       equation_name(eq) + " violation still satisfies relations");
            if (!ctx.ok) return;
        }
    }
}

void criterion_inverses(Ctx& ctx) {
    const int bundles = scaled(ctx.opts.scale, 100, 8);
    Rng rng(ctx.opts.seed + 5);
    for (int it = 0; it < bundles; ++it) {
        AlgebraOptions aopts;
        aopts.uniform_c = it % 2 == 0;
        AlgebraPtr target = random_algebra(rng, aopts);
        HomData d = random_automorphism_bundle(rng, target);
        HomData inv = invert_hom(d);
        ctx.expect(validate(inv).ok(), "inverse bundle fails validation");
        ctx.expect(is_identity(compose(d, inv)), "psi . psi^-1 is not the identity");
        ctx.expect(is_identity(compose(inv, d)), "psi^-1 . psi is not the identity");
        if (!ctx.ok) return;
    }
}

void criterion_counterexamples(Ctx& ctx) {
    struct Case {
        int L, e, n, d, factor;
    };
    const Case cases[] = {{3, 1, 1, 1, 0}, {3, 1, 2, 1, 1}, {5, 2, 1, 2, 0}};
    for (const auto& cs : cases) {
        auto alg = make_algebra(QMode::RootOfUnity, cs.L, cs.e, cs.n, cs.d,
                                std::vector<int>(cs.n, 1));
        HomData d = root_counterexample(alg, cs.factor);
        ctx.expect(validate(d).ok(), "counterexample fails validation");
        ctx.expect(check_relations(d), "counterexample violates a relation");
        ctx.expect(!is_automorphism_form(d), "counterexample looks invertible");
        long t = q_factor_order(alg, cs.factor);
        ctx.expect(d.m[cs.factor] == static_cast<int>(t) + 1,
                   "counterexample exponent is not t+1");
        ctx.expect(!bounded_inverse_search(d, static_cast<int>(t) + 1).has_value(),
                   "bounded search found an inverse");
        if (!ctx.ok) return;
    }
}

void criterion_decomposition(Ctx& ctx) {
    const int bundles = scaled(ctx.opts.scale, 100, 8);
    Rng rng(ctx.opts.seed + 7);
    for (int it = 0; it < bundles; ++it) {
        AlgebraOptions aopts;
        aopts.uniform_c = true;
        AlgebraPtr target = random_algebra(rng, aopts);
        HomData d = random_automorphism_bundle(rng, target);
        auto chain = decompose(d);
        ctx.expect(static_cast<int>(chain.size()) <= target->n + 2,
                   "decomposition longer than n + 2");
        HomData back = compose_chain(chain, target);
        ctx.expect(hom_equal(back, d), "decomposition does not recompose");
        if (!ctx.ok) return;
    }
}

void criterion_serialization(Ctx& ctx) {
    const int count = scaled(ctx.opts.scale, 50, 6);
    auto run_once = [&](std::uint64_t seed, std::vector<std::string>& dumps) {
        Rng rng(seed);
        for (int it = 0; it < count; ++it) {
            AlgebraOptions aopts;
            aopts.root_mode = it % 3 == 2;
            AlgebraPtr target = random_algebra(rng, aopts);
            HomData d = random_valid_bundle(rng, target, {});
            Json j = hom_to_json(d);
            HomData d2 = hom_from_json(j);
            ctx.expect(hom_equal(d, d2), "bundle does not survive a round-trip");
            ctx.expect(canonical_dump(hom_to_json(d2)) == canonical_dump(j),
                       "bundle bytes changed over a round-trip");
            dumps.push_back(canonical_dump(j));

            GwaElement elem = random_element(rng, target, 3, 2, 2);
            Json je = element_to_json(elem);
            ctx.expect(element_from_json(je) == elem,
                       "element does not survive a round-trip");
            dumps.push_back(canonical_dump(je));

            AlgebraOptions uopts;
            uopts.uniform_c = true;
            AlgebraPtr ualg = random_algebra(rng, uopts);
            auto chain = decompose(random_automorphism_bundle(rng, ualg));
            Json jc = chain_to_json(chain, ualg);
            AlgebraPtr alg_back;
            auto chain2 = chain_from_json(jc, &alg_back);
            ctx.expect(canonical_dump(chain_to_json(chain2, alg_back)) ==
                           canonical_dump(jc),
                       "chain bytes changed over a round-trip");
            dumps.push_back(canonical_dump(jc));
            if (!ctx.ok) return;
        }
    };
    std::vector<std::string> first, second;
    run_once(ctx.opts.seed + 8, first);
    if (!ctx.ok) return;
    run_once(ctx.opts.seed + 8, second);
    ctx.expect(first == second, "re-run with the same seed changed bytes");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelfTestOptions& opts) {
    struct Entry {
        int id;
        const char* name;
        double budget;
        std::function<void(Ctx&)> fn;
    };
    const Entry entries[] = {
        {1, "defining relations hold for n,d <= 3 in both field modes", 5.0,
         criterion_relations},
        {2, "multiplication agrees with the free-word oracle", 60.0, criterion_oracle},
        {3, "unit recognition matches bounded search and torus embeddings", 60.0,
         criterion_units},
        {4, "valid bundles satisfy relations; single violations fail", 120.0,
         criterion_classification},
        {5, "automorphism bundles invert exactly on both sides", 120.0,
         criterion_inverses},
        {6, "root-of-unity counterexamples validate and admit no inverse", 60.0,
         criterion_counterexamples},
        {7, "decomposition into tame generators recomposes exactly", 120.0,
         criterion_decomposition},
        {8, "serialization round-trips are exact and deterministic", 10.0,
         criterion_serialization},
    };

    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        Ctx ctx;
        ctx.opts = opts;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(ctx);
        } catch (const std::exception& e) {
            ctx.ok = false;
            ctx.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        bool in_budget = secs < entry.budget;
        results.push_back({entry.id, entry.name, ctx.ok && in_budget, secs,
                           entry.budget,
                           ctx.ok && !in_budget ? "over time budget" : ctx.detail.str()});
    }
    return results;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
            << " [" << r.seconds << " s / budget " << r.budget_seconds << " s]";
        if (!r.passed && !r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    return all;
}

}  // namespace qwa
