#include <iostream>

#include "qwa/dixmier.hpp"
#include "qwa/literal.hpp"
#include "qwa/oracle.hpp"
#include "qwa/randomgen.hpp"
#include "qwa/serialize.hpp"
#include "qwa/tame.hpp"
#include "qwa/torus.hpp"

using namespace qwa;

int main() {
    // A(1,1,q) transcendental
    FieldConfig fc;
    fc.L = 1;
    auto field = ScalarField::make(fc);
    auto alg = AlgebraConfig::make(field, 1, 1, {1});

    auto x = GwaElement::gen_x(alg, 0);
    auto y = GwaElement::gen_y(alg, 0);
    auto h = GwaElement::gen_h(alg, 0);

    std::cout << "relations(1,1): " << relations_hold(alg) << "\n";
    auto yx = y * x;
    std::cout << "y*x components: " << yx.components().size() << " coeff "
              << to_literal1(LaurentPoly::zero(field, 1)) << "\n";
    for (auto& [g, c] : yx.components()) {
        std::cout << "  grade " << g[0] << ":";
        for (auto& [e, s] : c.terms())
            std::cout << "  h^" << e[0] << " * (" << to_literal(s) << ")";
        std::cout << "\n";
    }

    // flip bundle: tau=1, m=-1, gamma=q^-1, p=-h^-1, p'=1
    HomData flip = identity_hom(alg);
    flip.tau = {1};
    flip.m = {-1};
    flip.gamma = {field->q_power(-1)};
    flip.p = {parse_laurent1("-h^-1", field)};
    flip.pprime = {parse_laurent1("1", field)};
    auto rep = validate(flip);
    std::cout << "flip validate: " << rep.ok() << "\n" << rep.to_string();
    std::cout << "flip relations: " << check_relations(flip) << "\n";

    auto im = build_images(flip);
    std::cout << "flip x image (expect -h^-1 y): ";
    for (auto& [g, c] : im.x[0].components()) {
        std::cout << "grade " << g[0] << ":";
        for (auto& [e, s] : c.terms()) std::cout << " h^" << e[0] << "*(" << to_literal(s) << ")";
    }
    std::cout << "\nflip y image (expect x): ";
    for (auto& [g, c] : im.y[0].components()) {
        std::cout << "grade " << g[0] << ":";
        for (auto& [e, s] : c.terms()) std::cout << " h^" << e[0] << "*(" << to_literal(s) << ")";
    }
    std::cout << "\n";

    // apply flip to y*x = h-1 : expect q^-1 h^-1 - 1
    auto img = apply_hom(flip, yx);
    std::cout << "flip(h-1): ";
    for (auto& [g, c] : img.components()) {
        std::cout << "grade " << g[0] << ":";
        for (auto& [e, s] : c.terms()) std::cout << " h^" << e[0] << "*(" << to_literal(s) << ")";
    }
    std::cout << "\n";

    // invert flip: phi(h) = q^-1 h^-1
    auto inv = invert_hom(flip);
    std::cout << "flip inverse gamma: " << to_literal(inv.gamma[0]) << " m " << inv.m[0]
              << " tau " << inv.tau[0] << " p " << to_literal1(inv.p[0]) << "\n";
    std::cout << "compose(flip, inv) identity: " << is_identity(compose(flip, inv)) << "\n";
    std::cout << "compose(inv, flip) identity: " << is_identity(compose(inv, flip)) << "\n";

    auto ff = compose(flip, flip);
    std::cout << "flip^2: m=" << ff.m[0] << " tau=" << ff.tau[0] << " gamma="
              << to_literal(ff.gamma[0]) << " p=" << to_literal1(ff.p[0])
              << " p'=" << to_literal1(ff.pprime[0]) << "\n";

    // decompose flip^2 (a unit twist by -q h)
    auto chain = decompose(ff);
    std::cout << "flip^2 chain size: " << chain.size() << "\n";
    std::cout << "chain json:\n" << canonical_dump(chain_to_json(chain, alg));
    std::cout << "chain recomposes: " << hom_equal(compose_chain(chain, alg), ff) << "\n";

    // root counterexample on A(1,1), L=3, e=1
    FieldConfig rc;
    rc.L = 3;
    rc.mode = QMode::RootOfUnity;
    rc.e = 1;
    auto rfield = ScalarField::make(rc);
    auto ralg = AlgebraConfig::make(rfield, 1, 1, {1});
    auto ce = root_counterexample(ralg, 0);
    std::cout << "counterexample m: " << ce.m[0] << " p: " << to_literal1(ce.p[0]) << "\n";
    std::cout << "ce validate: " << validate(ce).ok() << " relations: " << check_relations(ce)
              << " autform: " << is_automorphism_form(ce) << "\n";
    std::cout << "ce bounded inverse: " << bounded_inverse_search(ce, 4).has_value() << "\n";

    // torus embeddings on y*x
    std::cout << "phi(yx) terms: " << embed_phi(yx).terms().size()
              << " phi'(xy) terms: " << embed_phi_prime(x * y).terms().size() << "\n";

    // random bundle + decompose round trip
    Rng rng(7);
    AlgebraOptions aopts;
    aopts.uniform_c = true;
    for (int i = 0; i < 10; ++i) {
        auto t = random_algebra(rng, aopts);
        auto d = random_automorphism_bundle(rng, t);
        auto ch = decompose(d);
        bool ok = hom_equal(compose_chain(ch, t), d);
        std::cout << "decompose trial " << i << " n=" << t->n << " d=" << t->d
                  << " chain=" << ch.size() << " ok=" << ok << "\n";
        if (!ok) return 1;
    }

    // random valid bundles satisfy relations
    for (int i = 0; i < 10; ++i) {
        AlgebraOptions ao;
        ao.root_mode = i % 2;
        auto t = random_algebra(rng, ao);
        BundleOptions bo;
        bo.endo = i % 3 == 0;
        auto d = random_valid_bundle(rng, t, bo);
        std::cout << "bundle trial " << i << " relations=" << check_relations(d) << "\n";
    }
    std::cout << "scratch done\n";
    return 0;
}
