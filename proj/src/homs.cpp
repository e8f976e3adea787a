#include "qwa/homs.hpp"

#include <algorithm>
#include <sstream>

namespace qwa {

std::string equation_name(HomEquation eq) {
    switch (eq) {
        case HomEquation::E1: return "E1";
        case HomEquation::E2: return "E2";
        case HomEquation::E3: return "E3";
        case HomEquation::E4: return "E4";
    }
    return "?";
}

bool ValidationReport::fails(HomEquation eq) const {
    return std::any_of(failures.begin(), failures.end(),
                       [eq](const EquationFailure& f) { return f.equation == eq; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& s : structural) os << "structural: " << s << "\n";
    for (const auto& f : failures) {
        os << equation_name(f.equation) << " failed at i=" << (f.i + 1);
        if (f.l >= 0) os << ", l=" << (f.l + 1);
        os << "\n";
    }
    if (ok()) os << "ok\n";
    return os.str();
}

namespace {

std::vector<std::string> structural_problems(const HomData& d) {
    std::vector<std::string> out;
    if (!d.source || !d.target) {
        out.push_back("missing source or target algebra");
        return out;
    }
    const std::size_t r = static_cast<std::size_t>(d.source->n);
    const int n = d.target->n;
    if (!d.source->field->compatible(*d.target->field))
        out.push_back("source and target ground fields differ");
    if (d.source->d != d.target->d)
        out.push_back("source and target must share the same d");
    if (d.w.size() != r || d.tau.size() != r || d.m.size() != r ||
        d.gamma.size() != r || d.b.size() != r || d.t.size() != r ||
        d.p.size() != r || d.pprime.size() != r)
        out.push_back("parameter vectors must all have length r");
    if (!out.empty()) return out;

    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < r; ++i) {
        if (d.w[i] < 0 || d.w[i] >= n) {
            out.push_back("w maps outside the target factors");
            break;
        }
        if (hit[d.w[i]]) {
            out.push_back("w is not injective");
            break;
        }
        hit[d.w[i]] = true;
    }
    for (std::size_t i = 0; i < r && out.empty(); ++i) {
        if (d.tau[i] != 0 && d.tau[i] != 1) out.push_back("tau entries must be 0 or 1");
        else if (d.m[i] == 0) out.push_back("m entries must be nonzero");
        else if (d.gamma[i].is_zero()) out.push_back("gamma entries must be nonzero");
        else if (d.b[i].is_zero()) out.push_back("b entries must be nonzero");
        else if (d.t[i].size() != static_cast<std::size_t>(n))
            out.push_back("t rows must have length n");
        else if (d.p[i].arity() != 1 || d.p[i].is_zero())
            out.push_back("p entries must be nonzero univariate Laurent polynomials");
        else if (d.pprime[i].arity() != 1 || d.pprime[i].is_zero())
            out.push_back("p' entries must be nonzero univariate Laurent polynomials");
    }
    return out;
}

void require_structural(const HomData& d) {
    auto probs = structural_problems(d);
    if (!probs.empty()) throw StructuralError(probs.front());
}

}  // namespace

ValidationReport validate(const HomData& d) {
    ValidationReport rep;
    rep.structural = structural_problems(d);
    if (!rep.structural.empty()) return rep;

    const int r = d.source->n;
    const auto& field = d.target->field;

    for (int i = 0; i < r; ++i) {
        const int j = d.w[i];
        const int sign = d.tau[i] ? -1 : 1;
        // E1 as an exponent identity for powers of q
        long long e1 = static_cast<long long>(d.target->c[j]) * sign * d.m[i] -
                       d.source->c[i];
        if (!field->is_one_of_power(e1))
            rep.failures.push_back({HomEquation::E1, i});
    }

    // E2 is symmetric in (i, l) and trivial on the diagonal.
    for (int i = 0; i < r; ++i) {
        for (int l = i + 1; l < r; ++l) {
            long long e2 =
                static_cast<long long>(d.target->c[d.w[i]]) * d.t[l][d.w[i]] *
                    (1 - 2 * d.tau[i]) -
                static_cast<long long>(d.target->c[d.w[l]]) * d.t[i][d.w[l]] *
                    (1 - 2 * d.tau[l]);
            if (!field->is_one_of_power(e2))
                rep.failures.push_back({HomEquation::E2, i, l});
        }
    }

    const int dd = d.target->d;
    for (int i = 0; i < r; ++i) {
        const int j = d.w[i];
        // E3 in the univariate Laurent ring of h_{w(i)}
        Scalar q_shift = d.target->q_power(j, 1 - d.tau[i]);
        LaurentPoly divisor =
            LaurentPoly::var_power(field, 1, 0, dd).scalar_mul(q_shift.pow(dd)) -
            LaurentPoly::one(field, 1);
        LaurentPoly lhs = d.p[i] * d.pprime[i] * divisor;
        Scalar inner = field->q_power(d.source->c[i]) * d.gamma[i];
        LaurentPoly rhs =
            LaurentPoly::var_power(field, 1, 0, d.m[i] * dd).scalar_mul(inner.pow(dd)) -
            LaurentPoly::one(field, 1);
        if (lhs != rhs) rep.failures.push_back({HomEquation::E3, i});
    }

    for (int i = 0; i < r; ++i) {
        Scalar qt = field->q_power(d.source->c[i]);
        if (d.gamma[i].pow(dd) != qt.pow(-static_cast<long>(d.tau[i]) * dd))
            rep.failures.push_back({HomEquation::E4, i});
    }
    return rep;
}

namespace {

GeneratorImages images_impl(const HomData& d) {
    const auto& tgt = d.target;
    const int r = d.source->n;
    GeneratorImages im;
    im.h.reserve(r);
    im.h_inv.reserve(r);
    im.x.reserve(r);
    im.y.reserve(r);
    for (int i = 0; i < r; ++i) {
        const int j = d.w[i];
        ExpVec he(tgt->n, 0);
        he[j] = d.m[i];
        im.h.push_back(GwaElement::monomial(tgt, d.gamma[i], he, GradeVec(tgt->n, 0)));
        ExpVec hei(tgt->n, 0);
        hei[j] = -d.m[i];
        im.h_inv.push_back(
            GwaElement::monomial(tgt, d.gamma[i].inv(), hei, GradeVec(tgt->n, 0)));

        // x~_i: the coefficient already stands on the left
        ExpVec trow(d.t[i].begin(), d.t[i].end());
        LaurentPoly coeff_x = d.p[i].embed(tgt->n, j).scalar_mul(d.b[i]);
        coeff_x = coeff_x * LaurentPoly::monomial(tgt->field, tgt->field->one(), trow);
        GradeVec gx(tgt->n, 0);
        gx[j] = d.tau[i] ? -1 : 1;
        GwaElement xi = GwaElement::zero(tgt);
        xi.add_component(gx, coeff_x);
        im.x.push_back(std::move(xi));

        // y~_i: the coefficient stands on the right; element multiplication
        // performs the sigma shift into left normal form.
        ExpVec ntrow = trow;
        for (auto& v : ntrow) v = -v;
        LaurentPoly coeff_y = d.pprime[i].embed(tgt->n, j).scalar_mul(d.b[i].inv());
        coeff_y = coeff_y * LaurentPoly::monomial(tgt->field, tgt->field->one(), ntrow);
        GwaElement w_part = d.tau[i] ? GwaElement::gen_x(tgt, j) : GwaElement::gen_y(tgt, j);
        im.y.push_back(w_part * GwaElement::from_coeff(tgt, coeff_y));
    }
    return im;
}

}  // namespace

GeneratorImages build_images(const HomData& d) {
    auto rep = validate(d);
    if (!rep.ok()) throw InvalidData("build_images: invalid bundle\n" + rep.to_string());
    return images_impl(d);
}

GeneratorImages build_images_unchecked(const HomData& d) {
    require_structural(d);
    return images_impl(d);
}

GwaElement apply_hom(const HomData& d, const GwaElement& a) {
    auto rep = validate(d);
    if (!rep.ok()) throw InvalidData("apply: invalid bundle\n" + rep.to_string());
    if (!a.algebra()->same_as(*d.source))
        throw AlgebraMismatch("apply: element does not live in the source algebra");

    GeneratorImages im = images_impl(d);
    const auto& tgt = d.target;
    const int r = d.source->n;

    GwaElement result = GwaElement::zero(tgt);
    for (const auto& [grade, coeff] : a.components()) {
        // image of the Laurent coefficient: h~^a -> prod gamma_i^{a_i} h_{w(i)}^{m_i a_i}
        LaurentPoly cimg = LaurentPoly::zero(tgt->field, tgt->n);
        for (const auto& [exps, c] : coeff.terms()) {
            Scalar s = c;
            ExpVec e(tgt->n, 0);
            for (int i = 0; i < r; ++i) {
                if (exps[i] == 0) continue;
                s = s * d.gamma[i].pow(exps[i]);
                e[d.w[i]] += d.m[i] * exps[i];
            }
            cimg.add_term(e, s);
        }
        GwaElement part = GwaElement::from_coeff(tgt, cimg);
        for (int i = 0; i < r; ++i) {
            if (grade[i] > 0)
                part = part * im.x[i].pow(grade[i]);
            else if (grade[i] < 0)
                part = part * im.y[i].pow(-grade[i]);
        }
        result = result + part;
    }
    return result;
}

bool check_relations(const HomData& d) {
    require_structural(d);
    GeneratorImages im = images_impl(d);
    const auto& tgt = d.target;
    const int r = d.source->n;
    const int dd = d.source->d;
    const auto one = GwaElement::one(tgt);

    for (int i = 0; i < r; ++i) {
        Scalar qt = tgt->field->q_power(d.source->c[i]);  // q~_i
        if (im.h[i] * im.h_inv[i] != one) return false;
        if (im.h_inv[i] * im.h[i] != one) return false;
        if (im.x[i] * im.h[i] != (im.h[i] * im.x[i]).scalar_mul(qt)) return false;
        if (im.y[i] * im.h[i] != (im.h[i] * im.y[i]).scalar_mul(qt.inv()))
            return false;
        // x~ y~ = a_d(q~ h~) and y~ x~ = a_d(h~), applied to the images
        GwaElement qh = im.h[i].scalar_mul(qt);
        if (im.x[i] * im.y[i] != qh.pow(dd) - one) return false;
        if (im.y[i] * im.x[i] != im.h[i].pow(dd) - one) return false;
        for (int l = 0; l < r; ++l) {
            if (l == i) continue;
            if (im.h[i] * im.h[l] != im.h[l] * im.h[i]) return false;
            if (im.h[i] * im.x[l] != im.x[l] * im.h[i]) return false;
            if (im.h[i] * im.y[l] != im.y[l] * im.h[i]) return false;
            if (im.x[i] * im.x[l] != im.x[l] * im.x[i]) return false;
            if (im.x[i] * im.y[l] != im.y[l] * im.x[i]) return false;
            if (im.y[i] * im.y[l] != im.y[l] * im.y[i]) return false;
        }
    }
    return true;
}

namespace {

// Splits a coefficient supported on a line parallel to `axis` into its
// univariate part (exponents along the axis, scalars kept) and the common
// off-axis offset. Throws NotClassifiedForm otherwise.
std::pair<LaurentPoly, ExpVec> split_axis_line(const LaurentPoly& coeff, int axis) {
    if (coeff.is_zero()) throw NotClassifiedForm("zero coefficient in generator image");
    ExpVec base = coeff.terms().begin()->first;
    base[axis] = 0;
    LaurentPoly uni = LaurentPoly::zero(coeff.field(), 1);
    for (const auto& [e, c] : coeff.terms()) {
        ExpVec off = e;
        off[axis] = 0;
        if (off != base)
            throw NotClassifiedForm("coefficient support is not a line along the axis");
        uni.add_term(ExpVec{e[axis]}, c);
    }
    return {std::move(uni), std::move(base)};
}

}  // namespace

HomData extract_hom_data(const GeneratorImages& images, const AlgebraPtr& source,
                         const AlgebraPtr& target) {
    const int r = source->n;
    if (static_cast<int>(images.h.size()) != r ||
        static_cast<int>(images.h_inv.size()) != r ||
        static_cast<int>(images.x.size()) != r ||
        static_cast<int>(images.y.size()) != r)
        throw StructuralError("extract: image count does not match the source");

    HomData d;
    d.source = source;
    d.target = target;
    d.w.resize(r);
    d.tau.resize(r);
    d.m.resize(r);

    const auto one = GwaElement::one(target);
    for (int i = 0; i < r; ++i) {
        auto unit = recognize_unit(images.h[i]);
        if (!unit) throw NotClassifiedForm("h image is not a unit monomial");
        const auto& [gam, exps] = *unit;
        int axis = -1;
        for (int j = 0; j < target->n; ++j) {
            if (exps[j] == 0) continue;
            if (axis >= 0)
                throw NotClassifiedForm("h image involves more than one factor");
            axis = j;
        }
        if (axis < 0) throw NotClassifiedForm("h image has exponent zero");
        if (images.h[i] * images.h_inv[i] != one)
            throw NotClassifiedForm("h and h^-1 images do not multiply to 1");
        d.w[i] = axis;
        d.m[i] = exps[axis];
        d.gamma.push_back(gam);

        // x image: homogeneous of grade +-e_axis with line-shaped coefficient
        if (images.x[i].components().size() != 1)
            throw NotClassifiedForm("x image is not homogeneous");
        const auto& [gx, cx] = *images.x[i].components().begin();
        int gaxis = -1;
        for (int j = 0; j < target->n; ++j) {
            if (gx[j] == 0) continue;
            if (gaxis >= 0 || (gx[j] != 1 && gx[j] != -1))
                throw NotClassifiedForm("x image grade is not +-e_j");
            gaxis = j;
        }
        if (gaxis != axis)
            throw NotClassifiedForm("x image grade axis differs from the h image axis");
        d.tau[i] = gx[axis] < 0 ? 1 : 0;
        auto [p_i, trow] = split_axis_line(cx, axis);
        d.p.push_back(std::move(p_i));
        d.b.push_back(target->field->one());
        d.t.push_back(std::vector<int>(trow.begin(), trow.end()));

        // y image: grade must be opposite; undo the sigma shift, then the
        // residual coefficient p' b^{-1} h^{-t} must collapse onto the axis.
        if (images.y[i].components().size() != 1)
            throw NotClassifiedForm("y image is not homogeneous");
        const auto& [gy, cy] = *images.y[i].components().begin();
        GradeVec expect_gy = gx;
        expect_gy[axis] = -gx[axis];
        if (gy != expect_gy)
            throw NotClassifiedForm("y image grade is not opposite to the x image");
        GradeVec neg_gy(gy.size());
        for (std::size_t k = 0; k < gy.size(); ++k) neg_gy[k] = -gy[k];
        LaurentPoly right = sigma_action(target, cy, neg_gy);
        right = right * LaurentPoly::monomial(target->field, target->field->one(),
                                              ExpVec(trow.begin(), trow.end()));
        auto [pp_i, rest] = split_axis_line(right, axis);
        if (std::any_of(rest.begin(), rest.end(), [](int v) { return v != 0; }))
            throw NotClassifiedForm("y image does not match the x image twist");
        d.pprime.push_back(std::move(pp_i));
    }

    // Must reproduce the inputs exactly.
    auto probs = structural_problems(d);
    if (!probs.empty()) throw NotClassifiedForm("extracted bundle malformed: " + probs.front());
    GeneratorImages rebuilt = images_impl(d);
    for (int i = 0; i < r; ++i) {
        if (rebuilt.h[i] != images.h[i] || rebuilt.h_inv[i] != images.h_inv[i] ||
            rebuilt.x[i] != images.x[i] || rebuilt.y[i] != images.y[i])
            throw NotClassifiedForm("images do not round-trip through the bundle");
    }
    return d;
}

HomData compose(const HomData& f, const HomData& g) {
    if (!f.target->same_as(*g.source))
        throw ConfigMismatch("compose: target of the first bundle differs from the "
                             "source of the second");
    auto repf = validate(f);
    if (!repf.ok()) throw InvalidData("compose: first bundle invalid\n" + repf.to_string());
    auto repg = validate(g);
    if (!repg.ok()) throw InvalidData("compose: second bundle invalid\n" + repg.to_string());

    GeneratorImages fi = images_impl(f);
    GeneratorImages comp;
    const int r = f.source->n;
    comp.h.reserve(r);
    comp.h_inv.reserve(r);
    comp.x.reserve(r);
    comp.y.reserve(r);
    for (int i = 0; i < r; ++i) {
        comp.h.push_back(apply_hom(g, fi.h[i]));
        comp.h_inv.push_back(apply_hom(g, fi.h_inv[i]));
        comp.x.push_back(apply_hom(g, fi.x[i]));
        comp.y.push_back(apply_hom(g, fi.y[i]));
    }
    HomData out;
    try {
        out = extract_hom_data(comp, f.source, g.target);
    } catch (const NotClassifiedForm& e) {
        throw ExtractionFailure(std::string("compose: composite not extractable: ") +
                                e.what());
    }
    auto rep = validate(out);
    if (!rep.ok())
        throw ExtractionFailure("compose: extracted bundle fails validation\n" +
                                rep.to_string());
    return out;
}

HomData identity_hom(const AlgebraPtr& alg) {
    HomData d;
    d.source = alg;
    d.target = alg;
    const int n = alg->n;
    d.w.resize(n);
    for (int i = 0; i < n; ++i) d.w[i] = i;
    d.tau.assign(n, 0);
    d.m.assign(n, 1);
    d.gamma.assign(n, alg->field->one());
    d.b.assign(n, alg->field->one());
    d.t.assign(n, std::vector<int>(n, 0));
    d.p.assign(n, LaurentPoly::one(alg->field, 1));
    d.pprime.assign(n, LaurentPoly::one(alg->field, 1));
    return d;
}

HomData canonicalize(const HomData& data) {
    return extract_hom_data(build_images(data), data.source, data.target);
}

bool hom_equal(const HomData& a, const HomData& b) {
    if (!a.source->same_as(*b.source) || !a.target->same_as(*b.target)) return false;
    HomData ca = canonicalize(a);
    HomData cb = canonicalize(b);
    return ca.w == cb.w && ca.tau == cb.tau && ca.m == cb.m && ca.t == cb.t &&
           ca.gamma == cb.gamma && ca.b == cb.b && ca.p == cb.p &&
           ca.pprime == cb.pprime;
}

bool is_identity(const HomData& data) {
    if (!data.source->same_as(*data.target)) return false;
    return hom_equal(data, identity_hom(data.source));
}

}  // namespace qwa
