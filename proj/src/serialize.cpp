#include "qwa/serialize.hpp"

#include <fstream>
#include <sstream>

#include "qwa/literal.hpp"

namespace qwa {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw StructuralError(msg); }

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("expected integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<int> get_int_vec(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        bad(std::string("expected array field '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) bad(std::string("non-integer entry in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::string> get_str_vec(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        bad(std::string("expected array field '") + key + "'");
    std::vector<std::string> out;
    for (const auto& v : j[key]) {
        if (!v.is_string()) bad(std::string("non-string entry in '") + key + "'");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

Json algebra_to_json(const AlgebraPtr& alg) {
    Json j;
    j["n"] = alg->n;
    j["d"] = alg->d;
    const auto& cfg = alg->field->config();
    j["L"] = cfg.L;
    j["mode"] = cfg.mode == QMode::RootOfUnity ? "root_of_unity" : "transcendental";
    if (cfg.mode == QMode::RootOfUnity) j["e"] = cfg.e;
    j["c"] = alg->c;
    return j;
}

AlgebraPtr algebra_from_json(const Json& j, ScalarFieldPtr shared_field) {
    if (!j.is_object()) bad("algebra description must be an object");
    FieldConfig cfg;
    cfg.L = get_int(j, "L");
    if (!j.contains("mode") || !j["mode"].is_string())
        bad("expected string field 'mode'");
    std::string mode = j["mode"].get<std::string>();
    if (mode == "transcendental") {
        cfg.mode = QMode::Transcendental;
    } else if (mode == "root_of_unity") {
        cfg.mode = QMode::RootOfUnity;
        cfg.e = get_int(j, "e");
    } else {
        bad("mode must be 'transcendental' or 'root_of_unity'");
    }
    ScalarFieldPtr field;
    if (shared_field) {
        if (!(shared_field->config() == cfg))
            bad("field configuration differs from the shared context");
        field = std::move(shared_field);
    } else {
        field = ScalarField::make(cfg);
    }
    return AlgebraConfig::make(field, get_int(j, "n"), get_int(j, "d"),
                               get_int_vec(j, "c"));
}

Json element_to_json(const GwaElement& a) {
    Json j;
    j["algebra"] = algebra_to_json(a.algebra());
    Json comps = Json::array();
    for (const auto& [grade, coeff] : a.components()) {
        Json comp;
        comp["grade"] = grade;
        Json terms = Json::array();
        for (const auto& [exps, c] : coeff.terms()) {
            Json term;
            term["exp"] = exps;
            term["scalar"] = to_literal(c);
            terms.push_back(std::move(term));
        }
        comp["coeff"] = std::move(terms);
        comps.push_back(std::move(comp));
    }
    j["components"] = std::move(comps);
    return j;
}

GwaElement element_from_json(const Json& j, AlgebraPtr use_algebra) {
    if (!j.is_object() || !j.contains("algebra")) bad("element: missing 'algebra'");
    AlgebraPtr alg =
        algebra_from_json(j["algebra"], use_algebra ? use_algebra->field : nullptr);
    if (use_algebra) {
        if (!alg->same_as(*use_algebra))
            bad("element: algebra differs from the expected one");
        alg = std::move(use_algebra);
    }
    GwaElement out = GwaElement::zero(alg);
    if (!j.contains("components") || !j["components"].is_array())
        bad("element: missing 'components' array");
    for (const auto& comp : j["components"]) {
        std::vector<int> grade = get_int_vec(comp, "grade");
        if (static_cast<int>(grade.size()) != alg->n) bad("element: grade arity mismatch");
        if (!comp.contains("coeff") || !comp["coeff"].is_array())
            bad("element: missing 'coeff' array");
        LaurentPoly poly = LaurentPoly::zero(alg->field, alg->n);
        for (const auto& term : comp["coeff"]) {
            std::vector<int> exps = get_int_vec(term, "exp");
            if (static_cast<int>(exps.size()) != alg->n)
                bad("element: exponent arity mismatch");
            if (!term.contains("scalar") || !term["scalar"].is_string())
                bad("element: missing scalar literal");
            poly.add_term(exps,
                          parse_scalar(term["scalar"].get<std::string>(), alg->field));
        }
        out.add_component(grade, poly);
    }
    return out;
}

Json hom_to_json(const HomData& d) {
    Json j;
    j["source"] = algebra_to_json(d.source);
    j["target"] = algebra_to_json(d.target);
    std::vector<int> w1;
    for (int v : d.w) w1.push_back(v + 1);
    j["w"] = w1;
    j["tau"] = d.tau;
    j["m"] = d.m;
    Json gam = Json::array(), bb = Json::array(), pp = Json::array(),
         ppr = Json::array();
    for (const auto& g : d.gamma) gam.push_back(to_literal(g));
    for (const auto& b : d.b) bb.push_back(to_literal(b));
    for (const auto& p : d.p) pp.push_back(to_literal1(p));
    for (const auto& p : d.pprime) ppr.push_back(to_literal1(p));
    j["gamma"] = std::move(gam);
    j["b"] = std::move(bb);
    j["t"] = d.t;
    j["p"] = std::move(pp);
    j["pprime"] = std::move(ppr);
    return j;
}

HomData hom_from_json(const Json& j, ScalarFieldPtr shared_field) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target"))
        bad("hom: missing 'source'/'target'");
    HomData d;
    d.source = algebra_from_json(j["source"], std::move(shared_field));
    // one shared field object so scalars interoperate
    d.target = algebra_from_json(j["target"], d.source->field);
    const auto& field = d.source->field;

    d.w = get_int_vec(j, "w");
    for (auto& v : d.w) v -= 1;  // files are 1-based
    d.tau = get_int_vec(j, "tau");
    d.m = get_int_vec(j, "m");
    for (const auto& s : get_str_vec(j, "gamma")) d.gamma.push_back(parse_scalar(s, field));
    for (const auto& s : get_str_vec(j, "b")) d.b.push_back(parse_scalar(s, field));
    if (!j.contains("t") || !j["t"].is_array()) bad("hom: missing 't' matrix");
    for (const auto& row : j["t"]) {
        if (!row.is_array()) bad("hom: 't' must be a matrix");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) bad("hom: non-integer entry in 't'");
            r.push_back(v.get<int>());
        }
        d.t.push_back(std::move(r));
    }
    for (const auto& s : get_str_vec(j, "p")) d.p.push_back(parse_laurent1(s, field));
    for (const auto& s : get_str_vec(j, "pprime"))
        d.pprime.push_back(parse_laurent1(s, field));
    return d;
}

Json chain_to_json(const std::vector<TameGenerator>& chain, const AlgebraPtr& alg) {
    Json j;
    j["algebra"] = algebra_to_json(alg);
    Json list = Json::array();
    for (const auto& gen : chain) {
        Json g;
        if (const auto* perm = std::get_if<PermGen>(&gen)) {
            g["kind"] = "perm";
            std::vector<int> w1;
            for (int v : perm->w) w1.push_back(v + 1);
            g["w"] = w1;
        } else if (const auto* fac = std::get_if<FactorGen>(&gen)) {
            g["kind"] = "factor";
            g["factor"] = fac->factor + 1;
            g["tau"] = fac->aut.tau;
            g["gamma"] = to_literal(fac->aut.gamma);
            g["u"] = to_literal1(fac->aut.u);
            g["uprime"] = to_literal1(fac->aut.uprime);
        } else {
            const auto& twist = std::get<UnitTwistGen>(gen);
            g["kind"] = "unit_twist";
            Json units = Json::array();
            for (const auto& u : twist.units) {
                Json uj;
                uj["scalar"] = to_literal(u.coeff);
                uj["exp"] = u.hexp;
                units.push_back(std::move(uj));
            }
            g["units"] = std::move(units);
        }
        list.push_back(std::move(g));
    }
    j["chain"] = std::move(list);
    return j;
}

std::vector<TameGenerator> chain_from_json(const Json& j, AlgebraPtr* alg_out) {
    if (!j.is_object() || !j.contains("algebra")) bad("chain: missing 'algebra'");
    AlgebraPtr alg = algebra_from_json(j["algebra"]);
    if (alg_out) *alg_out = alg;
    std::vector<TameGenerator> out;
    if (!j.contains("chain") || !j["chain"].is_array())
        bad("chain: missing 'chain' array");
    for (const auto& g : j["chain"]) {
        if (!g.contains("kind") || !g["kind"].is_string()) bad("chain: missing 'kind'");
        std::string kind = g["kind"].get<std::string>();
        if (kind == "perm") {
            PermGen p{get_int_vec(g, "w")};
            for (auto& v : p.w) v -= 1;
            out.push_back(std::move(p));
        } else if (kind == "factor") {
            if (!g.contains("gamma") || !g["gamma"].is_string())
                bad("chain: factor needs 'gamma'");
            if (!g.contains("u") || !g.contains("uprime")) bad("chain: factor needs units");
            SingleFactorAut aut{
                get_int(g, "tau"),
                parse_scalar(g["gamma"].get<std::string>(), alg->field),
                parse_laurent1(g["u"].get<std::string>(), alg->field),
                parse_laurent1(g["uprime"].get<std::string>(), alg->field)};
            out.push_back(FactorGen{get_int(g, "factor") - 1, std::move(aut)});
        } else if (kind == "unit_twist") {
            UnitTwistGen t;
            if (!g.contains("units") || !g["units"].is_array())
                bad("chain: unit_twist needs 'units'");
            for (const auto& uj : g["units"]) {
                if (!uj.contains("scalar") || !uj["scalar"].is_string())
                    bad("chain: unit needs a scalar literal");
                t.units.push_back(
                    UnitMono{parse_scalar(uj["scalar"].get<std::string>(), alg->field),
                             get_int_vec(uj, "exp")});
            }
            out.push_back(std::move(t));
        } else {
            bad("chain: unknown generator kind '" + kind + "'");
        }
    }
    return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

}  // namespace qwa
