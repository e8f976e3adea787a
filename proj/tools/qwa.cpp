// Command-line front end: algebras, homomorphism bundles, elements and
// generator chains live in JSON files; subcommands validate, apply, compose,
// invert, decompose, emit counterexamples and run the self-test suite.
//
// Exit codes: 0 success, 1 semantic failure (validation, non-invertibility),
// 2 parse or configuration errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwa/dixmier.hpp"
#include "qwa/selftest.hpp"
#include "qwa/serialize.hpp"
#include "qwa/tame.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kBadInput = 2;

bool g_structured = true;

void emit(const qwa::Json& j) { std::cout << qwa::canonical_dump(j); }

int cmd_validate(const std::string& path, bool relations_too) {
    qwa::HomData d = qwa::hom_from_json(qwa::load_json_file(path));
    auto rep = qwa::validate(d);
    bool relations = rep.structural.empty() && qwa::check_relations(d);
    if (g_structured) {
        qwa::Json j;
        j["ok"] = rep.ok();
        qwa::Json fails = qwa::Json::array();
        for (const auto& f : rep.failures) {
            qwa::Json jf;
            jf["equation"] = qwa::equation_name(f.equation);
            jf["i"] = f.i + 1;
            if (f.l >= 0) jf["l"] = f.l + 1;
            fails.push_back(std::move(jf));
        }
        j["failures"] = std::move(fails);
        j["structural"] = rep.structural;
        if (relations_too) j["relations_hold"] = relations;
        emit(j);
    } else {
        std::cout << rep.to_string();
        if (relations_too)
            std::cout << "relations " << (relations ? "hold" : "fail") << "\n";
    }
    if (relations_too) return relations ? kOk : kSemanticFailure;
    return rep.ok() ? kOk : kSemanticFailure;
}

int cmd_apply(const std::string& hom_path, const std::string& elem_path) {
    qwa::HomData d = qwa::hom_from_json(qwa::load_json_file(hom_path));
    qwa::GwaElement a =
        qwa::element_from_json(qwa::load_json_file(elem_path), d.source);
    emit(qwa::element_to_json(qwa::apply_hom(d, a)));
    return kOk;
}

int cmd_compose(const std::string& path1, const std::string& path2) {
    qwa::HomData f = qwa::hom_from_json(qwa::load_json_file(path1));
    qwa::HomData g = qwa::hom_from_json(qwa::load_json_file(path2), f.source->field);
    if (!f.target->same_as(*g.source))
        throw qwa::ConfigMismatch("bundles do not compose");
    g.source = f.target;
    emit(qwa::hom_to_json(qwa::compose(f, g)));
    return kOk;
}

int cmd_invert(const std::string& path) {
    qwa::HomData d = qwa::hom_from_json(qwa::load_json_file(path));
    try {
        emit(qwa::hom_to_json(qwa::invert_hom(d)));
    } catch (const qwa::NotInvertible& e) {
        if (g_structured) {
            qwa::Json j;
            j["ok"] = false;
            j["error"] = "not invertible";
            j["detail"] = e.what();
            emit(j);
        } else {
            std::cout << "not invertible: " << e.what() << "\n";
        }
        return kSemanticFailure;
    }
    return kOk;
}

int cmd_decompose(const std::string& path) {
    qwa::HomData d = qwa::hom_from_json(qwa::load_json_file(path));
    try {
        auto chain = qwa::decompose(d);
        emit(qwa::chain_to_json(chain, d.target));
    } catch (const qwa::NotAutomorphism& e) {
        if (g_structured) {
            qwa::Json j;
            j["ok"] = false;
            j["error"] = "not an automorphism";
            j["detail"] = e.what();
            emit(j);
        } else {
            std::cout << "not an automorphism: " << e.what() << "\n";
        }
        return kSemanticFailure;
    }
    return kOk;
}

int cmd_counterexample(const std::string& algebra_path, int factor) {
    qwa::AlgebraPtr alg = qwa::algebra_from_json(qwa::load_json_file(algebra_path));
    emit(qwa::hom_to_json(qwa::root_counterexample(alg, factor - 1)));
    return kOk;
}

int cmd_selftest(std::uint64_t seed, double scale) {
    qwa::SelfTestOptions opts;
    opts.seed = seed;
    opts.scale = scale;
    auto results = qwa::run_acceptance(opts);
    bool ok = qwa::report_acceptance(results, std::cout);
    return ok ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for quantum Weyl analogue algebras A(n,d,q)"};
    app.require_subcommand(1);

    std::string output_mode = "structured";
    app.add_option("--output", output_mode, "output format: structured|human")
        ->check(CLI::IsMember({"structured", "human"}));

    std::string hom_path, hom_path2, elem_path, algebra_path;
    int factor = 1;
    std::uint64_t seed = 20250801;
    double scale = 0.25;

    auto* validate_cmd = app.add_subcommand("validate", "check the validity equations");
    validate_cmd->add_option("hom", hom_path)->required();

    auto* relations_cmd =
        app.add_subcommand("check-relations", "check the defining relations on images");
    relations_cmd->add_option("hom", hom_path)->required();

    auto* apply_cmd = app.add_subcommand("apply", "apply a bundle to an element");
    apply_cmd->add_option("hom", hom_path)->required();
    apply_cmd->add_option("element", elem_path)->required();

    auto* compose_cmd = app.add_subcommand("compose", "compose two bundles (first applied first)");
    compose_cmd->add_option("first", hom_path)->required();
    compose_cmd->add_option("second", hom_path2)->required();

    auto* invert_cmd = app.add_subcommand("invert", "invert an automorphism bundle");
    invert_cmd->add_option("hom", hom_path)->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "decompose an automorphism into tame generators");
    decompose_cmd->add_option("hom", hom_path)->required();

    auto* counter_cmd = app.add_subcommand(
        "counterexample", "emit the non-invertible endomorphism at a root of unity");
    counter_cmd->add_option("algebra", algebra_path)->required();
    counter_cmd->add_option("--factor", factor, "factor index (1-based)")
        ->default_val(1);

    auto* selftest_cmd =
        app.add_subcommand("selftest", "run the acceptance suites at reduced counts");
    selftest_cmd->add_option("--seed", seed, "random seed");
    selftest_cmd->add_option("--scale", scale, "sample count multiplier");

    CLI11_PARSE(app, argc, argv);
    g_structured = output_mode == "structured";

    try {
        if (validate_cmd->parsed()) return cmd_validate(hom_path, false);
        if (relations_cmd->parsed()) return cmd_validate(hom_path, true);
        if (apply_cmd->parsed()) return cmd_apply(hom_path, elem_path);
        if (compose_cmd->parsed()) return cmd_compose(hom_path, hom_path2);
        if (invert_cmd->parsed()) return cmd_invert(hom_path);
        if (decompose_cmd->parsed()) return cmd_decompose(hom_path);
        if (counter_cmd->parsed()) return cmd_counterexample(algebra_path, factor);
        if (selftest_cmd->parsed()) return cmd_selftest(seed, scale);
    } catch (const qwa::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const qwa::StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const qwa::ConfigMismatch& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kBadInput;
    } catch (const qwa::PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kSemanticFailure;
    } catch (const qwa::InvalidData& e) {
        std::cerr << "invalid bundle: " << e.what() << "\n";
        return kSemanticFailure;
    } catch (const qwa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemanticFailure;
    }
    return kBadInput;
}
