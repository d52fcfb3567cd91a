// ============================================================================
// tiospec.cpp — batch command-line front end
// ============================================================================
//
// Exit codes:
//   0  success (refines: refinement holds)
//   1  refines: refinement fails (witness printed)
//   2  parse / validation / composability errors
//   3  result is the ⊥-TIOA (inconsistent)
//   4  result is the ⊤-TIOA (unrealisable)
//   5  zone budget exceeded (TIOSPEC_MAXZONES)
//
// ============================================================================

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dot_export.hpp"
#include "tio/games.hpp"
#include "tio/operators.hpp"
#include "tio/traces.hpp"

namespace {

using namespace tio;

int write_result(const TIOA& a, const std::string& out_path) {
    if (out_path.empty())
        std::cout << serialize_tioa(a);
    else
        store_tioa(a, out_path);
    if (a.is_bot_tioa()) {
        std::cerr << "result is the ⊥-TIOA (inconsistent)\n";
        return 3;
    }
    if (a.is_top_tioa()) {
        std::cerr << "result is the ⊤-TIOA (unrealisable)\n";
        return 4;
    }
    return 0;
}

TIOA load_checked(const std::string& path) {
    TIOA a = load_tioa(path);
    ValidationReport rep = validate(a);
    if (!rep.wellformed || !rep.deterministic) {
        std::cerr << path << ":\n" << rep.to_string();
        throw UsageError("invalid automaton");
    }
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("TIOSPEC_MAXZONES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0) set_zone_budget(v);
    }

    CLI::App app{"tiospec — timed I/O specification toolkit"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_path, op_name, trace_text;

    auto* check = app.add_subcommand("check", "validate an automaton file");
    check->add_option("file", file_a)->required();

    auto* compose = app.add_subcommand("compose", "binary composition");
    compose->add_option("--op", op_name, "par | conj | disj")->required();
    compose->add_option("a", file_a)->required();
    compose->add_option("b", file_b)->required();
    compose->add_option("-o,--out", out_path);

    auto* normalise_cmd = app.add_subcommand("normalise", "⊥-backpropagation");
    normalise_cmd->add_option("file", file_a)->required();
    normalise_cmd->add_option("-o,--out", out_path);

    auto* realise_cmd = app.add_subcommand("realise", "⊤-backpropagation");
    realise_cmd->add_option("file", file_a)->required();
    realise_cmd->add_option("-o,--out", out_path);

    auto* mirror_cmd = app.add_subcommand("mirror", "least refined environment");
    mirror_cmd->add_option("file", file_a)->required();
    mirror_cmd->add_option("-o,--out", out_path);

    auto* quotient_cmd = app.add_subcommand("quotient", "spec % plant");
    quotient_cmd->add_option("spec", file_a)->required();
    quotient_cmd->add_option("plant", file_b)->required();
    quotient_cmd->add_option("-o,--out", out_path);

    auto* refines_cmd =
        app.add_subcommand("refines", "does IMPL substitute for SPEC (SPEC ⊑r IMPL)?");
    refines_cmd->add_option("impl", file_a)->required();
    refines_cmd->add_option("spec", file_b)->required();

    auto* classify_cmd = app.add_subcommand("classify", "TP/TE/TM of a timed trace");
    classify_cmd->add_option("file", file_a)->required();
    classify_cmd->add_option("--trace", trace_text, "e.g. \"start, 2, print\"")
        ->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
    dot_cmd->add_option("file", file_a)->required();
    dot_cmd->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            TIOA a = load_tioa(file_a);
            ValidationReport rep = validate(a);
            std::cout << rep.to_string();
            return (rep.wellformed && rep.deterministic) ? 0 : 2;
        }
        if (compose->parsed()) {
            TIOA a = load_checked(file_a);
            TIOA b = load_checked(file_b);
            TIOA r = [&] {
                if (op_name == "par") return parallel(a, b);
                if (op_name == "conj") return conjunction(a, b);
                if (op_name == "disj") return disjunction(a, b);
                throw UsageError("unknown --op '" + op_name + "' (par|conj|disj)");
            }();
            return write_result(r, out_path);
        }
        if (normalise_cmd->parsed())
            return write_result(normalise(load_checked(file_a)), out_path);
        if (realise_cmd->parsed())
            return write_result(realise(load_checked(file_a)), out_path);
        if (mirror_cmd->parsed())
            return write_result(mirror(load_checked(file_a)), out_path);
        if (quotient_cmd->parsed())
            return write_result(quotient(load_checked(file_a), load_checked(file_b)),
                                out_path);
        if (refines_cmd->parsed()) {
            RefinementVerdict v = refines(load_checked(file_a), load_checked(file_b));
            if (v.holds) {
                std::cout << "refinement holds\n";
                return 0;
            }
            std::cout << "refinement fails; witness: "
                      << (v.witness ? v.witness->to_string() : "<empty trace>") << "\n";
            return 1;
        }
        if (classify_cmd->parsed()) {
            TIOA a = load_checked(file_a);
            TimedTrace t = TimedTrace::parse(trace_text);
            std::cout << trace_class_name(classify(a, t)) << "\n";
            return 0;
        }
        if (dot_cmd->parsed()) {
            TIOA a = load_tioa(file_a);
            std::string dot = export_dot(a);
            if (out_path.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(out_path);
                if (!out) throw ModelError("cannot write '" + out_path + "'");
                out << dot;
            }
            return 0;
        }
    } catch (const ZoneBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
