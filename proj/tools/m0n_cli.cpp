#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "m0n/basis.hpp"
#include "m0n/errors.hpp"
#include "m0n/fcurve.hpp"
#include "m0n/invariant.hpp"
#include "m0n/io.hpp"
#include "m0n/keel.hpp"
#include "m0n/lm.hpp"
#include "m0n/perm.hpp"
#include "m0n/search.hpp"

using namespace m0n;

namespace {

enum class LogLevel { trace = 0, debug, info, warn, error };
LogLevel g_log_level = LogLevel::info;

void log_at(LogLevel lv, const std::string& msg) {
    static const char* names[] = {"trace", "debug", "info", "warn", "error"};
    if (lv < g_log_level) return;
    std::cerr << "[" << names[static_cast<int>(lv)] << "] " << msg << "\n";
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
    } else {
        write_file(out_path, payload);
        log_at(LogLevel::info, "wrote " + out_path);
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void print_class_summary(const CurveClass& c) {
    const auto& t = DivisorTable::get(c.n);
    int nonzero = 0;
    for (auto v : c.v)
        if (v) ++nonzero;
    std::cout << "n = " << c.n << ", nonzero pairings: " << nonzero << "\n";
    for (size_t i = 0; i < t.divisors.size(); ++i)
        if (c.v[i])
            std::cout << "  D{" << label_set_string(t.divisors[i]) << "} = " << c.v[i] << "\n";
    std::cout << "C.K = " << rat_str(kappa_pairing(c)) << "\n";
    std::cout << "C.psi = " << rat_str(psi_pairing(c)) << "\n";
    std::cout << "Kollar bound = " << rat_str(kollar_bound(c)) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"invariant curve classes, F-curve expressions, and toric limits on moduli of pointed rational curves"};
    app.require_subcommand(1);

    std::string log_level = "info";
    app.add_option("--log-level", log_level, "trace|debug|info|warn|error")
        ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error"}));

    // class
    auto* cmd_class = app.add_subcommand("class", "curve class fixed by a cyclic or dihedral action");
    std::string class_kind;
    int class_n = 0;
    std::vector<std::string> class_gens;
    std::string class_out;
    cmd_class->add_option("kind", class_kind, "cyclic|dihedral")
        ->required()
        ->check(CLI::IsMember({"cyclic", "dihedral"}));
    cmd_class->add_option("-n,--n", class_n, "number of marked points")->required();
    cmd_class->add_option("-g,--generator", class_gens, "generator(s) in cycle notation")
        ->required()
        ->expected(1, 2);
    cmd_class->add_option("-o,--out", class_out, "output class JSON path");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "expand a curve class over the dual F-curve basis");
    std::string expand_class, expand_out;
    cmd_expand->add_option("-c,--class", expand_class, "input class JSON")->required();
    cmd_expand->add_option("-o,--out", expand_out, "output expression JSON path");

    // seek-effective
    auto* cmd_seek = app.add_subcommand("seek-effective", "search for an effective expression via Keel moves");
    std::string seek_input, seek_out;
    int seek_max_level = 4;
    long long seek_budget = 5'000'000;
    bool seek_no_restart = false;
    cmd_seek->add_option("-i,--input", seek_input, "input expression JSON")->required();
    cmd_seek->add_option("--max-level", seek_max_level, "maximum BFS depth per restart");
    cmd_seek->add_option("--node-budget", seek_budget, "total unique-node budget");
    cmd_seek->add_flag("--no-restart", seek_no_restart, "disable greedy restarts on improvement");
    cmd_seek->add_option("-o,--out", seek_out, "output expression JSON path");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check an expression against a curve class");
    std::string verify_expr, verify_class;
    cmd_verify->add_option("-e,--expr", verify_expr, "expression JSON")->required();
    cmd_verify->add_option("-c,--class", verify_class, "class JSON")->required();

    // keel-relations
    auto* cmd_keel = app.add_subcommand("keel-relations", "Keel relations containing a pair of F-curves");
    int keel_n = 0;
    std::vector<std::string> keel_pair;
    std::string keel_through, keel_out;
    cmd_keel->add_option("-n,--n", keel_n, "number of marked points")->required();
    cmd_keel->add_option("fcurves", keel_pair, "two F-curves, e.g. F{1,2|3|4|5,6}")
        ->required()
        ->expected(2);
    cmd_keel->add_option("--through", keel_through, "third F-curve: the unique relation through all three");
    cmd_keel->add_option("-o,--out", keel_out, "output JSON path");

    // degenerate
    auto* cmd_degen = app.add_subcommand("degenerate", "toric limit cycle of a family of pointed lines");
    std::string degen_family, degen_out;
    bool degen_steps = false;
    cmd_degen->add_option("-f,--family", degen_family, "family JSON")->required();
    cmd_degen->add_option("-o,--out", degen_out, "output cycle JSON path");
    cmd_degen->add_flag("--steps", degen_steps, "emit per-step snapshots instead of the final cycle");

    // lift
    auto* cmd_lift = app.add_subcommand("lift", "lift a limit cycle back to an F-curve expression");
    std::string lift_cycle_path, lift_class_path, lift_out;
    cmd_lift->add_option("--cycle", lift_cycle_path, "cycle JSON")->required();
    cmd_lift->add_option("-c,--class", lift_class_path, "originating class JSON")->required();
    cmd_lift->add_option("-o,--out", lift_out, "output expression JSON path");

    // stabilizer
    auto* cmd_stab = app.add_subcommand("stabilizer", "order of the symmetric-group stabilizer of a class");
    std::string stab_class;
    bool stab_exhaustive = false;
    long long stab_timeout = 0;
    cmd_stab->add_option("-c,--class", stab_class, "class JSON")->required();
    cmd_stab->add_flag("--exhaustive", stab_exhaustive, "enumerate the full symmetric group");
    cmd_stab->add_option("--timeout-ms", stab_timeout, "abort after this many milliseconds (0 = none)");

    CLI11_PARSE(app, argc, argv);

    if (log_level == "trace") g_log_level = LogLevel::trace;
    else if (log_level == "debug") g_log_level = LogLevel::debug;
    else if (log_level == "warn") g_log_level = LogLevel::warn;
    else if (log_level == "error") g_log_level = LogLevel::error;

    if (*cmd_class) {
        CurveClass c = zero_class(4);
        if (class_kind == "cyclic") {
            if (class_gens.size() != 1) throw ParseError("cyclic takes exactly one generator");
            Perm g = parse_cycles(class_gens[0], class_n);
            c = cyclic_fixed_class(g);
        } else {
            if (class_gens.size() != 2) throw ParseError("dihedral takes exactly two generators");
            Perm g1 = parse_cycles(class_gens[0], class_n);
            Perm g2 = parse_cycles(class_gens[1], class_n);
            c = dihedral_fixed_class(g1, g2);
        }
        print_class_summary(c);
        if (!class_out.empty()) emit(class_out, curve_class_json(c));
        return 0;
    }

    if (*cmd_expand) {
        CurveClass c = curve_class_from_json(read_file(expand_class));
        Expression e = expand_in_dual_basis(c);
        std::cout << "terms: " << e.size() << ", deficiency: " << deficiency(e) << "\n";
        emit(expand_out, expression_json(e, c.n));
        return 0;
    }

    if (*cmd_seek) {
        auto [e, n] = expression_from_json(read_file(seek_input));
        SearchConfig cfg;
        cfg.max_level = seek_max_level;
        cfg.node_budget = seek_budget;
        cfg.restart = !seek_no_restart;
        SearchResult r = seek_effective_expression(e, n, cfg);
        std::cout << "deficiency: " << r.deficiency << ", nodes: " << r.nodes
                  << ", restarts: " << r.restarts << ", level: " << r.level_reached << "\n";
        emit(seek_out, search_result_json(r, n));
        return r.status == SearchStatus::found ? 0 : 2;
    }

    if (*cmd_verify) {
        auto [e, n] = expression_from_json(read_file(verify_expr));
        CurveClass c = curve_class_from_json(read_file(verify_class));
        if (n != c.n) {
            std::cout << "MISMATCH: expression n=" << n << " vs class n=" << c.n << "\n";
            return 1;
        }
        CurveClass got = class_of(e, n);
        bool eq = got == c;
        std::cout << (eq ? "MATCH" : "MISMATCH") << ", deficiency: " << deficiency(e) << "\n";
        return eq ? 0 : 1;
    }

    if (*cmd_keel) {
        FCurve f = fcurve_from_text(keel_pair[0], keel_n);
        FCurve g = fcurve_from_text(keel_pair[1], keel_n);
        std::vector<KeelParts> rels;
        if (!keel_through.empty()) {
            FCurve h = fcurve_from_text(keel_through, keel_n);
            if (auto r = keel_relation_through(f, g, h, keel_n)) rels.push_back(*r);
        } else {
            rels = keel_relations_containing(f, g, keel_n);
        }
        std::string payload = "[\n";
        for (size_t i = 0; i < rels.size(); ++i) {
            Expression e = keel_expression(rels[i], keel_n);
            payload += "  " + expression_json(e, keel_n);
            if (i + 1 < rels.size()) payload += ",";
            payload += "\n";
        }
        payload += "]";
        std::cout << "relations: " << rels.size() << "\n";
        for (const auto& p : rels) {
            std::cout << " ";
            for (mask_t b : p) std::cout << " {" << label_set_string(b) << "}";
            std::cout << "\n";
        }
        if (!keel_out.empty()) emit(keel_out, payload);
        return 0;
    }

    if (*cmd_degen) {
        auto [fam, m] = family_from_json(read_file(degen_family));
        log_at(LogLevel::debug, "field order " + std::to_string(m));
        DegenerationResult r = degenerate(fam);
        std::cout << "steps: " << r.steps.size() << ", dropped: " << r.dropped
                  << ", components: " << r.final_cycle.size() << "\n";
        for (const auto& tc : r.final_cycle)
            std::cout << "  " << tc.mult << " x " << type_text(tc.type) << "\n";
        if (degen_steps) {
            emit(degen_out, degeneration_json(r, fam.n, fam.heavy0, fam.heavy_inf));
        } else {
            CycleData cd{fam.n, fam.heavy0, fam.heavy_inf, r.final_cycle};
            emit(degen_out, cycle_json(cd));
        }
        return 0;
    }

    if (*cmd_lift) {
        CycleData cd = cycle_from_json(read_file(lift_cycle_path));
        CurveClass c = curve_class_from_json(read_file(lift_class_path));
        Expression e = lift_cycle(cd.components, cd.h0, cd.hinf, c);
        CurveClass back = class_of(e, c.n);
        std::cout << "terms: " << e.size() << ", round-trip "
                  << (back == c ? "MATCH" : "MISMATCH") << "\n";
        emit(lift_out, expression_json(e, c.n));
        return back == c ? 0 : 1;
    }

    if (*cmd_stab) {
        CurveClass c = curve_class_from_json(read_file(stab_class));
        uint64_t order = stabilizer_order(c, stab_exhaustive, stab_timeout);
        std::cout << "stabilizer order: " << order << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const Timeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return 2;
    } catch (const GermDepthExceeded& e) {
        std::cerr << "germ depth exceeded: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFieldExtension& e) {
        std::cerr << "unsupported field extension: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedExceptionalLocus& e) {
        std::cerr << "unsupported exceptional locus: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
