// Command-line front end. Inputs are inline s-expressions or files holding
// an s-expression or a JSON certificate.
//
// exit codes: 0 ok, 1 domain error (ill-formed input, not equivalent, ...),
// 2 fuel exhausted.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cpaths/certificate.hpp"
#include "cpaths/confluence.hpp"
#include "cpaths/derivation.hpp"
#include "cpaths/sexpr.hpp"
#include "cpaths/tower.hpp"
#include "cpaths/trs.hpp"

using namespace cpaths;

namespace {

struct Options {
    std::size_t fuel = kDefaultFuel;
    std::string rules = "standard";
    bool enable_rc = false;
    std::string json_out;
};

RuleSet rule_set(const Options& o) {
    RuleSet s;
    if (o.rules == "printed") {
        s = RuleSet::printed();
    } else if (o.rules == "standard") {
        s = RuleSet::standard();
    } else {
        throw Error("unknown rule set '" + o.rules + "' (printed | standard)");
    }
    if (o.enable_rc) s = s.with(RuleId::RC_NU).with(RuleId::RC_MU).with(RuleId::RC_XI);
    return s;
}

std::string slurp(const std::string& arg) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    auto i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text[i] == '{';
}

Path read_path(const std::string& arg) { return parse_path(slurp(arg)); }

Face read_face(const std::string& arg) {
    std::string text = slurp(arg);
    if (looks_like_json(text)) return face_from_certificate(json::parse(text));
    return parse_path(text);
}

json read_json(const std::string& arg) { return json::parse(slurp(arg)); }

void emit(const Options& o, const json& j) {
    if (o.json_out.empty()) return;
    std::ofstream out(o.json_out);
    if (!out) throw Error("cannot write " + o.json_out);
    out << j.dump(2) << '\n';
}

void print_trace(const Trace& t) {
    for (const StepWitness& s : t.steps) {
        std::cout << format_pos(s.pos) << "  " << rule_name(s.rule) << "  " << to_sexpr(s.target) << '\n';
    }
}

void print_boundary(const Face& f) {
    if (f.is_derivation()) {
        std::cout << "src: " << to_sexpr(f.derivation().src()) << '\n'
                  << "tgt: " << to_sexpr(f.derivation().tgt()) << '\n';
    } else if (f.is_cell()) {
        std::cout << "dim: " << f.dim() << '\n';
        if (f.dim() == 3) {
            std::cout << "src: " << tree_to_json(f.src().derivation()).dump() << '\n'
                      << "tgt: " << tree_to_json(f.tgt().derivation()).dump() << '\n';
        }
    }
}

int report(const Verdict& v) {
    if (v) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "rejected: " << v.describe() << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rewriting on computational paths, derivations and higher cells"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--fuel", opt.fuel, "step budget for normalisation")->capture_default_str();
        sub->add_option("--rules", opt.rules, "rule set: standard | printed")->capture_default_str();
        sub->add_flag("--enable-rc", opt.enable_rc, "add the refl-collapse rules");
        sub->add_option("--json", opt.json_out, "write JSON output to this file");
    };

    std::string a1, a2, kind;
    std::vector<std::string> args;

    auto* normalize_cmd = app.add_subcommand("normalize", "normalise a path and print the trace");
    normalize_cmd->add_option("path", a1)->required();
    common(normalize_cmd);

    auto* equiv_cmd = app.add_subcommand("equiv", "decide rewrite equivalence of two paths");
    equiv_cmd->add_option("p", a1)->required();
    equiv_cmd->add_option("q", a2)->required();
    common(equiv_cmd);

    auto* canonical_cmd = app.add_subcommand("canonical", "canonical derivation between two paths");
    canonical_cmd->add_option("p", a1)->required();
    canonical_cmd->add_option("q", a2)->required();
    common(canonical_cmd);

    auto* witness_cmd = app.add_subcommand("witness", "groupoid-law witness (paths or cells as arguments)");
    witness_cmd->add_option("kind", kind, "assoc | lunit | runit | linv | rinv | invinv")->required();
    witness_cmd->add_option("args", args)->required();
    common(witness_cmd);

    int dim = 0;
    auto* contract_cmd = app.add_subcommand("contract", "canonical cell between two parallel cells");
    contract_cmd->add_option("a", a1)->required();
    contract_cmd->add_option("b", a2)->required();
    contract_cmd->add_option("--dim", dim, "expected dimension of the result");
    common(contract_cmd);

    auto* coherence_cmd = app.add_subcommand("coherence", "pentagon, triangle or interchange 3-cell");
    coherence_cmd->add_option("kind", kind, "pentagon | triangle | interchange")->required();
    coherence_cmd->add_option("args", args)->required();
    common(coherence_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "re-check a JSON certificate");
    verify_cmd->add_option("cert", a1)->required();

    auto* globular_cmd = app.add_subcommand("globular", "check the globular identities of a certificate");
    globular_cmd->add_option("cert", a1)->required();

    GenConfig gen;
    std::size_t count = 1000;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    auto* fuzz_cmd = app.add_subcommand("fuzz-confluence", "local confluence over generated paths");
    fuzz_cmd->add_option("--seed", gen.seed)->capture_default_str();
    fuzz_cmd->add_option("--depth", gen.max_path_depth)->capture_default_str();
    fuzz_cmd->add_option("--count", count)->capture_default_str();
    fuzz_cmd->add_option("--threads", threads);
    common(fuzz_cmd);

    std::size_t bound = kDefaultBfsBound;
    auto* bfs_cmd = app.add_subcommand("bfs", "search for a rewrite zig-zag between two paths");
    bfs_cmd->add_option("p", a1)->required();
    bfs_cmd->add_option("q", a2)->required();
    bfs_cmd->add_option("--bound", bound)->capture_default_str();
    common(bfs_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*normalize_cmd) {
            Normalized n = normalize(read_path(a1), opt.fuel, rule_set(opt));
            print_trace(n.trace);
            std::cout << "nf: " << to_sexpr(n.nf) << "\nsteps: " << n.trace.steps.size() << '\n';
            emit(opt, to_json(n.trace));
            return 0;
        }
        if (*equiv_cmd) {
            bool eq = rweq(read_path(a1), read_path(a2), opt.fuel, rule_set(opt));
            std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
            return eq ? 0 : 1;
        }
        if (*canonical_cmd) {
            Derivation g = gamma(read_path(a1), read_path(a2), opt.fuel, rule_set(opt));
            print_boundary(g);
            std::cout << "size: " << g.size() << '\n';
            emit(opt, certificate(g));
            return 0;
        }
        if (*witness_cmd) {
            auto law = law_from_name(kind);
            if (!law) throw Error("unknown law '" + kind + "'");
            std::vector<Face> faces;
            for (const std::string& a : args) faces.push_back(read_face(a));
            Face out = faces.at(0).is_path() ? Face(witness2(*law, [&] {
                std::vector<Path> ps;
                for (const Face& f : faces) ps.push_back(f.path());
                return ps;
            }()))
                                             : Face(witness_n(*law, faces));
            print_boundary(out);
            emit(opt, certificate(out));
            return report(verify_face(out));
        }
        if (*contract_cmd) {
            Face out = canonical(read_face(a1), read_face(a2));
            if (dim != 0 && out.dim() != dim) {
                throw Error("result has dimension " + std::to_string(out.dim()) + ", not " + std::to_string(dim));
            }
            print_boundary(out);
            emit(opt, certificate(out));
            return report(verify_face(out));
        }
        if (*coherence_cmd) {
            auto which = coherence_from_name(kind);
            if (!which) throw Error("unknown coherence '" + kind + "'");
            std::optional<Cell> out;
            auto need = [&](std::size_t n) {
                if (args.size() != n) throw Error(kind + " takes " + std::to_string(n) + " arguments");
            };
            switch (*which) {
                case Coherence::Pentagon:
                    need(4);
                    out = pentagon3(read_path(args[0]), read_path(args[1]), read_path(args[2]), read_path(args[3]));
                    break;
                case Coherence::Triangle:
                    need(2);
                    out = triangle3(read_path(args[0]), read_path(args[1]));
                    break;
                case Coherence::Interchange: {
                    need(2);
                    auto as_derivation = [](const Face& f) {
                        return f.is_path() ? Derivation::refl(f.path()) : f.derivation();
                    };
                    out = interchange3(as_derivation(read_face(args[0])), as_derivation(read_face(args[1])));
                    break;
                }
            }
            print_boundary(*out);
            emit(opt, certificate(*out));
            return report(verify_cell(*out));
        }
        if (*verify_cmd) return report(verify_certificate(read_json(a1)));
        if (*globular_cmd) {
            bool ok = globular_check(face_from_certificate(read_json(a1)));
            std::cout << (ok ? "globular" : "not globular") << '\n';
            return ok ? 0 : 1;
        }
        if (*fuzz_cmd) {
            CorpusReport r = confluence_corpus(gen, count, threads, rule_set(opt), opt.fuel);
            std::cout << "paths: " << r.paths << "\ndivergent pairs: " << r.divergent_pairs
                      << "\njoinable: " << r.joinable << "\nfailures: " << r.failures.size()
                      << "\nmax steps: " << r.max_steps << '\n';
            for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i) {
                const ConfluenceFailure& f = r.failures[i];
                std::cout << "  " << to_sexpr(f.source) << "\n    " << rule_name(f.first.rule) << " at "
                          << format_pos(f.first.pos) << " vs " << rule_name(f.second.rule) << " at "
                          << format_pos(f.second.pos) << '\n';
            }
            emit(opt, to_json(r));
            return r.failures.empty() ? 0 : 1;
        }
        if (*bfs_cmd) {
            BfsResult r = bfs_rweq(read_path(a1), read_path(a2), bound, rule_set(opt));
            std::cout << (r.connected ? "connected" : "not connected");
            if (r.connected) std::cout << " in " << r.distance << " steps";
            std::cout << " (" << r.explored << " nodes" << (r.truncated ? ", truncated" : "") << ")\n";
            return r.connected ? 0 : 1;
        }
    } catch (const FuelExhausted& e) {
        std::cerr << "fuel exhausted: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
