#include "unisynt/cli.hpp"

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/generate.hpp"
#include "unisynt/strategy.hpp"
#include "unisynt/synthesis.hpp"
#include "unisynt/transducer.hpp"
#include "unisynt/verify.hpp"

namespace unisynt {

namespace {

BoundTransducer load_relation(const std::string& spec, const Arena& a) {
  if (spec == "identity") return identity_transducer(a);
  if (spec.rfind("obs:", 0) == 0)
    return obs_equiv_transducer(a, parse_sim_pairs(read_file(spec.substr(4))));
  if (spec.rfind("fst:", 0) == 0)
    return bind_transducer(parse_transducer(read_file(spec.substr(4))), a);
  throw ValidationError("relation must be identity, obs:<file> or fst:<file>");
}

Formula load_formula(const std::string& text, const std::string& file) {
  if (text.empty() == file.empty())
    throw ValidationError("exactly one of --formula and --formula-file is required");
  return parse_formula(file.empty() ? text : read_file(file));
}

std::string counterexample_dot(const Arena& a, const VerifyResult& r) {
  std::string dot = "digraph counterexample {\n  rankdir=LR;\n";
  int stem = static_cast<int>(r.stem.size());
  int n = stem + static_cast<int>(r.loop.size());
  auto pos = [&](int i) { return i < stem ? r.stem[i] : r.loop[i - stem]; };
  for (int i = 0; i < n; ++i)
    dot += "  n" + std::to_string(i) + " [label=\"" + a.ids[pos(i)] + "\"];\n";
  for (int i = 0; i + 1 < n; ++i)
    dot += "  n" + std::to_string(i) + " -> n" + std::to_string(i + 1) + ";\n";
  dot += "  n" + std::to_string(n - 1) + " -> n" + std::to_string(stem) + ";\n}\n";
  return dot;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synthesis and verification of uniform strategies"};
  app.require_subcommand(1);

  std::string arena_path, relation_spec = "identity", formula_text, formula_file;
  std::string strategy_path, out_path, dot_path, mode = "fully", kind, out_dir;
  long long cap = 1000000;
  int max_memory = 1, size = 6;
  uint64_t seed = 1;
  bool subjective = false;

  CLI::App* synth = app.add_subcommand("synth", "synthesize a fully-uniform strategy");
  synth->add_option("--arena", arena_path, "arena file")->required();
  synth->add_option("--relation", relation_spec, "identity | obs:<file> | fst:<file>");
  synth->add_option("--formula", formula_text, "formula text");
  synth->add_option("--formula-file", formula_file, "file holding the formula");
  synth->add_option("--out", out_path, "write the strategy file here");
  synth->add_option("--cap", cap, "powered-arena size cap");

  CLI::App* verify = app.add_subcommand("verify", "check a strategy machine");
  verify->add_option("--arena", arena_path, "arena file")->required();
  verify->add_option("--relation", relation_spec, "identity | obs:<file> | fst:<file>");
  verify->add_option("--formula", formula_text, "formula text");
  verify->add_option("--formula-file", formula_file, "file holding the formula");
  verify->add_option("--strategy", strategy_path, "strategy file")->required();
  verify->add_option("--mode", mode, "fully | strictly")
      ->check(CLI::IsMember({"fully", "strictly"}));
  verify->add_option("--dot", dot_path, "write a counterexample DOT here on failure");
  verify->add_option("--cap", cap, "powered-arena size cap");

  CLI::App* oracle = app.add_subcommand("oracle", "enumerate bounded-memory machines");
  oracle->add_option("--arena", arena_path, "arena file")->required();
  oracle->add_option("--relation", relation_spec, "identity | obs:<file> | fst:<file>");
  oracle->add_option("--formula", formula_text, "formula text");
  oracle->add_option("--formula-file", formula_file, "file holding the formula");
  oracle->add_option("--mode", mode, "fully | strictly")
      ->check(CLI::IsMember({"fully", "strictly"}));
  oracle->add_option("--max-memory", max_memory, "memory bound")->required();
  oracle->add_option("--out", out_path, "write the first passing machine here");
  oracle->add_option("--cap", cap, "powered-arena size cap");

  CLI::App* example = app.add_subcommand("example", "generate an instance");
  example->add_option("kind", kind, "opacity | imperfect")
      ->required()
      ->check(CLI::IsMember({"opacity", "imperfect"}));
  example->add_option("--seed", seed, "generator seed");
  example->add_option("--size", size, "instance size");
  example->add_flag("--subjective", subjective, "subjective variant (imperfect only)");
  example->add_option("--out-dir", out_dir, "output directory")->required();

  CLI::App* export_dot = app.add_subcommand("export-dot", "DOT of an arena or strategy");
  export_dot->add_option("--arena", arena_path, "arena file")->required();
  export_dot->add_option("--strategy", strategy_path, "strategy file (optional)");
  export_dot->add_option("--out", out_path, "write here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(synth)) {
      Arena a = load_arena(arena_path);
      BoundTransducer t = load_relation(relation_spec, a);
      Formula phi = load_formula(formula_text, formula_file);
      SynthesisResult r = synthesize_fully_uniform(a, t, phi, cap);
      for (const auto& [key, value] : r.stats) out << "stat " << key << " " << value << "\n";
      if (!r.realizable) {
        out << "UNREALIZABLE\n";
        return 1;
      }
      if (!out_path.empty()) write_file(out_path, strategy_to_text(r.machine, a));
      out << "REALIZABLE\n";
      return 0;
    }
    if (app.got_subcommand(verify)) {
      Arena a = load_arena(arena_path);
      BoundTransducer t = load_relation(relation_spec, a);
      Formula phi = load_formula(formula_text, formula_file);
      StrategyMachine m = bind_strategy(parse_strategy(read_file(strategy_path)), a);
      VerifyResult r = mode == "fully" ? check_fully_uniform(a, t, phi, m, cap)
                                       : check_strictly_uniform(a, t, phi, m, cap);
      out << verify_verdict_line(a, r) << "\n";
      if (!r.holds && !dot_path.empty()) write_file(dot_path, counterexample_dot(a, r));
      return r.holds ? 0 : 1;
    }
    if (app.got_subcommand(oracle)) {
      Arena a = load_arena(arena_path);
      BoundTransducer t = load_relation(relation_spec, a);
      Formula phi = load_formula(formula_text, formula_file);
      UniformityMode um = mode == "fully" ? UniformityMode::kFully : UniformityMode::kStrictly;
      std::vector<StrategyMachine> found = enumerate_and_verify(a, t, phi, um, max_memory, cap);
      out << "stat machines_found " << found.size() << "\n";
      if (found.empty()) {
        out << "UNREALIZABLE\n";
        return 1;
      }
      if (!out_path.empty()) write_file(out_path, strategy_to_text(found.front(), a));
      out << "REALIZABLE\n";
      return 0;
    }
    if (app.got_subcommand(example)) {
      ExampleFiles files =
          kind == "opacity" ? gen_opacity(seed, size) : gen_imperfect(seed, size, subjective);
      write_example(files, out_dir);
      out << "arena " << out_dir << "/arena.txt\n";
      out << "relation " << (files.relation_is_obs ? "obs:" : "fst:") << out_dir
          << "/relation.txt\n";
      out << "formula " << files.formula << "\n";
      return 0;
    }
    if (app.got_subcommand(export_dot)) {
      Arena a = load_arena(arena_path);
      std::string dot =
          strategy_path.empty()
              ? arena_to_dot(a)
              : strategy_to_dot(bind_strategy(parse_strategy(read_file(strategy_path)), a), a);
      if (out_path.empty())
        out << dot;
      else
        write_file(out_path, dot);
      return 0;
    }
  } catch (const UnisyntError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace unisynt
