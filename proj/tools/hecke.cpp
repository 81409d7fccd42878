// Command-line front end for the affine Hecke algebra workbench.
//
// Exit codes: 0 pass, 1 semantic failure (a relation or theorem check did
// not hold), 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hecke/fixtures.hpp"
#include "hecke/json_io.hpp"
#include "hecke/normal_form.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

ModuleRep load_module(const std::string& path) {
  json j = json::parse(read_text_file(path));
  return module_from_json(j);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hecke: exact workbench for affine Hecke algebras of type B"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "json", gamma_text, op_text;
  std::string a_text = "7", a0_text = "5", p_text = "2", q_text = "3", lambda_text = "5";
  int n_arg = 2, window = 2, a_exp = 0;
  uint64_t seed = kDefaultSeed;
  bool dot = false;

  auto* verify = app.add_subcommand("verify", "check the defining relations on a module file");
  verify->add_option("file", in_path)->required();

  auto* chr = app.add_subcommand("char", "formal character of a module file");
  chr->add_option("file", in_path)->required();
  chr->add_option("--out", out_path);
  chr->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* ind = app.add_subcommand("induce", "induce a parabolic module to the full algebra");
  ind->add_option("file", in_path)->required();
  ind->add_option("--out", out_path);

  auto* eps_cmd = app.add_subcommand("eps", "longest a-tail of the character");
  eps_cmd->add_option("file", in_path)->required();
  eps_cmd->add_option("--a", a_text);

  auto* cry = app.add_subcommand("crystal", "apply a crystal operator");
  std::string which = "f";
  cry->add_option("op", which)->check(CLI::IsMember({"e", "f"}));
  cry->add_option("file", in_path)->required();
  cry->add_option("--a", a_text);
  cry->add_option("--seed", seed);
  cry->add_option("--out", out_path);

  auto* mseg = app.add_subcommand("mseg", "multisegment crystal operators");
  mseg->add_option("--gamma", gamma_text)->required();
  mseg->add_option("--op", op_text)->check(CLI::IsMember({"e", "f", "e*", "f*", "eps", "eps*"}))->required();
  mseg->add_option("--a-exp", a_exp);

  auto* cliff = app.add_subcommand("clifford", "restriction analysis H_n -> H_n^R");
  cliff->add_option("file", in_path)->required();
  cliff->add_option("--seed", seed);
  cliff->add_option("--out", out_path);

  auto* graph = app.add_subcommand("graph", "crystal graph from the H_0 seed");
  graph->add_option("--lambda", lambda_text);
  graph->add_option("--p", p_text);
  graph->add_option("--q", q_text);
  graph->add_option("--n", n_arg);
  graph->add_option("--window", window);
  graph->add_option("--seed", seed);
  graph->add_flag("--dot", dot);
  graph->add_option("--out", out_path);

  auto* fix = app.add_subcommand("fixtures", "list or build the example corpus");
  std::string fix_action = "list";
  std::vector<std::string> fix_names;
  fix->add_option("action", fix_action)->check(CLI::IsMember({"list", "build"}));
  fix->add_option("names", fix_names);
  fix->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      ModuleRep M = load_module(in_path);
      RelationReport rep = verify_module(M);
      std::cout << rep.str();
      std::cout << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
      return rep.all_pass() ? 0 : 1;
    }
    if (chr->parsed()) {
      FormalCharacter ch = character(load_module(in_path));
      emit(format == "csv" ? character_to_csv(ch)
                           : dump_canonical(character_to_json(ch)),
           out_path);
      return 0;
    }
    if (ind->parsed()) {
      ModuleRep M = load_module(in_path);
      const AlgebraDesc& d = M.desc();
      AlgebraDesc full = d.fam == Family::B ? AlgebraDesc::full_B(d.n, d.p, d.q)
                                            : AlgebraDesc::full_R(d.n, d.p, d.q);
      emit(dump_canonical(module_to_json(induce(M, full))), out_path);
      return 0;
    }
    if (eps_cmd->parsed()) {
      std::cout << eps(load_module(in_path), Scalar::parse(a_text)) << "\n";
      return 0;
    }
    if (cry->parsed()) {
      ModuleRep M = load_module(in_path);
      Scalar a = Scalar::parse(a_text);
      if (which == "e") {
        emit(dump_canonical(module_to_json(crystal_e(M, a, seed))), out_path);
      } else {
        emit(dump_canonical(crystal_result_to_json(crystal_f(M, a, seed))), out_path);
      }
      return 0;
    }
    if (mseg->parsed()) {
      Multisegment ms = Multisegment::parse(gamma_text);
      if (op_text == "eps") {
        std::cout << eps_A(ms, a_exp) << "\n";
        return 0;
      }
      if (op_text == "eps*") {
        std::cout << eps_star_A(ms, a_exp) << "\n";
        return 0;
      }
      MsOp op = op_text == "e"    ? MsOp::E
                : op_text == "f"  ? MsOp::F
                : op_text == "e*" ? MsOp::Estar
                                  : MsOp::Fstar;
      auto r = crystal_A(ms, a_exp, op);
      std::cout << (r ? r->str() : "0") << "\n";
      return 0;
    }
    if (cliff->parsed()) {
      CliffordReport rep = clifford_restrict(load_module(in_path), seed);
      emit(dump_canonical(clifford_to_json(rep)), out_path);
      return 0;
    }
    if (graph->parsed()) {
      LambdaLine line{Scalar::parse(lambda_text), Scalar::parse(q_text),
                      Scalar::parse(p_text), window};
      if (!genericity_check(line)) {
        std::cerr << "graph: line fails the genericity check\n";
        return 1;
      }
      CrystalGraph g = build_graph(line, n_arg, seed);
      emit(dot ? g.dot() : dump_canonical(graph_to_json(g)), out_path);
      return 0;
    }
    if (fix->parsed()) {
      if (fix_action == "list") {
        for (auto& n : fixture_names()) std::cout << n << "\n";
        return 0;
      }
      auto names = fix_names.empty() ? fixture_names() : fix_names;
      std::filesystem::path dir = out_path.empty() ? "fixtures" : out_path;
      std::filesystem::create_directories(dir);
      for (auto& n : names) {
        ModuleRep M = build_fixture(n);
        write_text_file((dir / (n + ".json")).string(),
                        dump_canonical(module_to_json(M)));
        std::cout << n << " -> " << (dir / (n + ".json")).string() << "\n";
      }
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
