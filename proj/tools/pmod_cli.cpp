// Command-line front end for the persistence-module library: file validation,
// hom/erosion/pruning/decomposition computations, pattern-completion tools,
// distances, SVG rendering, and the built-in verification suite.
//
// Exit codes: 0 success, 1 a check reported a negative result, 2 bad input
// (parse errors, commutativity violations, exceeded caps).

#include <iostream>

#include "CLI11.hpp"
#include "pmod/ci.hpp"
#include "pmod/decomp.hpp"
#include "pmod/distances.hpp"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"
#include "pmod/io.hpp"
#include "pmod/prune.hpp"
#include "pmod/render.hpp"
#include "pmod/verify.hpp"

using namespace pmod;

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

ModPtr load_module(const std::string& path) { return parse_module(read_file(path)); }

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistence module toolbox"};
  app.require_subcommand(1);

  std::string in1, in2, out_path;
  int eps = 1;
  int weaken_c = 3;
  int upset_C = 9;
  int family_n = 2;
  int cell = 12;
  u32 field = kDefaultP;
  u64 seed = 1;

  auto* validate = app.add_subcommand("validate", "parse a module file and report its shape");
  validate->add_option("file", in1)->required();

  auto* hom = app.add_subcommand("hom", "dimension of the space of morphisms");
  hom->add_option("src", in1)->required();
  hom->add_option("dst", in2)->required();

  auto* erode_cmd = app.add_subcommand("erode", "erosion of a module");
  erode_cmd->add_option("file", in1)->required();
  erode_cmd->add_option("--epsilon", eps)->required();
  erode_cmd->add_option("--out", out_path);

  auto* prune_cmd = app.add_subcommand("prune", "pruning of a module");
  prune_cmd->add_option("file", in1)->required();
  prune_cmd->add_option("--epsilon", eps)->required();
  prune_cmd->add_option("--out", out_path);

  auto* decomp_cmd = app.add_subcommand("decompose", "barcode of indecomposable summands");
  decomp_cmd->add_option("file", in1)->required();
  decomp_cmd->add_option("--seed", seed);
  decomp_cmd->add_option("--out", out_path);

  auto* ci = app.add_subcommand("ci", "pattern-completion problems");
  ci->require_subcommand(1);
  auto* ci_solve = ci->add_subcommand("solve", "exhaustive masked search over a small field");
  ci_solve->add_option("file", in1)->required();
  ci_solve->add_option("--field", field);
  auto* ci_weaken = ci->add_subcommand("weaken", "c-weakening of a pattern problem");
  ci_weaken->add_option("file", in1)->required();
  ci_weaken->add_option("-c,--steps", weaken_c);
  ci_weaken->add_option("--out", out_path);
  auto* ci_match = ci->add_subcommand("match", "search for a permutation solution");
  ci_match->add_option("file", in1)->required();
  auto* ci_to_upsets = ci->add_subcommand("to-upsets", "staircase families realizing a problem");
  ci_to_upsets->add_option("file", in1)->required();
  ci_to_upsets->add_option("-C,--horizon", upset_C);
  ci_to_upsets->add_option("--out", out_path);
  auto* ci_from_upsets_cmd = ci->add_subcommand("from-upsets", "pattern problem of two families");
  ci_from_upsets_cmd->add_option("ufile", in1)->required();
  ci_from_upsets_cmd->add_option("vfile", in2)->required();
  ci_from_upsets_cmd->add_option("--epsilon", eps);
  ci_from_upsets_cmd->add_option("--out", out_path);
  auto* ci_family = ci->add_subcommand("counterexample", "staircase interleaving family");
  ci_family->add_option("-n,--size", family_n);
  ci_family->add_option("--out", out_path);

  auto* dist = app.add_subcommand("distance", "distances between modules or bar lists");
  dist->require_subcommand(1);
  auto* d_erosion = dist->add_subcommand("erosion", "erosion distance between two modules");
  d_erosion->add_option("a", in1)->required();
  d_erosion->add_option("b", in2)->required();
  auto* d_bottleneck = dist->add_subcommand("bottleneck", "bottleneck distance of bar lists");
  d_bottleneck->add_option("a", in1)->required();
  d_bottleneck->add_option("b", in2)->required();

  auto* render_cmd = app.add_subcommand("render", "SVG rendering of a 2-parameter module");
  render_cmd->add_option("file", in1)->required();
  render_cmd->add_option("--cell", cell);
  render_cmd->add_option("--out", out_path);

  std::string m1_path, m2_path;
  auto* en_check = app.add_subcommand("en-check", "validate an erosion-neighborhood witness");
  en_check->add_option("module", in1)->required();
  en_check->add_option("m1", m1_path)->required();
  en_check->add_option("m2", m2_path)->required();
  en_check->add_option("--epsilon", eps);

  auto* en_common = app.add_subcommand(
      "en-common", "common neighborhood member of a module and its erosion");
  en_common->add_option("file", in1)->required();
  en_common->add_option("--epsilon", eps);
  en_common->add_option("--seed", seed);

  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      ModPtr M = load_module(in1);
      std::cout << "axes " << M->d() << "\n";
      std::cout << "size";
      for (int s : M->grid.sz) std::cout << " " << s;
      std::cout << "\n";
      long long supp = 0;
      for (int d : M->dim)
        if (d) ++supp;
      std::cout << "support-points " << supp << "\n";
      std::cout << "total-dim " << M->total_dim() << "\n";
      std::cout << "supdim " << M->supdim() << "\n";
      return 0;
    }
    if (*hom) {
      ModPtr A = load_module(in1), B = load_module(in2);
      std::cout << "hom-dim " << hom_basis(*A, *B).size() << "\n";
      return 0;
    }
    if (*erode_cmd) {
      ModPtr M = load_module(in1);
      emit(out_path, serialize_module(*erosion(*M, eps).module));
      return 0;
    }
    if (*prune_cmd) {
      ModPtr M = load_module(in1);
      emit(out_path, serialize_module(*pruning(*M, eps).module));
      return 0;
    }
    if (*decomp_cmd) {
      ModPtr M = load_module(in1);
      Barcode bc = barcode(*M, seed);
      std::ostringstream os;
      for (size_t i = 0; i < bc.reps.size(); ++i)
        os << "class " << i << " multiplicity " << bc.multiplicities[i] << " total-dim "
           << bc.reps[i]->total_dim() << "\n";
      os << (bc.all_certified ? "all summands certified indecomposable\n"
                              : "warning: some summands not certified\n");
      std::cout << os.str();
      if (!out_path.empty())
        for (size_t i = 0; i < bc.reps.size(); ++i)
          write_file(out_path + ".class" + std::to_string(i), serialize_module(*bc.reps[i]));
      return bc.all_certified ? 0 : 1;
    }
    if (*ci_solve) {
      CIProblem prob = parse_ci(read_file(in1));
      auto sol = solve_ci(prob, field);
      if (!sol) {
        std::cout << "no solution over GF(" << field << ")\n";
        return 1;
      }
      std::cout << "solution found over GF(" << field << ")"
                << (verify_ci_solution(prob, *sol).simple ? " (simple)" : "") << "\n";
      return 0;
    }
    if (*ci_weaken) {
      CIProblem prob = parse_ci(read_file(in1));
      emit(out_path, serialize_ci(weaken(prob, weaken_c)));
      return 0;
    }
    if (*ci_match) {
      CIProblem prob = parse_ci(read_file(in1));
      auto sol = simple_solution(prob);
      std::cout << (sol ? "simple solution exists\n" : "no simple solution\n");
      return sol ? 0 : 1;
    }
    if (*ci_to_upsets) {
      CIProblem prob = parse_ci(read_file(in1));
      UpsetsFromCI ups = upsets_from_ci(prob, upset_C);
      std::string text = serialize_upsets(ups.U) + serialize_upsets(ups.V);
      emit(out_path, text);
      return 0;
    }
    if (*ci_from_upsets_cmd) {
      auto U = parse_upsets(read_file(in1));
      auto V = parse_upsets(read_file(in2));
      emit(out_path, serialize_ci(ci_from_upsets(U, V, eps)));
      return 0;
    }
    if (*ci_family) {
      CounterexampleFamily cf = counterexample_family(family_n);
      std::cout << "supdim " << cf.M->supdim() << "\n";
      std::cout << "interleaving-verified "
                << (verify_interleaving(*cf.pair.A, *cf.pair.B, cf.pair.phi, cf.pair.psi, 1)
                        ? "yes"
                        : "no")
                << "\n";
      if (!out_path.empty()) write_file(out_path, serialize_module(*cf.M));
      return 0;
    }
    if (*d_erosion) {
      ModPtr A = load_module(in1), B = load_module(in2);
      std::cout << "erosion-distance " << d_E(*A, *B) << "\n";
      return 0;
    }
    if (*d_bottleneck) {
      auto A = parse_bars(read_file(in1));
      auto B = parse_bars(read_file(in2));
      std::cout << "bottleneck " << bottleneck_bars(A, B).value << "\n";
      return 0;
    }
    if (*render_cmd) {
      ModPtr M = load_module(in1);
      RenderOptions opt;
      opt.cell = cell;
      emit(out_path, render_svg(*M, opt));
      return 0;
    }
    if (*en_check) {
      ModPtr M = load_module(in1);
      Submodule M1 = parse_submodule(read_file(m1_path), M);
      Submodule M2 = parse_submodule(read_file(m2_path), M);
      ENCheck ec = check_en_witness(ENWitness{M, M1, M2, eps});
      if (!ec.ok) {
        std::cout << "rejected: " << ec.violation << "\n";
        return 1;
      }
      std::cout << "member total-dim " << ec.member->total_dim() << "\n";
      return 0;
    }
    if (*en_common) {
      ModPtr M = load_module(in1);
      Erosion er = erosion(*M, eps);
      ENWitness w{er.pres.ambient, er.pres.M1, er.pres.M2, eps};
      ENInterleaving itl = en_interleaving(w, er.pres);
      CommonEN common =
          common_en_from_interleaving(*er.pres.ambient, *er.module, itl.phi, itl.psi, eps, seed);
      std::cout << "member-dims " << common.member_M->total_dim() << " "
                << common.member_N->total_dim() << "\n";
      std::cout << "members-isomorphic " << tri_str(common.members_isomorphic) << "\n";
      return common.members_isomorphic == Tri::Yes ? 0 : 1;
    }
    if (*verify_cmd) {
      bool all = true;
      for (const CriterionResult& r : run_verification()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CommutativityViolation& e) {
    std::cerr << "commutativity violation: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
