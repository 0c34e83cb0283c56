#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "vero/error.hpp"
#include "vero/hyperplanes.hpp"
#include "vero/parallelism_search.hpp"
#include "vero/reduct.hpp"

#include "geometry_io.hpp"
#include "suites.hpp"

namespace {

using namespace vero;
using namespace vero::cli;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit(const nlohmann::json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump() << '\n';
  } else {
    write_json(out, j);
  }
}

void print_summary(const std::vector<Verdict>& verdicts, std::ostream& os) {
  std::size_t width = 5;
  for (const auto& v : verdicts) width = std::max(width, v.claim.size());
  os << fmt::format("{:<{}}  {:<6}  {}\n", "claim", width, "result", "instance");
  std::size_t failed = 0;
  for (const auto& v : verdicts) {
    failed += v.pass ? 0 : 1;
    os << fmt::format("{:<{}}  {:<6}  {}\n", v.claim, width, v.pass ? "PASS" : "FAIL", v.instance.dump());
  }
  os << fmt::format("{} verdicts, {} failed\n", verdicts.size(), failed);
}

VeroneseHyperplane hyperplane_for(const LoadedVeronese& lv, const std::string& form) {
  if (!lv.base.projective) throw PreconditionError("hyperplane constructions need a projective base (pg or fano)");
  const auto& pg = *lv.base.projective;
  const int dim = pg.n() + 1;
  const int p = pg.field().p();
  if (form == "standard-symplectic") {
    return hyperplane_from_symplectic(lv.space, pg, BilinearForm::standard_symplectic(dim, p));
  }
  if (form == "determinant") {
    return hyperplane_from_alternating(lv.space, pg, AlternatingMultiForm::determinant(dim, p));
  }
  const auto j = read_json(form);
  if (j.contains("matrix")) return hyperplane_from_symplectic(lv.space, pg, bilinear_from_json(j));
  if (j.contains("arity")) return hyperplane_from_alternating(lv.space, pg, alternating_from_json(j));
  throw PreconditionError(form + ": form JSON needs \"matrix\" or \"arity\"");
}

int run(int argc, char** argv) {
  CLI::App app{"Veronese spaces over partial linear spaces: constructions and verification"};
  app.require_subcommand(1);

  std::string out;
  std::string kind;
  std::vector<std::string> args;
  auto* build = app.add_subcommand("build", "Build a named base geometry (pg n p | ag n p | fano | w n p | quadric n p type)");
  build->add_option("kind", kind, "Geometry kind")->required();
  build->add_option("args", args, "Parameters");
  build->add_option("--out", out, "Output file (stdout when omitted)");

  std::string base_arg;
  int level = 2;
  auto* veronese = app.add_subcommand("veronese", "Build V(k, base)");
  veronese->add_option("--base", base_arg, "Base geometry file or name such as pg:2:3")->required();
  veronese->add_option("--level", level, "Level k")->check(CLI::PositiveNumber);
  veronese->add_option("--out", out, "Output file");

  std::string space_path, form_arg;
  auto* hyperplane = app.add_subcommand("hyperplane", "Hyperplane of a Veronese space from a form");
  hyperplane->add_option("--space", space_path, "Veronese space JSON")->required();
  hyperplane->add_option("--form", form_arg, "Form JSON, standard-symplectic or determinant")->required();
  hyperplane->add_option("--out", out, "Output file");

  std::string hyperplane_path;
  auto* reduct = app.add_subcommand("reduct", "Affine reduct by a hyperplane");
  reduct->add_option("--space", space_path, "Veronese space JSON")->required();
  reduct->add_option("--hyperplane", hyperplane_path, "Hyperplane JSON")->required();
  reduct->add_option("--out", out, "Output file");

  std::string reduct_path;
  bool timings = false;
  auto* recover = app.add_subcommand("recover", "Recover the Veronese space from a reduct and compare");
  recover->add_option("--reduct", reduct_path, "Reduct JSON")->required();
  recover->add_option("--check-against", space_path, "Ambient Veronese space JSON")->required();
  recover->add_flag("--timings", timings, "Include runtimes");

  std::string suite = "all", profile = "desk";
  bool summary = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites, one JSON verdict per line");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(SuiteRunner::suite_names()));
  verify->add_option("--profile", profile, "Instance profile")->check(CLI::IsMember({"desk"}));
  verify->add_option("--space", space_path, "Veronese space or reduct JSON (net-axiom suite)");
  verify->add_flag("--timings", timings, "Include runtimes");
  verify->add_flag("--summary", summary, "Print a summary table to stderr");

  std::string in_path;
  auto* report = app.add_subcommand("report", "Summarize a verdict file");
  report->add_option("--in", in_path, "JSON lines of verdicts (stdin when omitted)");

  std::string mode = "leaf-closed";
  std::uint64_t budget = 10'000'000;
  auto* search = app.add_subcommand("parallelism-search", "Search for a leaf-closed parallelism");
  search->add_option("--space", space_path, "Veronese space JSON over an affine base")->required();
  search->add_option("--mode", mode, "Search mode")->check(CLI::IsMember({"leaf-closed"}));
  search->add_option("--budget", budget, "Node budget");
  search->add_flag("--timings", timings, "Include runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) {
      emit(to_json(build_named(kind, args)), out);
      return kPass;
    }
    if (*veronese) {
      const bool is_file = std::ifstream(base_arg).good();
      const auto base = is_file ? named_from_json(read_json(base_arg)) : build_named(base_arg);
      emit(veronese_to_json(base, VeroneseSpace::build(base.structure, level)), out);
      return kPass;
    }
    if (*hyperplane) {
      const auto lv = veronese_from_json(read_json(space_path));
      emit(to_json(hyperplane_for(lv, form_arg), lv.space), out);
      return kPass;
    }
    if (*reduct) {
      const auto vj = read_json(space_path);
      const auto lv = veronese_from_json(vj);
      const auto h = read_json(hyperplane_path).at("points").get<PointSet>();
      auto j = to_json(build_reduct(lv.space, h));
      j["ambient"] = vj.at("veronese");
      emit(j, out);
      return kPass;
    }
    if (*recover) {
      const auto lv = veronese_from_json(read_json(space_path));
      const auto a = reduct_from_json(read_json(reduct_path));
      Verdict v;
      v.claim = "recovery";
      v.text = "the Veronese space is recovered from its affine reduct up to the explicit bijection";
      v.instance = {{"reduct_points", a.structure.point_count()}, {"ambient_points", lv.space.point_count()}};
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = recover_veronese(a, lv.space);
      const auto c = check_recovery(r, a, lv.space);
      v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      v.details = {{"points", c.points},           {"lines", c.lines},
                   {"bijective", c.bijective},     {"isomorphism", c.isomorphism},
                   {"unrecovered_lines", c.unrecovered_lines}, {"foreign_lines", c.foreign_lines}};
      v.pass = c.isomorphism;
      std::cout << to_json(v, timings).dump() << '\n';
      return v.pass ? kPass : kCheckFailed;
    }
    if (*verify) {
      std::vector<Verdict> all;
      const auto sink = [&](const Verdict& v) {
        std::cout << to_json(v, timings).dump() << '\n' << std::flush;
        all.push_back(v);
      };
      bool ok = true;
      if (!space_path.empty()) {
        if (suite != "net-axiom") throw PreconditionError("--space is only accepted by the net-axiom suite");
        const auto v = net_axiom_on_file(read_json(space_path));
        sink(v);
        ok = v.pass;
      } else {
        SuiteRunner runner;
        ok = runner.run(suite, sink);
      }
      if (summary) print_summary(all, std::cerr);
      return ok ? kPass : kCheckFailed;
    }
    if (*report) {
      std::ifstream file;
      if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw PreconditionError("cannot open " + in_path);
      }
      std::istream& in = in_path.empty() ? std::cin : file;
      std::vector<Verdict> all;
      for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        try {
          all.push_back(verdict_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
          throw PreconditionError(std::string("bad verdict line: ") + e.what());
        }
      }
      print_summary(all, std::cout);
      for (const auto& v : all) {
        if (!v.pass) return kCheckFailed;
      }
      return kPass;
    }
    if (*search) {
      const auto lv = veronese_from_json(read_json(space_path));
      if (!lv.base.parallel) throw PreconditionError("parallelism-search needs a base with a parallelism (ag)");
      Verdict v;
      v.claim = "leaf-closed-parallelism";
      v.text = "no leaf-closed parallelism with directions of constant size";
      v.instance = {{"space", read_json(space_path).at("veronese").at("base").value("construction", nlohmann::json())},
                    {"level", lv.space.level()},
                    {"budget", budget}};
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = search_leaf_closed_parallelism(lv.space, *lv.base.parallel, budget);
      v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      v.details = {{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}, {"units", r.units},
                   {"tree_hash", r.tree_hash},
                   {"open", "parallelisms that are not leaf-closed are not searched"}};
      if (r.outcome == SearchOutcome::kFound) v.witness = {{"classes", r.parallelism}};
      v.pass = r.outcome == SearchOutcome::kNone;
      std::cout << to_json(v, timings).dump() << '\n';
      if (r.outcome == SearchOutcome::kBudgetExceeded) {
        std::cerr << "budget exhausted: partial search, no conclusion\n";
      }
      return v.pass ? kPass : kCheckFailed;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
