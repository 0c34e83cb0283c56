#include "geometry_io.hpp"

#include <fstream>
#include <sstream>

#include "vero/error.hpp"

namespace vero::cli {

namespace {

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw PreconditionError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

void expect_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw PreconditionError("usage: " + usage);
}

}  // namespace

NamedGeometry build_named(const std::string& kind, const std::vector<std::string>& args) {
  NamedGeometry g;
  if (kind == "pg" || kind == "fano") {
    int n = 2, p = 2;
    if (kind == "pg") {
      expect_args(args, 2, "pg <n> <p>");
      n = parse_int(args[0], "n");
      p = parse_int(args[1], "p");
    } else {
      expect_args(args, 0, "fano");
    }
    g.projective.emplace(n, p);
    g.structure = g.projective->structure();
    g.planes = g.projective->planes();
    g.construction = {{"kind", "pg"}, {"n", n}, {"p", p}};
  } else if (kind == "ag") {
    expect_args(args, 2, "ag <n> <p>");
    const int n = parse_int(args[0], "n");
    const int p = parse_int(args[1], "p");
    AffineSpace a(n, p);
    g.structure = a.structure();
    g.parallel = a.parallel();
    if (n >= 2) g.planes = a.planes();
    g.construction = {{"kind", "ag"}, {"n", n}, {"p", p}};
  } else if (kind == "w") {
    expect_args(args, 2, "w <n> <p>");
    const int n = parse_int(args[0], "n");
    const int p = parse_int(args[1], "p");
    auto w = polar_space_symplectic(BilinearForm::standard_symplectic(n + 1, p));
    g.structure = w.structure();
    g.planes = w.planes;
    g.construction = {{"kind", "w"}, {"n", n}, {"p", p}};
  } else if (kind == "quadric") {
    expect_args(args, 3, "quadric <n> <p> <hyperbolic|parabolic|elliptic>");
    const int n = parse_int(args[0], "n");
    const int p = parse_int(args[1], "p");
    const auto& type = args[2];
    auto form = type == "hyperbolic"   ? QuadraticForm::hyperbolic(n + 1, p)
                : type == "parabolic"  ? QuadraticForm::parabolic(n + 1, p)
                : type == "elliptic"   ? QuadraticForm::elliptic(n + 1, p)
                                       : throw PreconditionError("unknown quadric type '" + type + "'");
    auto q = polar_space_quadratic(form);
    g.structure = q.structure();
    g.planes = q.planes;
    g.construction = {{"kind", "quadric"}, {"n", n}, {"p", p}, {"type", type}};
  } else {
    throw PreconditionError("unknown geometry '" + kind + "' (pg, ag, fano, w, quadric)");
  }
  return g;
}

NamedGeometry build_named(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw PreconditionError("empty geometry name");
  const std::string kind = parts.front();
  parts.erase(parts.begin());
  return build_named(kind, parts);
}

NamedGeometry named_from_construction(const nlohmann::json& c) {
  try {
    const auto kind = c.at("kind").get<std::string>();
    std::vector<std::string> args{std::to_string(c.at("n").get<int>()), std::to_string(c.at("p").get<int>())};
    if (kind == "quadric") args.push_back(c.at("type").get<std::string>());
    return build_named(kind, args);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed construction: ") + e.what());
  }
}

nlohmann::json to_json(const NamedGeometry& g) {
  auto j = vero::to_json(g.structure);
  if (!g.construction.is_null()) j["construction"] = g.construction;
  if (g.parallel) j["parallel_classes"] = g.parallel->parallel_classes;
  return j;
}

NamedGeometry named_from_json(const nlohmann::json& j) {
  if (j.contains("construction")) {
    auto g = named_from_construction(j.at("construction"));
    if (j.contains("lines") && incidence_from_json(j).lines() != g.structure.lines()) {
      throw PreconditionError("stored lines differ from the named construction");
    }
    return g;
  }
  NamedGeometry g;
  g.structure = incidence_from_json(j);
  if (j.contains("parallel_classes")) {
    g.parallel = ParallelStructure{g.structure, j.at("parallel_classes").get<std::vector<std::vector<int>>>(), false};
  }
  return g;
}

nlohmann::json veronese_to_json(const NamedGeometry& base, const VeroneseSpace& v) {
  auto j = vero::to_json(v.structure());
  j["veronese"] = {{"level", v.level()}, {"base", to_json(base)}};
  return j;
}

LoadedVeronese veronese_from_json(const nlohmann::json& j) {
  if (!j.contains("veronese")) throw PreconditionError("not a Veronese space file (missing \"veronese\")");
  const auto& d = j.at("veronese");
  auto base = named_from_json(d.at("base"));
  auto v = VeroneseSpace::build(base.structure, d.at("level").get<int>());
  if (j.contains("lines") && j.at("lines").get<std::vector<PointSet>>() != v.structure().lines()) {
    throw PreconditionError("stored lines differ from the rebuilt Veronese space");
  }
  return {std::move(base), std::move(v)};
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << j.dump() << '\n';
}

}  // namespace vero::cli
