#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace vero::cli {

/// A base geometry with the recipe that produced it, when known.
struct NamedGeometry {
  IncidenceStructure structure;
  nlohmann::json construction;  // null for geometries read from plain JSON
  std::optional<ParallelStructure> parallel;
  std::optional<ProjectiveSpace> projective;
  std::vector<PointSet> planes;  // strong planes of the base when known
};

/// kind is pg, ag, fano, w or quadric; args are the remaining words, e.g.
/// {"3", "3"} or {"3", "3", "hyperbolic"}.
NamedGeometry build_named(const std::string& kind, const std::vector<std::string>& args);
/// Accepts "pg:3:3" style names.
NamedGeometry build_named(const std::string& spec);
NamedGeometry named_from_construction(const nlohmann::json& c);

nlohmann::json to_json(const NamedGeometry& g);
/// Rebuilds from "construction" when present and checks the stored lines.
NamedGeometry named_from_json(const nlohmann::json& j);

struct LoadedVeronese {
  NamedGeometry base;
  VeroneseSpace space;
};

nlohmann::json veronese_to_json(const NamedGeometry& base, const VeroneseSpace& v);
LoadedVeronese veronese_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace vero::cli
