#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vero::cli {

struct Verdict {
  std::string claim;
  std::string text;
  nlohmann::json instance = nlohmann::json::object();
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json witness;  // null when there is nothing to show
  double seconds = 0.0;
};

nlohmann::json to_json(const Verdict& v, bool timings);
Verdict verdict_from_json(const nlohmann::json& j);

using VerdictSink = std::function<void(const Verdict&)>;

/// Instances shared by several suites, built on first use.
class DeskContext;

class SuiteRunner {
 public:
  SuiteRunner();
  ~SuiteRunner();

  static const std::vector<std::string>& suite_names();
  /// Runs one suite (or "all"); returns false if any verdict failed.
  bool run(const std::string& suite, const VerdictSink& sink);

 private:
  std::unique_ptr<DeskContext> ctx_;
};

/// Net axiom on a user-supplied Veronese space or reduct file.
Verdict net_axiom_on_file(const nlohmann::json& space);

}  // namespace vero::cli
