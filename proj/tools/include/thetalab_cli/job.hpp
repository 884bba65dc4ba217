#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "thetalab/matrix_factorization.hpp"
#include "thetalab/spectrum.hpp"

namespace thetalab::cli {

/// Position of a value in the job file, 1-based like editors show it.
struct SourceSpan {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;

  std::string to_string() const;
};

/// Malformed or inconsistent job input. The message already names the
/// offending key and its span.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModuleSpec {
  enum class Kind { Ideal, Mf };

  std::string name;
  Kind kind = Kind::Ideal;
  std::vector<std::string> gens;                 // ideal
  std::vector<std::vector<std::string>> a, b;    // mf
  ModulePresentation presentation;
  SourceSpan span;
};

/// Ideal operand of an intersection task: a module name or inline generators.
struct IdealOperand {
  std::string module;
  std::vector<std::string> gens_text;
  std::vector<Poly> gens;
};

struct TaskSpec {
  std::string name;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> pairs;  // theta
  std::vector<std::vector<Rational>> formulas;              // theta, optional
  std::vector<std::string> modules;                         // gram, chern
  IdealOperand i, j;                                        // intersection
  bool compare_theta = false;                               // intersection
  SourceSpan span;
};

struct JobSpec {
  std::string source;
  std::vector<std::string> vars;
  std::string f_text;
  Poly f;
  std::vector<std::string> weights_text;
  std::optional<QHWeights> weights;
  /// Sorted by name, so every report lists modules in the same order.
  std::map<std::string, ModuleSpec> modules;
  std::vector<TaskSpec> tasks;
};

inline constexpr std::string_view kTaskKinds[] = {"milnor", "spectrum", "residue",      "theta",
                                                  "gram",   "chern",    "intersection", "check-all"};

JobSpec parse_job(std::string_view text, const std::string& source_name);
/// Reads and parses a file; unreadable files raise InputError.
JobSpec load_job(const std::filesystem::path& path);

struct RunOptions {
  bool oracle_check = false;
  unsigned threads = 1;
};

struct RunResult {
  nlohmann::ordered_json report;
  /// 0 all checks pass, 1 a mathematical check failed, 2 input error.
  int exit_code = 0;
  /// One line per task that ended in an error, naming task and span.
  std::vector<std::string> diagnostics;
};

RunResult run_job(const JobSpec& job, const RunOptions& options);

/// Human-readable rendering of a report produced by run_job.
std::string render_table(const nlohmann::ordered_json& report);

}  // namespace thetalab::cli
