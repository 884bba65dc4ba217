#include <sstream>

#include "thetalab_cli/job.hpp"

namespace thetalab::cli {
namespace {

using json = nlohmann::ordered_json;

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const json& e : v) {
    if (e.is_array() || e.is_object()) return false;
  }
  return true;
}

bool is_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const json& row : v) {
    if (!is_flat_array(row) || row.size() != v[0].size()) return false;
  }
  return true;
}

std::string flat(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i == 0 ? "" : ", ") + scalar(v[i]);
  return s + "]";
}

void emit(std::ostringstream& os, const std::string& key, const json& v, int indent);

void emit_matrix(std::ostringstream& os, const json& m, int indent) {
  std::vector<std::size_t> width(m[0].size(), 0);
  for (const json& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], scalar(row[j]).size());
  }
  for (const json& row : m) {
    os << std::string(indent, ' ') << '|';
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string s = scalar(row[j]);
      os << ' ' << std::string(width[j] - s.size(), ' ') << s;
    }
    os << " |\n";
  }
}

void emit(std::ostringstream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, e] : v.items()) emit(os, k, e, indent + 2);
  } else if (is_matrix(v) && v[0].size() > 0) {
    os << pad << key << ":\n";
    emit_matrix(os, v, indent + 2);
  } else if (is_flat_array(v)) {
    os << pad << key << ": " << flat(v) << '\n';
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) emit(os, "- [" + std::to_string(i) + "]", v[i], indent + 2);
  } else {
    os << pad << key << ": " << scalar(v) << '\n';
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::ostringstream os;
  os << "theta-lab " << scalar(report["tool_version"]) << '\n';
  os << "ring: " << flat(report["ring"]["vars"]) << '\n';
  os << "f: " << scalar(report["f"]) << '\n';
  for (const json& task : report["tasks"]) {
    os << '\n' << scalar(task["name"]) << " (" << scalar(task["kind"]) << "): " << scalar(task["verdict"]) << '\n';
    for (const auto& [k, v] : task["inputs"].items()) emit(os, k, v, 2);
    for (const auto& [k, v] : task["result"].items()) emit(os, k, v, 2);
    for (const json& n : task["notes"]) os << "  note: " << scalar(n) << '\n';
  }
  return os.str();
}

}  // namespace thetalab::cli
