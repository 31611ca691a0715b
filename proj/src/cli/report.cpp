#include "liegrade/cli/report.hpp"

#include <sstream>

namespace liegrade::cli {

std::string version() { return "0.1.0"; }

void Report::check(std::string id, std::string paper_ref, Json expected, Json actual) {
  const bool pass = expected == actual;
  checks.push_back({std::move(id), std::move(paper_ref), std::move(expected), std::move(actual), pass});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id}, {"paper_ref", c.paper_ref}, {"expected", c.expected}, {"actual", c.actual},
                  {"pass", c.pass}});
  j["checks"] = cs;
  j["warnings"] = warnings;
  j["version"] = version();
  return j;
}

namespace {

void flatten(std::ostringstream& out, const Json& j, const std::string& prefix) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(out, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  out << "  " << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << " (liegrade " << version() << ")\n";
  out << "inputs:\n";
  flatten(out, inputs, "");
  out << "results:\n";
  flatten(out, results, "");
  if (!checks.empty()) {
    out << "checks:\n";
    for (const auto& c : checks)
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << "  expected " << c.expected.dump() << ", got "
          << c.actual.dump() << "\n";
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Root& r) { return Json(r); }

std::string basis_label(const ChevalleyAlgebra& alg, std::size_t i) {
  auto r = alg.root_of(i);
  if (!r) return "h" + std::to_string(i + 1);
  std::string s = "e[";
  const auto& a = alg.root_system().roots()[*r];
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + "]";
}

Json element_json(const ChevalleyAlgebra& alg, const Element& x) {
  Json j = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) j[basis_label(alg, i)] = to_string(x[i]);
  return j;
}

}  // namespace liegrade::cli
