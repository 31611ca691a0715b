#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liegrade/chevalley.hpp"

namespace liegrade::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
std::string version();

struct Check {
  std::string id;
  // Name of the statement the check reproduces, or "invariant" for
  // property checks with no reference value.
  std::string paper_ref;
  Json expected;
  Json actual;
  bool pass = false;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  // Records a check passing iff expected == actual.
  void check(std::string id, std::string paper_ref, Json expected, Json actual);
  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

// Exact values are serialized as strings "p" or "p/q".
Json to_json(const Rational& q);
Json to_json(std::span<const Rational> v);
Json to_json(const Matrix& m);
Json to_json(const Root& r);

// "h1".."hr" for the Cartan generators, "e[c_1,...,c_r]" for root vectors.
std::string basis_label(const ChevalleyAlgebra& alg, std::size_t i);
// Nonzero coordinates keyed by basis label.
Json element_json(const ChevalleyAlgebra& alg, const Element& x);

}  // namespace liegrade::cli
