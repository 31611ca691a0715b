#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegrade/cli/report.hpp"
#include "liegrade/root_system.hpp"

namespace liegrade::cli {

enum class Format { json, text };

struct JobConfig {
  std::string command;
  std::optional<LieType> lie_type;
  std::optional<std::vector<int>> labels, kac_labels, dims, degrees;
  std::optional<int> genus;
  std::optional<Rational> lambda;
  // grading: which piece g_j to study as a Vinberg pair (default 1).
  std::optional<int> piece;
  // amw
  bool quaternionic = false;
  bool coarse = false;
  std::optional<int> kappa, depth;
  std::optional<Rational> rank_plus, rank_minus, zeta_pairing;
  std::optional<bool> phi_minus_zero;

  std::uint64_t seed = 0;
  Format output_format = Format::json;
  std::optional<std::string> output_path;
};

const std::vector<std::string>& command_names();

// Builds a config from a JSON object keyed by the JobConfig field names and
// checks that exactly the fields the command needs are present. Throws
// InvalidInput with a message naming the offending field.
JobConfig parse_config(const Json& j);

// Fields of `over` replace those of `base`.
Json merge_config(Json base, const Json& over);

// "1,0,-1" -> {1, 0, -1}. Throws InvalidInput.
std::vector<int> parse_int_list(std::string_view text);

// The fields actually set, as echoed in the report.
Json inputs_json(const JobConfig& c);

}  // namespace liegrade::cli
