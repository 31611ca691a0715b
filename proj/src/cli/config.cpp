#include "liegrade/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace liegrade::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"grading", "kac",          "quiver", "toledo",
                                              "amw",     "quaternionic", "cayley", "verify-paper"};
  return names;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InvalidInput("expected a comma-separated list of integers, got '" + std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Json merge_config(Json base, const Json& over) {
  if (base.is_null()) base = Json::object();
  if (!base.is_object() || !over.is_object()) throw InvalidInput("configuration must be a JSON object");
  for (const auto& [k, v] : over.items()) base[k] = v;
  return base;
}

namespace {

// JSON layer: every field accepts its natural JSON type; lists may also be
// given as "1,2,3" and rationals as numbers or "p/q" strings.
std::vector<int> int_list(const Json& j, const std::string& key) {
  if (j.is_string()) return parse_int_list(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("'" + key + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("'" + key + "' must contain integers only");
    out.push_back(x.get<int>());
  }
  return out;
}

int integer(const Json& j, const std::string& key) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size()) return v;
  }
  throw InvalidInput("'" + key + "' must be an integer");
}

Rational rational(const Json& j, const std::string& key) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("'" + key + "' must be an exact rational such as \"3/2\" (floating point is not accepted)");
}

bool boolean(const Json& j, const std::string& key) {
  if (j.is_boolean()) return j.get<bool>();
  throw InvalidInput("'" + key + "' must be true or false");
}

struct Shape {
  std::set<std::string> required, optional;
};

const std::set<std::string> common{"command", "seed", "output_format", "output_path"};

Shape shape_of(const std::string& cmd, const Json& j) {
  if (cmd == "grading") return {{"lie_type", "labels"}, {"piece"}};
  if (cmd == "kac") return {{"lie_type", "kac_labels"}, {}};
  if (cmd == "quiver") return {{"dims"}, {}};
  if (cmd == "toledo") return {{"dims", "degrees"}, {"genus"}};
  if (cmd == "quaternionic") return {{"lie_type"}, {"genus"}};
  if (cmd == "cayley") {
    if (j.contains("dims")) return {{"dims"}, {}};
    return {{"lie_type", "labels"}, {}};
  }
  if (cmd == "verify-paper") return {{}, {}};
  if (cmd == "amw") {
    const bool quat = j.contains("quaternionic") && j["quaternionic"] == true;
    const bool coarse = j.contains("coarse") && j["coarse"] == true;
    if (quat) {
      Shape s{{"genus", "quaternionic"}, {"coarse", "lambda"}};
      if (j.contains("lie_type"))
        s.required.insert("lie_type");
      else
        s.required.insert("kappa");
      if (!coarse && !j.contains("lie_type")) s.required.insert({"rank_plus", "rank_minus"});
      if (!coarse && j.contains("lie_type")) s.optional.insert({"rank_plus", "rank_minus"});
      return s;
    }
    if (coarse) return {{"genus", "coarse", "rank_plus"}, {"quaternionic"}};
    Shape s{{"genus", "rank_plus"}, {"rank_minus", "zeta_pairing", "lambda", "depth", "phi_minus_zero",
                                     "quaternionic", "coarse"}};
    if (j.contains("lambda") && rational(j["lambda"], "lambda") != 0) s.required.insert("zeta_pairing");
    return s;
  }
  std::string list;
  for (const auto& n : command_names()) list += (list.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown command '" + cmd + "'; expected one of " + list);
}

}  // namespace

JobConfig parse_config(const Json& j) {
  if (!j.is_object()) throw InvalidInput("configuration must be a JSON object");
  if (!j.contains("command") || !j["command"].is_string()) throw InvalidInput("missing 'command'");
  JobConfig c;
  c.command = j["command"].get<std::string>();
  const Shape shape = shape_of(c.command, j);
  for (const auto& key : shape.required)
    if (!j.contains(key) || j[key].is_null())
      throw InvalidInput("command '" + c.command + "' needs '" + key + "'");
  for (const auto& [key, value] : j.items()) {
    if (value.is_null()) continue;
    if (!common.count(key) && !shape.required.count(key) && !shape.optional.count(key))
      throw InvalidInput("'" + key + "' is not used by command '" + c.command + "'");
  }

  auto get = [&](const char* key) -> const Json* {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
  };
  if (auto* v = get("lie_type")) {
    if (!v->is_string()) throw InvalidInput("'lie_type' must be a string such as \"E6\"");
    c.lie_type = LieType::parse(v->get<std::string>());
  }
  if (auto* v = get("labels")) c.labels = int_list(*v, "labels");
  if (auto* v = get("kac_labels")) c.kac_labels = int_list(*v, "kac_labels");
  if (auto* v = get("dims")) c.dims = int_list(*v, "dims");
  if (auto* v = get("degrees")) c.degrees = int_list(*v, "degrees");
  if (auto* v = get("genus")) c.genus = integer(*v, "genus");
  if (auto* v = get("lambda")) c.lambda = rational(*v, "lambda");
  if (auto* v = get("piece")) c.piece = integer(*v, "piece");
  if (auto* v = get("quaternionic")) c.quaternionic = boolean(*v, "quaternionic");
  if (auto* v = get("coarse")) c.coarse = boolean(*v, "coarse");
  if (auto* v = get("kappa")) c.kappa = integer(*v, "kappa");
  if (auto* v = get("depth")) c.depth = integer(*v, "depth");
  if (auto* v = get("rank_plus")) c.rank_plus = rational(*v, "rank_plus");
  if (auto* v = get("rank_minus")) c.rank_minus = rational(*v, "rank_minus");
  if (auto* v = get("zeta_pairing")) c.zeta_pairing = rational(*v, "zeta_pairing");
  if (auto* v = get("phi_minus_zero")) c.phi_minus_zero = boolean(*v, "phi_minus_zero");
  if (auto* v = get("seed")) {
    if (!v->is_number_unsigned()) throw InvalidInput("'seed' must be a non-negative integer");
    c.seed = v->get<std::uint64_t>();
  }
  if (auto* v = get("output_format")) {
    const auto f = v->is_string() ? v->get<std::string>() : "";
    if (f == "json")
      c.output_format = Format::json;
    else if (f == "text")
      c.output_format = Format::text;
    else
      throw InvalidInput("'output_format' must be \"json\" or \"text\"");
  }
  if (auto* v = get("output_path")) {
    if (!v->is_string()) throw InvalidInput("'output_path' must be a string");
    c.output_path = v->get<std::string>();
  }

  if (c.genus && *c.genus < 2) throw InvalidInput("genus must be at least 2");
  if (c.kappa && *c.kappa != 1 && *c.kappa != 2) throw InvalidInput("kappa must be 1 or 2");
  if (c.depth && *c.depth < 1) throw InvalidInput("depth must be positive");
  return c;
}

Json inputs_json(const JobConfig& c) {
  Json j = Json::object();
  if (c.lie_type) j["lie_type"] = c.lie_type->name();
  if (c.labels) j["labels"] = *c.labels;
  if (c.kac_labels) j["kac_labels"] = *c.kac_labels;
  if (c.dims) j["dims"] = *c.dims;
  if (c.degrees) j["degrees"] = *c.degrees;
  if (c.genus) j["genus"] = *c.genus;
  if (c.lambda) j["lambda"] = to_string(*c.lambda);
  if (c.piece) j["piece"] = *c.piece;
  if (c.command == "amw") {
    j["quaternionic"] = c.quaternionic;
    j["coarse"] = c.coarse;
  }
  if (c.kappa) j["kappa"] = *c.kappa;
  if (c.depth) j["depth"] = *c.depth;
  if (c.rank_plus) j["rank_plus"] = to_string(*c.rank_plus);
  if (c.rank_minus) j["rank_minus"] = to_string(*c.rank_minus);
  if (c.zeta_pairing) j["zeta_pairing"] = to_string(*c.zeta_pairing);
  if (c.phi_minus_zero) j["phi_minus_zero"] = *c.phi_minus_zero;
  j["seed"] = c.seed;
  return j;
}

}  // namespace liegrade::cli
