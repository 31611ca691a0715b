// liegrade: exact computations with graded simple Lie algebras.
//
//   liegrade quaternionic --type A --rank 2
//   liegrade toledo --dims 1,1 --degrees -1,1 --genus 2
//   liegrade amw --quaternionic --kappa 1 --genus 2 --coarse
//   liegrade verify-paper

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liegrade/cli/commands.hpp"

using namespace liegrade;
using namespace liegrade::cli;

namespace {

struct Flags {
  std::optional<std::string> type, labels, kac_labels, dims, degrees, lambda, rank_plus, rank_minus, zeta_pairing,
      format, output, config;
  std::optional<int> rank, genus, piece, kappa, depth;
  std::optional<std::uint64_t> seed;
  bool quaternionic = false, coarse = false, phi_minus_zero = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--seed", f.seed, "Seed for generic elements (default 0)");
  sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output", f.output, "Write the report here instead of stdout");
  sub->add_option("--config", f.config, "JSON job file; flags override its fields");
}

void add_type(CLI::App* sub, Flags& f) {
  sub->add_option("--type", f.type, "Family letter (with --rank) or a full type such as E6");
  sub->add_option("--rank", f.rank, "Rank, when --type is a bare family letter");
}

Json flags_json(const std::string& cmd, const Flags& f) {
  Json j = Json::object();
  j["command"] = cmd;
  if (f.type) {
    std::string t = *f.type;
    if (f.rank) t += std::to_string(*f.rank);
    j["lie_type"] = t;
  } else if (f.rank) {
    throw InvalidInput("--rank needs --type");
  }
  auto list = [&](const char* key, const std::optional<std::string>& v) {
    if (v) j[key] = parse_int_list(*v);
  };
  list("labels", f.labels);
  list("kac_labels", f.kac_labels);
  list("dims", f.dims);
  list("degrees", f.degrees);
  if (f.lambda) j["lambda"] = *f.lambda;
  if (f.rank_plus) j["rank_plus"] = *f.rank_plus;
  if (f.rank_minus) j["rank_minus"] = *f.rank_minus;
  if (f.zeta_pairing) j["zeta_pairing"] = *f.zeta_pairing;
  if (f.genus) j["genus"] = *f.genus;
  if (f.piece) j["piece"] = *f.piece;
  if (f.kappa) j["kappa"] = *f.kappa;
  if (f.depth) j["depth"] = *f.depth;
  if (f.seed) j["seed"] = *f.seed;
  if (f.quaternionic) j["quaternionic"] = true;
  if (f.coarse) j["coarse"] = true;
  if (f.phi_minus_zero) j["phi_minus_zero"] = true;
  if (f.format) j["output_format"] = *f.format;
  if (f.output) j["output_path"] = *f.output;
  return j;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("config file " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with graded simple Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  Flags f;

  auto* grading = app.add_subcommand("grading", "Z-grading from simple-root labels and its Vinberg pair");
  add_type(grading, f);
  grading->add_option("--labels", f.labels, "Degree labels p_1,...,p_r");
  grading->add_option("--piece", f.piece, "Study g_j as a Vinberg pair (default 1)");

  auto* kac = app.add_subcommand("kac", "Z/m-grading from Kac labels and the lift criterion");
  add_type(kac, f);
  kac->add_option("--kac-labels", f.kac_labels, "Labels p_0,p_1,...,p_r on the affine diagram");

  auto* quiver = app.add_subcommand("quiver", "Orbits, JM-regularity and Toledo ranks of a linear quiver");
  quiver->add_option("--dims", f.dims, "Dimension vector d_0,...,d_{m-1}");

  auto* toledo = app.add_subcommand("toledo", "Toledo invariant of a quiver Higgs topology");
  toledo->add_option("--dims", f.dims, "Ranks d_0,...,d_{m-1}");
  toledo->add_option("--degrees", f.degrees, "Degrees of the E_j, summing to zero");
  toledo->add_option("--genus", f.genus, "Genus g >= 2 (default 2)");

  auto* amw = app.add_subcommand("amw", "Arakelov-Milnor-Wood bounds");
  add_type(amw, f);
  amw->add_option("--genus", f.genus, "Genus g >= 2");
  amw->add_option("--lambda", f.lambda, "Exact rational lambda (default 0)");
  amw->add_option("--rank-plus", f.rank_plus, "rank_T(phi^+)");
  amw->add_option("--rank-minus", f.rank_minus, "rank_T(phi^-)");
  amw->add_option("--zeta-pairing", f.zeta_pairing, "B*(gamma,gamma) B(zeta,zeta)");
  amw->add_option("--depth", f.depth, "Depth m of the grading (default 2)");
  amw->add_flag("--phi-minus-zero", f.phi_minus_zero, "phi^- vanishes");
  amw->add_flag("--quaternionic", f.quaternionic, "Use the quaternionic bounds");
  amw->add_option("--kappa", f.kappa, "1 for sp_2n, 2 otherwise");
  amw->add_flag("--coarse", f.coarse, "Coarse bounds only");

  auto* quat = app.add_subcommand("quaternionic", "The quaternionic grading and its ranks");
  add_type(quat, f);
  quat->add_option("--genus", f.genus, "Genus for the coarse bounds (default 2)");

  auto* cayley = app.add_subcommand("cayley", "Cayley data (c, V) of a JM-regular grading");
  add_type(cayley, f);
  cayley->add_option("--labels", f.labels, "Degree labels p_1,...,p_r");
  cayley->add_option("--dims", f.dims, "Quiver dimension vector, instead of --type/--labels");

  auto* verify = app.add_subcommand("verify-paper", "Reproduce every stated example and value");

  for (auto* sub : {grading, kac, quiver, toledo, amw, quat, cayley, verify}) add_common(sub, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  JobConfig config;
  Report report;
  try {
    Json j = f.config ? load_config(*f.config) : Json::object();
    if (j.contains("command") && j["command"] != cmd)
      throw InvalidInput("config file is for command " + j["command"].dump() + ", not '" + cmd + "'");
    config = parse_config(merge_config(j, flags_json(cmd, f)));
    report = run(config);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return exit_verification;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_verification;
  }

  const std::string text =
      config.output_format == Format::json ? report.to_json().dump(2) + "\n" : report.to_text();
  if (config.output_path) {
    std::ofstream out(*config.output_path);
    if (!out) {
      std::cerr << "error: cannot write " << *config.output_path << "\n";
      return exit_invalid;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return report.passed() ? exit_ok : exit_verification;
}
