#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskcyc/cli/commands.hpp"
#include "diskcyc/cli/weight_file.hpp"

namespace {

using namespace diskcyc;
using namespace diskcyc::cli;

struct CommonArgs {
  std::string weights_path;
  std::string format = "text";
  RunConfig cfg;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool needs_weights) {
  if (needs_weights) {
    cmd->add_option("--weights", args.weights_path, "weight file describing the operator")
        ->required();
  }
  cmd->add_option("--horizon", args.cfg.horizon, "largest power scanned (default 200)");
  cmd->add_option("--qmax", args.cfg.qmax, "basis radius for the q-sweeps (default 8)");
  cmd->add_option("--tau-big", args.cfg.tau_big,
                  "divergence threshold in natural-log units (default 30)");
  cmd->add_option("--tol", args.cfg.tolerance, "approximation tolerance (default 1e-6)");
  cmd->add_option("--format", args.format, "output format: text | records")
      ->check(CLI::IsMember({"text", "records"}));
}

int finish_config(CommonArgs& args) {
  args.cfg.format = args.format == "records" ? OutputFormat::Records : OutputFormat::Text;
  try {
    args.cfg.criterion_config().validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad configuration: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

std::optional<ShiftOperator> load_operator(const std::string& path) {
  try {
    return parse_weight_file(path);
  } catch (const FileParseError& e) {
    std::cerr << e.what() << '\n';
    return std::nullopt;
  }
}

std::optional<SparseVector> load_vector(const std::string& path) {
  try {
    return parse_vector_file(path);
  } catch (const FileParseError& e) {
    std::cerr << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diskcyclicity analyses for weighted shift operators"};
  app.require_subcommand(1);

  CommonArgs classify_args;
  CLI::App* classify = app.add_subcommand("classify", "three-valued diskcyclicity verdict");
  add_common_flags(classify, classify_args, true);

  CommonArgs witness_args;
  std::string witness_x;
  std::string witness_y;
  CLI::App* witness =
      app.add_subcommand("witness", "search for a disk-orbit approximation step");
  add_common_flags(witness, witness_args, true);
  witness->add_option("--x", witness_x, "starting vector file")->required();
  witness->add_option("--y", witness_y, "target vector file")->required();

  CommonArgs probe_args;
  CLI::App* probe =
      app.add_subcommand("probe", "supercyclicity and hypercyclicity probes");
  add_common_flags(probe, probe_args, true);

  CommonArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand("spectrum", "spectral annulus estimate");
  add_common_flags(spectrum, spectrum_args, true);

  CommonArgs certificate_args;
  CLI::App* certificate =
      app.add_subcommand("certificate", "constructive second-criterion check");
  add_common_flags(certificate, certificate_args, true);

  CommonArgs density_args;
  std::string density_x;
  std::vector<std::string> density_targets;
  CLI::App* density = app.add_subcommand("density", "disk-orbit density probe over targets");
  add_common_flags(density, density_args, true);
  density->add_option("--x", density_x, "starting vector file")->required();
  density
      ->add_option("--targets", density_targets,
                   "vector files or grid specs grid:<min>:<max>:<steps>")
      ->required();

  CommonArgs repro_args;
  std::string fixture_id = "all";
  CLI::App* repro = app.add_subcommand("repro", "re-run the bundled operator fixtures");
  add_common_flags(repro, repro_args, false);
  repro->add_option("fixture", fixture_id, "fixture id or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      if (int rc = finish_config(classify_args)) return rc;
      auto op = load_operator(classify_args.weights_path);
      if (!op) return kExitUsage;
      return run_classify(*op, classify_args.cfg, std::cout);
    }
    if (witness->parsed()) {
      if (int rc = finish_config(witness_args)) return rc;
      auto op = load_operator(witness_args.weights_path);
      auto x = load_vector(witness_x);
      auto y = load_vector(witness_y);
      if (!op || !x || !y) return kExitUsage;
      return run_witness(*op, *x, *y, witness_args.cfg, std::cout);
    }
    if (probe->parsed()) {
      if (int rc = finish_config(probe_args)) return rc;
      auto op = load_operator(probe_args.weights_path);
      if (!op) return kExitUsage;
      return run_probe(*op, probe_args.cfg, std::cout, std::cerr);
    }
    if (spectrum->parsed()) {
      if (int rc = finish_config(spectrum_args)) return rc;
      auto op = load_operator(spectrum_args.weights_path);
      if (!op) return kExitUsage;
      return run_spectrum(*op, spectrum_args.cfg, std::cout, std::cerr);
    }
    if (certificate->parsed()) {
      if (int rc = finish_config(certificate_args)) return rc;
      auto op = load_operator(certificate_args.weights_path);
      if (!op) return kExitUsage;
      return run_certificate(*op, certificate_args.cfg, std::cout, std::cerr);
    }
    if (density->parsed()) {
      if (int rc = finish_config(density_args)) return rc;
      auto op = load_operator(density_args.weights_path);
      auto x = load_vector(density_x);
      if (!op || !x) return kExitUsage;
      auto targets = resolve_targets(density_targets);
      return run_density(*op, *x, targets, density_args.cfg, std::cout);
    }
    if (repro->parsed()) {
      if (int rc = finish_config(repro_args)) return rc;
      return run_repro(fixture_id, repro_args.cfg, std::cout, std::cerr);
    }
  } catch (const FileParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
