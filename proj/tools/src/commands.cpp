#include "diskcyc/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "diskcyc/cli/classify.hpp"
#include "diskcyc/cli/fixtures.hpp"
#include "diskcyc/cli/weight_file.hpp"
#include "diskcyc/orbit.hpp"
#include "diskcyc/spectral.hpp"

namespace diskcyc::cli {

using criteria::Outcome;
using criteria::ShiftDirection;
using criteria::Verdict;

namespace {

const char* probe_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Diskcyclic:
      return "positive";
    case Outcome::NotDiskcyclic:
      return "negative";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string witness_range(const std::vector<long>& witness) {
  if (witness.empty()) return "-";
  return std::to_string(witness.front()) + ".." + std::to_string(witness.back());
}

void render_verdict(const Verdict& verdict, const ShiftOperator& op, const RunConfig& cfg,
                    std::ostream& out) {
  if (cfg.format == OutputFormat::Records) {
    out << "record=classify kind=" << kind_name(op.kind())
        << " outcome=" << criteria::to_string(verdict.outcome)
        << " reason=" << verdict.reason
        << " witness_count=" << verdict.witness_sequence.size()
        << " witness_range=" << witness_range(verdict.witness_sequence) << '\n';
    return;
  }
  out << "operator: " << kind_name(op.kind()) << '\n';
  out << "verdict:  " << criteria::to_string(verdict.outcome) << " (" << verdict.reason
      << ")\n";
  if (!verdict.witness_sequence.empty()) {
    out << "witness:  n_r = " << witness_range(verdict.witness_sequence) << " ("
        << verdict.witness_sequence.size() << " powers)\n";
  }
  if (!verdict.evidence.empty()) {
    // One closing sample per series keeps the trace readable.
    std::string last_series;
    const criteria::EvidenceSample* tail = nullptr;
    for (const auto& sample : verdict.evidence) {
      if (sample.series != last_series) {
        if (tail != nullptr) {
          out << "evidence: " << tail->series << "[n=" << tail->n
              << "] = " << format_double(tail->log_value) << " (log)\n";
        }
        last_series = sample.series;
      }
      tail = &sample;
    }
    if (tail != nullptr) {
      out << "evidence: " << tail->series << "[n=" << tail->n
          << "] = " << format_double(tail->log_value) << " (log)\n";
    }
  }
}

ShiftDirection probe_direction(const ShiftOperator& op) {
  return op.kind() == ShiftOperator::Kind::BilateralBackward ? ShiftDirection::Backward
                                                             : ShiftDirection::Forward;
}

}  // namespace

criteria::CriterionConfig RunConfig::criterion_config() const {
  criteria::CriterionConfig cfg;
  cfg.horizon = horizon;
  cfg.qmax = qmax;
  cfg.tau_big = tau_big;
  return cfg;
}

int run_classify(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out) {
  const Verdict verdict = classify_operator(op, cfg.criterion_config());
  render_verdict(verdict, op, cfg, out);
  return kExitOk;
}

int run_witness(const ShiftOperator& op, const SparseVector& x, const SparseVector& y,
                const RunConfig& cfg, std::ostream& out) {
  const auto result = orbit::witness_search(op, x, y, cfg.horizon, cfg.tolerance);
  const Complex alpha = result.best.alpha.value();
  if (cfg.format == OutputFormat::Records) {
    out << "record=witness found=" << (result.found ? 1 : 0) << " n=" << result.best.n
        << " alpha_re=" << format_double(alpha.real())
        << " alpha_im=" << format_double(alpha.imag())
        << " residual=" << format_double(result.best.residual) << '\n';
  } else if (result.found) {
    out << "witness: n=" << result.best.n << " alpha=(" << format_double(alpha.real())
        << ", " << format_double(alpha.imag())
        << ") residual=" << format_double(result.best.residual) << '\n';
  } else {
    out << "no witness within horizon " << cfg.horizon
        << "; best residual=" << format_double(result.best.residual) << " at n="
        << result.best.n << '\n';
  }
  return kExitOk;
}

int run_probe(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (!op.is_shift() || op.is_unilateral()) {
    err << "probe requires a bilateral weighted shift\n";
    return kExitUsage;
  }
  const auto ccfg = cfg.criterion_config();
  const auto direction = probe_direction(op);
  const Verdict super = criteria::supercyclicity_probe(op.weights(), direction, ccfg);
  const Verdict hyper = criteria::hypercyclicity_probe(op.weights(), direction, ccfg);
  if (cfg.format == OutputFormat::Records) {
    out << "record=probe probe=supercyclicity outcome=" << probe_name(super.outcome)
        << " witness_range=" << witness_range(super.witness_sequence) << '\n';
    out << "record=probe probe=hypercyclicity outcome=" << probe_name(hyper.outcome)
        << " witness_range=" << witness_range(hyper.witness_sequence) << '\n';
  } else {
    out << "supercyclicity probe: " << probe_name(super.outcome) << '\n';
    out << "hypercyclicity probe: " << probe_name(hyper.outcome) << '\n';
  }
  return kExitOk;
}

int run_spectrum(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  if (op.kind() != ShiftOperator::Kind::BilateralForward &&
      op.kind() != ShiftOperator::Kind::BilateralBackward) {
    err << "spectrum requires a bilateral weighted shift\n";
    return kExitUsage;
  }
  const auto estimate = spectral::annulus_estimate(op.weights(), cfg.horizon);
  const auto obstruction =
      spectral::unit_disk_obstruction(op.weights(), probe_direction(op), cfg.horizon);
  const bool obstructed = obstruction == spectral::Obstruction::Obstructed;
  if (cfg.format == OutputFormat::Records) {
    out << "record=spectrum inner=" << format_double(estimate.inner_radius)
        << " outer=" << format_double(estimate.outer_radius)
        << " obstructed=" << (obstructed ? 1 : 0) << " horizon=" << estimate.horizon_used
        << '\n';
  } else {
    out << "annulus: [" << format_double(estimate.inner_radius) << ", "
        << format_double(estimate.outer_radius) << "] (horizon " << estimate.horizon_used
        << ")\n";
    out << (obstructed ? "Obstructed: spectrum inside the open unit disk\n"
                       : "NotObstructed\n");
  }
  return kExitOk;
}

int run_certificate(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  criteria::Certificate cert;
  try {
    cert = criteria::second_criterion_certificate(op, cfg.qmax, cfg.criterion_config());
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.format == OutputFormat::Records) {
    out << "record=certificate passed=" << (cert.passed ? 1 : 0)
        << " basis_radius=" << cfg.qmax << " horizon=" << cfg.horizon
        << " x_norm_tail=" << format_double(cert.x_norm_tail)
        << " product_tail=" << format_double(cert.product_tail)
        << " reproduction_error=" << format_double(cert.reproduction_error) << '\n';
  } else {
    out << "certificate: " << (cert.passed ? "PASS" : "FAIL") << '\n';
    out << "  x-norm tail:        " << format_double(cert.x_norm_tail) << '\n';
    out << "  product tail:       " << format_double(cert.product_tail) << '\n';
    out << "  reproduction error: " << format_double(cert.reproduction_error) << '\n';
  }
  return kExitOk;
}

int run_density(const ShiftOperator& op, const SparseVector& x,
                const std::vector<SparseVector>& targets, const RunConfig& cfg,
                std::ostream& out) {
  const auto report = orbit::density_probe(op, x, targets, cfg.horizon, cfg.tolerance);
  if (cfg.format == OutputFormat::Records) {
    out << "record=density targets=" << report.targets_total
        << " hits=" << report.targets_hit
        << " worst_residual=" << format_double(report.worst_residual) << '\n';
  } else {
    out << "density: " << report.targets_hit << "/" << report.targets_total
        << " targets hit (tol " << format_double(cfg.tolerance) << ")\n";
    out << "worst residual: " << format_double(report.worst_residual) << '\n';
  }
  return kExitOk;
}

int run_repro(const std::string& id, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  std::vector<const FixtureEntry*> selected;
  if (id == "all") {
    for (const FixtureEntry& fixture : fixture_registry()) selected.push_back(&fixture);
  } else {
    const FixtureEntry* fixture = find_fixture(id);
    if (fixture == nullptr) {
      err << "unknown fixture id '" << id << "'\n";
      return kExitUsage;
    }
    selected.push_back(fixture);
  }

  const auto ccfg = cfg.criterion_config();
  bool all_passed = true;
  std::size_t passed_count = 0;
  for (const FixtureEntry* fixture : selected) {
    const FixtureResult result = run_fixture(*fixture, ccfg, cfg.horizon);
    all_passed = all_passed && result.passed;
    if (result.passed) ++passed_count;
    for (const FixtureCheck& check : result.checks) {
      if (cfg.format == OutputFormat::Records) {
        out << "record=repro fixture=" << result.id << " check=" << check.name
            << " expected=" << check.expected << " actual=" << check.actual
            << " status=" << (check.passed ? "PASS" : "FAIL") << '\n';
      } else {
        out << (check.passed ? "PASS" : "FAIL") << "  " << result.id << "  " << check.name
            << ": expected " << check.expected << ", got " << check.actual << '\n';
      }
    }
  }
  if (cfg.format == OutputFormat::Records) {
    out << "record=repro-summary fixtures=" << selected.size() << " passed=" << passed_count
        << '\n';
  } else {
    out << passed_count << "/" << selected.size() << " fixtures passed\n";
  }
  return all_passed ? kExitOk : kExitFailure;
}

std::vector<SparseVector> resolve_targets(const std::vector<std::string>& specs) {
  std::vector<SparseVector> targets;
  for (const std::string& spec : specs) {
    if (spec.rfind("grid:", 0) == 0) {
      double lo = 0.0;
      double hi = 0.0;
      int steps = 0;
      if (std::sscanf(spec.c_str(), "grid:%lf:%lf:%d", &lo, &hi, &steps) != 3 || steps < 1) {
        throw std::invalid_argument("bad grid spec '" + spec +
                                    "', expected grid:<min>:<max>:<steps>");
      }
      for (SparseVector& v : scalar_grid_targets(lo, hi, steps)) {
        targets.push_back(std::move(v));
      }
    } else {
      targets.push_back(parse_vector_file(spec));
    }
  }
  return targets;
}

}  // namespace diskcyc::cli
