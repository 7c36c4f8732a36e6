#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diskcyc/criteria.hpp"
#include "diskcyc/shift_operator.hpp"
#include "diskcyc/sparse_vector.hpp"

namespace diskcyc::cli {

enum class OutputFormat { Text, Records };

/// Run-wide settings shared by every command; mirrors the criterion
/// defaults and is overridable flag by flag.
struct RunConfig {
  long horizon = 200;
  int qmax = 8;
  double tau_big = 30.0;
  double tolerance = 1e-6;
  OutputFormat format = OutputFormat::Text;

  criteria::CriterionConfig criterion_config() const;
};

// Exit statuses: an analysis that completes returns 0 whatever its verdict
// says; nonzero is reserved for usage and input failures (and for repro
// runs whose comparisons fail).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run_classify(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out);

int run_witness(const ShiftOperator& op, const SparseVector& x, const SparseVector& y,
                const RunConfig& cfg, std::ostream& out);

int run_probe(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
              std::ostream& err);

int run_spectrum(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err);

int run_certificate(const ShiftOperator& op, const RunConfig& cfg, std::ostream& out,
                    std::ostream& err);

int run_density(const ShiftOperator& op, const SparseVector& x,
                const std::vector<SparseVector>& targets, const RunConfig& cfg,
                std::ostream& out);

/// Runs one fixture by id, or all of them; prints one PASS/FAIL line per
/// check and exits 0 only when everything passed.
int run_repro(const std::string& id, const RunConfig& cfg, std::ostream& out,
              std::ostream& err);

/// Parses a --targets argument: either a vector-file path or a grid spec
/// "grid:<min>:<max>:<steps>".
std::vector<SparseVector> resolve_targets(const std::vector<std::string>& specs);

}  // namespace diskcyc::cli
