#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskcyc/criteria.hpp"
#include "diskcyc/orbit.hpp"
#include "diskcyc/shift_operator.hpp"

namespace diskcyc::cli {

/**
 * A checked operator fixture: the operator plus the expected outcome of
 * every analysis it pins down. Running a fixture at default configuration
 * reproduces each expectation.
 */
struct FixtureEntry {
  FixtureEntry(std::string id, std::string description, ShiftOperator op)
      : id(std::move(id)), description(std::move(description)), op(std::move(op)) {}

  std::string id;
  std::string description;
  ShiftOperator op;

  std::optional<criteria::Outcome> classify;          // verdict for op itself
  std::optional<criteria::Outcome> adjoint_classify;  // verdict for adjoint(op)
  std::optional<criteria::Outcome> inverse_classify;  // verdict for inverse(op)
  std::optional<criteria::Outcome> super_probe;       // Diskcyclic slot = positive
  std::optional<criteria::Outcome> hyper_probe;
  std::optional<bool> obstructed;

  std::optional<orbit::ScalarClosure> closure;  // scalar operators only

  struct GridExpectation {
    double min = 0.0;
    double max = 0.0;
    int steps = 0;           // per axis
    std::size_t hits = 0;    // expected targets_hit
    double tol = 1e-6;
  };
  std::optional<GridExpectation> grid;

  struct MembershipExpectation {
    Complex z;
    double residual = 0.0;
    double tol = 1e-9;
  };
  std::optional<MembershipExpectation> membership;

  struct OrbitBoundExpectation {
    long basis_index = 0;
    double sup_bound = 0.0;  // orbit sup of e_basis_index must stay <= this
  };
  std::optional<OrbitBoundExpectation> orbit_bound;
};

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct FixtureResult {
  std::string id;
  std::vector<FixtureCheck> checks;
  bool passed = false;
};

/// All bundled fixtures, in a fixed order.
const std::vector<FixtureEntry>& fixture_registry();

const FixtureEntry* find_fixture(const std::string& id);

FixtureResult run_fixture(const FixtureEntry& fixture, const criteria::CriterionConfig& cfg,
                          long orbit_horizon);

/// Square grid of scalar targets: steps x steps points of {0: a+bi} with
/// a, b evenly spaced over [min, max].
std::vector<SparseVector> scalar_grid_targets(double min, double max, int steps);

}  // namespace diskcyc::cli
