#include "diskcyc/cli/fixtures.hpp"

#include <cmath>

#include "diskcyc/cli/classify.hpp"
#include "diskcyc/cli/weight_file.hpp"
#include "diskcyc/spectral.hpp"

namespace diskcyc::cli {

using criteria::Outcome;
using criteria::ShiftDirection;

namespace {

const char* closure_name(orbit::ScalarClosure closure) {
  return closure == orbit::ScalarClosure::WholePlane ? "WholePlane" : "UnitDisk";
}

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

ShiftDirection probe_direction(const ShiftOperator& op) {
  return op.kind() == ShiftOperator::Kind::BilateralBackward ? ShiftDirection::Backward
                                                             : ShiftDirection::Forward;
}

std::vector<FixtureEntry> build_registry() {
  std::vector<FixtureEntry> fixtures;

  {
    // Bilateral forward shift, weights 2 on the nonnegative side and 3 on
    // the negative side: diskcyclic, yet the forward products rule the
    // plain orbit out of density.
    FixtureEntry f{"ex-2.12", "bilateral forward shift, tails 3 (n<0) / 2 (n>=0)",
                   ShiftOperator::bilateral_forward(
                       WeightSequence::split({3.0, 0.0}, {2.0, 0.0}))};
    f.classify = Outcome::Diskcyclic;
    f.hyper_probe = Outcome::NotDiskcyclic;
    fixtures.push_back(std::move(f));
  }
  {
    // Contractive forward shift whose product ratio still decays: the cone
    // orbit can be dense while the disk orbit cannot.
    FixtureEntry f{"ex-supercyclic", "bilateral forward shift, tails 1/2 (n<0) / 1/3 (n>=0)",
                   ShiftOperator::bilateral_forward(
                       WeightSequence::split({0.5, 0.0}, {1.0 / 3.0, 0.0}))};
    f.classify = Outcome::NotDiskcyclic;
    f.super_probe = Outcome::Diskcyclic;
    f.obstructed = true;
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-2B", "unilateral backward shift, all weights 2",
                   ShiftOperator::unilateral_backward(WeightSequence::constant(
                       {2.0, 0.0}, Sidedness::OneSidedNonNegative))};
    f.classify = Outcome::Diskcyclic;
    fixtures.push_back(std::move(f));
  }
  {
    // Unit-weight backward shift: every orbit stays inside the unit ball.
    FixtureEntry f{"ex-aB-1", "unilateral backward shift, all weights 1",
                   ShiftOperator::unilateral_backward(WeightSequence::constant(
                       {1.0, 0.0}, Sidedness::OneSidedNonNegative))};
    f.classify = Outcome::NotDiskcyclic;
    f.orbit_bound = FixtureEntry::OrbitBoundExpectation{0, 1.0};
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-adjoint", "diskcyclic forward shift whose adjoint is not",
                   ShiftOperator::bilateral_forward(
                       WeightSequence::split({3.0, 0.0}, {2.0, 0.0}))};
    f.classify = Outcome::Diskcyclic;
    f.adjoint_classify = Outcome::NotDiskcyclic;
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-inverse", "diskcyclic forward shift whose inverse is not",
                   ShiftOperator::bilateral_forward(
                       WeightSequence::split({3.0, 0.0}, {2.0, 0.0}))};
    f.classify = Outcome::Diskcyclic;
    f.inverse_classify = Outcome::NotDiskcyclic;
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-both-invertible", "forward shift diskcyclic in both directions",
                   ShiftOperator::bilateral_forward(
                       WeightSequence::split({3.0, 0.0}, {0.5, 0.0}))};
    f.classify = Outcome::Diskcyclic;
    f.inverse_classify = Outcome::Diskcyclic;
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-scalar-2", "scalar operator x -> 2x on the complex line",
                   ShiftOperator::scalar({2.0, 0.0})};
    f.classify = Outcome::Diskcyclic;
    f.closure = orbit::ScalarClosure::WholePlane;
    f.grid = FixtureEntry::GridExpectation{-10.0, 10.0, 11, 121, 1e-6};
    fixtures.push_back(std::move(f));
  }
  {
    FixtureEntry f{"ex-scalar-half", "scalar operator x -> x/2 on the complex line",
                   ShiftOperator::scalar({0.5, 0.0})};
    f.classify = Outcome::NotDiskcyclic;
    f.closure = orbit::ScalarClosure::UnitDisk;
    f.membership = FixtureEntry::MembershipExpectation{{1.5, 0.0}, 0.5, 1e-9};
    fixtures.push_back(std::move(f));
  }

  return fixtures;
}

void add_check(FixtureResult& result, const std::string& name, const std::string& expected,
               const std::string& actual) {
  FixtureCheck check{name, expected, actual, expected == actual};
  result.checks.push_back(std::move(check));
}

}  // namespace

const std::vector<FixtureEntry>& fixture_registry() {
  static const std::vector<FixtureEntry> registry = build_registry();
  return registry;
}

const FixtureEntry* find_fixture(const std::string& id) {
  for (const FixtureEntry& fixture : fixture_registry()) {
    if (fixture.id == id) return &fixture;
  }
  return nullptr;
}

std::vector<SparseVector> scalar_grid_targets(double min, double max, int steps) {
  std::vector<SparseVector> targets;
  targets.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  const double span = max - min;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const double re = steps == 1 ? min : min + span * i / (steps - 1);
      const double im = steps == 1 ? min : min + span * j / (steps - 1);
      targets.push_back(SparseVector::basis(0, Complex{re, im}));
    }
  }
  return targets;
}

FixtureResult run_fixture(const FixtureEntry& fixture, const criteria::CriterionConfig& cfg,
                          long orbit_horizon) {
  FixtureResult result;
  result.id = fixture.id;

  if (fixture.classify) {
    const auto verdict = classify_operator(fixture.op, cfg);
    add_check(result, "classify", criteria::to_string(*fixture.classify),
              criteria::to_string(verdict.outcome));
  }
  if (fixture.adjoint_classify) {
    const auto verdict = classify_operator(fixture.op.adjoint(), cfg);
    add_check(result, "adjoint-classify", criteria::to_string(*fixture.adjoint_classify),
              criteria::to_string(verdict.outcome));
  }
  if (fixture.inverse_classify) {
    const auto verdict = classify_operator(fixture.op.inverse(), cfg);
    add_check(result, "inverse-classify", criteria::to_string(*fixture.inverse_classify),
              criteria::to_string(verdict.outcome));
  }
  if (fixture.super_probe) {
    const auto verdict =
        criteria::supercyclicity_probe(fixture.op.weights(), probe_direction(fixture.op), cfg);
    add_check(result, "supercyclic-probe", probe_name(*fixture.super_probe),
              probe_name(verdict.outcome));
  }
  if (fixture.hyper_probe) {
    const auto verdict =
        criteria::hypercyclicity_probe(fixture.op.weights(), probe_direction(fixture.op), cfg);
    add_check(result, "hypercyclic-probe", probe_name(*fixture.hyper_probe),
              probe_name(verdict.outcome));
  }
  if (fixture.obstructed) {
    const auto obstruction = spectral::unit_disk_obstruction(
        fixture.op.weights(), probe_direction(fixture.op), cfg.horizon);
    add_check(result, "obstruction", *fixture.obstructed ? "Obstructed" : "NotObstructed",
              obstruction == spectral::Obstruction::Obstructed ? "Obstructed"
                                                               : "NotObstructed");
  }
  if (fixture.closure) {
    const auto closure = orbit::scalar_orbit_closure(fixture.op.lambda());
    add_check(result, "closure", closure_name(*fixture.closure), closure_name(closure));
  }
  if (fixture.grid) {
    const auto& g = *fixture.grid;
    const auto targets = scalar_grid_targets(g.min, g.max, g.steps);
    const auto report = orbit::density_probe(fixture.op, SparseVector::basis(0), targets,
                                             orbit_horizon, g.tol);
    add_check(result, "grid-hits",
              std::to_string(g.hits) + "/" + std::to_string(targets.size()),
              std::to_string(report.targets_hit) + "/" + std::to_string(report.targets_total));
  }
  if (fixture.membership) {
    const auto& m = *fixture.membership;
    const double residual = orbit::membership_residual(fixture.op.lambda(), m.z);
    const bool ok = std::abs(residual - m.residual) <= m.tol;
    add_check(result, "membership-residual", format_double(m.residual),
              ok ? format_double(m.residual) : format_double(residual));
  }
  if (fixture.orbit_bound) {
    const auto& b = *fixture.orbit_bound;
    const auto report = orbit::orbit_sup_monitor(
        fixture.op, SparseVector::basis(b.basis_index), orbit_horizon);
    add_check(result, "orbit-sup-bound", "<=" + format_double(b.sup_bound),
              report.sup_norm <= b.sup_bound ? "<=" + format_double(b.sup_bound)
                                             : format_double(report.sup_norm));
  }

  result.passed = true;
  for (const FixtureCheck& check : result.checks) result.passed = result.passed && check.passed;
  return result;
}

}  // namespace diskcyc::cli
