#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskcyc/criteria.hpp"
#include "test_helpers.hpp"

using namespace diskcyc;
using namespace diskcyc::criteria;
using namespace diskcyc::testing;

namespace {

WeightSequence tails_3_2() { return WeightSequence::split({3.0, 0.0}, {2.0, 0.0}); }
WeightSequence tails_half_third() {
  return WeightSequence::split({0.5, 0.0}, {1.0 / 3.0, 0.0});
}
WeightSequence tails_3_half() { return WeightSequence::split({3.0, 0.0}, {0.5, 0.0}); }

WeightSequence one_sided_constant(double w) {
  return WeightSequence::constant({w, 0.0}, Sidedness::OneSidedNonNegative);
}

const CriterionConfig kDefault{};

}  // namespace

TEST_CASE("log window product closed form") {
  const WeightSequence ws = tails_3_2();

  SUBCASE("pure negative-tail windows") {
    for (long n : {1L, 7L, 33L}) {
      CHECK(log_window_product(ws, -n, n) ==
            doctest::Approx(n * std::log(3.0)).epsilon(1e-14));
    }
  }
  SUBCASE("empty product is zero") {
    CHECK(log_window_product(ws, 17, 0) == 0.0);
    CHECK(log_window_product(ws, -123456, 0) == 0.0);
  }
  SUBCASE("positive run matches term-by-term summation") {
    const double closed = log_window_product(ws, 1, 10);
    CHECK(closed == doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(closed == doctest::Approx(naive_log_window(ws, 1, 10)).epsilon(1e-12));
  }
}

TEST_CASE("closed form vs naive summation on random sequences") {
  Rng rng{808};
  WeightGenOptions opt;
  opt.real_positive = false;
  for (int trial = 0; trial < 40; ++trial) {
    const WeightSequence ws = random_weight_sequence(rng, opt);
    std::uniform_int_distribution<long> start{-40, 40};
    std::uniform_int_distribution<long> length{0, 512};
    const long j = start(rng);
    const long n = length(rng);
    const double closed = log_window_product(ws, j, n);
    const double naive = naive_log_window(ws, j, n);
    CHECK(std::abs(closed - naive) <= 1e-12 * (1.0 + std::abs(naive)));
  }
}

TEST_CASE("forward bilateral verdicts") {
  SUBCASE("tails 3/2 is diskcyclic") {
    const Verdict v = forward_bilateral_verdict(tails_3_2(), kDefault);
    CHECK(v.outcome == Outcome::Diskcyclic);
    CHECK(!v.witness_sequence.empty());
    // Witnesses are increasing.
    for (std::size_t i = 1; i < v.witness_sequence.size(); ++i) {
      CHECK(v.witness_sequence[i] > v.witness_sequence[i - 1]);
    }
  }
  SUBCASE("contractive tails 1/2 / 1/3 are not") {
    const Verdict v = forward_bilateral_verdict(tails_half_third(), kDefault);
    CHECK(v.outcome == Outcome::NotDiskcyclic);
    CHECK(v.reason == kReasonInverseProductDiverges);
  }
  SUBCASE("tails 3 / 1/2 are diskcyclic") {
    CHECK(forward_bilateral_verdict(tails_3_half(), kDefault).outcome ==
          Outcome::Diskcyclic);
  }
  SUBCASE("one-sided input is a domain error") {
    CHECK_THROWS_AS(forward_bilateral_verdict(one_sided_constant(2.0), kDefault),
                    std::domain_error);
  }
}

TEST_CASE("backward bilateral verdicts") {
  SUBCASE("adjoint weights 2 (n>0) / 3 (n<=0): ratio diverges") {
    const WeightSequence ws{{3.0, 0.0}, {2.0, 0.0}, {{0, {3.0, 0.0}}}};
    CHECK(ws.weight_at(0) == Complex{3.0, 0.0});
    CHECK(ws.weight_at(1) == Complex{2.0, 0.0});
    const Verdict v = backward_bilateral_verdict(ws, kDefault);
    CHECK(v.outcome == Outcome::NotDiskcyclic);
    CHECK(v.reason == kReasonRatioDiverges);
  }
  SUBCASE("inverse weights 1/2 (n>0) / 1/3 (n<=0): product diverges") {
    const WeightSequence ws{{1.0 / 3.0, 0.0}, {0.5, 0.0}, {{0, {1.0 / 3.0, 0.0}}}};
    const Verdict v = backward_bilateral_verdict(ws, kDefault);
    CHECK(v.outcome == Outcome::NotDiskcyclic);
    CHECK(v.reason == kReasonInverseProductDiverges);
  }
  SUBCASE("weights 2 (n>0) / 1/3 (n<=0) are diskcyclic") {
    const WeightSequence ws{{1.0 / 3.0, 0.0}, {2.0, 0.0}, {{0, {1.0 / 3.0, 0.0}}}};
    CHECK(backward_bilateral_verdict(ws, kDefault).outcome == Outcome::Diskcyclic);
  }
}

TEST_CASE("mirror symmetry: backward equals forward on reflected weights") {
  Rng rng{161803};
  WeightGenOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    opt.real_positive = trial % 2 == 0;
    const WeightSequence ws = random_weight_sequence(rng, opt);
    const Verdict backward = backward_bilateral_verdict(ws, kDefault);
    const Verdict forward = forward_bilateral_verdict(ws.reflected(), kDefault);
    CHECK(backward.outcome == forward.outcome);
    CHECK(backward.witness_sequence == forward.witness_sequence);
  }
}

TEST_CASE("joint two-condition search") {
  SUBCASE("tails 3/2, forward: both quantities decay together") {
    const auto v = bounded_below_joint_search(tails_3_2(), ShiftDirection::Forward, kDefault);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::Diskcyclic);
    CHECK(v->reason == kReasonJointDecayForward);
    REQUIRE(!v->witness_sequence.empty());
    // The witness tail runs to the horizon: once both geometric quantities
    // cross the threshold they stay across it.
    CHECK(v->witness_sequence.back() == kDefault.horizon);
    const long first = v->witness_sequence.front();
    CHECK(static_cast<long>(v->witness_sequence.size()) == kDefault.horizon - first + 1);
  }
  SUBCASE("inverse weights, backward: not diskcyclic") {
    const WeightSequence ws{{1.0 / 3.0, 0.0}, {0.5, 0.0}, {{0, {1.0 / 3.0, 0.0}}}};
    const auto v = bounded_below_joint_search(ws, ShiftDirection::Backward, kDefault);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::NotDiskcyclic);
  }
  SUBCASE("unweighted shift: constant product never decays") {
    const auto v = bounded_below_joint_search(WeightSequence::constant({1.0, 0.0}),
                                              ShiftDirection::Forward, kDefault);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::NotDiskcyclic);
  }
}

TEST_CASE("unilateral backward verdict") {
  SUBCASE("all weights 2: products blow up") {
    const Verdict v = unilateral_backward_verdict(one_sided_constant(2.0), kDefault);
    CHECK(v.outcome == Outcome::Diskcyclic);
    CHECK(!v.witness_sequence.empty());
  }
  SUBCASE("unimodular weights: bounded products") {
    CHECK(unilateral_backward_verdict(one_sided_constant(1.0), kDefault).outcome ==
          Outcome::NotDiskcyclic);
  }
  SUBCASE("weights 1.01: horizon sensitivity") {
    // n log(1.01) crosses tau_big = 30 only past n ~ 3015, so the default
    // horizon cannot certify it while a longer one can.
    CHECK(30.0 / std::log(1.01) == doctest::Approx(3014.9).epsilon(1e-3));
    const WeightSequence ws = one_sided_constant(1.01);
    CHECK(unilateral_backward_verdict(ws, kDefault).outcome == Outcome::Inconclusive);
    CriterionConfig longer = kDefault;
    longer.horizon = 3100;
    CHECK(unilateral_backward_verdict(ws, longer).outcome == Outcome::Diskcyclic);
  }
  SUBCASE("decaying weights are bounded too") {
    CHECK(unilateral_backward_verdict(one_sided_constant(0.9), kDefault).outcome ==
          Outcome::NotDiskcyclic);
  }
  SUBCASE("two-sided input is a domain error") {
    CHECK_THROWS_AS(unilateral_backward_verdict(tails_3_2(), kDefault), std::domain_error);
  }
}

TEST_CASE("supercyclicity probe") {
  CHECK(supercyclicity_probe(tails_half_third(), ShiftDirection::Forward, kDefault).outcome ==
        Outcome::Diskcyclic);  // positive
  CHECK(supercyclicity_probe(tails_3_2(), ShiftDirection::Forward, kDefault).outcome ==
        Outcome::Diskcyclic);  // positive
  CHECK(supercyclicity_probe(WeightSequence::constant({1.0, 0.0}), ShiftDirection::Forward,
                             kDefault)
            .outcome == Outcome::NotDiskcyclic);  // negative: ratio constant 1
}

TEST_CASE("hypercyclicity probe") {
  CHECK(hypercyclicity_probe(tails_3_2(), ShiftDirection::Forward, kDefault).outcome ==
        Outcome::NotDiskcyclic);  // negative: forward products blow up
  CHECK(hypercyclicity_probe(tails_3_half(), ShiftDirection::Forward, kDefault).outcome ==
        Outcome::Diskcyclic);  // positive: both one-sided products decay
  CHECK(hypercyclicity_probe(WeightSequence::constant({1.0, 0.0}), ShiftDirection::Forward,
                             kDefault)
            .outcome == Outcome::Inconclusive);
}

TEST_CASE("probe mirror consistency") {
  Rng rng{2718};
  WeightGenOptions opt;
  for (int trial = 0; trial < 60; ++trial) {
    const WeightSequence ws = random_weight_sequence(rng, opt);
    CHECK(supercyclicity_probe(ws, ShiftDirection::Backward, kDefault).outcome ==
          supercyclicity_probe(ws.reflected(), ShiftDirection::Forward, kDefault).outcome);
    CHECK(hypercyclicity_probe(ws, ShiftDirection::Backward, kDefault).outcome ==
          hypercyclicity_probe(ws.reflected(), ShiftDirection::Forward, kDefault).outcome);
  }
}

TEST_CASE("threshold monotonicity: raising tau_big only moves toward inconclusive") {
  Rng rng{31415};
  WeightGenOptions opt;
  CriterionConfig strict = kDefault;
  strict.tau_big = 60.0;
  for (int trial = 0; trial < 100; ++trial) {
    const WeightSequence ws = random_weight_sequence(rng, opt);
    const Outcome loose = forward_bilateral_verdict(ws, kDefault).outcome;
    const Outcome tight = forward_bilateral_verdict(ws, strict).outcome;
    if (loose == Outcome::Diskcyclic) {
      CHECK(tight != Outcome::NotDiskcyclic);
    }
    if (loose == Outcome::NotDiskcyclic) {
      CHECK(tight != Outcome::Diskcyclic);
    }
  }
}

TEST_CASE("second criterion certificate") {
  SUBCASE("twice the backward shift passes with exact trajectories") {
    const auto op = ShiftOperator::unilateral_backward(one_sided_constant(2.0));
    const Certificate cert = second_criterion_certificate(op, 2, kDefault);
    CHECK(cert.passed);
    CHECK(cert.reproduction_error <= kCertificateReproductionTolerance);
    // For y = e_0 the pullbacks are x_k = 2^{-k} e_k.
    const auto& traj = cert.x_norm_trajectories.front();
    REQUIRE(traj.y_index == 0);
    CHECK(traj.values[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(traj.values[9] == doctest::Approx(std::pow(2.0, -10.0)).epsilon(1e-12));
    // ||T^k x|| ||x_k|| collapses to exactly zero once k clears the support.
    for (const auto& prod : cert.product_trajectories) {
      CHECK(prod.values.back() == 0.0);
    }
  }

  SUBCASE("unit-weight backward shift fails: pullback norms stay at 1") {
    const auto op = ShiftOperator::unilateral_backward(one_sided_constant(1.0));
    const Certificate cert = second_criterion_certificate(op, 2, kDefault);
    CHECK(!cert.passed);
    CHECK(cert.x_norm_tail == doctest::Approx(1.0));
  }

  SUBCASE("bilateral tails 3/2 pass with geometric decay") {
    const auto op = ShiftOperator::bilateral_forward(tails_3_2());
    const Certificate cert = second_criterion_certificate(op, 2, kDefault);
    CHECK(cert.passed);
    // ||x_k|| for y = e_0 decays like 3^{-k} and the products like (2/3)^k.
    for (const auto& traj : cert.x_norm_trajectories) {
      if (traj.y_index != 0) continue;
      CHECK(traj.values[29] == doctest::Approx(std::pow(3.0, -30.0)).epsilon(1e-10));
    }
  }

  SUBCASE("no right inverse means an error, not a certificate") {
    const auto op = ShiftOperator::unilateral_forward(one_sided_constant(2.0));
    CHECK_THROWS_AS(second_criterion_certificate(op, 1, kDefault), std::domain_error);
  }
}

TEST_CASE("certificate soundness: a PASS never coexists with NotDiskcyclic") {
  Rng rng{5050};
  WeightGenOptions opt;
  for (int trial = 0; trial < 60; ++trial) {
    const WeightSequence ws = random_weight_sequence(rng, opt);
    const auto op = ShiftOperator::bilateral_forward(ws);
    const Certificate cert = second_criterion_certificate(op, 2, kDefault);
    if (cert.passed) {
      CHECK(forward_bilateral_verdict(ws, kDefault).outcome != Outcome::NotDiskcyclic);
    }
  }
}

TEST_CASE("criterion config validation") {
  CriterionConfig cfg;
  cfg.horizon = 10;
  cfg.qmax = 8;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // horizon < 4*qmax
  cfg = CriterionConfig{};
  cfg.tau_big = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = CriterionConfig{};
  cfg.trend_fraction = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_NOTHROW(CriterionConfig{}.validate());
}

TEST_CASE("verdict evidence carries the raw trajectories") {
  const Verdict v = forward_bilateral_verdict(WeightSequence::constant({1.0, 0.0}), kDefault);
  CHECK(v.outcome == Outcome::NotDiskcyclic);  // constant product 1 never blows up
  // Inconclusive-or-negative verdicts keep the full sampled series.
  bool has_inverse_product = false;
  for (const auto& sample : v.evidence) {
    if (sample.series == "inverse_product") has_inverse_product = true;
  }
  CHECK(has_inverse_product);
}
