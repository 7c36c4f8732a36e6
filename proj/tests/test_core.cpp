#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskcyc/shift_operator.hpp"
#include "test_helpers.hpp"

using namespace diskcyc;
using namespace diskcyc::testing;

namespace {

WeightSequence tails_3_2() { return WeightSequence::split({3.0, 0.0}, {2.0, 0.0}); }

ShiftOperator forward_3_2() { return ShiftOperator::bilateral_forward(tails_3_2()); }

ShiftOperator backward_all(double w) {
  return ShiftOperator::unilateral_backward(
      WeightSequence::constant({w, 0.0}, Sidedness::OneSidedNonNegative));
}

}  // namespace

TEST_CASE("weight_at resolves table and tails") {
  const WeightSequence ws = tails_3_2();
  CHECK(ws.weight_at(-7) == Complex{3.0, 0.0});
  CHECK(ws.weight_at(-1) == Complex{3.0, 0.0});
  CHECK(ws.weight_at(0) == Complex{2.0, 0.0});
  CHECK(ws.weight_at(12) == Complex{2.0, 0.0});

  const WeightSequence table_hit{{1.0, 0.0}, {1.0, 0.0}, {{5, {9.0, 0.0}}}};
  CHECK(table_hit.weight_at(5) == Complex{9.0, 0.0});
  CHECK(table_hit.weight_at(4) == Complex{1.0, 0.0});
  CHECK(table_hit.weight_at(6) == Complex{1.0, 0.0});
}

TEST_CASE("one-sided domains reject negative indices") {
  const WeightSequence ws =
      WeightSequence::constant({2.0, 0.0}, Sidedness::OneSidedNonNegative);
  CHECK(ws.weight_at(0) == Complex{2.0, 0.0});
  CHECK_THROWS_AS(ws.weight_at(-1), std::domain_error);
  CHECK_THROWS_AS(ws.log_window_sum(-3, 2), std::domain_error);
}

TEST_CASE("weight sequence construction invariants") {
  CHECK_THROWS_AS(WeightSequence({0.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence({1.0, 0.0}, {1.0, 0.0}, {{2, {0.0, 0.0}}}),
                  std::invalid_argument);
  // An interior gap has no defined weight.
  CHECK_THROWS_AS(WeightSequence({1.0, 0.0}, {1.0, 0.0},
                                 {{0, {1.0, 0.0}}, {2, {1.0, 0.0}}}),
                  std::invalid_argument);
  // One-sided tables may not dip below the domain.
  CHECK_THROWS_AS(WeightSequence({1.0, 0.0}, {1.0, 0.0}, {{-1, {1.0, 0.0}}},
                                 Sidedness::OneSidedNonNegative),
                  std::invalid_argument);
}

TEST_CASE("sup and inf moduli") {
  const WeightSequence ws = tails_3_2();
  CHECK(ws.sup_modulus() == doctest::Approx(3.0));
  CHECK(ws.inf_modulus() == doctest::Approx(2.0));

  const WeightSequence spiky{{3.0, 0.0}, {2.0, 0.0}, {{0, {9.0, 0.0}}, {1, {0.25, 0.0}}}};
  CHECK(spiky.sup_modulus() == doctest::Approx(9.0));
  CHECK(spiky.inf_modulus() == doctest::Approx(0.25));
}

TEST_CASE("apply moves basis vectors the right way") {
  // Forward shift across the tail boundary.
  const SparseVector image = forward_3_2().apply(SparseVector::basis(-1));
  CHECK(image.support_size() == 1);
  CHECK(image.at(0) == Complex{3.0, 0.0});

  // The kernel of the unilateral backward shift.
  CHECK(backward_all(2.0).apply(SparseVector::basis(0)).is_zero());

  const SparseVector doubled =
      ShiftOperator::scalar({2.0, 0.0}).apply(SparseVector::basis(0));
  CHECK(doubled.at(0) == Complex{2.0, 0.0});
}

TEST_CASE("apply respects unilateral domains") {
  CHECK_THROWS_AS(backward_all(2.0).apply(SparseVector::basis(-3)), std::domain_error);
  CHECK_THROWS_AS(
      ShiftOperator::unilateral_forward(
          WeightSequence::constant({1.0, 0.0}, Sidedness::OneSidedNonNegative))
          .apply(SparseVector::basis(-1)),
      std::domain_error);
}

TEST_CASE("apply_power closed form") {
  const ShiftOperator op = forward_3_2();

  SUBCASE("power zero is the identity") {
    const SparseVector x{{-3, {1.5, -0.5}}, {4, {0.0, 2.0}}};
    CHECK(op.apply_power(x, 0) == x);
  }

  SUBCASE("negative-tail run") {
    // e_{-n} climbs to e_0 through n weights of 3.
    for (long n : {1L, 5L, 9L}) {
      const SparseVector got = op.apply_power(SparseVector::basis(-n), n);
      CHECK(got.support_size() == 1);
      CHECK(got.at(0).real() == doctest::Approx(std::pow(3.0, n)).epsilon(1e-12));
      CHECK(got.at(0).imag() == 0.0);
    }
  }

  SUBCASE("unilateral backward closed form matches repeated applies") {
    const ShiftOperator b2 = backward_all(2.0);
    const SparseVector got = b2.apply_power(SparseVector::basis(5), 3);
    CHECK(got.support_size() == 1);
    CHECK(got.at(2).real() == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(relative_gap(got, repeated_apply(b2, SparseVector::basis(5), 3)) < 1e-12);
    // Past the support the orbit dies.
    CHECK(b2.apply_power(SparseVector::basis(5), 6).is_zero());
  }

  SUBCASE("no overflow in long products") {
    const SparseVector got = op.apply_power(SparseVector::basis(-400), 400);
    CHECK(std::isfinite(got.at(0).real()));
    CHECK(std::log(std::abs(got.at(0))) == doctest::Approx(400.0 * std::log(3.0)));
  }
}

TEST_CASE("power-oracle equivalence on random operators") {
  Rng rng{20240811};
  for (int trial = 0; trial < 120; ++trial) {
    const ShiftOperator op = random_operator(rng);
    const SparseVector x = random_vector(rng, 10, 5, needs_nonnegative_support(op));
    std::uniform_int_distribution<long> power{0, 64};
    const long n = power(rng);
    const SparseVector fast = op.apply_power(x, n);
    const SparseVector slow = repeated_apply(op, x, n);
    CHECK(relative_gap(fast, slow) < 1e-10);
  }
}

TEST_CASE("adjoint weight displays") {
  const ShiftOperator adj = forward_3_2().adjoint();
  REQUIRE(adj.kind() == ShiftOperator::Kind::BilateralBackward);
  // z_n = conj(w_{n-1}): 2 above zero, 3 at and below it.
  CHECK(adj.weights().weight_at(1) == Complex{2.0, 0.0});
  CHECK(adj.weights().weight_at(7) == Complex{2.0, 0.0});
  CHECK(adj.weights().weight_at(0) == Complex{3.0, 0.0});
  CHECK(adj.weights().weight_at(-5) == Complex{3.0, 0.0});

  CHECK(ShiftOperator::scalar({2.0, 0.0}).adjoint().lambda() == Complex{2.0, 0.0});

  const ShiftOperator imag = ShiftOperator::bilateral_forward(
      WeightSequence::constant({0.0, 1.0}));
  CHECK(imag.adjoint().weights().weight_at(3) == Complex{0.0, -1.0});
}

TEST_CASE("pairing identity <Tx,y> = <x,T*y>") {
  Rng rng{77};
  for (int trial = 0; trial < 200; ++trial) {
    const ShiftOperator op = random_operator(rng);
    const bool nonneg = needs_nonnegative_support(op);
    const SparseVector x = random_vector(rng, 32, 6, nonneg);
    const SparseVector y = random_vector(rng, 32, 6, nonneg);
    const ShiftOperator adj = op.adjoint();
    const Complex lhs = op.apply(x).inner_product(y);
    const Complex rhs = x.inner_product(adj.apply(y));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + x.norm() * y.norm()));
  }
}

TEST_CASE("inverse weight displays and identity") {
  const ShiftOperator inv = forward_3_2().inverse();
  REQUIRE(inv.kind() == ShiftOperator::Kind::BilateralBackward);
  // z_n = 1/w_{n-1}: 1/2 above zero, 1/3 at and below it.
  CHECK(inv.weights().weight_at(1) == Complex{0.5, 0.0});
  CHECK(inv.weights().weight_at(0).real() == doctest::Approx(1.0 / 3.0));
  CHECK(inv.weights().weight_at(-4).real() == doctest::Approx(1.0 / 3.0));

  CHECK(ShiftOperator::scalar({2.0, 0.0}).inverse().lambda() == Complex{0.5, 0.0});
  CHECK_THROWS_AS(backward_all(2.0).inverse(), std::domain_error);
  CHECK_THROWS_AS(ShiftOperator::scalar({0.0, 0.0}).inverse(), std::domain_error);

  Rng rng{123};
  for (int trial = 0; trial < 60; ++trial) {
    WeightGenOptions opt;
    opt.real_positive = false;
    const auto ws = random_weight_sequence(rng, opt);
    const ShiftOperator op = trial % 2 == 0 ? ShiftOperator::bilateral_forward(ws)
                                            : ShiftOperator::bilateral_backward(ws);
    const SparseVector x = random_vector(rng, 12, 5);
    const SparseVector round_trip = op.inverse().apply(op.apply(x));
    CHECK(relative_gap(round_trip, x) < 1e-12);
  }
}

TEST_CASE("right inverse") {
  // 2B's right inverse is half the unilateral forward shift.
  const ShiftOperator s = backward_all(2.0).right_inverse();
  REQUIRE(s.kind() == ShiftOperator::Kind::UnilateralForward);
  const SparseVector lifted = s.apply(SparseVector::basis(3));
  CHECK(lifted.at(4) == Complex{0.5, 0.0});

  // Coincides with the inverse for bilateral shifts.
  const ShiftOperator bilateral = forward_3_2();
  CHECK(bilateral.right_inverse().apply(SparseVector::basis(2)) ==
        bilateral.inverse().apply(SparseVector::basis(2)));

  CHECK_THROWS_AS(ShiftOperator::unilateral_forward(
                      WeightSequence::constant({1.0, 0.0}, Sidedness::OneSidedNonNegative))
                      .right_inverse(),
                  std::domain_error);

  Rng rng{4242};
  for (int trial = 0; trial < 50; ++trial) {
    WeightGenOptions opt;
    opt.side = Sidedness::OneSidedNonNegative;
    opt.real_positive = false;
    const ShiftOperator op =
        ShiftOperator::unilateral_backward(random_weight_sequence(rng, opt));
    const SparseVector e7 = SparseVector::basis(7);
    const SparseVector back = op.apply(op.right_inverse().apply(e7));
    CHECK(relative_gap(back, e7) < 1e-12);
  }
}

TEST_CASE("direct sums act componentwise through the interleaving") {
  const ShiftOperator sum =
      ShiftOperator::direct_sum(ShiftOperator::scalar({2.0, 0.0}),
                                ShiftOperator::scalar({3.0, 0.0}));
  const SparseVector x = interleave(SparseVector::basis(0), SparseVector::basis(0));
  const SparseVector image = sum.apply(x);
  CHECK(image.at(0) == Complex{2.0, 0.0});
  CHECK(image.at(1) == Complex{3.0, 0.0});

  // Interleaved powers equal the componentwise powers.
  Rng rng{99};
  const ShiftOperator pair = ShiftOperator::direct_sum(forward_3_2(), forward_3_2());
  const SparseVector left = random_vector(rng, 8, 4);
  const SparseVector right = random_vector(rng, 8, 4);
  const SparseVector whole = interleave(left, right);
  const auto [even, odd] = deinterleave(pair.apply_power(whole, 6));
  CHECK(relative_gap(even, repeated_apply(forward_3_2(), left, 6)) < 1e-12);
  CHECK(relative_gap(odd, repeated_apply(forward_3_2(), right, 6)) < 1e-12);

  // The interleaved norm dominates each component norm.
  CHECK(whole.norm() >= left.norm());
  CHECK(whole.norm() >= right.norm());
}

TEST_CASE("interleave round-trips") {
  Rng rng{3131};
  for (int trial = 0; trial < 40; ++trial) {
    const SparseVector a = random_vector(rng, 16, 6);
    const SparseVector b = random_vector(rng, 16, 6);
    const auto [even, odd] = deinterleave(interleave(a, b));
    CHECK(even == a);
    CHECK(odd == b);
  }
}

TEST_CASE("norm bound") {
  Rng rng{555};
  for (int trial = 0; trial < 100; ++trial) {
    const ShiftOperator op = random_operator(rng);
    const SparseVector x = random_vector(rng, 16, 6, needs_nonnegative_support(op));
    CHECK(op.apply(x).norm() <= op.norm_bound() * x.norm() * (1.0 + 1e-12) + 1e-300);
  }
}

TEST_CASE("canonical sparsity: no stored zeros") {
  const SparseVector x{{0, {1.0, 0.0}}, {3, {2.0, 0.0}}};
  const SparseVector cancelled = x - x;
  CHECK(cancelled.is_zero());
  CHECK(cancelled.support_size() == 0);

  SparseVector y = x;
  y *= Complex{0.0, 0.0};
  CHECK(y.is_zero());

  // Kernel hits inside a support leave no zero entries behind.
  const SparseVector mixed{{0, {1.0, 0.0}}, {4, {1.0, 0.0}}};
  const SparseVector image = backward_all(2.0).apply(mixed);
  for (const auto& [index, value] : image.entries()) {
    CHECK(value != Complex{0.0, 0.0});
  }
}

TEST_CASE("sparse vector norm is overflow safe") {
  SparseVector huge;
  huge.set(0, Complex{1e200, 0.0});
  huge.set(1, Complex{1e200, 0.0});
  CHECK(huge.norm() == doctest::Approx(std::sqrt(2.0) * 1e200));
}

TEST_CASE("scalar power with zero lambda annihilates") {
  const ShiftOperator zero = ShiftOperator::scalar({0.0, 0.0});
  CHECK(zero.apply_power(SparseVector::basis(0), 3).is_zero());
}
