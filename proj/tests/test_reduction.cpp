// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "slh/components.hpp"
#include "slh/reduction.hpp"

namespace slh {

TEST_CASE("to_abcd block structure and shapes") {
  NetworkParams p;
  p.x = 0.33;
  const auto sys = to_abcd(build_network(p));
  CHECK(sys.n_modes == 2);
  CHECK(sys.n_ports == 8);
  CHECK(sys.a.rows() == 4);
  CHECK(sys.b.cols() == 16);
  CHECK(sys.c.rows() == 16);
  CHECK(sys.d.rows() == 16);
  // Doubled-up structure: lower blocks are conjugates of the upper ones.
  CHECK(max_abs(sys.a.bottomRightCorner(2, 2) - sys.a.topLeftCorner(2, 2).conjugate()) ==
        0.0);
  CHECK(max_abs(sys.a.bottomLeftCorner(2, 2) - sys.a.topRightCorner(2, 2).conjugate()) ==
        0.0);
}

TEST_CASE("drift blocks match the closed forms at the reference point") {
  NetworkParams p;
  p.x = 0.33;
  p.y = 0.1;
  const auto sys = to_abcd(build_network(p));
  const Matrix am = oracle::a_minus(p);
  const Matrix ap = oracle::a_plus(p);
  const double scale = std::max(1.0, max_abs(am));
  CHECK(max_abs(sys.a_minus() - am) <= 1e-12 * scale);
  CHECK(max_abs(sys.a_plus() - ap) <= 1e-12 * scale);
  // Spot value: plant drift diagonal is -gamma_total/2 - loop term, and the
  // loop term flips sign with the pi phase.
  const Complex expected_aa =
      Complex(-0.5 * p.gamma_total()) -
      std::sqrt(p.gamma1 * p.gamma2 * (1.0 - p.l1) * (1.0 - p.l2)) *
          std::polar(1.0, p.phi);
  CHECK(std::abs(sys.a_minus()(0, 0) - expected_aa) <= 1e-12 * scale);
  CHECK(expected_aa.real() > -0.5 * p.gamma_total());  // feedback slows the decay
}

TEST_CASE("drift blocks match the closed forms on random draws") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_params(rng);
    const auto sys = to_abcd(build_network(p));
    const Matrix am = oracle::a_minus(p);
    const double scale = std::max(1.0, max_abs(am));
    CHECK(max_abs(sys.a_minus() - am) <= 1e-12 * scale);
    CHECK(max_abs(sys.a_plus() - oracle::a_plus(p)) <= 1e-12 * scale);
  }
}

TEST_CASE("passive models reduce to block-diagonal systems") {
  NetworkParams p;  // x = y = 0
  const auto sys = to_abcd(build_network(p));
  CHECK(max_abs(sys.a_plus()) == 0.0);
  CHECK(max_abs(sys.b.topRightCorner(2, 8)) == 0.0);
  CHECK(max_abs(sys.c.topRightCorner(8, 2)) == 0.0);
  CHECK(max_abs(sys.d.topRightCorner(8, 8)) == 0.0);
}

TEST_CASE("realizability: O(1)-scale draws satisfy the absolute bounds") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = to_abcd(build_network(oracle::random_params(rng)));
    CHECK(sys.drift_realizability_residual() <= 1e-9);
    CHECK(sys.output_realizability_residual() <= 1e-12);
  }
}

TEST_CASE("realizability: physical-scale draws satisfy relative bounds") {
  NetworkParams p;
  p.x = 0.33;
  p.y = 0.1;
  const auto sys = to_abcd(build_network(p));
  // A J + J A^dag + B J B^dag cancels entries of order max|A|, so the
  // meaningful bound at rad/s scale is relative to that magnitude.
  CHECK(sys.drift_realizability_residual() <= 1e-12 * max_abs(sys.a));
  CHECK(sys.output_realizability_residual() <= 1e-12 * std::max(1.0, max_abs(sys.b)));
}

TEST_CASE("input matrix carries the scattering phase") {
  // B = -dup(coupling^dag scattering, 0): the drive column of the plant row
  // picks up the loop phase, not just the bare mirror rate.
  NetworkParams p;
  const auto net = build_network(p);
  const auto sys = to_abcd(net);
  const Matrix expected = -(net.coupling().adjoint() * net.scattering());
  CHECK(max_abs(sys.b.topLeftCorner(2, 8) - expected) == 0.0);
  // Distinguishable from the unscattered convention at the default phase.
  const Matrix bare = -net.coupling().adjoint();
  CHECK(max_abs(expected - bare) > 1.0e3);
}

TEST_CASE("pump enters the drift linearly") {
  NetworkParams base;
  NetworkParams pumped = base;
  pumped.x = 0.4;
  pumped.y = -0.2;
  const auto sys0 = to_abcd(build_network(base));
  const auto sys1 = to_abcd(build_network(pumped));
  CHECK(max_abs(sys0.a_minus() - sys1.a_minus()) == 0.0);
  Matrix diff = sys1.a_plus() - sys0.a_plus();
  CHECK(std::abs(diff(0, 0) - Complex(pumped.epsilon())) <= 1e-12 * pumped.epsilon());
  CHECK(std::abs(diff(1, 1) - Complex(pumped.eta())) <= 1e-12 * std::abs(pumped.eta()));
}

TEST_CASE("unpumped drift eigenvalues come in conjugate pairs") {
  std::mt19937_64 rng(37);
  auto p = oracle::random_params(rng);
  p.x = 0.0;
  p.y = 0.0;
  const auto report = stability(to_abcd(build_network(p)));
  std::vector<Complex> eigs(report.eigenvalues.begin(), report.eigenvalues.end());
  const auto by_real_then_imag = [](const Complex& u, const Complex& v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  };
  std::sort(eigs.begin(), eigs.end(), by_real_then_imag);
  auto conj_eigs = eigs;
  for (auto& z : conj_eigs) z = std::conj(z);
  std::sort(conj_eigs.begin(), conj_eigs.end(), by_real_then_imag);
  for (size_t i = 0; i < eigs.size(); ++i) {
    CHECK(std::abs(eigs[i] - conj_eigs[i]) <= 1e-9 * std::abs(eigs[i]));
  }
}

TEST_CASE("stability classifies the reference operating points") {
  NetworkParams p;

  p.x = 0.33;
  CHECK(stability(to_abcd(build_network(p))).is_hurwitz);

  // Open loop the plant is an ordinary below/above-threshold cavity.
  NetworkParams open = p;
  open.l1 = 1.0;
  open.l2 = 1.0;
  open.x = 0.99;
  CHECK(stability(to_abcd(build_network(open))).is_hurwitz);
  open.x = 1.01;
  CHECK_FALSE(stability(to_abcd(build_network(open))).is_hurwitz);

  // Closed loop at the pi phase the feedback raises the instability point
  // past the open-loop threshold.
  NetworkParams closed = p;
  closed.x = 1.2;
  CHECK(stability(to_abcd(build_network(closed))).is_hurwitz);
  closed.x = 1.45;
  CHECK_FALSE(stability(to_abcd(build_network(closed))).is_hurwitz);
}

TEST_CASE("stability report fields agree") {
  NetworkParams p;
  p.x = 0.5;
  const auto report = stability(to_abcd(build_network(p)));
  double max_re = -1e300;
  for (Index i = 0; i < report.eigenvalues.size(); ++i) {
    max_re = std::max(max_re, report.eigenvalues(i).real());
  }
  CHECK(report.max_real_part == max_re);
  CHECK(report.is_hurwitz == (max_re < 0.0));
  CHECK(report.eigenvalues.size() == 4);
}

}  // namespace slh
