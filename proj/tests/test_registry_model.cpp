// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "slh/errors.hpp"
#include "slh/hamiltonian.hpp"
#include "slh/mode_registry.hpp"
#include "slh/slh_model.hpp"
#include "slh/types.hpp"

namespace slh {

TEST_CASE("mode registry indexing") {
  const ModeRegistry reg({"a", "b"});
  CHECK(reg.size() == 2);
  CHECK(reg.index("a") == 0);
  CHECK(reg.index("b") == 1);
  CHECK(reg.name(1) == "b");
  CHECK(reg.contains("a"));
  CHECK_FALSE(reg.contains("c"));
  CHECK(reg.describe() == "[a, b]");
  CHECK_THROWS_WITH_AS(static_cast<void>(reg.index("c")),
                       "mode 'c' not present in registry [a, b]", EmbedError);
}

TEST_CASE("mode registry rejects bad mode lists") {
  CHECK(ModeRegistry().size() == 0);  // mode-free components live on an empty registry
  CHECK_THROWS_AS(ModeRegistry({"a", "a"}), ParameterError);
  CHECK_THROWS_AS(ModeRegistry({"a", ""}), ParameterError);
}

TEST_CASE("mode registry equality") {
  CHECK(ModeRegistry({"a", "b"}) == ModeRegistry({"a", "b"}));
  CHECK(ModeRegistry({"a", "b"}) != ModeRegistry({"b", "a"}));
}

TEST_CASE("quadratic hamiltonian validates shapes and symmetry") {
  Matrix omega = Matrix::Zero(2, 2);
  omega(0, 1) = Complex(0.0, 1.0);
  omega(1, 0) = Complex(0.0, -1.0);
  Matrix pump = Matrix::Zero(2, 2);
  pump(0, 1) = pump(1, 0) = 0.5;
  CHECK_NOTHROW(QuadraticHamiltonian(omega, pump));

  Matrix not_hermitian = omega;
  not_hermitian(1, 0) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(QuadraticHamiltonian(not_hermitian, pump), ParameterError);

  Matrix not_symmetric = pump;
  not_symmetric(1, 0) = -0.5;
  CHECK_THROWS_AS(QuadraticHamiltonian(omega, not_symmetric), ParameterError);

  CHECK_THROWS_AS(QuadraticHamiltonian(omega, Matrix::Zero(3, 3)), ParameterError);
}

TEST_CASE("quadratic hamiltonian sum adds blockwise") {
  const auto h1 = QuadraticHamiltonian(Matrix::Identity(2, 2), Matrix::Zero(2, 2));
  Matrix pump = Matrix::Zero(2, 2);
  pump(0, 0) = Complex(0.0, 2.0);
  const auto h2 = QuadraticHamiltonian(Matrix::Zero(2, 2), pump);
  const auto sum = h1 + h2;
  CHECK(max_abs(sum.omega() - Matrix::Identity(2, 2)) == 0.0);
  CHECK(max_abs(sum.pump() - pump) == 0.0);
}

TEST_CASE("slh model validates matrix shapes") {
  const ModeRegistry reg({"a"});
  const Matrix s = Matrix::Identity(2, 2);
  Matrix lambda = Matrix::Zero(2, 1);
  lambda(0, 0) = 1.5;
  const auto h = QuadraticHamiltonian::zero(1);
  const SLHModel g(reg, s, lambda, h);
  CHECK(g.ports() == 2);
  CHECK(g.modes() == 1);

  CHECK_THROWS_AS(SLHModel(reg, Matrix::Identity(3, 3), lambda, h), ParameterError);
  CHECK_THROWS_AS(SLHModel(reg, s, Matrix::Zero(2, 2), h), ParameterError);
  CHECK_THROWS_AS(SLHModel(reg, s, lambda, QuadraticHamiltonian::zero(2)), ParameterError);
}

TEST_CASE("slh model rejects non-unitary scattering") {
  const ModeRegistry reg({"a"});
  Matrix s = Matrix::Identity(2, 2);
  s(0, 0) = 0.9;
  CHECK_THROWS_AS(SLHModel(reg, s, Matrix::Zero(2, 1), QuadraticHamiltonian::zero(1)),
                  ParameterError);
}

TEST_CASE("doubled_up builds the conjugate block structure") {
  Matrix x(1, 1), y(1, 1);
  x(0, 0) = Complex(1.0, 2.0);
  y(0, 0) = Complex(3.0, -4.0);
  const Matrix d = doubled_up(x, y);
  CHECK(d(0, 0) == x(0, 0));
  CHECK(d(0, 1) == y(0, 0));
  CHECK(d(1, 0) == std::conj(y(0, 0)));
  CHECK(d(1, 1) == std::conj(x(0, 0)));
}

TEST_CASE("dup_metric is diag(I, -I)") {
  const Matrix j = dup_metric(2);
  CHECK(j(0, 0) == Complex(1.0));
  CHECK(j(1, 1) == Complex(1.0));
  CHECK(j(2, 2) == Complex(-1.0));
  CHECK(j(3, 3) == Complex(-1.0));
  CHECK(max_abs(j * j - Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("linspace endpoints are exact") {
  const RealVector v = linspace(0.0, 20.0e6, 1024);
  CHECK(v.size() == 1024);
  CHECK(v(0) == 0.0);
  CHECK(v(1023) == 20.0e6);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), ParameterError);
}

}  // namespace slh
