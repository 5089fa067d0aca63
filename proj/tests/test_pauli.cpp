// Copyright 2026 VQE Forge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "test_helpers.hpp"
#include "vqeforge/pauli.hpp"

using vqeforge::PauliAxis;
using vqeforge::PauliTerm;
using vqeforge::QubitHamiltonian;

namespace {

PauliTerm single(std::complex<double> c, std::uint32_t q, PauliAxis a) {
  return PauliTerm(c, {{q, a}});
}

}  // namespace

TEST_CASE("PauliTerm constructor sorts and validates") {
  const PauliTerm t(1.0, {{3, PauliAxis::Z}, {0, PauliAxis::X}});
  REQUIRE(t.axes.size() == 2);
  REQUIRE(t.axes[0].first == 0);
  REQUIRE(t.axes[1].first == 3);

  REQUIRE_THROWS_AS(PauliTerm(1.0, {{0, PauliAxis::I}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(PauliTerm(1.0, {{1, PauliAxis::X}, {1, PauliAxis::Z}}),
                    std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(PauliTerm({nan, 0.0}, {{0, PauliAxis::X}}),
                    std::invalid_argument);
}

TEST_CASE("QubitHamiltonian rejects out-of-range indices") {
  REQUIRE_THROWS_AS(
      QubitHamiltonian(2, {single(1.0, 2, PauliAxis::Z)}),
      std::invalid_argument);
  REQUIRE_NOTHROW(QubitHamiltonian(2, {single(1.0, 1, PauliAxis::Z)}));
}

TEST_CASE("single-qubit products follow the cyclic rules") {
  using C = std::complex<double>;
  const auto x = single(1.0, 0, PauliAxis::X);
  const auto y = single(1.0, 0, PauliAxis::Y);
  const auto z = single(1.0, 0, PauliAxis::Z);

  const auto xx = multiply_terms(x, x);
  REQUIRE(xx.axes.empty());
  REQUIRE(xx.coefficient == C{1.0, 0.0});

  const auto xy = multiply_terms(x, y);
  REQUIRE(xy.axes == decltype(xy.axes){{0, PauliAxis::Z}});
  REQUIRE(xy.coefficient == C{0.0, 1.0});
  const auto yx = multiply_terms(y, x);
  REQUIRE(yx.coefficient == C{0.0, -1.0});

  const auto yz = multiply_terms(y, z);
  REQUIRE(yz.axes == decltype(yz.axes){{0, PauliAxis::X}});
  REQUIRE(yz.coefficient == C{0.0, 1.0});
  const auto zx = multiply_terms(z, x);
  REQUIRE(zx.axes == decltype(zx.axes){{0, PauliAxis::Y}});
  REQUIRE(zx.coefficient == C{0.0, 1.0});
  const auto xz = multiply_terms(x, z);
  REQUIRE(xz.coefficient == C{0.0, -1.0});
}

TEST_CASE("products on disjoint supports merge") {
  const auto a = single(2.0, 0, PauliAxis::Z);
  const auto b = single(0.5, 1, PauliAxis::X);
  const auto ab = multiply_terms(a, b);
  REQUIRE(ab.coefficient == std::complex<double>{1.0, 0.0});
  REQUIRE(ab.axes ==
          decltype(ab.axes){{0, PauliAxis::Z}, {1, PauliAxis::X}});
}

TEST_CASE("term products match dense matrix products") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testutil::random_term(rng, 4);
    const auto b = testutil::random_term(rng, 4);
    const auto ab = multiply_terms(a, b);
    const auto dense = [](const PauliTerm& t) {
      return to_dense_matrix(QubitHamiltonian{4, {t}});
    };
    const Eigen::MatrixXcd lhs = dense(ab);
    const Eigen::MatrixXcd rhs = dense(a) * dense(b);
    REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("canonicalize merges, drops, and orders") {
  const QubitHamiltonian h(
      2, {single(1.0, 0, PauliAxis::Z), single(2.0, 0, PauliAxis::Z)});
  const auto canon = canonicalize(h);
  REQUIRE(canon.terms.size() == 1);
  REQUIRE(canon.terms[0].coefficient == std::complex<double>{3.0, 0.0});

  const QubitHamiltonian tiny(1, {single(1e-15, 0, PauliAxis::Z)});
  REQUIRE(canonicalize(tiny).terms.empty());

  const QubitHamiltonian cancel(
      1, {single(1.0, 0, PauliAxis::Z), single(-1.0, 0, PauliAxis::Z)});
  REQUIRE(canonicalize(cancel).terms.empty());

  const QubitHamiltonian shuffled(
      2, {single(1.0, 1, PauliAxis::X), PauliTerm(4.0, {}),
          PauliTerm(1.0, {{0, PauliAxis::Z}, {1, PauliAxis::Z}}),
          single(1.0, 0, PauliAxis::Z)});
  const auto ordered = canonicalize(shuffled);
  REQUIRE(ordered.terms.size() == 4);
  REQUIRE(ordered.terms[0].is_identity());
  REQUIRE(ordered.terms[1].axes ==
          decltype(ordered.terms[1].axes){{0, PauliAxis::Z}});
  REQUIRE(ordered.terms[2].axes ==
          decltype(ordered.terms[2].axes){{0, PauliAxis::Z},
                                          {1, PauliAxis::Z}});
  REQUIRE(ordered.terms[3].axes ==
          decltype(ordered.terms[3].axes){{1, PauliAxis::X}});
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testutil::random_hamiltonian(rng, 3, 12, false);
    const auto once = canonicalize(h);
    const auto twice = canonicalize(once);
    REQUIRE(twice.terms.size() == once.terms.size());
    for (std::size_t i = 0; i < once.terms.size(); ++i) {
      REQUIRE(twice.terms[i].coefficient == once.terms[i].coefficient);
      REQUIRE(twice.terms[i].axes == once.terms[i].axes);
    }
  }
}

TEST_CASE("dense realization of elementary strings") {
  const auto z = to_dense_matrix(QubitHamiltonian{1, {single(1.0, 0, PauliAxis::Z)}});
  REQUIRE(z(0, 0) == std::complex<double>{1.0, 0.0});
  REQUIRE(z(1, 1) == std::complex<double>{-1.0, 0.0});
  REQUIRE(z(0, 1) == std::complex<double>{0.0, 0.0});

  const auto x = to_dense_matrix(QubitHamiltonian{1, {single(1.0, 0, PauliAxis::X)}});
  REQUIRE(x(0, 1) == std::complex<double>{1.0, 0.0});
  REQUIRE(x(1, 0) == std::complex<double>{1.0, 0.0});
  REQUIRE(x(0, 0) == std::complex<double>{0.0, 0.0});

  const auto y = to_dense_matrix(QubitHamiltonian{1, {single(1.0, 0, PauliAxis::Y)}});
  REQUIRE(y(0, 1) == std::complex<double>{0.0, -1.0});
  REQUIRE(y(1, 0) == std::complex<double>{0.0, 1.0});

  const auto ident = to_dense_matrix(QubitHamiltonian{2, {PauliTerm(2.5, {})}});
  REQUIRE((ident - 2.5 * Eigen::MatrixXcd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() == 0.0);

  // Qubit 0 is the most significant bit: Z0 on 4 qubits flips sign on the
  // upper half of the basis, in particular on |1100> = index 12.
  const auto z0 = to_dense_matrix(QubitHamiltonian{4, {single(1.0, 0, PauliAxis::Z)}});
  REQUIRE(z0(12, 12) == std::complex<double>{-1.0, 0.0});
  REQUIRE(z0(3, 3) == std::complex<double>{1.0, 0.0});
}

TEST_CASE("dense realization refuses wide registers") {
  const QubitHamiltonian wide(13, {PauliTerm(1.0, {})});
  REQUIRE_THROWS_AS(to_dense_matrix(wide), vqeforge::TooManyQubits);
  REQUIRE_THROWS_AS(exact_ground_energy(wide), vqeforge::TooManyQubits);
}

TEST_CASE("exact ground energies of elementary Hamiltonians") {
  std::vector<PauliTerm> zs;
  for (std::uint32_t q = 0; q < 3; ++q) zs.push_back(single(1.0, q, PauliAxis::Z));
  REQUIRE(exact_ground_energy(QubitHamiltonian{3, zs}) ==
          Catch::Approx(-3.0).margin(1e-12));
  REQUIRE(exact_ground_energy(
              QubitHamiltonian{1, {single(1.0, 0, PauliAxis::X)}}) ==
          Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("canonical real-coefficient Hamiltonians are dense-Hermitian") {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = canonicalize(testutil::random_hamiltonian(rng, 4, 16, true));
    const Eigen::MatrixXcd m = to_dense_matrix(h);
    REQUIRE((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Hermiticity check rejects imaginary coefficients") {
  const QubitHamiltonian bad(
      1, {single({1.0, 1e-6}, 0, PauliAxis::Z)});
  REQUIRE_THROWS_AS(check_hermitian_coefficients(bad), std::runtime_error);
  const QubitHamiltonian good(
      1, {single({1.0, 1e-12}, 0, PauliAxis::Z)});
  REQUIRE_NOTHROW(check_hermitian_coefficients(good));
}

TEST_CASE("text serialization lists one term per line") {
  const QubitHamiltonian h = canonicalize(QubitHamiltonian{
      4,
      {PauliTerm(-0.5, {}),
       PauliTerm(0.25,
                 {{0, PauliAxis::X}, {1, PauliAxis::X}, {2, PauliAxis::Y},
                  {3, PauliAxis::Y}})}});
  const std::string text = to_text(h);
  REQUIRE(text == "-0.5 0\n0.25 0 X0X1Y2Y3\n");
}
