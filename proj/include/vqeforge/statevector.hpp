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

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqeforge/pauli.hpp"

namespace vqeforge {

/**
 * Full 2^n complex amplitude vector. Qubit 0 is the most significant bit
 * of the basis index, so basis_state(4, {1,1,0,0}) occupies index 12.
 */
struct StateVector {
  std::uint32_t n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  StateVector() = default;

  explicit StateVector(std::uint32_t n)
      : n_qubits(n), amplitudes(std::size_t{1} << n, {0.0, 0.0}) {
    amplitudes[0] = {1.0, 0.0};
  }

  std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }
};

/// Bytes needed for the amplitudes of an n-qubit state: 2^n entries of
/// 16 bytes each. 4 qubits -> 256 B, 20 -> 16 MiB, 26 -> 1 GiB.
inline std::uint64_t memory_estimate(std::uint32_t n_qubits) {
  return (std::uint64_t{1} << n_qubits) * 16u;
}

/// Computational basis state |b_0 b_1 ... b_{n-1}> with b_0 the leftmost
/// (most significant) qubit.
inline StateVector basis_state(std::uint32_t n_qubits,
                               const std::vector<int>& bits) {
  if (bits.size() != n_qubits) {
    throw std::invalid_argument("basis_state: bit count != qubit count");
  }
  StateVector psi(n_qubits);
  psi.amplitudes[0] = {0.0, 0.0};
  std::uint64_t index = 0;
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    if (bits[q]) index |= detail::qubit_bit(n_qubits, q);
  }
  psi.amplitudes[index] = {1.0, 0.0};
  return psi;
}

enum class GateKind : std::uint8_t { PauliX, RY, CNOT, DoubleExcitation };

/**
 * A gate instance: kind, rotation angle where applicable, and the wires
 * it acts on. Construct through the factory helpers.
 */
struct Gate {
  GateKind kind = GateKind::PauliX;
  double angle = 0.0;
  std::vector<std::uint32_t> wires;

  static Gate pauli_x(std::uint32_t q) {
    return Gate{GateKind::PauliX, 0.0, {q}};
  }
  static Gate ry(double theta, std::uint32_t q) {
    return Gate{GateKind::RY, theta, {q}};
  }
  static Gate cnot(std::uint32_t control, std::uint32_t target) {
    return Gate{GateKind::CNOT, 0.0, {control, target}};
  }
  static Gate double_excitation(double theta, std::uint32_t w0,
                                std::uint32_t w1, std::uint32_t w2,
                                std::uint32_t w3) {
    return Gate{GateKind::DoubleExcitation, theta, {w0, w1, w2, w3}};
  }
};

namespace detail {

inline void check_wires(const StateVector& psi, const Gate& g,
                        std::size_t expected) {
  if (g.wires.size() != expected) {
    throw std::invalid_argument("gate wire count mismatch");
  }
  for (std::size_t i = 0; i < g.wires.size(); ++i) {
    if (g.wires[i] >= psi.n_qubits) {
      throw std::invalid_argument("gate wire exceeds register size");
    }
    for (std::size_t j = i + 1; j < g.wires.size(); ++j) {
      if (g.wires[i] == g.wires[j]) {
        throw std::invalid_argument("duplicate gate wire");
      }
    }
  }
}

// Iterates the 2^{n-1} amplitude pairs split by one wire. `low` masks the
// bits below the wire bit, `high` the bits at and above it.
template <typename F>
inline void for_each_pair(StateVector& psi, std::uint32_t wire, F&& body) {
  const std::uint64_t bit = qubit_bit(psi.n_qubits, wire);
  const std::uint64_t low = bit - 1;
  const std::uint64_t high = ~low;
  const std::uint64_t half = psi.dimension() >> 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k & high) << 1) | (k & low);
    body(psi.amplitudes[i0], psi.amplitudes[i0 | bit]);
  }
}

}  // namespace detail

/**
 * Applies a gate in place.
 *
 * RY(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
 * CNOT flips the target amplitude pair where the control bit is 1.
 * DoubleExcitation(theta) rotates the two-dimensional subspace spanned by
 * wire patterns |1100> and |0011>:
 *   a' = cos(t/2) a - sin(t/2) b,  b' = sin(t/2) a + cos(t/2) b
 * with a the |1100> amplitude; every other basis state is untouched.
 */
inline void apply_gate(StateVector& psi, const Gate& g) {
  switch (g.kind) {
    case GateKind::PauliX: {
      detail::check_wires(psi, g, 1);
      detail::for_each_pair(psi, g.wires[0],
                            [](auto& a0, auto& a1) { std::swap(a0, a1); });
      return;
    }
    case GateKind::RY: {
      detail::check_wires(psi, g, 1);
      const double c = std::cos(0.5 * g.angle);
      const double s = std::sin(0.5 * g.angle);
      detail::for_each_pair(psi, g.wires[0], [c, s](auto& a0, auto& a1) {
        const auto t0 = a0;
        a0 = c * t0 - s * a1;
        a1 = s * t0 + c * a1;
      });
      return;
    }
    case GateKind::CNOT: {
      detail::check_wires(psi, g, 2);
      const std::uint64_t cm = detail::qubit_bit(psi.n_qubits, g.wires[0]);
      const std::uint64_t tm = detail::qubit_bit(psi.n_qubits, g.wires[1]);
      const std::uint64_t dim = psi.dimension();
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cm) && !(i & tm)) {
          std::swap(psi.amplitudes[i], psi.amplitudes[i | tm]);
        }
      }
      return;
    }
    case GateKind::DoubleExcitation: {
      detail::check_wires(psi, g, 4);
      const std::uint64_t m0 = detail::qubit_bit(psi.n_qubits, g.wires[0]);
      const std::uint64_t m1 = detail::qubit_bit(psi.n_qubits, g.wires[1]);
      const std::uint64_t m2 = detail::qubit_bit(psi.n_qubits, g.wires[2]);
      const std::uint64_t m3 = detail::qubit_bit(psi.n_qubits, g.wires[3]);
      const std::uint64_t sel = m0 | m1 | m2 | m3;
      const std::uint64_t occ = m0 | m1;  // wire pattern 1100
      const double c = std::cos(0.5 * g.angle);
      const double s = std::sin(0.5 * g.angle);
      const std::uint64_t dim = psi.dimension();
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & sel) == occ) {
          const std::uint64_t j = i ^ sel;  // wire pattern 0011
          const auto a = psi.amplitudes[i];
          const auto b = psi.amplitudes[j];
          psi.amplitudes[i] = c * a - s * b;
          psi.amplitudes[j] = s * a + c * b;
        }
      }
      return;
    }
  }
  throw std::logic_error("unknown gate kind");
}

inline void apply_circuit(StateVector& psi, const std::vector<Gate>& gates) {
  for (const auto& g : gates) apply_gate(psi, g);
}

/**
 * <psi| H |psi> accumulated term by term, one O(2^n) pass per PauliTerm,
 * without materializing any matrix. A Pauli string maps index i to
 * i^flip with phase (-i)^{n_y} (-1)^{popcount(i & (ymask|zmask))}, so
 * each term contributes sum_i conj(psi_i) phase(i) psi_{i^flip}.
 * The result must be real up to the Hermiticity tolerance; the residual
 * imaginary part is checked and discarded.
 */
inline double expectation(const StateVector& psi, const QubitHamiltonian& h) {
  if (h.n_qubits != psi.n_qubits) {
    throw std::invalid_argument("expectation: qubit count mismatch");
  }
  const std::uint64_t dim = psi.dimension();
  std::complex<double> total{0.0, 0.0};
  for (const auto& t : h.terms) {
    const auto masks = detail::term_masks(t, psi.n_qubits);
    const auto base = detail::y_phase_base(masks.n_y);
    std::complex<double> acc{0.0, 0.0};
    if (masks.flip == 0) {
      // Diagonal string: phase is +/-1, amplitudes pair with themselves.
      double diag = 0.0;
      for (std::uint64_t i = 0; i < dim; ++i) {
        const double p = std::norm(psi.amplitudes[i]);
        diag += (std::popcount(i & masks.yz) & 1U) ? -p : p;
      }
      acc = diag;
    } else {
      for (std::uint64_t i = 0; i < dim; ++i) {
        const std::complex<double> v =
            std::conj(psi.amplitudes[i]) * psi.amplitudes[i ^ masks.flip];
        acc += (std::popcount(i & masks.yz) & 1U) ? -v : v;
      }
    }
    total += t.coefficient * base * acc;
  }
  if (std::abs(total.imag()) >= kHermiticityTolerance) {
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(total.imag()));
  }
  return total.real();
}

}  // namespace vqeforge
