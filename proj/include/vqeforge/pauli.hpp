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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vqeforge {

/// Single-qubit Pauli operator. I is never stored inside a PauliTerm; it
/// only appears as the result of products like X*X.
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

/// Coefficients below this magnitude are dropped during canonicalization.
inline constexpr double kCoefficientDropThreshold = 1e-12;
/// Imaginary parts above this magnitude fail the Hermiticity check.
inline constexpr double kHermiticityTolerance = 1e-10;
/// Dense-matrix realization is an oracle facility; refuse past this size.
inline constexpr std::uint32_t kDenseOracleMaxQubits = 12;

struct TooManyQubits : std::domain_error {
  explicit TooManyQubits(std::uint32_t n)
      : std::domain_error("dense oracle limited to " +
                          std::to_string(kDenseOracleMaxQubits) +
                          " qubits, got " + std::to_string(n)) {}
};

/**
 * A weighted Pauli string in sparse form: a complex coefficient and a list
 * of (qubit index, axis) pairs sorted by index. Absent qubits act as
 * identity; explicit I entries are never stored.
 */
struct PauliTerm {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<std::pair<std::uint32_t, PauliAxis>> axes;

  PauliTerm() = default;

  PauliTerm(std::complex<double> coeff,
            std::vector<std::pair<std::uint32_t, PauliAxis>> ops)
      : coefficient(coeff), axes(std::move(ops)) {
    std::sort(axes.begin(), axes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (axes[i].second == PauliAxis::I) {
        throw std::invalid_argument("explicit identity entry in PauliTerm");
      }
      if (i > 0 && axes[i].first == axes[i - 1].first) {
        throw std::invalid_argument("duplicate qubit index in PauliTerm");
      }
    }
    if (!std::isfinite(coefficient.real()) ||
        !std::isfinite(coefficient.imag())) {
      throw std::invalid_argument("non-finite PauliTerm coefficient");
    }
  }

  bool is_identity() const { return axes.empty(); }

  std::uint32_t max_qubit_index() const {
    return axes.empty() ? 0 : axes.back().first;
  }
};

/// Lexicographic ordering on the sorted (index, axis) sequences. The
/// identity term (empty sequence) sorts first.
inline bool axes_less(const PauliTerm& a, const PauliTerm& b) {
  return std::lexicographical_compare(
      a.axes.begin(), a.axes.end(), b.axes.begin(), b.axes.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return static_cast<int>(x.second) < static_cast<int>(y.second);
      });
}

inline bool axes_equal(const PauliTerm& a, const PauliTerm& b) {
  return a.axes == b.axes;
}

/**
 * A sum of PauliTerms on a fixed qubit register. Physical Hamiltonians
 * carry hartree-valued real coefficients once canonicalized.
 */
struct QubitHamiltonian {
  std::uint32_t n_qubits = 0;
  std::vector<PauliTerm> terms;

  QubitHamiltonian() = default;
  QubitHamiltonian(std::uint32_t n, std::vector<PauliTerm> ts)
      : n_qubits(n), terms(std::move(ts)) {
    for (const auto& t : terms) {
      if (!t.axes.empty() && t.max_qubit_index() >= n_qubits) {
        throw std::invalid_argument("PauliTerm index exceeds register size");
      }
    }
  }
};

namespace detail {

// Product table for single-qubit Paulis: a*b = phase * axis.
// X*Y = iZ and cyclic; reversed order picks up -i; P*P = I.
inline std::pair<std::complex<double>, PauliAxis> axis_product(PauliAxis a,
                                                               PauliAxis b) {
  using C = std::complex<double>;
  if (a == PauliAxis::I) return {C{1, 0}, b};
  if (b == PauliAxis::I) return {C{1, 0}, a};
  if (a == b) return {C{1, 0}, PauliAxis::I};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // (X,Y)->Z, (Y,Z)->X, (Z,X)->Y with +i; swapped arguments give -i.
  const int ic = 6 - ia - ib;  // the remaining axis
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? C{0, 1} : C{0, -1}, static_cast<PauliAxis>(ic)};
}

}  // namespace detail

/// Operator product of two Pauli strings, phases folded into the
/// coefficient. Disjoint supports simply merge.
inline PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b) {
  PauliTerm out;
  out.coefficient = a.coefficient * b.coefficient;
  out.axes.reserve(a.axes.size() + b.axes.size());
  std::size_t i = 0, j = 0;
  while (i < a.axes.size() || j < b.axes.size()) {
    if (j == b.axes.size() ||
        (i < a.axes.size() && a.axes[i].first < b.axes[j].first)) {
      out.axes.push_back(a.axes[i++]);
    } else if (i == a.axes.size() || b.axes[j].first < a.axes[i].first) {
      out.axes.push_back(b.axes[j++]);
    } else {
      auto [phase, axis] = detail::axis_product(a.axes[i].second,
                                                b.axes[j].second);
      out.coefficient *= phase;
      if (axis != PauliAxis::I) out.axes.emplace_back(a.axes[i].first, axis);
      ++i;
      ++j;
    }
  }
  return out;
}

/**
 * Merges like terms, drops terms with |coefficient| below the threshold,
 * and sorts the survivors into the lexicographic order of their
 * (index, axis) sequences (identity first). Idempotent.
 */
inline QubitHamiltonian canonicalize(const QubitHamiltonian& h) {
  std::vector<PauliTerm> merged;
  merged.reserve(h.terms.size());
  for (const auto& t : h.terms) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const PauliTerm& m) { return axes_equal(m, t); });
    if (it == merged.end()) {
      merged.push_back(t);
    } else {
      it->coefficient += t.coefficient;
    }
  }
  std::vector<PauliTerm> kept;
  kept.reserve(merged.size());
  for (auto& t : merged) {
    if (std::abs(t.coefficient) >= kCoefficientDropThreshold) {
      kept.push_back(std::move(t));
    }
  }
  std::sort(kept.begin(), kept.end(), axes_less);
  return QubitHamiltonian{h.n_qubits, std::move(kept)};
}

/// Throws if any canonical coefficient has an imaginary part above the
/// Hermiticity tolerance. Physical Hamiltonians must pass.
inline void check_hermitian_coefficients(const QubitHamiltonian& h) {
  for (const auto& t : h.terms) {
    if (std::abs(t.coefficient.imag()) >= kHermiticityTolerance) {
      throw std::runtime_error(
          "non-Hermitian Pauli coefficient: imag = " +
          std::to_string(t.coefficient.imag()));
    }
  }
}

namespace detail {

struct TermMasks {
  std::uint64_t flip = 0;   // X and Y positions (bit positions, MSB-first)
  std::uint64_t yz = 0;     // Y and Z positions, sign mask
  unsigned n_y = 0;
};

// Qubit q occupies bit (n-1-q) of the basis index: qubit 0 is the most
// significant bit, so |1100> on 4 qubits is index 12.
inline std::uint64_t qubit_bit(std::uint32_t n_qubits, std::uint32_t q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

inline TermMasks term_masks(const PauliTerm& t, std::uint32_t n_qubits) {
  TermMasks m;
  for (const auto& [q, a] : t.axes) {
    const std::uint64_t bit = qubit_bit(n_qubits, q);
    if (a == PauliAxis::X || a == PauliAxis::Y) m.flip |= bit;
    if (a == PauliAxis::Y || a == PauliAxis::Z) m.yz |= bit;
    if (a == PauliAxis::Y) ++m.n_y;
  }
  return m;
}

// Phase of matrix element <i| P |i^flip>:
//   (-i)^{n_y} * (-1)^{popcount(i & (ymask|zmask))}
inline std::complex<double> y_phase_base(unsigned n_y) {
  switch (n_y % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

}  // namespace detail

/**
 * Dense-matrix realization sum_k c_k kron_j sigma_{axes_k(j)}, intended
 * for oracle checks on small registers. Qubit 0 is the most significant
 * bit of the basis index.
 */
inline Eigen::MatrixXcd to_dense_matrix(const QubitHamiltonian& h) {
  if (h.n_qubits > kDenseOracleMaxQubits) throw TooManyQubits(h.n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : h.terms) {
    const auto masks = detail::term_masks(t, h.n_qubits);
    const auto base = detail::y_phase_base(masks.n_y);
    for (std::uint64_t i = 0; i < dim; ++i) {
      const bool odd = std::popcount(i & masks.yz) & 1U;
      const std::complex<double> phase = odd ? -base : base;
      m(static_cast<Eigen::Index>(i),
        static_cast<Eigen::Index>(i ^ masks.flip)) += t.coefficient * phase;
    }
  }
  return m;
}

/// Minimum eigenvalue of the dense realization; the E0 reference used in
/// variational-bound checks.
inline double exact_ground_energy(const QubitHamiltonian& h) {
  const Eigen::MatrixXcd m = to_dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver failed");
  }
  return solver.eigenvalues()(0);
}

/**
 * Text serialization, one term per line:
 *   <real-coeff> <imag-coeff> <axis><index>...
 * e.g. "0.1721 0 Z0" or "0.0453 0 X0X1Y2Y3"; the identity term is a line
 * with bare coefficients. Full %.17g precision so a dump re-parses
 * bit-exactly.
 */
inline std::string to_text(const QubitHamiltonian& h) {
  std::ostringstream out;
  char buf[64];
  for (const auto& t : h.terms) {
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient.real());
    out << buf;
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient.imag());
    out << ' ' << buf;
    if (!t.axes.empty()) {
      out << ' ';
      for (const auto& [q, a] : t.axes) out << axis_char(a) << q;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vqeforge
