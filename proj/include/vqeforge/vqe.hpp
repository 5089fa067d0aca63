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
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqeforge/pauli.hpp"
#include "vqeforge/statevector.hpp"

namespace vqeforge {

enum class AnsatzKind : std::uint8_t {
  /// Single double-excitation rotation applied to |1100> on 4 qubits;
  /// one parameter.
  H2DoubleExcitation,
  /// `layers` repetitions of an RY rotation on every qubit followed by a
  /// CNOT chain (q -> q+1); layers * n_qubits parameters, prepared from
  /// |0...0>.
  HardwareEfficient,
};

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::H2DoubleExcitation;
  std::uint32_t layers = 2;  // HardwareEfficient only

  static AnsatzSpec h2_double_excitation() {
    return AnsatzSpec{AnsatzKind::H2DoubleExcitation, 0};
  }
  static AnsatzSpec hardware_efficient(std::uint32_t layers) {
    return AnsatzSpec{AnsatzKind::HardwareEfficient, layers};
  }
};

inline std::size_t n_parameters(const AnsatzSpec& spec,
                                std::uint32_t n_qubits) {
  switch (spec.kind) {
    case AnsatzKind::H2DoubleExcitation: return 1;
    case AnsatzKind::HardwareEfficient:
      return static_cast<std::size_t>(spec.layers) * n_qubits;
  }
  throw std::logic_error("unknown ansatz kind");
}

/// Builds the ansatz state for the given parameters.
inline StateVector prepare_ansatz(const AnsatzSpec& spec,
                                  const std::vector<double>& theta,
                                  std::uint32_t n_qubits) {
  if (theta.size() != n_parameters(spec, n_qubits)) {
    throw std::invalid_argument("parameter count mismatch for ansatz");
  }
  switch (spec.kind) {
    case AnsatzKind::H2DoubleExcitation: {
      if (n_qubits != 4) {
        throw std::invalid_argument(
            "H2 double-excitation ansatz requires 4 qubits");
      }
      StateVector psi = basis_state(4, {1, 1, 0, 0});
      apply_gate(psi, Gate::double_excitation(theta[0], 0, 1, 2, 3));
      return psi;
    }
    case AnsatzKind::HardwareEfficient: {
      StateVector psi(n_qubits);
      std::size_t k = 0;
      for (std::uint32_t layer = 0; layer < spec.layers; ++layer) {
        for (std::uint32_t q = 0; q < n_qubits; ++q) {
          apply_gate(psi, Gate::ry(theta[k++], q));
        }
        for (std::uint32_t q = 0; q + 1 < n_qubits; ++q) {
          apply_gate(psi, Gate::cnot(q, q + 1));
        }
      }
      return psi;
    }
  }
  throw std::logic_error("unknown ansatz kind");
}

/// E(theta) = <psi(theta)| H |psi(theta)>.
inline double energy(const std::vector<double>& theta,
                     const QubitHamiltonian& hamiltonian,
                     const AnsatzSpec& spec) {
  return expectation(prepare_ansatz(spec, theta, hamiltonian.n_qubits),
                     hamiltonian);
}

/**
 * Two-term parameter-shift gradient, exact for the single-frequency gates
 * used here:
 *   dE/dtheta_k = [E(theta + (pi/2) e_k) - E(theta - (pi/2) e_k)] / 2.
 * Costs two circuit evaluations per parameter.
 */
inline std::vector<double> gradient(const std::vector<double>& theta,
                                    const QubitHamiltonian& hamiltonian,
                                    const AnsatzSpec& spec) {
  constexpr double shift = std::numbers::pi / 2.0;
  std::vector<double> grad(theta.size(), 0.0);
  std::vector<double> shifted = theta;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    shifted[k] = theta[k] + shift;
    const double plus = energy(shifted, hamiltonian, spec);
    shifted[k] = theta[k] - shift;
    const double minus = energy(shifted, hamiltonian, spec);
    shifted[k] = theta[k];
    grad[k] = 0.5 * (plus - minus);
  }
  return grad;
}

struct AdamConfig {
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_iterations = 200;
  /// Early stop once the gradient infinity norm drops below this;
  /// disabled when unset so fixed-iteration runs stay fixed.
  std::optional<double> gradient_tolerance{};
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step = 0;

  explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
};

/**
 * One bias-corrected Adam update. Pure: identical inputs give identical
 * outputs.
 */
inline std::pair<std::vector<double>, AdamState> adam_step(
    const AdamState& state, const std::vector<double>& grad,
    const std::vector<double>& theta, const AdamConfig& config) {
  if (grad.size() != theta.size() || state.m.size() != theta.size()) {
    throw std::invalid_argument("adam_step dimension mismatch");
  }
  AdamState next = state;
  next.step = state.step + 1;
  std::vector<double> theta_next(theta.size());
  const double bc1 = 1.0 - std::pow(config.beta1, next.step);
  const double bc2 = 1.0 - std::pow(config.beta2, next.step);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    next.m[k] = config.beta1 * state.m[k] + (1.0 - config.beta1) * grad[k];
    next.v[k] =
        config.beta2 * state.v[k] + (1.0 - config.beta2) * grad[k] * grad[k];
    const double m_hat = next.m[k] / bc1;
    const double v_hat = next.v[k] / bc2;
    theta_next[k] =
        theta[k] - config.learning_rate * m_hat / (std::sqrt(v_hat) +
                                                   config.epsilon);
  }
  return {std::move(theta_next), std::move(next)};
}

struct VqeResult {
  double energy = 0.0;
  std::vector<double> theta;
  /// Energy at the top of each iteration plus the final energy, so
  /// trajectory.size() == iterations_run + 1 and
  /// energy == trajectory.back().
  std::vector<double> trajectory;
  int iterations_run = 0;
  std::uint64_t circuit_evaluations = 0;
  double wall_seconds = 0.0;
};

/**
 * Gradient-descent VQE loop: evaluate, parameter-shift gradient, optional
 * early stop on the gradient infinity norm, Adam update. Parameters start
 * at zero unless an explicit initial vector is given. Throws on a
 * non-finite energy with the iteration and parameters in the message.
 */
inline VqeResult run_vqe(const QubitHamiltonian& hamiltonian,
                         const AnsatzSpec& spec, const AdamConfig& config,
                         const std::vector<double>& initial_theta = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n_params = n_parameters(spec, hamiltonian.n_qubits);
  std::vector<double> theta;
  if (initial_theta.empty()) {
    theta.assign(n_params, 0.0);
  } else if (initial_theta.size() == n_params) {
    theta = initial_theta;
  } else {
    throw std::invalid_argument("initial parameter count mismatch");
  }

  VqeResult result;
  result.trajectory.reserve(static_cast<std::size_t>(config.max_iterations) +
                            1);
  AdamState state(n_params);

  const auto checked_energy = [&](const std::vector<double>& t, int iter) {
    const double e = energy(t, hamiltonian, spec);
    ++result.circuit_evaluations;
    if (!std::isfinite(e)) {
      std::string msg = "non-finite energy at iteration " +
                        std::to_string(iter) + "; theta =";
      for (double x : t) msg += " " + std::to_string(x);
      throw std::runtime_error(msg);
    }
    return e;
  };

  bool converged = false;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const double e = checked_energy(theta, iter);
    result.trajectory.push_back(e);
    const auto grad = gradient(theta, hamiltonian, spec);
    result.circuit_evaluations += 2 * n_params;
    if (config.gradient_tolerance) {
      double g_inf = 0.0;
      for (double g : grad) g_inf = std::max(g_inf, std::abs(g));
      if (g_inf < *config.gradient_tolerance) {
        converged = true;
        break;
      }
    }
    auto [theta_next, state_next] = adam_step(state, grad, theta, config);
    theta = std::move(theta_next);
    state = std::move(state_next);
    result.iterations_run = iter + 1;
  }
  if (!converged) {
    result.trajectory.push_back(
        checked_energy(theta, config.max_iterations));
  }
  result.energy = result.trajectory.back();
  result.theta = std::move(theta);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace vqeforge
