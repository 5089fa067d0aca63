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

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqeforge/pauli.hpp"

namespace vqeforge {

inline constexpr double kAngstromToBohr = 1.8897259886;
inline constexpr double kMinBondAngstrom = 0.05;
inline constexpr double kMaxBondAngstrom = 10.0;
inline constexpr int kScfMaxIterations = 100;
inline constexpr double kScfEnergyTolerance = 1e-10;

struct BondLengthOutOfRange : std::domain_error {
  explicit BondLengthOutOfRange(double d)
      : std::domain_error("bond length " + std::to_string(d) +
                          " angstrom outside [" +
                          std::to_string(kMinBondAngstrom) + ", " +
                          std::to_string(kMaxBondAngstrom) + "]") {}
};

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(double d)
      : std::runtime_error("SCF failed to converge within " +
                           std::to_string(kScfMaxIterations) +
                           " iterations at bond length " + std::to_string(d) +
                           " angstrom") {}
};

/**
 * Contracted s-type Gaussian: sum_i c_i N_i exp(-alpha_i |r - center|^2)
 * with N_i = (2 alpha_i / pi)^{3/4} and the contraction rescaled so the
 * self-overlap is exactly 1.
 */
struct ContractedGaussian {
  std::array<double, 3> exponents{};
  std::array<double, 3> coefficients{};  // include primitive norms
  std::array<double, 3> center{};
};

/// STO-3G hydrogen 1s function at the given center (bohr).
inline ContractedGaussian sto3g_hydrogen(const std::array<double, 3>& center) {
  constexpr std::array<double, 3> alpha{3.42525091, 0.62391373, 0.16885540};
  constexpr std::array<double, 3> contraction{0.15432897, 0.53532814,
                                              0.44463454};
  ContractedGaussian g;
  g.exponents = alpha;
  g.center = center;
  for (int i = 0; i < 3; ++i) {
    const double norm = std::pow(2.0 * alpha[i] / std::numbers::pi, 0.75);
    g.coefficients[i] = contraction[i] * norm;
  }
  // Rescale so <g|g> = 1 for the contracted function.
  double self = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double p = alpha[i] + alpha[j];
      self += g.coefficients[i] * g.coefficients[j] *
              std::pow(std::numbers::pi / p, 1.5);
    }
  }
  const double scale = 1.0 / std::sqrt(self);
  for (auto& c : g.coefficients) c *= scale;
  return g;
}

/// Boys function F0(t) = (1/2) sqrt(pi/t) erf(sqrt(t)), with the Taylor
/// series 1 - t/3 + t^2/10 - t^3/42 below t = 1e-12.
inline double boys_f0(double t) {
  if (t < 1e-12) {
    return 1.0 - t / 3.0 + t * t / 10.0 - t * t * t / 42.0;
  }
  const double sq = std::sqrt(t);
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(sq);
}

namespace detail {

inline double dist2(const std::array<double, 3>& a,
                    const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

inline std::array<double, 3> gaussian_center(double a,
                                             const std::array<double, 3>& A,
                                             double b,
                                             const std::array<double, 3>& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p,
          (a * A[2] + b * B[2]) / p};
}

}  // namespace detail

/// Chemist-notation two-electron tensor (ij|kl) over two orbitals.
struct Eri2 {
  std::array<double, 16> data{};

  double& operator()(int i, int j, int k, int l) {
    return data[static_cast<std::size_t>(((i * 2 + j) * 2 + k) * 2 + l)];
  }
  double operator()(int i, int j, int k, int l) const {
    return data[static_cast<std::size_t>(((i * 2 + j) * 2 + k) * 2 + l)];
  }
};

/// One- and two-electron integrals over the two-function AO basis.
struct AoIntegrals {
  Eigen::Matrix2d overlap;
  Eigen::Matrix2d kinetic;
  Eigen::Matrix2d nuclear_attraction;  // summed over both nuclei
  Eri2 eri;                            // chemist notation (ab|cd)
};

namespace detail {

inline double overlap_prim(double a, const std::array<double, 3>& A, double b,
                           const std::array<double, 3>& B) {
  const double p = a + b;
  const double mu = a * b / p;
  return std::pow(std::numbers::pi / p, 1.5) * std::exp(-mu * dist2(A, B));
}

inline double kinetic_prim(double a, const std::array<double, 3>& A, double b,
                           const std::array<double, 3>& B) {
  const double p = a + b;
  const double mu = a * b / p;
  const double r2 = dist2(A, B);
  return mu * (3.0 - 2.0 * mu * r2) * std::pow(std::numbers::pi / p, 1.5) *
         std::exp(-mu * r2);
}

// Attraction of the (a,A)x(b,B) charge distribution to a unit nucleus at C.
inline double nuclear_prim(double a, const std::array<double, 3>& A, double b,
                           const std::array<double, 3>& B,
                           const std::array<double, 3>& C) {
  const double p = a + b;
  const double mu = a * b / p;
  const auto P = gaussian_center(a, A, b, B);
  return -2.0 * std::numbers::pi / p * std::exp(-mu * dist2(A, B)) *
         boys_f0(p * dist2(P, C));
}

inline double eri_prim(double a, const std::array<double, 3>& A, double b,
                       const std::array<double, 3>& B, double c,
                       const std::array<double, 3>& C, double d,
                       const std::array<double, 3>& D) {
  const double p = a + b;
  const double q = c + d;
  const auto P = gaussian_center(a, A, b, B);
  const auto Q = gaussian_center(c, C, d, D);
  const double pref = 2.0 * std::pow(std::numbers::pi, 2.5) /
                      (p * q * std::sqrt(p + q));
  return pref * std::exp(-(a * b / p) * dist2(A, B)) *
         std::exp(-(c * d / q) * dist2(C, D)) *
         boys_f0(p * q / (p + q) * dist2(P, Q));
}

template <typename Prim>
inline double contract2(const ContractedGaussian& ga,
                        const ContractedGaussian& gb, Prim&& prim) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      sum += ga.coefficients[i] * gb.coefficients[j] *
             prim(ga.exponents[i], ga.center, gb.exponents[j], gb.center);
    }
  }
  return sum;
}

inline double contract4(const ContractedGaussian& ga,
                        const ContractedGaussian& gb,
                        const ContractedGaussian& gc,
                        const ContractedGaussian& gd) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          sum += ga.coefficients[i] * gb.coefficients[j] *
                 gc.coefficients[k] * gd.coefficients[l] *
                 eri_prim(ga.exponents[i], ga.center, gb.exponents[j],
                          gb.center, gc.exponents[k], gc.center,
                          gd.exponents[l], gd.center);
  return sum;
}

}  // namespace detail

/// All integrals for H2 at the given internuclear distance in bohr, using
/// the closed forms for s-type Gaussians.
inline AoIntegrals ao_integrals(double bond_bohr) {
  const std::array<double, 3> ra{0.0, 0.0, 0.0};
  const std::array<double, 3> rb{0.0, 0.0, bond_bohr};
  const std::array<ContractedGaussian, 2> basis{sto3g_hydrogen(ra),
                                                sto3g_hydrogen(rb)};
  AoIntegrals out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.overlap(i, j) =
          detail::contract2(basis[i], basis[j], detail::overlap_prim);
      out.kinetic(i, j) =
          detail::contract2(basis[i], basis[j], detail::kinetic_prim);
      double v = 0.0;
      for (const auto& nucleus : {ra, rb}) {
        v += detail::contract2(basis[i], basis[j],
                               [&nucleus](double a, const auto& A, double b,
                                          const auto& B) {
                                 return detail::nuclear_prim(a, A, b, B,
                                                             nucleus);
                               });
      }
      out.nuclear_attraction(i, j) = v;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out.eri(i, j, k, l) =
              detail::contract4(basis[i], basis[j], basis[k], basis[l]);
        }
      }
    }
  }
  return out;
}

/// Physicist-notation MO tensor <ij|kl> over the two spatial orbitals.
using MoEriPhysicist = Eri2;

/**
 * Restricted Hartree-Fock result for H2 in the minimal basis. MO
 * quantities are over the two spatial orbitals, columns of
 * mo_coefficients ordered by ascending orbital energy. eri_mo holds
 * physicist-notation <ij|kl>.
 */
struct HartreeFockSolution {
  double bond_angstrom = 0.0;
  double bond_bohr = 0.0;
  double nuclear_repulsion = 0.0;
  double electronic_energy = 0.0;
  double hf_energy = 0.0;
  int scf_iterations = 0;
  Eigen::Matrix2d mo_coefficients;
  Eigen::Vector2d orbital_energies;
  Eigen::Matrix2d core_h_mo;
  Eigen::Matrix2d overlap;
  MoEriPhysicist eri_mo;
};

/**
 * SCF loop with symmetric orthogonalization, core-Hamiltonian initial
 * guess, and |delta E| < 1e-10 convergence. Accepts bond lengths in
 * [0.05, 10] angstrom and throws BondLengthOutOfRange otherwise;
 * NonConvergence after 100 iterations.
 */
inline HartreeFockSolution run_hartree_fock(double bond_angstrom) {
  if (!(bond_angstrom >= kMinBondAngstrom &&
        bond_angstrom <= kMaxBondAngstrom)) {
    throw BondLengthOutOfRange(bond_angstrom);
  }
  const double d = bond_angstrom * kAngstromToBohr;
  const AoIntegrals ints = ao_integrals(d);
  const Eigen::Matrix2d h_core = ints.kinetic + ints.nuclear_attraction;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> s_eig(ints.overlap);
  const Eigen::Matrix2d x =
      s_eig.eigenvectors() *
      s_eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      s_eig.eigenvectors().transpose();

  const auto g_matrix = [&ints](const Eigen::Matrix2d& density) {
    Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
    for (int mu = 0; mu < 2; ++mu)
      for (int nu = 0; nu < 2; ++nu)
        for (int lam = 0; lam < 2; ++lam)
          for (int sig = 0; sig < 2; ++sig)
            g(mu, nu) += density(lam, sig) *
                         (ints.eri(mu, nu, sig, lam) -
                          0.5 * ints.eri(mu, lam, sig, nu));
    return g;
  };

  Eigen::Matrix2d density = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d coeffs = Eigen::Matrix2d::Zero();
  Eigen::Vector2d energies = Eigen::Vector2d::Zero();
  double e_elec = 0.0;
  bool converged = false;
  int iterations = 0;
  for (int iter = 1; iter <= kScfMaxIterations; ++iter) {
    const Eigen::Matrix2d fock = h_core + g_matrix(density);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> f_eig(
        Eigen::Matrix2d(x.transpose() * fock * x));
    coeffs = x * f_eig.eigenvectors();
    energies = f_eig.eigenvalues();
    const Eigen::Vector2d occ = coeffs.col(0);
    density = 2.0 * occ * occ.transpose();
    const double e_new =
        0.5 * (density.cwiseProduct(h_core + fock)).sum();
    iterations = iter;
    if (iter > 1 && std::abs(e_new - e_elec) < kScfEnergyTolerance) {
      e_elec = e_new;
      converged = true;
      break;
    }
    e_elec = e_new;
  }
  if (!converged) throw NonConvergence(bond_angstrom);

  // One final Fock build so the reported electronic energy corresponds to
  // the final density.
  const Eigen::Matrix2d fock = h_core + g_matrix(density);
  e_elec = 0.5 * (density.cwiseProduct(h_core + fock)).sum();

  HartreeFockSolution sol;
  sol.bond_angstrom = bond_angstrom;
  sol.bond_bohr = d;
  sol.nuclear_repulsion = 1.0 / d;
  sol.electronic_energy = e_elec;
  sol.hf_energy = e_elec + sol.nuclear_repulsion;
  sol.scf_iterations = iterations;
  sol.mo_coefficients = coeffs;
  sol.orbital_energies = energies;
  sol.overlap = ints.overlap;
  sol.core_h_mo = coeffs.transpose() * h_core * coeffs;

  // AO -> MO transform of the chemist tensor, then chemist -> physicist:
  // <ij|kl> = (ik|jl).
  Eri2 mo_chem;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          double val = 0.0;
          for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu)
              for (int lam = 0; lam < 2; ++lam)
                for (int sig = 0; sig < 2; ++sig)
                  val += coeffs(mu, p) * coeffs(nu, q) * coeffs(lam, r) *
                         coeffs(sig, s) * ints.eri(mu, nu, lam, sig);
          mo_chem(p, q, r, s) = val;
        }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          sol.eri_mo(i, j, k, l) = mo_chem(i, k, j, l);
  return sol;
}

/**
 * Jordan-Wigner image of one ladder operator on 4 spin orbitals:
 *   a_p^dag = Z_0 ... Z_{p-1} (X_p - i Y_p)/2
 *   a_p     = Z_0 ... Z_{p-1} (X_p + i Y_p)/2
 * returned as its two PauliTerms.
 */
inline std::vector<PauliTerm> jordan_wigner_ladder(std::uint32_t p,
                                                   bool dagger) {
  std::vector<std::pair<std::uint32_t, PauliAxis>> chain;
  for (std::uint32_t q = 0; q < p; ++q) chain.emplace_back(q, PauliAxis::Z);
  auto with = [&chain, p](PauliAxis axis) {
    auto ops = chain;
    ops.emplace_back(p, axis);
    return ops;
  };
  const std::complex<double> half{0.5, 0.0};
  const std::complex<double> half_i{0.0, 0.5};
  return {PauliTerm(half, with(PauliAxis::X)),
          PauliTerm(dagger ? -half_i : half_i, with(PauliAxis::Y))};
}

namespace detail {

inline void accumulate_product(std::vector<PauliTerm>& out,
                               std::complex<double> weight,
                               const std::vector<const std::vector<PauliTerm>*>&
                                   factors) {
  std::vector<PauliTerm> acc{PauliTerm(weight, {})};
  for (const auto* factor : factors) {
    std::vector<PauliTerm> next;
    next.reserve(acc.size() * factor->size());
    for (const auto& a : acc)
      for (const auto& b : *factor) next.push_back(multiply_terms(a, b));
    acc = std::move(next);
  }
  out.insert(out.end(), acc.begin(), acc.end());
}

}  // namespace detail

/**
 * Jordan-Wigner qubit Hamiltonian on 4 qubits from the MO integrals:
 *   H = E_nuc + sum_pq h_pq a_p^dag a_q
 *           + (1/2) sum_pqrs <pq|rs> a_p^dag a_q^dag a_s a_r
 * over spin orbitals ordered 0-up, 0-down, 1-up, 1-down on qubits 0..3.
 * Coefficients are real after the Hermiticity check; H2 yields exactly
 * 15 terms.
 */
inline QubitHamiltonian jordan_wigner(const HartreeFockSolution& sol) {
  constexpr std::uint32_t n_spin = 4;
  const auto spatial = [](std::uint32_t p) { return static_cast<int>(p / 2); };
  const auto spin = [](std::uint32_t p) { return static_cast<int>(p % 2); };

  std::array<std::vector<PauliTerm>, n_spin> create;
  std::array<std::vector<PauliTerm>, n_spin> annihilate;
  for (std::uint32_t p = 0; p < n_spin; ++p) {
    create[p] = jordan_wigner_ladder(p, true);
    annihilate[p] = jordan_wigner_ladder(p, false);
  }

  std::vector<PauliTerm> terms;
  terms.emplace_back(std::complex<double>{sol.nuclear_repulsion, 0.0},
                     std::vector<std::pair<std::uint32_t, PauliAxis>>{});

  for (std::uint32_t p = 0; p < n_spin; ++p) {
    for (std::uint32_t q = 0; q < n_spin; ++q) {
      if (spin(p) != spin(q)) continue;
      const double h = sol.core_h_mo(spatial(p), spatial(q));
      if (h == 0.0) continue;
      detail::accumulate_product(terms, {h, 0.0},
                                 {&create[p], &annihilate[q]});
    }
  }
  for (std::uint32_t p = 0; p < n_spin; ++p) {
    for (std::uint32_t q = 0; q < n_spin; ++q) {
      for (std::uint32_t r = 0; r < n_spin; ++r) {
        for (std::uint32_t s = 0; s < n_spin; ++s) {
          if (spin(p) != spin(r) || spin(q) != spin(s)) continue;
          const double g =
              sol.eri_mo(spatial(p), spatial(q), spatial(r), spatial(s));
          if (g == 0.0) continue;
          detail::accumulate_product(
              terms, {0.5 * g, 0.0},
              {&create[p], &create[q], &annihilate[s], &annihilate[r]});
        }
      }
    }
  }

  QubitHamiltonian h = canonicalize(QubitHamiltonian{n_spin, std::move(terms)});
  check_hermitian_coefficients(h);
  for (auto& t : h.terms) t.coefficient = {t.coefficient.real(), 0.0};
  return h;
}

/**
 * HF plus Jordan-Wigner for a bond length in angstrom, memoized per
 * thread so sweep workers keep isolated caches.
 */
inline const QubitHamiltonian& build_h2_hamiltonian(double bond_angstrom) {
  thread_local std::map<double, QubitHamiltonian> cache;
  auto it = cache.find(bond_angstrom);
  if (it == cache.end()) {
    it = cache.emplace(bond_angstrom,
                       jordan_wigner(run_hartree_fock(bond_angstrom)))
             .first;
  }
  return it->second;
}

}  // namespace vqeforge
