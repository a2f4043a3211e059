// Copyright 2026 The quadboson authors
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

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>

#include "quadboson/hamiltonian.hpp"
#include "quadboson/moments.hpp"

namespace quadboson {

/// Hermitian generator of the greek-coordinate moment dynamics,
///   H0 = [[0, B^T D], [D^T B, 0]],
/// acting on the 2 M(M+1)/2 dimensional label space.
struct EffectiveHamiltonian {
  std::int64_t dim = 0;
  Eigen::SparseMatrix<double> matrix;
  double max_abs_entry = 0.0;
  // Max-norm difference between the independently assembled off-diagonal
  // blocks; contract: <= 1e-12.
  double hermiticity_residual = 0.0;
  int max_row_nonzeros = 0;
};

EffectiveHamiltonian effective_hamiltonian(const IncidenceFactor& b,
                                           const IncidenceFactor& d);

enum class EvolutionMethod { DenseExpm, EigenClosedForm, KrylovAction };

std::string to_string(EvolutionMethod m);

struct FirstMomentResult {
  Eigen::VectorXd state;  // stacked (q, p) expectations at time t
  double time = 0.0;
  EvolutionMethod method = EvolutionMethod::DenseExpm;
  double residual_estimate = 0.0;
  bool overflow = false;  // non-finite entries produced by unbounded dynamics
};

/// Exact linear first-moment evolution z(t) = exp(t G) z0 with
/// G = first_moment_generator(h). No truncation in moment order.
FirstMomentResult evolve_first_moments(const QuadraticHamiltonian& h,
                                       const Eigen::VectorXd& z0, double t);

struct EvolutionOptions {
  // Sector dimensions up to this bound use the dense eigendecomposition
  // path; larger sectors fall back to the matrix-free Krylov integrator.
  std::int64_t dense_sector_cap = 4096;
  // Hard memory bound on a sector state vector.
  std::int64_t sector_memory_cap = std::int64_t(1) << 24;
  int krylov_basis = 48;
  int krylov_max_refinements = 20;
};

struct MomentEvolutionResult {
  MomentVector state;
  double time = 0.0;
  EvolutionMethod method = EvolutionMethod::EigenClosedForm;
  double residual_estimate = 0.0;
};

/// Evolves each rank-r sector of the encoded state under
/// exp(i t (H0 (+) ... (+) H0)) (Kronecker sum over the r slots); the
/// vacuum amplitude is constant and the global norm is preserved. The
/// per-sector method is dense for dimensions within the cap, Krylov
/// otherwise; `eps` is split evenly across sectors.
MomentEvolutionResult evolve_moment_vector(const EffectiveHamiltonian& h0,
                                           const MomentVector& psi0, double t,
                                           double eps = 1e-8,
                                           const EvolutionOptions& opts = {});

struct ClosedFormState {
  Eigen::VectorXd q;
  Eigen::VectorXd qdot;
};

/// Solves qddot = -a_tilde q for a symmetric (possibly indefinite)
/// a_tilde by eigenbranch: oscillatory on positive eigenvalues,
/// hyperbolic on negative ones, free-particle on eigenvalues within
/// `zero_tol` of zero.
ClosedFormState closed_form_evolution(const Eigen::MatrixXd& a_tilde,
                                      const Eigen::VectorXd& q0,
                                      const Eigen::VectorXd& qdot0, double t,
                                      double zero_tol = 1e-12);

struct ResourceEstimate {
  double queries = 0.0;
  double gates = 0.0;
};

/// Query/gate counts of the sparse-simulation bound with unit constants:
/// Q = t K d h0max + ln(1/eps), G = Q ln^2(M Q / eps). Order-of-magnitude
/// indicator only; the bound is asymptotic, not exact, and the role of K
/// is taken as an explicit input.
ResourceEstimate resource_estimate(double t, double k, double d, double h0max,
                                   double eps, double m = 1.0);

}  // namespace quadboson
