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
#include <complex>
#include <string>
#include <vector>

#include "quadboson/sparse.hpp"

namespace quadboson {

/// Quadratic bosonic Hamiltonian
///   H = 1/2 q^T A q + 1/2 p^T C p + 1/2 sum_jk F_jk (q_j p_k + p_k q_j),
/// with hbar = 1 and canonical commutators [q_j, p_k] = i delta_jk.
///
/// A and C are symmetric; F is an arbitrary real matrix holding the mixed
/// position-momentum couplings. Its symmetric part contains squeezing-type
/// terms, its antisymmetric part the rotation-type terms produced by
/// complex hopping amplitudes.
struct QuadraticHamiltonian {
  SparseSymmetricMatrix A;
  SparseSymmetricMatrix C;
  Eigen::SparseMatrix<double> F;  // M x M, may be empty (all zero)

  QuadraticHamiltonian() = default;
  QuadraticHamiltonian(SparseSymmetricMatrix a, SparseSymmetricMatrix c);
  QuadraticHamiltonian(SparseSymmetricMatrix a, SparseSymmetricMatrix c,
                       Eigen::SparseMatrix<double> f);

  int modes() const { return A.dim(); }
  bool f_is_zero(double tol = 0.0) const;
};

/// Structural and numerical health report for a Hamiltonian instance.
struct ValidationReport {
  int dim = 0;
  int sparsity_a = 0, sparsity_c = 0, sparsity_f = 0;
  int sparsity = 0;  // max of the three

  // Spring-network stiffness checks: off-diagonals <= 0 and diagonal
  // slack A_jj + sum_{k!=j} A_jk >= 0.
  bool a_laplacian = false, c_laplacian = false;
  double a_max_offdiagonal = 0.0, c_max_offdiagonal = 0.0;
  double a_min_slack = 0.0, c_min_slack = 0.0;

  bool a_psd = false, c_psd = false;
  double a_min_eigenvalue = 0.0, c_min_eigenvalue = 0.0;

  double tol = 0.0;
};

enum class HamiltonianTag { Inertial, HoppingNumberPreserving, GeneralQuadratic };

std::string to_string(HamiltonianTag tag);

struct HamiltonianClass {
  HamiltonianTag tag = HamiltonianTag::GeneralQuadratic;
  bool a_laplacian = false;
  bool c_laplacian = false;
  bool a_psd = false;
  bool c_psd = false;
  bool ac_positive_spectrum = false;
  bool bounded_dynamics = false;
};

/// Generator of the linear first-moment dynamics on stacked (q, p):
///   d/dt (q; p) = G (q; p),  G = [[F^T, C], [-A, -F]].
/// For F = 0 this is [[0, C], [-A, 0]].
struct FirstMomentGenerator {
  Eigen::MatrixXd matrix;                       // 2M x 2M
  Eigen::VectorXcd eigenvalues;                 // of G
  double eigenbasis_condition = 0.0;            // condition number of eigenvectors
  bool semisimple = false;                      // condition below threshold
};

/// Pauli-block decomposition of the mixed-coupling structure.
struct GeneratorDecomposition {
  SparseSymmetricMatrix sigma;   // (A + C) / 2
  SparseSymmetricMatrix delta;   // (A - C) / 2
  Eigen::MatrixXd e_plus;        // sym(F)
  Eigen::MatrixXd e_minus;       // antisym(F)
  // Max-norm residual between the commutator-derived generator in the
  // (iq, p) basis and the assembled Pauli-block form. Reported as a
  // diagnostic; it is nonzero when e_minus != 0 because the two
  // conventions place the factor of i differently.
  double reassembly_residual = 0.0;
};

/// Checks shape, sign convention and positive semidefiniteness of A and C.
/// Throws StructuralError on dimension mismatch; PSD checks run a dense
/// eigendecomposition and require modes() <= dense_mode_cap.
ValidationReport validate(const QuadraticHamiltonian& h, double tol = 1e-10,
                          int dense_mode_cap = 64);

/// Classifies the Hamiltonian and tests boundedness of the first-moment flow
/// (all generator eigenvalues purely imaginary and the generator semisimple).
HamiltonianClass classify(const QuadraticHamiltonian& h, double tol = 1e-10,
                          int dense_mode_cap = 64,
                          double semisimple_cond_threshold = 1e8);

FirstMomentGenerator first_moment_generator(const QuadraticHamiltonian& h);

GeneratorDecomposition decompose_generator(const QuadraticHamiltonian& h);

}  // namespace quadboson
