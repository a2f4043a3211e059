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

#include "quadboson/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace quadboson {

namespace {

Eigen::SparseMatrix<double> empty_f(int m) {
  return Eigen::SparseMatrix<double>(m, m);
}

int max_nnz_per_line(const Eigen::SparseMatrix<double>& f) {
  if (f.nonZeros() == 0) return 0;
  std::vector<int> rows(f.rows(), 0), cols(f.cols(), 0);
  for (int k = 0; k < f.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(f, k); it; ++it)
      if (it.value() != 0.0) {
        ++rows[it.row()];
        ++cols[it.col()];
      }
  int m = 0;
  for (int v : rows) m = std::max(m, v);
  for (int v : cols) m = std::max(m, v);
  return m;
}

}  // namespace

QuadraticHamiltonian::QuadraticHamiltonian(SparseSymmetricMatrix a,
                                           SparseSymmetricMatrix c)
    : A(std::move(a)), C(std::move(c)), F(empty_f(A.dim())) {
  if (A.dim() != C.dim())
    throw StructuralError("A and C dimensions differ");
}

QuadraticHamiltonian::QuadraticHamiltonian(SparseSymmetricMatrix a,
                                           SparseSymmetricMatrix c,
                                           Eigen::SparseMatrix<double> f)
    : A(std::move(a)), C(std::move(c)), F(std::move(f)) {
  if (A.dim() != C.dim())
    throw StructuralError("A and C dimensions differ");
  if (F.rows() != A.dim() || F.cols() != A.dim())
    throw StructuralError("F dimension differs from A and C");
}

bool QuadraticHamiltonian::f_is_zero(double tol) const {
  for (int k = 0; k < F.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(F, k); it; ++it)
      if (std::abs(it.value()) > tol) return false;
  return true;
}

std::string to_string(HamiltonianTag tag) {
  switch (tag) {
    case HamiltonianTag::Inertial:
      return "Inertial";
    case HamiltonianTag::HoppingNumberPreserving:
      return "HoppingNumberPreserving";
    case HamiltonianTag::GeneralQuadratic:
      return "GeneralQuadratic";
  }
  return "GeneralQuadratic";
}

namespace {

struct LaplacianCheck {
  bool laplacian;
  double max_offdiagonal;
  double min_slack;
};

LaplacianCheck check_laplacian(const SparseSymmetricMatrix& m, double tol) {
  LaplacianCheck r{true, m.max_offdiagonal(), 0.0};
  if (r.max_offdiagonal > tol) r.laplacian = false;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m.dim(); ++j) min_slack = std::min(min_slack, m.row_slack(j));
  r.min_slack = min_slack;
  if (min_slack < -tol) r.laplacian = false;
  return r;
}

double min_eigenvalue(const SparseSymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

ValidationReport validate(const QuadraticHamiltonian& h, double tol,
                          int dense_mode_cap) {
  const int m = h.modes();
  if (h.C.dim() != m || h.F.rows() != m || h.F.cols() != m)
    throw StructuralError("dimension mismatch between A, C, F");
  if (m > dense_mode_cap)
    throw ScaleError("dense validation exceeds mode cap", m, dense_mode_cap);

  ValidationReport r;
  r.dim = m;
  r.tol = tol;
  r.sparsity_a = h.A.sparsity();
  r.sparsity_c = h.C.sparsity();
  r.sparsity_f = max_nnz_per_line(h.F);
  r.sparsity = std::max({r.sparsity_a, r.sparsity_c, r.sparsity_f});

  const auto la = check_laplacian(h.A, tol);
  const auto lc = check_laplacian(h.C, tol);
  r.a_laplacian = la.laplacian;
  r.c_laplacian = lc.laplacian;
  r.a_max_offdiagonal = la.max_offdiagonal;
  r.c_max_offdiagonal = lc.max_offdiagonal;
  r.a_min_slack = la.min_slack;
  r.c_min_slack = lc.min_slack;

  r.a_min_eigenvalue = min_eigenvalue(h.A);
  r.c_min_eigenvalue = min_eigenvalue(h.C);
  r.a_psd = r.a_min_eigenvalue >= -tol;
  r.c_psd = r.c_min_eigenvalue >= -tol;
  return r;
}

FirstMomentGenerator first_moment_generator(const QuadraticHamiltonian& h) {
  const int m = h.modes();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  const Eigen::MatrixXd f = Eigen::MatrixXd(h.F);
  g.topLeftCorner(m, m) = f.transpose();
  g.topRightCorner(m, m) = h.C.dense();
  g.bottomLeftCorner(m, m) = -h.A.dense();
  g.bottomRightCorner(m, m) = -f;

  FirstMomentGenerator out;
  out.matrix = g;
  Eigen::EigenSolver<Eigen::MatrixXd> es(g);
  out.eigenvalues = es.eigenvalues();
  const Eigen::MatrixXcd v = es.eigenvectors();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
  const double smin = svd.singularValues().minCoeff();
  out.eigenbasis_condition =
      smin > 0.0 ? svd.singularValues().maxCoeff() / smin
                 : std::numeric_limits<double>::infinity();
  out.semisimple = out.eigenbasis_condition < 1e8;
  return out;
}

HamiltonianClass classify(const QuadraticHamiltonian& h, double tol,
                          int dense_mode_cap, double semisimple_cond_threshold) {
  const ValidationReport v = validate(h, tol, dense_mode_cap);
  HamiltonianClass c;
  c.a_laplacian = v.a_laplacian;
  c.c_laplacian = v.c_laplacian;
  c.a_psd = v.a_psd;
  c.c_psd = v.c_psd;

  const Eigen::MatrixXd prod = h.A.dense() * h.C.dense();
  Eigen::EigenSolver<Eigen::MatrixXd> pes(prod, /*computeEigenvectors=*/false);
  const Eigen::VectorXcd pev = pes.eigenvalues();
  c.ac_positive_spectrum = pev.real().minCoeff() >= -tol &&
                           pev.imag().cwiseAbs().maxCoeff() <= tol;

  const GeneratorDecomposition dec = decompose_generator(h);
  const bool e_plus_zero = dec.e_plus.size() == 0 ||
                           dec.e_plus.cwiseAbs().maxCoeff() <= tol;
  const bool delta_zero = dec.delta.max_abs() <= tol;

  if (h.f_is_zero(tol) && c.a_psd && c.c_psd)
    c.tag = HamiltonianTag::Inertial;
  else if (e_plus_zero && delta_zero)
    c.tag = HamiltonianTag::HoppingNumberPreserving;
  else
    c.tag = HamiltonianTag::GeneralQuadratic;

  const FirstMomentGenerator g = first_moment_generator(h);
  const double max_re = g.eigenvalues.real().cwiseAbs().maxCoeff();
  c.bounded_dynamics =
      max_re <= tol && g.eigenbasis_condition < semisimple_cond_threshold;
  return c;
}

GeneratorDecomposition decompose_generator(const QuadraticHamiltonian& h) {
  const int m = h.modes();
  GeneratorDecomposition out;
  out.sigma = add_scaled(h.A, 0.5, h.C, 0.5);
  out.delta = add_scaled(h.A, 0.5, h.C, -0.5);
  const Eigen::MatrixXd f = Eigen::MatrixXd(h.F);
  out.e_plus = 0.5 * (f + f.transpose());
  out.e_minus = 0.5 * (f - f.transpose());

  // Commutator-derived generator mapped to the (iq, p) basis.
  const Eigen::MatrixXd g = first_moment_generator(h).matrix;
  const std::complex<double> i1(0.0, 1.0);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  Eigen::MatrixXcd vinv = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int j = 0; j < m; ++j) {
    v(j, j) = i1;
    vinv(j, j) = -i1;
    v(m + j, m + j) = 1.0;
    vinv(m + j, m + j) = 1.0;
  }
  const Eigen::MatrixXcd lhs = v * g.cast<std::complex<double>>() * vinv;

  // Pauli-block assembly: 1 (x) E- + iZ (x) E+ + iY (x) Delta - X (x) Sigma,
  // times -i as a whole.
  const Eigen::MatrixXd sig = out.sigma.dense();
  const Eigen::MatrixXd del = out.delta.dense();
  Eigen::MatrixXcd pauli = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  pauli.topLeftCorner(m, m) = out.e_minus + i1 * out.e_plus;
  pauli.bottomRightCorner(m, m) = out.e_minus - i1 * out.e_plus;
  pauli.topRightCorner(m, m) = (del - sig).cast<std::complex<double>>();
  pauli.bottomLeftCorner(m, m) = (-del - sig).cast<std::complex<double>>();

  out.reassembly_residual = (lhs - (-i1) * pauli).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace quadboson
