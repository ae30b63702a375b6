#pragma once

#include "alcove/qseries.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace alcove {

struct RankOneModel {
  int M = 1;
  double g = 1.0;
  double alpha = 0.0;  // 2 pi / (2g + M)
};

RankOneModel new_rank_one(int M, double g);

double rank_one_delta(int m, const RankOneModel& rm);
double rank_one_N0(const RankOneModel& rm);

// k-th term of the terminating 3phi2 in P_l at x = g + m; zero for k > l.
cplx rank_one_term(int l, int m, int k, const RankOneModel& rm);
// q^{l m / 2} 3phi2(q^{-l}, q^g, q^{-m}; q^{2g}, 0; q, q), q = exp(i alpha).
cplx rank_one_P(int l, int m, const RankOneModel& rm);

double closed_form_psi(int l, int m, const RankOneModel& rm);
Eigen::MatrixXd closed_form_matrix(const RankOneModel& rm);

Eigen::MatrixXd tridiagonal_hamiltonian(const RankOneModel& rm);
std::vector<double> rank_one_eigenvalues(const RankOneModel& rm);  // 2 cos(alpha/2 (g + l))

struct RankOneReport {
  double coefficient_route = 0.0;  // closed form against the general coefficient route
  double spectral_route = 0.0;
  double orthonormality = 0.0;
  double hamiltonian = 0.0;  // tridiagonal matrix against the lattice H_1
  double eigenvalues = 0.0;
  double eigen_residual = 0.0;  // H Psi_l - 2 cos(alpha/2 (g + l)) Psi_l
  double imaginary = 0.0;       // largest imaginary part of P_l
  double max() const;
};

// Throws OracleMismatch when any deviation exceeds tol.
RankOneReport crosscheck(const RankOneModel& rm, double tol, std::uint64_t seed = 20240611);

}  // namespace alcove
