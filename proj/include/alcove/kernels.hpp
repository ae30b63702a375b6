#pragma once

#include "alcove/lattice_model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace alcove::kernels {

// H_r^+ by scanning all pairs (mu, mu') for an orbit difference.
Eigen::MatrixXd assemble_plus_serial(int r, const ModelParams& mp);
// H_r^+ row by row over the orbit, rows in parallel.
Eigen::MatrixXd assemble_plus_omp(int r, const ModelParams& mp);

Eigen::VectorXd delta_values_serial(const ModelParams& mp);
Eigen::VectorXd delta_values_omp(const ModelParams& mp);

// out(i, j) = polys[i] at z = exp(i alpha x_j).
Eigen::MatrixXcd evaluate_serial(const std::vector<SymPoly>& polys, const std::vector<std::vector<double>>& points,
                                 double alpha);
Eigen::MatrixXcd evaluate_omp(const std::vector<SymPoly>& polys, const std::vector<std::vector<double>>& points,
                              double alpha);

inline Eigen::MatrixXd assemble_plus(int r, const ModelParams& mp, Exec e) {
  return e == Exec::serial ? assemble_plus_serial(r, mp) : assemble_plus_omp(r, mp);
}
inline Eigen::VectorXd delta_values(const ModelParams& mp, Exec e) {
  return e == Exec::serial ? delta_values_serial(mp) : delta_values_omp(mp);
}
inline Eigen::MatrixXcd evaluate(const std::vector<SymPoly>& polys, const std::vector<std::vector<double>>& points,
                                 double alpha, Exec e) {
  return e == Exec::serial ? evaluate_serial(polys, points, alpha) : evaluate_omp(polys, points, alpha);
}

}  // namespace alcove::kernels
