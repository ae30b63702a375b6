#include "alcove/kernels.hpp"

#include <map>

namespace alcove::kernels {

Eigen::MatrixXd assemble_plus_omp(int r, const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  const auto orb = orbit_weights(r, mp.N);
  const int D = idx.size();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(D, D);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < D; ++i)
    for (const auto& nu : orb) {
      const int j = idx.index(idx[i] + nu);
      if (j >= 0) H(i, j) = coeff_W(nu, idx[i], 1, mp);
    }
  return H;
}

Eigen::VectorXd delta_values_omp(const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  Eigen::VectorXd d(idx.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < idx.size(); ++i) d(i) = delta(idx[i], mp);
  return d;
}

// Each distinct monomial is evaluated once per point and shared by every polynomial.
Eigen::MatrixXcd evaluate_omp(const std::vector<SymPoly>& polys, const std::vector<std::vector<double>>& points,
                              double alpha) {
  std::map<Partition, int> slot;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.coeffs) slot.emplace(m, 0);
  std::vector<const Partition*> parts;
  for (auto& [m, s] : slot) {
    s = static_cast<int>(parts.size());
    parts.push_back(&m);
  }
  const int K = static_cast<int>(parts.size()), X = static_cast<int>(points.size());
  const int P = static_cast<int>(polys.size());

  Eigen::MatrixXcd mono(K, X);
#pragma omp parallel for collapse(2) schedule(static)
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < X; ++j) mono(k, j) = monomial_eval_trig(*parts[k], points[j], alpha);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(P, X);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < P; ++i)
    for (const auto& [m, c] : polys[i].coeffs) out.row(i) += c * mono.row(slot.at(m));
  return out;
}

}  // namespace alcove::kernels
