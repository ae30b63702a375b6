#include "alcove/kernels.hpp"

#include <map>

namespace alcove::kernels {

Eigen::MatrixXd assemble_plus_serial(int r, const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  std::map<std::vector<int>, Weight> steps;
  for (const auto& nu : orbit_weights(r, mp.N)) steps.emplace(nu.l, nu);
  const int D = idx.size();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      auto it = steps.find((idx[j] - idx[i]).l);
      if (it != steps.end()) H(i, j) = coeff_W(it->second, idx[i], 1, mp);
    }
  return H;
}

Eigen::VectorXd delta_values_serial(const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  Eigen::VectorXd d(idx.size());
  for (int i = 0; i < idx.size(); ++i) d(i) = delta(idx[i], mp);
  return d;
}

Eigen::MatrixXcd evaluate_serial(const std::vector<SymPoly>& polys, const std::vector<std::vector<double>>& points,
                                 double alpha) {
  const int P = static_cast<int>(polys.size()), X = static_cast<int>(points.size());
  Eigen::MatrixXcd out(P, X);
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < X; ++j) out(i, j) = polys[i].eval_trig(points[j], alpha);
  return out;
}

}  // namespace alcove::kernels
