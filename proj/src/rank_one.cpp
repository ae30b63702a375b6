#include "alcove/rank_one.hpp"

#include "alcove/errors.hpp"
#include "alcove/lattice_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alcove {

namespace {

cplx unit(const RankOneModel& rm, double e) { return std::polar(1.0, rm.alpha * e); }

// prod_{s<k} (1 - q^{a + s})
cplx poch(const RankOneModel& rm, double a, int k) {
  cplx p = 1.0;
  for (int s = 0; s < k; ++s) p *= 1.0 - unit(rm, a + s);
  return p;
}

void check_index(int i, const RankOneModel& rm) {
  if (i < 0 || i > rm.M) throw InvalidArgument("rank-one index out of range");
}

}  // namespace

RankOneModel new_rank_one(int M, double g) {
  if (M < 1) throw InvalidArgument("M must be at least 1");
  if (!(g > 0.0)) throw InvalidArgument("g must be positive");
  return {M, g, 2.0 * std::numbers::pi / (2.0 * g + M)};
}

double rank_one_delta(int m, const RankOneModel& rm) {
  check_index(m, rm);
  const double a = 0.5 * rm.alpha;
  double d = std::sin(a * (m + rm.g)) / std::sin(a * rm.g);
  for (int j = 1; j <= m; ++j) d *= std::sin(a * (2 * rm.g + j - 1)) / std::sin(a * j);
  return d;
}

double rank_one_N0(const RankOneModel& rm) {
  double n = std::ldexp(1.0, rm.M);
  for (int k = 1; k <= rm.M - 1; ++k) n *= std::sin(0.5 * rm.alpha * (k + rm.g));
  return n;
}

cplx rank_one_term(int l, int m, int k, const RankOneModel& rm) {
  check_index(l, rm);
  check_index(m, rm);
  if (k < 0) throw InvalidArgument("negative term index");
  if (k > l) return 0.0;
  const cplx num = poch(rm, -l, k) * poch(rm, rm.g, k) * poch(rm, -m, k);
  const cplx den = poch(rm, 2 * rm.g, k) * poch(rm, 1.0, k);
  return num / den * unit(rm, k);
}

cplx rank_one_P(int l, int m, const RankOneModel& rm) {
  cplx s = 0.0;
  for (int k = 0; k <= l; ++k) s += rank_one_term(l, m, k, rm);
  return unit(rm, 0.5 * l * m) * s;
}

double closed_form_psi(int l, int m, const RankOneModel& rm) {
  return std::sqrt(rank_one_delta(l, rm) * rank_one_delta(m, rm) / rank_one_N0(rm)) * rank_one_P(l, m, rm).real();
}

Eigen::MatrixXd closed_form_matrix(const RankOneModel& rm) {
  Eigen::MatrixXd psi(rm.M + 1, rm.M + 1);
  for (int l = 0; l <= rm.M; ++l)
    for (int m = 0; m <= rm.M; ++m) psi(l, m) = closed_form_psi(l, m, rm);
  return psi;
}

Eigen::MatrixXd tridiagonal_hamiltonian(const RankOneModel& rm) {
  const double a = 0.5 * rm.alpha, g = rm.g;
  auto up = [&](double x) { return std::sin(a * (x + g)) / std::sin(a * x); };
  auto down = [&](double x) { return std::sin(a * (x - g)) / std::sin(a * x); };
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(rm.M + 1, rm.M + 1);
  for (int m = 0; m < rm.M; ++m) {
    const double w = std::sqrt(up(g + m) * down(g + m + 1));
    H(m, m + 1) = w;
    H(m + 1, m) = w;
  }
  return H;
}

std::vector<double> rank_one_eigenvalues(const RankOneModel& rm) {
  std::vector<double> e;
  for (int l = 0; l <= rm.M; ++l) e.push_back(2.0 * std::cos(0.5 * rm.alpha * (rm.g + l)));
  return e;
}

double RankOneReport::max() const {
  return std::max({coefficient_route, spectral_route, orthonormality, hamiltonian, eigenvalues, eigen_residual,
                   imaginary});
}

RankOneReport crosscheck(const RankOneModel& rm, double tol, std::uint64_t seed) {
  const int D = rm.M + 1;
  const ModelParams mp = new_model(1, rm.M, rm.g);
  const Eigen::MatrixXd psi = closed_form_matrix(rm);
  const Eigen::MatrixXd H = tridiagonal_hamiltonian(rm);
  const auto ev = rank_one_eigenvalues(rm);
  RankOneReport rep;
  rep.coefficient_route = (wave_basis_coefficient_route(mp, seed).psi - psi.cast<cplx>()).cwiseAbs().maxCoeff();
  rep.spectral_route = (wave_basis_spectral_route(mp, seed).psi - psi.cast<cplx>()).cwiseAbs().maxCoeff();
  rep.orthonormality = (psi * psi.transpose() - Eigen::MatrixXd::Identity(D, D)).cwiseAbs().maxCoeff();
  rep.hamiltonian = (H - hamiltonian(1, HSign::sym, mp)).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  std::vector<double> sorted = ev;
  std::sort(sorted.begin(), sorted.end());
  for (int l = 0; l < D; ++l) {
    rep.eigenvalues = std::max(rep.eigenvalues, std::abs(es.eigenvalues()(l) - sorted[l]));
    rep.eigen_residual =
        std::max(rep.eigen_residual, (H * psi.row(l).transpose() - ev[l] * psi.row(l).transpose()).cwiseAbs().maxCoeff());
    for (int m = 0; m < D; ++m) rep.imaginary = std::max(rep.imaginary, std::abs(rank_one_P(l, m, rm).imag()));
  }
  if (rep.max() > tol) throw OracleMismatch("rank-one closed form disagrees with the lattice engine");
  return rep;
}

}  // namespace alcove
