#include "alcove/transform.hpp"

#include "alcove/errors.hpp"

#include <algorithm>

namespace alcove {

TransformMatrix build_transform(const WaveBasis& wb, const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  if (wb.psi.rows() != idx.size() || wb.psi.cols() != idx.size())
    throw InvalidArgument("wave basis does not match the model dimension");
  TransformMatrix tm{mp, wb.psi, {}, real_basis(wb, mp)};
  for (int i = 0; i < idx.size(); ++i) tm.star.push_back(idx.star(i));
  return tm;
}

static void check_size(const Eigen::VectorXcd& f, const TransformMatrix& tm) {
  if (f.size() != tm.F.rows()) throw InvalidArgument("lattice function has the wrong length");
}

Eigen::VectorXcd forward(const Eigen::VectorXcd& f, const TransformMatrix& tm) {
  check_size(f, tm);
  return tm.F.conjugate() * f;
}

Eigen::VectorXcd inverse(const Eigen::VectorXcd& f_hat, const TransformMatrix& tm) {
  check_size(f_hat, tm);
  return tm.F * f_hat;
}

RealCoefficients cosine_sine(const Eigen::VectorXcd& f, Parity which, const TransformMatrix& tm, double tol) {
  check_size(f, tm);
  Eigen::VectorXcd reflected(f.size());
  for (int i = 0; i < f.size(); ++i) reflected(i) = f(tm.star[i]);
  const double sign = which == Parity::cosine ? 1.0 : -1.0;
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  if ((f - sign * reflected).cwiseAbs().maxCoeff() > tol * scale)
    throw InvalidArgument(which == Parity::cosine ? "cosine transform needs a *-symmetric function"
                                                  : "sine transform needs a *-antisymmetric function");
  RealCoefficients out;
  out.which = which;
  std::vector<cplx> vals;
  const bool want_sine = which == Parity::sine;
  for (int b = 0; b < tm.real.basis.rows(); ++b) {
    if (tm.real.basis_is_sine[b] != want_sine) continue;
    out.labels.push_back(tm.real.basis_label[b]);
    vals.push_back(tm.real.basis.row(b).cast<cplx>().dot(f));
  }
  out.values = Eigen::Map<Eigen::VectorXcd>(vals.data(), static_cast<int>(vals.size()));
  return out;
}

Eigen::VectorXcd cosine_sine_inverse(const RealCoefficients& c, const TransformMatrix& tm) {
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(tm.F.rows());
  const bool want_sine = c.which == Parity::sine;
  int k = 0;
  for (int b = 0; b < tm.real.basis.rows(); ++b) {
    if (tm.real.basis_is_sine[b] != want_sine) continue;
    if (k >= c.values.size() || tm.real.basis_label[b] != c.labels[k])
      throw InvalidArgument("coefficients do not match the transform's fundamental domain");
    f += c.values(k++) * tm.real.basis.row(b).transpose().cast<cplx>();
  }
  if (k != c.values.size()) throw InvalidArgument("too many coefficients");
  return f;
}

TransformReport transform_checks(const TransformMatrix& tm) {
  const auto& F = tm.F;
  const int D = static_cast<int>(F.rows());
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(D, D);
  TransformReport rep;
  rep.symmetry = (F - F.transpose()).cwiseAbs().maxCoeff();
  rep.unitarity = (F * F.adjoint() - I).cwiseAbs().maxCoeff();
  rep.involution = (F.conjugate() * F - I).cwiseAbs().maxCoeff();
  for (int l = 0; l < D; ++l)
    rep.conjugation = std::max(rep.conjugation, (F.row(l).conjugate() - F.row(tm.star[l])).cwiseAbs().maxCoeff());
  for (int r = 1; r <= tm.mp.N; ++r) {
    const Eigen::MatrixXcd H = hamiltonian(r, HSign::sym, tm.mp).cast<cplx>();
    const Eigen::MatrixXcd Hpm =
        (hamiltonian(r, HSign::plus, tm.mp) + hamiltonian(r, HSign::minus, tm.mp)).cast<cplx>();
    const auto E = spectrum(r, tm.mp);
    Eigen::MatrixXcd EF = F;
    for (int l = 0; l < D; ++l) EF.row(l) *= E[l];
    rep.diagonalization = std::max(rep.diagonalization, (F * H - EF).cwiseAbs().maxCoeff());
    // Columns of F indexed by lambda; the difference operator acts on the row index mu.
    Eigen::MatrixXcd FE = F;
    for (int l = 0; l < D; ++l) FE.col(l) *= 2.0 * E[l];
    rep.bispectral = std::max(rep.bispectral, (Hpm * F - FE).cwiseAbs().maxCoeff());
  }
  return rep;
}

}  // namespace alcove
