#include "alcove/lattice_model.hpp"

#include "alcove/errors.hpp"
#include "alcove/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace alcove {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alcove(const Weight& mu, const ModelParams& mp) {
  if (mu.rank() != mp.N) throw InvalidArgument("weight rank does not match the model");
  if (!mu.dominant() || mu.height() > mp.M) throw InvalidArgument("weight outside the alcove");
}

bool in_alcove(const Weight& w, const ModelParams& mp) { return w.dominant() && w.height() <= mp.M; }

// <a, nu> for every positive root; nu must be a minuscule orbit weight.
std::vector<int> root_signs(const Weight& nu, int N) {
  if (nu.rank() != N) throw InvalidArgument("orbit weight rank mismatch");
  std::vector<int> s;
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      int v = root_pairing(i, j, nu);
      if (v < -1 || v > 1) throw InvalidArgument("weight is not in a fundamental orbit");
      s.push_back(v);
    }
  return s;
}

double sin_half(const ModelParams& mp, double x) { return std::sin(0.5 * mp.alpha * x); }

// Product formula for V without any boundary bookkeeping.
double v_raw(const Weight& nu, const Weight& mu, VForm form, const ModelParams& mp) {
  const auto signs = root_signs(nu, mp.N);
  const double g = mp.g;
  double v = 1.0;
  int k = 0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = i + 1; j <= mp.N; ++j, ++k) {
      if (signs[k] == 0) continue;
      const double x = (j - i) * g + root_pairing(i, j, mu);
      if (form == VForm::at_point) {
        v *= signs[k] > 0 ? sin_half(mp, x + g) / sin_half(mp, x) : sin_half(mp, x - g) / sin_half(mp, x);
      } else {
        v *= signs[k] > 0 ? sin_half(mp, x + 1 - g) / sin_half(mp, x + 1)
                          : sin_half(mp, x - 1 + g) / sin_half(mp, x - 1);
      }
    }
  return v;
}

double delta_raw(const Weight& mu, const ModelParams& mp) {
  double cp = 1.0, cm = 1.0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = i + 1; j <= mp.N; ++j) {
      const double hg = (j - i) * mp.g;
      const int m = root_pairing(i, j, mu);
      cp *= trig_pochhammer(hg, m, mp.alpha) / trig_pochhammer(mp.g + hg, m, mp.alpha);
      cm *= trig_pochhammer(1 - mp.g + hg, m, mp.alpha) / trig_pochhammer(1 + hg, m, mp.alpha);
    }
  return 1.0 / (cp * cm);
}

}  // namespace

ModelParams new_model(int N, int M, double g) {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (M < 1) throw InvalidArgument("M must be at least 1");
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidArgument("g must be positive");
  ModelParams mp{N, M, g, 0.0, false};
  mp.alpha = 2.0 * kPi / mp.period();
  for (int j = 1; j <= N; ++j)
    if (std::abs(g * j - 1.0) < 1e-12) mp.exceptional = true;
  return mp;
}

std::vector<double> lattice_point(const Weight& mu, const ModelParams& mp) {
  auto x = ambient(mu).numeric();
  for (int k = 0; k <= mp.N; ++k) x[k] += 0.5 * mp.g * (mp.N - 2 * k);
  return x;
}

double coeff_V(const Weight& nu, const Weight& mu, VForm form, const ModelParams& mp) {
  check_alcove(mu, mp);
  root_signs(nu, mp.N);
  const bool inside = in_alcove(mu + nu, mp);
  if (form == VForm::at_point) return inside ? v_raw(nu, mu, form, mp) : 0.0;
  if (!inside && mp.exceptional)
    throw AmbiguousValue("reflected coefficient is 0/0 at a boundary point for exceptional g");
  return v_raw(nu, mu, form, mp);
}

double coeff_V(const AmbientVector& nu, const Weight& mu, VForm form, const ModelParams& mp) {
  return coeff_V(weight_of(nu), mu, form, mp);
}

double coeff_V_at(const Weight& nu, const std::vector<double>& x, const ModelParams& mp) {
  if (static_cast<int>(x.size()) != mp.N + 1) throw InvalidArgument("point must have N+1 coordinates");
  const auto signs = root_signs(nu, mp.N);
  double v = 1.0;
  int k = 0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = i + 1; j <= mp.N; ++j, ++k) {
      if (signs[k] == 0) continue;
      const double ax = x[i] - x[j];
      v *= sin_half(mp, ax + signs[k] * mp.g) / sin_half(mp, ax);
    }
  return v;
}

double coeff_W(const Weight& nu, const Weight& mu, int sign, const ModelParams& mp) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  check_alcove(mu, mp);
  const Weight step = sign > 0 ? nu : -nu;
  root_signs(step, mp.N);
  if (!in_alcove(mu + step, mp)) return 0.0;
  const double radicand = v_raw(step, mu, VForm::at_point, mp) * v_raw(step, mu, VForm::reflected, mp);
  if (!(radicand > 0.0)) throw std::logic_error("nonpositive radicand in W coefficient");
  return std::sqrt(radicand);
}

double c_plus(const Weight& mu, const ModelParams& mp) {
  check_alcove(mu, mp);
  double c = 1.0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = i + 1; j <= mp.N; ++j) {
      const double hg = (j - i) * mp.g;
      const int m = root_pairing(i, j, mu);
      c *= trig_pochhammer(hg, m, mp.alpha) / trig_pochhammer(mp.g + hg, m, mp.alpha);
    }
  return c;
}

double c_minus(const Weight& mu, const ModelParams& mp) {
  check_alcove(mu, mp);
  double c = 1.0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = i + 1; j <= mp.N; ++j) {
      const double hg = (j - i) * mp.g;
      const int m = root_pairing(i, j, mu);
      c *= trig_pochhammer(1 - mp.g + hg, m, mp.alpha) / trig_pochhammer(1 + hg, m, mp.alpha);
    }
  return c;
}

double delta(const Weight& mu, const ModelParams& mp) { return 1.0 / (c_plus(mu, mp) * c_minus(mu, mp)); }

double normalization_product(const ModelParams& mp) {
  double v = std::ldexp(static_cast<double>(mp.N + 1), mp.N * (mp.M - 1));
  for (int n = 1; n <= mp.N; ++n) v *= trig_pochhammer(1 + n * mp.g, mp.M - 1, mp.alpha);
  return v;
}

double normalization_sum(const ModelParams& mp) {
  double s = 0.0;
  for (const auto& mu : enumerate_alcove(mp.N, mp.M)) s += delta(mu, mp);
  return s;
}

SumPair functional_relation_check(const Weight& mu, const Weight& nu, const ModelParams& mp) {
  if (!mu.dominant() || !(mu + nu).dominant()) throw InvalidArgument("mu and mu + nu must be dominant");
  const double lhs = delta_raw(mu + nu, mp) * v_raw(nu, mu, VForm::reflected, mp);
  const double rhs = delta_raw(mu, mp) * v_raw(nu, mu, VForm::at_point, mp);
  return {lhs, rhs};
}

Eigen::MatrixXd hamiltonian(int r, HSign sign, const ModelParams& mp, Exec exec) {
  if (r < 1 || r > mp.N) throw InvalidArgument("r out of range");
  if (sign == HSign::plus) return kernels::assemble_plus(r, mp, exec);
  if (sign == HSign::minus) {
    const AlcoveIndex idx(mp.N, mp.M);
    const auto orb = orbit_weights(r, mp.N);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(idx.size(), idx.size());
    for (int i = 0; i < idx.size(); ++i)
      for (const auto& nu : orb) {
        const int j = idx.index(idx[i] - nu);
        if (j >= 0) H(i, j) = coeff_W(nu, idx[i], -1, mp);
      }
    return H;
  }
  Eigen::MatrixXd S = 0.5 * (hamiltonian(r, HSign::plus, mp, exec) + hamiltonian(r, HSign::minus, mp, exec));
  Eigen::MatrixXd T = S.transpose();
  return 0.5 * (S + T);
}

Eigen::MatrixXd nonneg_hamiltonian(int r, const ModelParams& mp) {
  Eigen::MatrixXd H = -hamiltonian(r, HSign::sym, mp);
  H.diagonal().array() += ground_energy_orbit(r, mp);
  return H;
}

double energy(int r, const Weight& lambda, const ModelParams& mp) {
  double e = 0.0;
  for (const auto& nu : orbit(r, mp.N)) e += std::cos(mp.angle(pairing(nu, lambda, true)));
  return e;
}

cplx energy_plus(int r, const Weight& lambda, const ModelParams& mp) {
  cplx e = 0.0;
  for (const auto& nu : orbit(r, mp.N)) e += std::polar(1.0, mp.angle(pairing(nu, lambda, true)));
  return e;
}

std::vector<double> spectrum(int r, const ModelParams& mp) {
  std::vector<double> out;
  for (const auto& lam : enumerate_alcove(mp.N, mp.M)) out.push_back(energy(r, lam, mp));
  return out;
}

std::vector<cplx> spectrum_plus(int r, const ModelParams& mp) {
  std::vector<cplx> out;
  for (const auto& lam : enumerate_alcove(mp.N, mp.M)) out.push_back(energy_plus(r, lam, mp));
  return out;
}

double ground_energy_orbit(int r, const ModelParams& mp) { return energy(r, Weight::zero(mp.N), mp); }

double ground_energy_product(int r, const ModelParams& mp) {
  if (r < 1 || r > mp.N) throw InvalidArgument("r out of range");
  auto s = [&](int j) { return std::sin(0.5 * j * mp.alpha * mp.g); };
  double num = 1.0, den = 1.0;
  for (int j = 1; j <= mp.N + 1; ++j) num *= s(j);
  for (int j = 1; j <= r; ++j) den *= s(j);
  for (int j = 1; j <= mp.N + 1 - r; ++j) den *= s(j);
  return num / den;
}

double ground_energy_geometric(const ModelParams& mp) {
  const double h = 0.5 * mp.alpha * mp.g;
  return std::sin(h * (mp.N + 1)) / std::sin(h);
}

double vertex_energy(int r, const ModelParams& mp) {
  if (r < 0 || r > mp.N) throw InvalidArgument("vertex index out of range");
  return std::cos(2.0 * kPi * r / (mp.N + 1)) * ground_energy_geometric(mp);
}

Eigen::VectorXd psi0(const ModelParams& mp) {
  Eigen::VectorXd d = kernels::delta_values(mp, Exec::parallel);
  return (d / normalization_product(mp)).cwiseSqrt();
}

static std::vector<std::vector<double>> all_energies(const ModelParams& mp) {
  std::vector<std::vector<double>> e;
  for (int r = 1; r <= mp.N; ++r) e.push_back(spectrum(r, mp));
  return e;
}

WaveBasis wave_basis_coefficient_route(const ModelParams& mp, std::uint64_t seed, Exec exec) {
  const AlcoveIndex idx(mp.N, mp.M);
  MacdonaldFamily fam(MacParams::unit_circle(mp.N, mp.alpha, mp.g), seed);
  std::vector<SymPoly> polys;
  std::vector<std::vector<double>> points;
  for (const auto& lam : idx.points()) {
    polys.push_back(fam.poly(partition_of(lam)));
    points.push_back(lattice_point(lam, mp));
  }
  const Eigen::MatrixXcd p = kernels::evaluate(polys, points, mp.alpha, exec);
  const Eigen::VectorXd d = kernels::delta_values(mp, exec);
  const double n0 = normalization_product(mp);
  const int D = idx.size();
  WaveBasis wb;
  wb.route = Route::coefficient;
  wb.psi.resize(D, D);
  for (int l = 0; l < D; ++l) {
    const double cp = c_plus(idx[l], mp);
    for (int m = 0; m < D; ++m) wb.psi(l, m) = std::sqrt(d(l) * d(m) / n0) * cp * p(l, m);
  }
  wb.energies = all_energies(mp);
  return wb;
}

WaveBasis wave_basis_spectral_route(const ModelParams& mp, std::uint64_t seed) {
  const AlcoveIndex idx(mp.N, mp.M);
  const int D = idx.size();
  const int N = mp.N;
  std::vector<Eigen::MatrixXd> Hp, Hs;
  std::vector<Eigen::MatrixXcd> K;
  for (int r = 1; r <= N; ++r) {
    Hp.push_back(hamiltonian(r, HSign::plus, mp));
    Eigen::MatrixXd Hm = hamiltonian(r, HSign::minus, mp);
    Hs.push_back(hamiltonian(r, HSign::sym, mp));
    K.push_back(cplx(0.0, -0.5) * (Hp.back() - Hm).cast<cplx>());
  }
  std::vector<std::vector<cplx>> target;
  for (int r = 1; r <= N; ++r) target.push_back(spectrum_plus(r, mp));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(D, D);
    for (int r = 0; r < N; ++r) {
      A += u(rng) * Hs[r].cast<cplx>();
      A += u(rng) * K[r];
    }
    A = 0.5 * (A + A.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
    const auto& ev = es.eigenvalues();
    double gap = INFINITY;
    for (int i = 1; i < D; ++i) gap = std::min(gap, ev(i) - ev(i - 1));
    if (D > 1 && gap < 1e-7 * std::max(1.0, ev.cwiseAbs().maxCoeff())) continue;

    WaveBasis wb;
    wb.route = Route::spectral;
    wb.psi.resize(D, D);
    std::vector<int> used(D, 0);
    bool ok = true;
    for (int k = 0; k < D && ok; ++k) {
      Eigen::VectorXcd v = es.eigenvectors().col(k);
      std::vector<cplx> e(N);
      for (int r = 0; r < N; ++r) e[r] = v.dot(Hp[r].cast<cplx>() * v);
      int best = -1;
      double bd = INFINITY;
      for (int l = 0; l < D; ++l) {
        double dist = 0.0;
        for (int r = 0; r < N; ++r) dist += std::norm(e[r] - target[r][l]);
        if (dist < bd) {
          bd = dist;
          best = l;
        }
      }
      if (std::sqrt(bd) > 1e-6 || used[best]) {
        ok = false;
        break;
      }
      used[best] = 1;
      const cplx v0 = v(0);
      if (std::abs(v0) < 1e-12) throw std::logic_error("eigenvector vanishes at the minimal vertex");
      v *= std::conj(v0) / std::abs(v0);
      v(0) = std::abs(v(0));
      wb.psi.row(best) = v.transpose() / v.norm();
    }
    if (!ok) continue;
    wb.energies = all_energies(mp);
    return wb;
  }
  throw DegenerateSpectrum("could not separate the joint spectrum after 5 random combinations");
}

RealBasis real_basis(const WaveBasis& wb, const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  const int D = idx.size();
  RealBasis rb;
  rb.C = wb.psi.real();
  rb.S = wb.psi.imag();
  for (int l = 0; l < D; ++l)
    if (idx[l].l <= idx[idx.star(l)].l) rb.domain.push_back(l);
  std::vector<Eigen::VectorXd> rows;
  for (int l : rb.domain) {
    const double s = idx.star(l) == l ? 1.0 : std::sqrt(2.0);
    rows.push_back(s * rb.C.row(l).transpose());
    rb.basis_label.push_back(l);
    rb.basis_is_sine.push_back(false);
  }
  for (int l : rb.domain) {
    if (idx.star(l) == l) continue;
    rows.push_back(std::sqrt(2.0) * rb.S.row(l).transpose());
    rb.basis_label.push_back(l);
    rb.basis_is_sine.push_back(true);
  }
  rb.basis.resize(static_cast<int>(rows.size()), D);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) rb.basis.row(i) = rows[i].transpose();
  return rb;
}

OrthogonalityReport orthogonality_tables(const WaveBasis& wb, const ModelParams& mp) {
  const AlcoveIndex idx(mp.N, mp.M);
  const int D = idx.size();
  const double n0 = normalization_product(mp);
  Eigen::VectorXd d(D), cp(D), cm(D);
  for (int l = 0; l < D; ++l) {
    d(l) = delta(idx[l], mp);
    cp(l) = c_plus(idx[l], mp);
    cm(l) = c_minus(idx[l], mp);
  }
  Eigen::MatrixXcd P(D, D), p(D, D);
  for (int l = 0; l < D; ++l)
    for (int m = 0; m < D; ++m) {
      P(l, m) = wb.psi(l, m) * std::sqrt(n0 / (d(l) * d(m)));
      p(l, m) = P(l, m) / cp(l);
    }
  const Eigen::MatrixXcd Gp = p * d.asDiagonal() * p.adjoint();
  const Eigen::MatrixXcd GP = P * d.asDiagonal() * P.adjoint();
  OrthogonalityReport rep;
  for (int l = 0; l < D; ++l) {
    const double ep = n0 * cm(l) / cp(l), eP = n0 / d(l);
    rep.p_diag = std::max(rep.p_diag, std::abs(Gp(l, l) - ep) / ep);
    rep.P_diag = std::max(rep.P_diag, std::abs(GP(l, l) - eP) / eP);
    rep.scaling = std::max(rep.scaling, std::abs(ep - eP / (cp(l) * cp(l))) / ep);
    for (int m = 0; m < D; ++m) {
      if (m == l) continue;
      rep.p_offdiag = std::max(rep.p_offdiag, std::abs(Gp(l, m)) / n0);
      rep.P_offdiag = std::max(rep.P_offdiag, std::abs(GP(l, m)) / n0);
    }
  }
  return rep;
}

}  // namespace alcove
