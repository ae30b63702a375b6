#include "alcove/classical.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace alcove {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-12;

void check_dim(const std::vector<double>& v, const ModelParams& mp) {
  if (static_cast<int>(v.size()) != mp.N + 1) throw InvalidArgument("vector must have N+1 coordinates");
}

void check_hyperplane(const std::vector<double>& v) {
  double s = 0.0, a = 0.0;
  for (double x : v) {
    s += x;
    a += std::abs(x);
  }
  if (std::abs(s) > 1e-9 * (1.0 + a)) throw InvalidArgument("point is off the center-of-mass hyperplane");
}

double radical(double ax, const ModelParams& mp) {
  const double s = std::sin(0.5 * mp.alpha * mp.g), d = std::sin(0.5 * mp.alpha * ax);
  const double rad = 1.0 - s * s / (d * d);
  if (!(rad > 0.0)) throw OutsideConfigurationSpace("radicand is not positive");
  return std::sqrt(rad);
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do out.push_back(mask);
  while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// rho for r = 0, rho + M omega_r otherwise.
std::vector<double> vertex(int r, const ModelParams& mp) {
  Weight w = Weight::zero(mp.N);
  if (r > 0) w.l[r - 1] = mp.M;
  return lattice_point(w, mp);
}

}  // namespace

double hamiltonian_H(const PhasePoint& pt, const ModelParams& mp) { return hamiltonian_Hr(1, pt, mp); }

double hamiltonian_Hr(int r, const PhasePoint& pt, const ModelParams& mp) {
  check_dim(pt.x, mp);
  check_dim(pt.p, mp);
  if (r < 1 || r > mp.N + 1) throw InvalidArgument("r out of range");
  double h = 0.0;
  for (const auto& J : subsets(mp.N + 1, r)) {
    double ps = 0.0, prod = 1.0;
    for (int j = 0; j <= mp.N; ++j) {
      if (!J[j]) continue;
      ps += pt.p[j];
      for (int k = 0; k <= mp.N; ++k)
        if (!J[k]) prod *= radical(pt.x[j] - pt.x[k], mp);
    }
    h += std::cos(ps) * prod;
  }
  return h;
}

double reduced_hamiltonian(int r, const PhasePoint& pt, const ModelParams& mp) {
  check_dim(pt.x, mp);
  check_dim(pt.p, mp);
  if (r < 1 || r > mp.N) throw InvalidArgument("r out of range");
  double h = 0.0;
  for (const auto& nu : orbit(r, mp.N)) {
    const auto v = nu.numeric();
    double np = 0.0, prod = 1.0;
    for (int i = 0; i <= mp.N; ++i) {
      np += v[i] * pt.p[i];
      for (int j = 0; j <= mp.N; ++j)
        if (i != j && std::abs(v[i] - v[j] - 1.0) < 1e-9) prod *= radical(pt.x[i] - pt.x[j], mp);
    }
    h += std::cos(np) * prod;
  }
  return h;
}

double dual_hamiltonian(int r, const std::vector<double>& p_check, const ModelParams& mp) {
  check_dim(p_check, mp);
  double h = 0.0;
  for (const auto& nu : orbit(r, mp.N)) {
    const auto v = nu.numeric();
    h += std::cos(mp.alpha * std::inner_product(v.begin(), v.end(), p_check.begin(), 0.0));
  }
  return h;
}

SumPair v_product_identity(const Weight& nu, const std::vector<double>& x, const ModelParams& mp) {
  check_dim(x, mp);
  std::vector<double> neg(x.size());
  std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
  const double lhs = coeff_V_at(nu, x, mp) * coeff_V_at(nu, neg, mp);
  const auto v = ambient(nu).numeric();
  const double s = std::sin(0.5 * mp.alpha * mp.g);
  double rhs = 1.0;
  for (int i = 0; i <= mp.N; ++i)
    for (int j = 0; j <= mp.N; ++j)
      if (i != j && std::abs(v[i] - v[j] - 1.0) < 1e-9) {
        const double d = std::sin(0.5 * mp.alpha * (x[i] - x[j]));
        rhs *= 1.0 - s * s / (d * d);
      }
  return {lhs, rhs};
}

std::vector<double> simple_pairings(const std::vector<double>& x) {
  std::vector<double> a;
  for (std::size_t j = 0; j + 1 < x.size(); ++j) a.push_back(x[j] - x[j + 1]);
  return a;
}

std::vector<double> fundamental_pairings(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  const double mean = std::accumulate(p.begin(), p.end(), 0.0) / n;
  std::vector<double> w;
  double partial = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    partial += p[j] - mean;
    w.push_back(partial);
  }
  return w;
}

bool membership(const std::vector<double>& x, const ModelParams& mp, bool closed) {
  check_dim(x, mp);
  check_hyperplane(x);
  const double top = mp.period() - mp.g;
  const auto a = simple_pairings(x);
  const double amax = x.front() - x.back();
  if (closed) {
    for (double v : a)
      if (v < mp.g - kSlack) return false;
    return amax <= top + kSlack;
  }
  for (double v : a)
    if (v <= mp.g + kSlack) return false;
  return amax < top - kSlack;
}

ProjectivePoint embed(const PhasePoint& pt, const ModelParams& mp) {
  check_dim(pt.p, mp);
  if (!membership(pt.x, mp, false)) throw OutsideConfigurationSpace("embedding needs an interior point");
  const auto a = simple_pairings(pt.x);
  const auto w = fundamental_pairings(pt.p);
  const double denom = mp.period() - mp.g - (pt.x.front() - pt.x.back());
  ProjectivePoint zp;
  zp.z.push_back(1.0);
  for (int j = 0; j < mp.N; ++j) zp.z.push_back(std::polar(std::sqrt((a[j] - mp.g) / denom), w[j]));
  return zp;
}

Inversion invert(const ProjectivePoint& zp, const ModelParams& mp, bool require_angles) {
  if (static_cast<int>(zp.z.size()) != mp.N + 1) throw InvalidArgument("projective point must have N+1 coordinates");
  double total = 0.0;
  for (const auto& z : zp.z) total += std::norm(z);
  if (!(total > 0.0)) throw InvalidArgument("projective point has all coordinates zero");
  const double M = mp.period() - (mp.N + 1) * mp.g;
  // x = sum_j c_j omega_j with c_j = <a_j, x>.
  Inversion out;
  out.x.assign(mp.N + 1, 0.0);
  for (int j = 1; j <= mp.N; ++j) {
    const double c = M * std::norm(zp.z[j]) / total + mp.g;
    for (int k = 0; k <= mp.N; ++k) out.x[k] += c * ((k < j ? 1.0 : 0.0) - static_cast<double>(j) / (mp.N + 1));
  }
  const bool patch = std::all_of(zp.z.begin(), zp.z.end(), [](cplx z) { return std::abs(z) > 0.0; });
  if (!patch) {
    if (require_angles) throw OutsidePatch("angle coordinates undefined where some z_j vanishes");
    return out;
  }
  // p = sum_j theta_j a_j
  std::vector<double> theta(mp.N + 2, 0.0);
  for (int j = 1; j <= mp.N; ++j)
    theta[j] = std::arg(zp.z[j] * std::abs(zp.z[0]) / (zp.z[0] * std::abs(zp.z[j])));
  std::vector<double> p(mp.N + 1);
  for (int k = 0; k <= mp.N; ++k) p[k] = theta[k + 1] - theta[k];
  out.p = p;
  return out;
}

std::vector<VertexEnergy> vertex_energies(const ModelParams& mp) {
  std::vector<VertexEnergy> out;
  for (int r = 0; r <= mp.N; ++r) {
    VertexEnergy v;
    v.r = r;
    v.point = vertex(r, mp);
    v.closed_form = vertex_energy(r, mp);
    for (double x : v.point) v.direct += std::cos(mp.alpha * x);
    v.dual = dual_hamiltonian(1, v.point, mp);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<double> random_interior_point(const ModelParams& mp, std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(mp.N + 1);
  double s = 0.0;
  for (auto& v : w) s += (v = ex(rng) + 1e-3);
  std::vector<double> x(mp.N + 1, 0.0);
  for (int r = 0; r <= mp.N; ++r) {
    const auto v = vertex(r, mp);
    for (int k = 0; k <= mp.N; ++k) x[k] += w[r] / s * v[k];
  }
  return x;
}

std::vector<double> random_momenta(int N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-kPi + 1e-6, kPi - 1e-6);
  std::vector<double> theta(N + 2, 0.0);
  for (int j = 1; j <= N; ++j) theta[j] = u(rng);
  std::vector<double> p(N + 1);
  for (int k = 0; k <= N; ++k) p[k] = theta[k + 1] - theta[k];
  return p;
}

}  // namespace alcove
