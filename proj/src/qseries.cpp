#include "alcove/qseries.hpp"

#include "alcove/errors.hpp"

#include <cmath>
#include <numbers>

namespace alcove {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-14;

void check_convergent(const QParams& qp) {
  if (!(std::abs(qp.q) < 1.0)) throw InvalidArgument("infinite q-product needs |q| < 1");
}

void check_real_q(const QParams& qp) {
  if (std::abs(qp.q.imag()) != 0.0 || !(qp.q.real() > 0.0 && qp.q.real() < 1.0))
    throw InvalidArgument("summation requires 0 < q < 1");
}

void check_negative_g(cplx g) {
  if (!(g.real() < 0.0)) throw InvalidArgument("convergent sums require Re(g) < 0");
}

// e^{i alpha x}
cplx unit(double alpha, double x) { return std::polar(1.0, alpha * x); }

// (e^{i alpha x}; e^{i alpha})_m with the standard convention, m >= 0.
cplx unit_pochhammer(double alpha, double x, int m) {
  cplx r = 1.0;
  for (int k = 0; k < m; ++k) r *= 1.0 - unit(alpha, x + k);
  return r;
}

// Ratio of finite Pochhammers (a; q)_m / (b; q)_m, one factor pair at a time.
cplx poch_ratio(cplx a, cplx b, cplx q, int m) {
  cplx r = 1.0, qk = 1.0;
  for (int k = 0; k < m; ++k) {
    cplx den = 1.0 - b * qk;
    if (std::abs(den) < kSingular) throw SingularValue("vanishing Pochhammer denominator");
    r *= (1.0 - a * qk) / den;
    qk *= q;
  }
  return r;
}

}  // namespace

double SumPair::residual() const { return abs_diff() / std::max(1.0, std::abs(rhs)); }

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

double trig_pochhammer(double z, int m, double alpha) {
  if (m < 0) throw InvalidArgument("trig Pochhammer length must be nonnegative");
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= std::sin(0.5 * alpha * (z + k));
  return r;
}

double trig_pochhammer(const GradedScalar& z, int m, double g, double alpha) {
  return trig_pochhammer(z.evaluate(g), m, alpha);
}

cplx q_pochhammer(cplx a, const QParams& qp, int m) {
  if (m >= 0) {
    cplx r = 1.0, qk = 1.0;
    for (int k = 0; k < m; ++k) {
      r *= 1.0 - a * qk;
      qk *= qp.q;
    }
    return r;
  }
  if (std::abs(qp.q) == 0.0) throw SingularValue("negative-length Pochhammer needs q != 0");
  cplx den = 1.0, qinv = 1.0 / qp.q, qk = qinv;
  for (int k = 1; k <= -m; ++k) {
    cplx f = 1.0 - a * qk;
    if (std::abs(f) < kSingular) throw SingularValue("vanishing factor in negative-length Pochhammer");
    den *= f;
    qk *= qinv;
  }
  return 1.0 / den;
}

ProductValue q_pochhammer_inf(cplx a, const QParams& qp) {
  check_convergent(qp);
  const double aq = std::abs(qp.q);
  const double scale = std::max(1.0, std::abs(a));
  ProductValue out{1.0, 0, 0.0};
  cplx qk = 1.0;
  double qk_abs = 1.0;
  for (int k = 0; k <= qp.truncation_K; ++k) {
    double tail = scale * qk_abs / (1.0 - aq);
    if (tail < qp.tolerance) {
      out.terms = k;
      out.tail_bound = tail;
      return out;
    }
    out.value *= 1.0 - a * qk;
    qk *= qp.q;
    qk_abs *= aq;
  }
  throw InvalidArgument("infinite product truncation bound not reached within K factors");
}

cplx q_pochhammer_inf_ratio(cplx a, cplx b, const QParams& qp) {
  check_convergent(qp);
  const double aq = std::abs(qp.q);
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  cplx r = 1.0, qk = 1.0;
  double qk_abs = 1.0;
  for (int k = 0; k <= qp.truncation_K; ++k) {
    if (scale * qk_abs / (1.0 - aq) < qp.tolerance) return r;
    cplx den = 1.0 - b * qk;
    if (std::abs(den) < kSingular) throw SingularValue("vanishing infinite-product denominator");
    r *= (1.0 - a * qk) / den;
    qk *= qp.q;
    qk_abs *= aq;
  }
  throw InvalidArgument("infinite product truncation bound not reached within K factors");
}

ProductValue theta(cplx zeta, const QParams& qp) {
  if (zeta == cplx(0.0)) throw InvalidArgument("theta needs zeta != 0");
  auto p1 = q_pochhammer_inf(qp.q, qp);
  auto p2 = q_pochhammer_inf(zeta, qp);
  auto p3 = q_pochhammer_inf(qp.q / zeta, qp);
  return {p1.value * p2.value * p3.value, std::max({p1.terms, p2.terms, p3.terms}),
          p1.tail_bound + p2.tail_bound + p3.tail_bound};
}

cplx qpow(double q, cplx w) { return std::exp(w * std::log(q)); }

cplx aim_gamma(int N, cplx g, const QParams& qp) {
  const double q = qp.q.real();
  cplx gamma = static_cast<double>(N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      const double h = j - i;
      const double delta = (h == 1) ? 1.0 : 0.0;
      gamma *= q_pochhammer_inf_ratio(qpow(q, 1.0 - g - h * g), qpow(q, 1.0 - h * g), qp);
      gamma *= q_pochhammer_inf_ratio(qpow(q, delta + g - h * g), qpow(q, -h * g), qp);
    }
  return gamma;
}

cplx aim_gamma_compact(int N, cplx g, const QParams& qp) {
  const double q = qp.q.real();
  cplx gamma = static_cast<double>(N + 1);
  for (int n = 1; n <= N; ++n) {
    gamma *= q_pochhammer_inf_ratio(qp.q, qpow(q, 1.0 - g), qp);
    gamma *= q_pochhammer_inf_ratio(qpow(q, 1.0 - (n + 1.0) * g), qpow(q, -1.0 * n * g), qp);
  }
  return gamma;
}

SumPair aim_sum(int N, cplx g, const QParams& qp, const std::vector<cplx>& z, int radius) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  if (static_cast<int>(z.size()) != N + 1) throw InvalidArgument("z must have N+1 components");
  if (radius < 0) throw InvalidArgument("radius must be nonnegative");
  check_real_q(qp);
  check_negative_g(g);
  const double q = qp.q.real();

  // <rho, z> and <a, z>
  cplx rho_z = 0.0;
  for (int k = 0; k <= N; ++k) rho_z += g * (0.5 * (N - 2 * k)) * z[k];
  std::vector<std::pair<int, int>> roots;
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) roots.emplace_back(i, j);
  std::vector<cplx> az;
  for (auto [i, j] : roots) {
    az.push_back(z[i] - z[j]);
    // genericity: g + <a, z> must avoid the integer lattice (q real)
    cplx w = g + az.back();
    if (std::abs(w.imag()) < kSingular && std::abs(w.real() - std::round(w.real())) < kSingular)
      throw SingularValue("z violates the genericity condition");
  }

  cplx lhs = 0.0;
  std::vector<int> l(N, -radius);
  for (;;) {
    Weight mu{l};
    bool inside = true;
    std::vector<int> amu;
    int two_rho_mu_over_g = 0;
    for (auto [i, j] : roots) {
      int k = root_pairing(i, j, mu);
      if (std::abs(k) > radius) inside = false;
      amu.push_back(k);
      two_rho_mu_over_g += k;
    }
    if (inside) {
      cplx term = qpow(q, -2.0 * rho_z - g * static_cast<double>(two_rho_mu_over_g));
      for (std::size_t a = 0; a < roots.size(); ++a) {
        cplx w = az[a] + static_cast<double>(amu[a]);
        term *= 1.0 - qpow(q, w);
        term *= q_pochhammer_inf_ratio(qpow(q, 1.0 - g + w), qpow(q, g + w), qp);
      }
      lhs += term;
    }
    int pos = 0;
    while (pos < N && l[pos] == radius) l[pos++] = -radius;
    if (pos == N) break;
    ++l[pos];
  }

  cplx big_theta = qpow(q, -2.0 * rho_z);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    cplx den = theta(qpow(q, g + az[a]), qp).value;
    if (std::abs(den) < kSingular) throw SingularValue("theta denominator vanishes");
    big_theta *= theta(qpow(q, az[a]), qp).value / den;
  }
  return {lhs, aim_gamma(N, g, qp) * big_theta};
}

SumPair truncated_aim(int N, cplx g, const QParams& qp, int radius) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  if (radius < 0) throw InvalidArgument("radius must be nonnegative");
  check_real_q(qp);
  check_negative_g(g);
  const double q = qp.q.real();
  cplx lhs = 1.0;  // mu = 0
  if (radius > 0) {
    for (const auto& mu : enumerate_alcove(N, radius)) {
      if (mu.height() == 0) continue;
      cplx term = 1.0;
      int two_rho_mu_over_g = 0;
      for (int i = 0; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
          const double h = j - i;
          const int k = root_pairing(i, j, mu);
          two_rho_mu_over_g += k;
          cplx den = 1.0 - qpow(q, h * g);
          if (std::abs(den) < kSingular) throw SingularValue("1 - q^{<a, rho>} vanishes");
          term *= (1.0 - qpow(q, h * g + static_cast<double>(k))) / den;
          term *= poch_ratio(qpow(q, g + h * g), qpow(q, 1.0 - g + h * g), qp.q, k);
        }
      term *= qpow(q, -g * static_cast<double>(two_rho_mu_over_g));
      lhs += term;
    }
  }
  cplx rhs = static_cast<double>(N + 1);
  for (int n = 1; n <= N; ++n)
    rhs *= q_pochhammer_inf_ratio(qpow(q, 1.0 + static_cast<double>(n) * g), qpow(q, -1.0 * n * g), qp);
  return {lhs, rhs};
}

SumPair terminating_aim(int N, int M, double g) {
  if (N < 1 || M < 1) throw InvalidArgument("need N >= 1 and M >= 1");
  if (!(g > 0.0)) throw InvalidArgument("terminating sum requires g > 0");
  const double alpha = 2.0 * kPi / ((N + 1) * g + M);
  auto s = [alpha](double x) { return std::sin(0.5 * alpha * x); };
  double sum = 0.0;
  for (const auto& mu : enumerate_alcove(N, M)) {
    double term = 1.0;
    for (int i = 0; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        const double hg = (j - i) * g;
        const int k = root_pairing(i, j, mu);
        double num = s(hg + k), den = s(hg);
        for (int m = 1; m <= k; ++m) {
          num *= s(hg + g + m - 1);
          den *= s(hg - g + m);
        }
        term *= num / den;
      }
    sum += term;
  }
  double prod = std::ldexp(1.0, N * (M - 1)) * (N + 1);
  for (int m = 1; m <= M - 1; ++m)
    for (int n = 1; n <= N; ++n) prod *= s(m + n * g);
  return {sum, prod};
}

SumPair terminating_aim_q(int N, int M, double g) {
  if (N < 1 || M < 1) throw InvalidArgument("need N >= 1 and M >= 1");
  if (!(g > 0.0)) throw InvalidArgument("terminating sum requires g > 0");
  const double alpha = 2.0 * kPi / ((N + 1) * g + M);
  cplx sum = 0.0;
  for (const auto& mu : enumerate_alcove(N, M)) {
    cplx term = 1.0;
    int two_rho_mu_over_g = 0;
    for (int i = 0; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        const double hg = (j - i) * g;
        const int k = root_pairing(i, j, mu);
        two_rho_mu_over_g += k;
        term *= (1.0 - unit(alpha, hg + k)) / (1.0 - unit(alpha, hg));
        term *= unit_pochhammer(alpha, g + hg, k) / unit_pochhammer(alpha, 1.0 - g + hg, k);
      }
    term *= unit(alpha, -g * two_rho_mu_over_g);
    sum += term;
  }
  cplx prod = static_cast<double>(N + 1);
  for (int n = 1; n <= N; ++n) prod *= unit_pochhammer(alpha, 1.0 + n * g, M - 1);
  return {sum, prod};
}

namespace {

// Shared summand of the rank-one sums: q^{-g m} (1 - q^{z+m}) / (1 - q^z) (q^{g+z}; q)_m / (q^{1-g+z}; q)_m
cplx rank_one_term(double q, cplx g, cplx z, int m) {
  cplx term = qpow(q, -g * static_cast<double>(m)) * (1.0 - qpow(q, z + static_cast<double>(m))) /
              (1.0 - qpow(q, z));
  const cplx a = qpow(q, g + z), b = qpow(q, 1.0 - g + z);
  if (m >= 0) return term * poch_ratio(a, b, q, m);
  // (a; q)_m / (b; q)_m = prod_{k=1}^{|m|} (1 - b q^{-k}) / (1 - a q^{-k}), paired to avoid overflow
  for (int k = 1; k <= -m; ++k) {
    const double qk = std::pow(q, -k);
    term *= (1.0 - b * qk) / (1.0 - a * qk);
  }
  return term;
}

SumPair a5(const RankOneParams& p) {
  QParams qp{p.q};
  check_real_q(qp);
  check_negative_g(p.g);
  if (std::abs(1.0 - qpow(p.q, p.z)) < kSingular) throw SingularValue("z on the excluded lattice");
  cplx lhs = 0.0;
  for (int m = -p.terms; m <= p.terms; ++m) lhs += rank_one_term(p.q, p.g, p.z, m);
  // N = 1 case of gamma * Theta(z)
  const double q = p.q;
  cplx rhs = 2.0;
  rhs *= q_pochhammer_inf_ratio(qpow(q, 1.0 + p.z), qpow(q, 1.0 - p.g + p.z), qp);
  rhs *= q_pochhammer_inf_ratio(qpow(q, 1.0 - p.z), qpow(q, 1.0 - p.g - p.z), qp);
  rhs *= q_pochhammer_inf_ratio(qpow(q, 1.0 - 2.0 * p.g), qpow(q, 1.0 - p.g), qp);
  rhs *= q_pochhammer_inf_ratio(qp.q, qpow(q, -p.g), qp);
  return {lhs, rhs};
}

SumPair a6(const RankOneParams& p) {
  QParams qp{p.q};
  check_real_q(qp);
  check_negative_g(p.g);
  cplx lhs = 0.0;
  for (int m = 0; m < p.terms; ++m) lhs += rank_one_term(p.q, p.g, p.g, m);
  cplx rhs = 2.0 * q_pochhammer_inf_ratio(qpow(p.q, 1.0 + p.g), qpow(p.q, -p.g), qp);
  return {lhs, rhs};
}

SumPair a7(const RankOneParams& p) {
  const double g = p.g.real();
  if (p.g.imag() != 0.0 || !(g > 0.0)) throw InvalidArgument("A7 requires real g > 0");
  if (p.M < 1) throw InvalidArgument("A7 requires M >= 1");
  const double alpha = kPi / (g + 0.5 * p.M);
  cplx lhs = 0.0;
  for (int m = 0; m <= p.M; ++m) {
    cplx term = unit(alpha, -g * m) * (1.0 - unit(alpha, g + m)) / (1.0 - unit(alpha, g));
    term *= unit_pochhammer(alpha, 2.0 * g, m) / unit_pochhammer(alpha, 1.0, m);
    lhs += term;
  }
  return {lhs, 2.0 * unit_pochhammer(alpha, 1.0 + g, p.M - 1)};
}

}  // namespace

SumPair rank_one_sums(RankOneSum which, const RankOneParams& p) {
  switch (which) {
    case RankOneSum::A5: return a5(p);
    case RankOneSum::A6: return a6(p);
    case RankOneSum::A7: return a7(p);
  }
  throw InvalidArgument("unknown rank-one sum");
}

}  // namespace alcove
