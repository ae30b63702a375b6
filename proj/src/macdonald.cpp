#include "alcove/macdonald.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace alcove {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxCondition = 1e8;
constexpr int kNodeRetries = 5;
constexpr double kCollision = 1e-8;

std::string to_string(const Partition& n) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < n.size(); ++j) os << (j ? "," : "") << n[j];
  os << ')';
  return os.str();
}

cplx int_pow(cplx base, long e) {
  if (e < 0) return 1.0 / int_pow(base, -e);
  cplx r = 1.0;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool is_integer(double e) { return std::floor(e) == e && std::abs(e) < 1e15; }

// prod_{k<m} (1 - t^{ct} q^{cq + k})
cplx poch_tq(const MacParams& mp, double ct, double cq, int m) {
  cplx r = 1.0;
  for (int k = 0; k < m; ++k) r *= 1.0 - mp.tpow(ct) * mp.qpow(cq + k);
  return r;
}

// Subsets of {0..n-1} with r elements as membership masks.
std::vector<std::vector<int>> subset_masks(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do out.push_back(mask);
  while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

cplx cross_product(const std::vector<int>& mask, const std::vector<cplx>& z, cplx t) {
  cplx p = 1.0;
  const int n = static_cast<int>(z.size());
  for (int j = 0; j < n; ++j) {
    if (!mask[j]) continue;
    for (int k = 0; k < n; ++k) {
      if (mask[k]) continue;
      cplx den = z[j] - z[k];
      if (std::abs(den) < 1e-14) throw SingularValue("coincident coordinates in q-difference operator");
      p *= (t * z[j] - z[k]) / den;
    }
  }
  return p;
}

void check_z(const std::vector<cplx>& z, int N) {
  if (static_cast<int>(z.size()) != N + 1) throw InvalidArgument("point must have N+1 coordinates");
}

}  // namespace

int weight(const Partition& n) { return std::accumulate(n.begin(), n.end(), 0); }

bool is_partition(const Partition& n) {
  if (n.empty()) return false;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 0) return false;
    if (j && n[j] > n[j - 1]) return false;
  }
  return true;
}

MacParams MacParams::generic(int N, cplx q, cplx t) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  return MacParams{N, q, t, std::nullopt, std::nullopt};
}

MacParams MacParams::unit_circle(int N, double alpha, double g) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  return MacParams{N, std::polar(1.0, alpha), std::polar(1.0, alpha * g), alpha, g};
}

cplx MacParams::qpow(double e) const {
  if (alpha) return std::polar(1.0, *alpha * e);
  if (is_integer(e)) return int_pow(q, static_cast<long>(e));
  return std::pow(q, e);
}

cplx MacParams::tpow(double e) const {
  if (alpha) return std::polar(1.0, *alpha * *g * e);
  if (is_integer(e)) return int_pow(t, static_cast<long>(e));
  return std::pow(t, e);
}

MacParams MacParams::inverted() const {
  if (alpha) return unit_circle(N, -*alpha, *g);
  return generic(N, 1.0 / q, 1.0 / t);
}

int SymPoly::degree() const {
  if (coeffs.empty()) return 0;
  return weight(coeffs.begin()->first);
}

cplx SymPoly::operator()(const std::vector<cplx>& z) const {
  cplx s = 0.0;
  for (const auto& [m, c] : coeffs) s += c * monomial_eval(m, z);
  return s;
}

cplx SymPoly::eval_trig(const std::vector<double>& x, double alpha) const {
  cplx s = 0.0;
  for (const auto& [m, c] : coeffs) s += c * monomial_eval_trig(m, x, alpha);
  return s;
}

cplx monomial_eval(const Partition& n, const std::vector<cplx>& z) {
  if (z.size() != n.size()) throw InvalidArgument("monomial arity mismatch");
  std::vector<int> e(n.rbegin(), n.rend());
  std::sort(e.begin(), e.end());
  cplx s = 0.0;
  do {
    cplx term = 1.0;
    for (std::size_t j = 0; j < e.size(); ++j) term *= int_pow(z[j], e[j]);
    s += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return s;
}

cplx monomial_eval_trig(const Partition& n, const std::vector<double>& x, double alpha) {
  if (x.size() != n.size()) throw InvalidArgument("monomial arity mismatch");
  std::vector<int> e(n.begin(), n.end());
  std::sort(e.begin(), e.end());
  cplx s = 0.0;
  do {
    double phase = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j) phase += e[j] * x[j];
    s += std::polar(1.0, alpha * phase);
  } while (std::next_permutation(e.begin(), e.end()));
  return s;
}

bool partition_dominance(const Partition& m, const Partition& n) {
  if (m.size() != n.size()) throw InvalidArgument("partition length mismatch");
  if (weight(m) != weight(n)) return false;
  int sm = 0, sn = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    sm += m[k];
    sn += n[k];
    if (sm > sn) return false;
  }
  return true;
}

static void partitions_rec(int remaining, int parts_left, int cap, Partition& cur, std::vector<Partition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int x = std::min(cap, remaining); x >= 0; --x) {
    if (static_cast<long>(x) * parts_left < remaining) break;
    cur.push_back(x);
    partitions_rec(remaining - x, parts_left - 1, x, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int total, int N) {
  if (total < 0) throw InvalidArgument("negative partition weight");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(total, N + 1, total, cur, out);
  return out;
}

cplx eigenvalue_E(const Partition& n, int r, const MacParams& mp) {
  const int N = mp.N;
  if (static_cast<int>(n.size()) != N + 1) throw InvalidArgument("partition length must be N+1");
  if (r < 1 || r > N + 1) throw InvalidArgument("r out of range");
  cplx s = 0.0;
  for (const auto& mask : subset_masks(N + 1, r)) {
    double te = 0.0, qe = 0.0;
    for (int j = 0; j <= N; ++j)
      if (mask[j]) {
        te += N - j;  // t^{N+1-j} with 1-based j
        qe += n[j];
      }
    s += mp.tpow(te) * mp.qpow(qe);
  }
  return s;
}

cplx apply_D_pointwise(int r, const SymPoly& f, const std::vector<cplx>& z, const MacParams& mp) {
  const int N = mp.N;
  check_z(z, N);
  if (r < 1 || r > N + 1) throw InvalidArgument("r out of range");
  const cplx q = mp.qpow(1.0), t = mp.tpow(1.0);
  cplx s = 0.0;
  for (const auto& mask : subset_masks(N + 1, r)) {
    std::vector<cplx> shifted = z;
    for (int j = 0; j <= N; ++j)
      if (mask[j]) shifted[j] *= q;
    s += cross_product(mask, z, t) * f(shifted);
  }
  return mp.tpow(r * (r - 1) / 2.0) * s;
}

MacdonaldFamily::MacdonaldFamily(MacParams mp, std::uint64_t seed) : mp_(std::move(mp)), seed_(seed) {}

MacdonaldFamily::Degree& MacdonaldFamily::degree_data(int degree) {
  auto it = degrees_.find(degree);
  if (it != degrees_.end()) return *it->second;
  auto d = std::make_unique<Degree>();
  d->basis = partitions_of(degree, mp_.N);
  for (int b = 0; b < static_cast<int>(d->basis.size()); ++b) d->index[d->basis[b]] = b;
  const int P = static_cast<int>(d->basis.size());
  const int S = 2 * P + 2;
  std::mt19937_64 rng(seed_ ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(degree + 1)));
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int attempt = 0; attempt <= kNodeRetries; ++attempt) {
    d->nodes.clear();
    while (static_cast<int>(d->nodes.size()) < S) {
      std::vector<cplx> z(mp_.N + 1);
      for (auto& zj : z) zj = std::polar(1.0, phase(rng));
      bool spread = true;
      for (int j = 0; j <= mp_.N && spread; ++j)
        for (int k = j + 1; k <= mp_.N; ++k)
          if (std::abs(z[j] - z[k]) < 0.05) spread = false;
      if (spread) d->nodes.push_back(std::move(z));
    }
    Eigen::MatrixXcd A(S, P);
    for (int s = 0; s < S; ++s)
      for (int b = 0; b < P; ++b) A(s, b) = monomial_eval(d->basis[b], d->nodes[s]);
    d->svd.compute(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = d->svd.singularValues();
    d->condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    if (d->condition <= kMaxCondition) {
      auto& ref = *d;
      degrees_[degree] = std::move(d);
      return ref;
    }
  }
  throw DegenerateNodes("interpolation nodes ill-conditioned for degree " + std::to_string(degree));
}

const std::vector<Partition>& MacdonaldFamily::basis(int degree) { return degree_data(degree).basis; }

double MacdonaldFamily::node_condition(int degree) { return degree_data(degree).condition; }

const Eigen::MatrixXcd& MacdonaldFamily::D_matrix(int r, int degree) {
  if (r < 1 || r > mp_.N + 1) throw InvalidArgument("r out of range");
  Degree& d = degree_data(degree);
  auto it = d.D.find(r);
  if (it != d.D.end()) return it->second;
  const int P = static_cast<int>(d.basis.size());
  const int S = static_cast<int>(d.nodes.size());
  const cplx q = mp_.qpow(1.0), t = mp_.tpow(1.0);
  const cplx pre = mp_.tpow(r * (r - 1) / 2.0);
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(S, P);
  const auto masks = subset_masks(mp_.N + 1, r);
  for (int s = 0; s < S; ++s) {
    const auto& z = d.nodes[s];
    for (const auto& mask : masks) {
      cplx cp = pre * cross_product(mask, z, t);
      std::vector<cplx> shifted = z;
      for (int j = 0; j <= mp_.N; ++j)
        if (mask[j]) shifted[j] *= q;
      for (int b = 0; b < P; ++b) B(s, b) += cp * monomial_eval(d.basis[b], shifted);
    }
  }
  return d.D.emplace(r, d.svd.solve(B)).first->second;
}

SymPoly MacdonaldFamily::apply_D(int r, const SymPoly& f) {
  const int deg = f.degree();
  for (const auto& [m, c] : f.coeffs)
    if (weight(m) != deg) throw InvalidArgument("apply_D needs a homogeneous polynomial");
  Degree& d = degree_data(deg);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<int>(d.basis.size()));
  for (const auto& [m, c] : f.coeffs) v(d.index.at(m)) = c;
  Eigen::VectorXcd w = D_matrix(r, deg) * v;
  SymPoly out{mp_.N, {}};
  for (int b = 0; b < w.size(); ++b) out.coeffs[d.basis[b]] = w(b);
  return out;
}

const SymPoly& MacdonaldFamily::poly(const Partition& n) {
  auto it = polys_.find(n);
  if (it != polys_.end()) return it->second;
  return polys_.emplace(n, build(n)).first->second;
}

SymPoly MacdonaldFamily::build(const Partition& n) {
  if (!is_partition(n) || static_cast<int>(n.size()) != mp_.N + 1)
    throw InvalidArgument("label must be a partition with N+1 parts");
  const int deg = weight(n);
  Degree& d = degree_data(deg);
  const int P = static_cast<int>(d.basis.size());
  const int in = d.index.at(n);

  std::vector<int> lower;  // strictly dominated partitions, in processing order
  for (int b = in + 1; b < P; ++b)
    if (partition_dominance(d.basis[b], n)) lower.push_back(b);

  // Operator whose diagonal separates n from everything below it.
  const int R = std::max(1, mp_.N);
  std::vector<std::vector<cplx>> E(R + 1, std::vector<cplx>(P));
  for (int r = 1; r <= R; ++r)
    for (int b = 0; b < P; ++b) E[r][b] = eigenvalue_E(d.basis[b], r, mp_);

  auto separation = [&](const std::vector<double>& gamma, int& worst) {
    cplx en = 0.0;
    for (int r = 1; r <= R; ++r) en += gamma[r] * E[r][in];
    double scale = std::max(1.0, std::abs(en)), gap = INFINITY;
    for (int b : lower) {
      cplx eb = 0.0;
      for (int r = 1; r <= R; ++r) eb += gamma[r] * E[r][b];
      double g = std::abs(en - eb) / scale;
      if (g < gap) {
        gap = g;
        worst = b;
      }
    }
    return gap;
  };

  std::vector<double> gamma(R + 1, 0.0);
  gamma[1] = 1.0;
  int worst = -1;
  if (separation(gamma, worst) < kCollision) {
    std::mt19937_64 rng(seed_ + 7919);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    bool found = false;
    for (int attempt = 0; attempt < kNodeRetries && !found; ++attempt) {
      for (int r = 2; r <= R; ++r) gamma[r] = u(rng);
      found = separation(gamma, worst) >= kCollision;
    }
    if (!found)
      throw DegenerateSpectrum("eigenvalue collision between " + to_string(n) + " and " +
                               to_string(d.basis[worst]));
  }

  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(P, P);
  std::vector<cplx> Ev(P, 0.0);
  for (int r = 1; r <= R; ++r) {
    if (gamma[r] == 0.0) continue;
    X += gamma[r] * D_matrix(r, deg);
    for (int b = 0; b < P; ++b) Ev[b] += gamma[r] * E[r][b];
  }

  std::vector<cplx> c(P, 0.0);
  c[in] = 1.0;
  std::vector<int> active{in};
  for (int b : lower) {
    cplx acc = 0.0;
    for (int a : active)
      if (partition_dominance(d.basis[b], d.basis[a])) acc += c[a] * X(b, a);
    c[b] = acc / (Ev[in] - Ev[b]);
    active.push_back(b);
  }
  SymPoly p{mp_.N, {}};
  for (int a : active) p.coeffs[d.basis[a]] = c[a];
  return p;
}

SymPoly apply_D(int r, const SymPoly& f, const MacParams& mp, std::uint64_t seed) {
  MacdonaldFamily fam(mp, seed);
  return fam.apply_D(r, f);
}

SymPoly macdonald_poly(const Partition& n, const MacParams& mp, std::uint64_t seed) {
  MacdonaldFamily fam(mp, seed);
  return fam.poly(n);
}

std::vector<cplx> tau_q(const Partition& n, const MacParams& mp, int sign) {
  const int N = mp.N;
  if (static_cast<int>(n.size()) != N + 1) throw InvalidArgument("partition length must be N+1");
  std::vector<cplx> z(N + 1);
  for (int j = 0; j <= N; ++j) z[j] = mp.tpow(sign * (N - j)) * mp.qpow(sign * n[j]);
  return z;
}

SumPair evaluation_formula(MacdonaldFamily& fam, const Partition& n) {
  const MacParams& mp = fam.params();
  const int N = mp.N;
  cplx direct = fam.poly(n)(tau_q(Partition(N + 1, 0), mp));
  double te = 0.0;
  for (int j = 0; j <= N; ++j) te += j * n[j];
  cplx formula = mp.tpow(te);
  for (int j = 0; j <= N; ++j)
    for (int k = j + 1; k <= N; ++k) {
      const int len = n[j] - n[k];
      cplx den = poch_tq(mp, k - j, 0, len);
      if (std::abs(den) < 1e-14) throw SingularValue("evaluation formula denominator vanishes");
      formula *= poch_tq(mp, 1 + k - j, 0, len) / den;
    }
  return {direct, formula};
}

SumPair symmetry_check(MacdonaldFamily& fam, const Partition& n, const Partition& m) {
  const MacParams& mp = fam.params();
  const auto tau = tau_q(Partition(mp.N + 1, 0), mp);
  const SymPoly& pn = fam.poly(n);
  const SymPoly& pm = fam.poly(m);
  cplx pn_tau = pn(tau), pm_tau = pm(tau);
  if (std::abs(pn_tau) < 1e-14 || std::abs(pm_tau) < 1e-14) throw SingularValue("p(tau) vanishes");
  return {pm(tau_q(n, mp)) / pm_tau, pn(tau_q(m, mp)) / pn_tau};
}

SumPair conjugation_check(MacdonaldFamily& fam, const Partition& n, const std::vector<cplx>& z) {
  const MacParams& mp = fam.params();
  check_z(z, mp.N);
  std::vector<cplx> zinv(z.size());
  cplx prod = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] == cplx(0.0)) throw InvalidArgument("conjugation check needs nonzero coordinates");
    zinv[j] = 1.0 / z[j];
    prod *= z[j];
  }
  cplx lhs = fam.poly(contragredient_partition(n))(z);
  cplx rhs = int_pow(prod, n[0]) * fam.poly(n)(zinv);
  return {lhs, rhs};
}

SumPair homogeneity_check(MacdonaldFamily& fam, const Partition& n, const std::vector<cplx>& z) {
  const MacParams& mp = fam.params();
  check_z(z, mp.N);
  Partition shifted = n;
  for (int& x : shifted) ++x;
  cplx prod = 1.0;
  for (const auto& zj : z) prod *= zj;
  return {fam.poly(shifted)(z), prod * fam.poly(n)(z)};
}

SumPair macdonald_identity(int r, const MacParams& mp, const std::vector<cplx>& z) {
  const int N = mp.N;
  check_z(z, N);
  if (r < 1 || r > N + 1) throw InvalidArgument("r out of range");
  const cplx t = mp.tpow(1.0);
  cplx lhs = 0.0, rhs = 0.0;
  for (const auto& mask : subset_masks(N + 1, r)) {
    lhs += cross_product(mask, z, t);
    double te = 0.0;
    for (int j = 0; j <= N; ++j)
      if (mask[j]) te += N - j;
    rhs += mp.tpow(te);
  }
  return {mp.tpow(r * (r - 1) / 2.0) * lhs, rhs};
}

Weight project_AN(const Partition& n) {
  if (n.size() < 2) throw InvalidArgument("partition needs at least two parts");
  Weight w = Weight::zero(static_cast<int>(n.size()) - 1);
  for (int j = 0; j < w.rank(); ++j) w.l[j] = n[j] - n[j + 1];
  return w;
}

Partition partition_of(const Weight& lambda) {
  const int N = lambda.rank();
  Partition n(N + 1, 0);
  for (int j = N - 1; j >= 0; --j) n[j] = n[j + 1] + lambda.l[j];
  return n;
}

Partition contragredient_partition(const Partition& n) {
  const int L = static_cast<int>(n.size());
  Partition s(L);
  for (int j = 0; j < L; ++j) s[j] = n[0] - n[L - 1 - j];
  return s;
}

bool congruent_mod_diagonal(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 1; j < a.size(); ++j)
    if (a[j] - b[j] != a[0] - b[0]) return false;
  return true;
}

cplx bilinear_delta(const Partition& m, const MacParams& mp) {
  const int N = mp.N;
  double te = 0.0;
  for (int j = 0; j <= N; ++j) te -= (N - 2 * j) * m[j];  // (N + 2 - 2j) with 1-based j
  cplx d = mp.tpow(te);
  for (int j = 0; j <= N; ++j)
    for (int k = j + 1; k <= N; ++k) {
      const int h = k - j, len = m[j] - m[k];
      d *= (1.0 - mp.tpow(h) * mp.qpow(len)) / (1.0 - mp.tpow(h));
      d *= poch_tq(mp, 1 + h, 0, len) / poch_tq(mp, h - 1, 1, len);
    }
  return d;
}

cplx bilinear_norm(const Partition& n, const MacParams& mp) {
  const int N = mp.N;
  cplx v = 1.0;
  for (int j = 0; j <= N; ++j)
    for (int k = j + 1; k <= N; ++k) {
      const int h = k - j, len = n[j] - n[k];
      v *= poch_tq(mp, 1 + h, 0, len) * poch_tq(mp, h - 1, 1, len);
      v /= poch_tq(mp, h, 0, len) * poch_tq(mp, h, 1, len);
    }
  return v;
}

cplx bilinear_N0(int M, const MacParams& mp) {
  cplx v = static_cast<double>(mp.N + 1);
  for (int j = 1; j <= mp.N; ++j) v *= poch_tq(mp, j, 1, M - 1);
  return v;
}

SumPair bilinear_identity(MacdonaldFamily& fam, const Partition& n, const Partition& k, int M, Bilinear variant) {
  const MacParams& mp = fam.params();
  const int N = mp.N;
  if (!mp.alpha) throw InvalidArgument("bilinear identities need unit-circle parameters");
  if (M < 1) throw InvalidArgument("M must be at least 1");
  for (const auto* p : {&n, &k}) {
    if (!is_partition(*p) || static_cast<int>(p->size()) != N + 1)
      throw InvalidArgument("labels must be partitions with N+1 parts");
    if ((*p)[0] - (*p)[N] > M) throw InvalidArgument("label outside the alcove");
  }
  const double wn = weight(n), wk = weight(k);
  const SymPoly& pn = fam.poly(n);
  const SymPoly& pk = fam.poly(k);
  const auto tau = tau_q(Partition(N + 1, 0), mp);
  cplx pn_tau = 1.0, pk_tau = 1.0;
  if (variant == Bilinear::normalized) {
    pn_tau = pn(tau);
    pk_tau = pk(tau);
  }

  cplx sum = 0.0;
  for (const auto& lam : enumerate_alcove(N, M)) {
    const Partition m = partition_of(lam);
    const double wm = weight(m);
    cplx term = bilinear_delta(m, mp);
    if (variant == Bilinear::plain) {
      term *= mp.qpow(-wm * (wn - wk) / (N + 1)) * pn(tau_q(m, mp)) * pk(tau_q(m, mp, -1));
    } else {
      term *= mp.qpow(-wm * (wn + wk) / (N + 1)) * pn(tau_q(m, mp)) * pk(tau_q(m, mp));
      if (variant == Bilinear::normalized) term /= pn_tau * pk_tau;
    }
    sum += term;
  }

  cplx expected = 0.0;
  const cplx N0 = bilinear_N0(M, mp);
  switch (variant) {
    case Bilinear::plain:
      if (congruent_mod_diagonal(k, n)) expected = mp.tpow(N * (wn - wk) / 2.0) * N0 * bilinear_norm(n, mp);
      break;
    case Bilinear::contragredient:
      if (congruent_mod_diagonal(k, contragredient_partition(n)))
        expected = mp.tpow(N * (wn + wk) / 2.0) * N0 * bilinear_norm(n, mp);
      break;
    case Bilinear::normalized:
      if (congruent_mod_diagonal(k, contragredient_partition(n))) expected = N0 / bilinear_delta(n, mp);
      break;
  }
  return {sum, expected};
}

}  // namespace alcove
