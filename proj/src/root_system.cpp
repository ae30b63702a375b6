#include "alcove/root_system.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace alcove {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool Weight::dominant() const {
  return std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; });
}

int Weight::height() const { return std::accumulate(l.begin(), l.end(), 0); }

static void check_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("weight rank mismatch");
}

Weight Weight::operator+(const Weight& o) const {
  check_same_rank(*this, o);
  Weight r = *this;
  for (int j = 0; j < rank(); ++j) r.l[j] += o.l[j];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  check_same_rank(*this, o);
  Weight r = *this;
  for (int j = 0; j < rank(); ++j) r.l[j] -= o.l[j];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& x : r.l) x = -x;
  return r;
}

Weight Weight::fundamental(int N, int j) {
  if (j < 1 || j > N) throw InvalidArgument("fundamental weight index out of range");
  Weight w = zero(N);
  w.l[j - 1] = 1;
  return w;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '[';
  for (int j = 0; j < w.rank(); ++j) os << (j ? "," : "") << w.l[j];
  return os << ']';
}

Rational AmbientVector::dot(const AmbientVector& o) const {
  if (dim() != o.dim()) throw InvalidArgument("ambient dimension mismatch");
  Rational s = 0;
  for (int k = 0; k < dim(); ++k) s += c[k] * o.c[k];
  return s;
}

AmbientVector AmbientVector::operator+(const AmbientVector& o) const {
  if (dim() != o.dim()) throw InvalidArgument("ambient dimension mismatch");
  AmbientVector r = *this;
  for (int k = 0; k < dim(); ++k) r.c[k] += o.c[k];
  return r;
}

AmbientVector AmbientVector::operator-(const AmbientVector& o) const { return *this + (-o); }

AmbientVector AmbientVector::operator-() const {
  AmbientVector r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

AmbientVector AmbientVector::scaled(const Rational& s) const {
  AmbientVector r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::vector<double> AmbientVector::numeric() const {
  std::vector<double> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(to_double(x));
  return out;
}

static AmbientVector unit_difference(int N, int i, int j) {
  AmbientVector v{std::vector<Rational>(N + 1, Rational(0))};
  v.c[i] = 1;
  v.c[j] = -1;
  return v;
}

RootData build_root_data(int N) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  RootData rd;
  rd.N = N;
  for (int j = 0; j < N; ++j) rd.simple_roots.push_back(unit_difference(N, j, j + 1));
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      rd.positive_roots.push_back(unit_difference(N, i, j));
      rd.positive_root_index.emplace_back(i, j);
    }
  rd.a_max = unit_difference(N, 0, N);
  for (int j = 1; j <= N; ++j) rd.fundamental_weights.push_back(ambient(Weight::fundamental(N, j)));
  rd.rho_coeff.c.resize(N + 1);
  for (int k = 0; k <= N; ++k) rd.rho_coeff.c[k] = Rational(N - 2 * k, 2);
  return rd;
}

AmbientVector ambient(const Weight& w) {
  const int N = w.rank();
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  std::int64_t weighted = 0;
  for (int j = 1; j <= N; ++j) weighted += static_cast<std::int64_t>(j) * w.l[j - 1];
  AmbientVector v{std::vector<Rational>(N + 1)};
  std::int64_t tail = 0;
  for (int k = N; k >= 0; --k) {
    if (k < N) tail += w.l[k];
    v.c[k] = Rational(tail) - Rational(weighted, N + 1);
  }
  return v;
}

Weight weight_of(const AmbientVector& v) {
  const int N = v.dim() - 1;
  if (N < 1) throw InvalidArgument("ambient vector too short");
  Rational sum = 0;
  for (const auto& x : v.c) sum += x;
  if (sum != Rational(0)) throw InvalidArgument("ambient vector not in the hyperplane");
  Weight w = Weight::zero(N);
  for (int j = 0; j < N; ++j) {
    Rational d = v.c[j] - v.c[j + 1];
    if (d.denominator() != 1) throw InvalidArgument("ambient vector not in the weight lattice");
    w.l[j] = static_cast<int>(d.numerator());
  }
  return w;
}

static std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do {
    std::vector<int> J;
    for (int k = 0; k < n; ++k)
      if (mask[k]) J.push_back(k);
    out.push_back(std::move(J));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<AmbientVector> orbit(int r, int N) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  if (r < 1 || r > N) throw InvalidArgument("orbit index out of range");
  std::vector<AmbientVector> out;
  for (const auto& J : subsets(N + 1, r)) {
    AmbientVector v{std::vector<Rational>(N + 1, Rational(-r, N + 1))};
    for (int k : J) v.c[k] += 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Weight> orbit_weights(int r, int N) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  if (r < 1 || r > N) throw InvalidArgument("orbit index out of range");
  std::vector<Weight> out;
  for (const auto& J : subsets(N + 1, r)) {
    std::vector<int> in(N + 1, 0);
    for (int k : J) in[k] = 1;
    Weight w = Weight::zero(N);
    for (int k = 0; k < N; ++k) w.l[k] = in[k] - in[k + 1];
    out.push_back(std::move(w));
  }
  return out;
}

GradedScalar pairing(const AmbientVector& v, const Weight& w, bool include_rho) {
  const int N = w.rank();
  if (v.dim() != N + 1) throw InvalidArgument("pairing rank mismatch");
  GradedScalar s;
  Rational partial = 0;
  for (int j = 0; j < N; ++j) {
    partial += v.c[j];
    s.b += partial * w.l[j];
  }
  if (include_rho)
    for (int k = 0; k <= N; ++k) s.a += v.c[k] * Rational(N - 2 * k, 2);
  return s;
}

int root_pairing(int i, int j, const Weight& mu) {
  int s = 0;
  for (int k = i; k < j; ++k) s += mu.l[k];
  return s;
}

bool dominance_leq(const Weight& mu, const Weight& lambda) {
  check_same_rank(mu, lambda);
  AmbientVector d = ambient(lambda - mu);
  Rational partial = 0;
  for (int k = 0; k < lambda.rank(); ++k) {
    partial += d.c[k];
    if (partial.denominator() != 1 || partial < Rational(0)) return false;
  }
  return true;
}

static void compositions(int N, int total, std::vector<int>& cur, int pos, std::vector<Weight>& out) {
  if (pos == N - 1) {
    cur[pos] = total;
    out.push_back(Weight{cur});
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur[pos] = x;
    compositions(N, total - x, cur, pos + 1, out);
  }
}

std::vector<Weight> enumerate_alcove(int N, int M) {
  if (N < 1) throw InvalidArgument("rank must be at least 1");
  if (M < 1) throw InvalidArgument("M must be at least 1");
  std::vector<Weight> out;
  std::vector<int> cur(N, 0);
  for (int s = 0; s <= M; ++s) compositions(N, s, cur, 0, out);  // ascending lex within each degree
  return out;
}

std::vector<Weight> dominant_predecessors(const Weight& lambda) {
  if (!lambda.dominant()) throw InvalidArgument("weight is not dominant");
  const int N = lambda.rank();
  const int h = lambda.height();
  if (h == 0) return {Weight::zero(N)};
  std::vector<Weight> out;
  for (const auto& mu : enumerate_alcove(N, h))
    if (dominance_leq(mu, lambda)) out.push_back(mu);
  return out;
}

Weight contragredient(const Weight& lambda) {
  Weight r = lambda;
  std::reverse(r.l.begin(), r.l.end());
  return r;
}

std::int64_t alcove_dimension(int N, int M) {
  if (N < 1 || M < 0) throw InvalidArgument("invalid (N, M)");
  std::int64_t c = 1;
  for (int k = 1; k <= N; ++k) c = c * (M + k) / k;
  return c;
}

AlcoveIndex::AlcoveIndex(int N, int M) : N_(N), M_(M), points_(enumerate_alcove(N, M)) {
  for (int i = 0; i < size(); ++i) lookup_[points_[i].l] = i;
  star_.resize(points_.size());
  for (int i = 0; i < size(); ++i) star_[i] = index(contragredient(points_[i]));
}

bool AlcoveIndex::contains(const Weight& w) const {
  return w.rank() == N_ && w.dominant() && w.height() <= M_;
}

int AlcoveIndex::index(const Weight& w) const {
  if (!contains(w)) return -1;
  return lookup_.at(w.l);
}

}  // namespace alcove
