#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace alcove {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);

// Coordinates in the fundamental-weight basis: lambda = sum_j l[j] * omega_{j+1}.
struct Weight {
  std::vector<int> l;

  int rank() const { return static_cast<int>(l.size()); }
  bool dominant() const;
  int height() const;  // <a_max, lambda> = sum of coordinates

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const = default;
  auto operator<=>(const Weight& o) const = default;

  static Weight zero(int N) { return Weight{std::vector<int>(N, 0)}; }
  static Weight fundamental(int N, int j);  // omega_j, 1-based
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// A point of the hyperplane sum c_j = 0 with exact coordinates.
struct AmbientVector {
  std::vector<Rational> c;

  int dim() const { return static_cast<int>(c.size()); }
  Rational dot(const AmbientVector& o) const;
  AmbientVector operator+(const AmbientVector& o) const;
  AmbientVector operator-(const AmbientVector& o) const;
  AmbientVector operator-() const;
  AmbientVector scaled(const Rational& s) const;
  bool operator==(const AmbientVector& o) const = default;
  std::vector<double> numeric() const;
};

// Exact value a*g + b; g stays symbolic until evaluate().
struct GradedScalar {
  Rational a{0};
  Rational b{0};

  double evaluate(double g) const { return to_double(a) * g + to_double(b); }
  GradedScalar operator+(const GradedScalar& o) const { return {a + o.a, b + o.b}; }
  GradedScalar operator-(const GradedScalar& o) const { return {a - o.a, b - o.b}; }
  GradedScalar operator-() const { return {-a, -b}; }
  GradedScalar operator+(const Rational& r) const { return {a, b + r}; }
  GradedScalar operator-(const Rational& r) const { return {a, b - r}; }
  GradedScalar scaled(const Rational& s) const { return {a * s, b * s}; }
  bool operator==(const GradedScalar& o) const = default;
};

struct RootData {
  int N = 0;
  std::vector<AmbientVector> simple_roots;
  std::vector<AmbientVector> positive_roots;  // e_i - e_j, i < j, ordered by (i, j)
  std::vector<std::pair<int, int>> positive_root_index;  // (i, j), 0-based
  AmbientVector a_max;
  std::vector<AmbientVector> fundamental_weights;
  AmbientVector rho_coeff;  // rho / g
};

RootData build_root_data(int N);

AmbientVector ambient(const Weight& w);

// Inverse of ambient() for vectors in the weight lattice.
Weight weight_of(const AmbientVector& v);

// Orbit of omega_r under coordinate permutations, one vector per r-subset J.
std::vector<AmbientVector> orbit(int r, int N);

// Same orbit as fundamental-weight coordinates, in the same order as orbit(r, N).
std::vector<Weight> orbit_weights(int r, int N);

// <v, w> or <v, rho + w>.
GradedScalar pairing(const AmbientVector& v, const Weight& w, bool include_rho);

// <e_i - e_j, mu> for a positive root given by 0-based (i, j).
int root_pairing(int i, int j, const Weight& mu);

bool dominance_leq(const Weight& mu, const Weight& lambda);

std::vector<Weight> enumerate_alcove(int N, int M);

std::vector<Weight> dominant_predecessors(const Weight& lambda);

Weight contragredient(const Weight& lambda);

// (N+M)! / (N! M!)
std::int64_t alcove_dimension(int N, int M);

// Index lookup for the alcove ordering shared by every matrix in the library.
class AlcoveIndex {
 public:
  AlcoveIndex(int N, int M);
  int N() const { return N_; }
  int M() const { return M_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Weight& operator[](int i) const { return points_[i]; }
  const std::vector<Weight>& points() const { return points_; }
  bool contains(const Weight& w) const;
  int index(const Weight& w) const;  // -1 when outside
  int star(int i) const { return star_[i]; }

 private:
  int N_, M_;
  std::vector<Weight> points_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<int> star_;
};

}  // namespace alcove
