#pragma once

#include "alcove/qseries.hpp"
#include "alcove/root_system.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace alcove {

// N+1 nonincreasing nonnegative parts.
using Partition = std::vector<int>;

int weight(const Partition& n);
bool is_partition(const Partition& n);

struct MacParams {
  int N = 1;
  cplx q;
  cplx t;
  // Unit-circle mode stores the angles so powers are exact exponentials.
  std::optional<double> alpha;
  std::optional<double> g;

  static MacParams generic(int N, cplx q, cplx t);
  static MacParams unit_circle(int N, double alpha, double g);

  cplx qpow(double e) const;
  cplx tpow(double e) const;
  MacParams inverted() const;  // (q, t) -> (1/q, 1/t)
};

struct SymPoly {
  int N = 1;
  std::map<Partition, cplx> coeffs;

  int degree() const;
  cplx operator()(const std::vector<cplx>& z) const;
  // Value at z_j = exp(i alpha x_j).
  cplx eval_trig(const std::vector<double>& x, double alpha) const;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

// Sum over distinct rearrangements of n.
cplx monomial_eval(const Partition& n, const std::vector<cplx>& z);
cplx monomial_eval_trig(const Partition& n, const std::vector<double>& x, double alpha);

// m precedes n: equal weight and partial sums of m bounded by those of n.
bool partition_dominance(const Partition& m, const Partition& n);

// All partitions of `total` into N+1 parts, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int total, int N);

cplx eigenvalue_E(const Partition& n, int r, const MacParams& mp);

// (D_r f)(z) straight from the q-difference operator.
cplx apply_D_pointwise(int r, const SymPoly& f, const std::vector<cplx>& z, const MacParams& mp);

// Caches monomial-basis matrices of D_r per degree, and the polynomials built from them.
class MacdonaldFamily {
 public:
  explicit MacdonaldFamily(MacParams mp, std::uint64_t seed = kDefaultSeed);

  const MacParams& params() const { return mp_; }
  const std::vector<Partition>& basis(int degree);
  // Column b holds the monomial coefficients of D_r m_{basis[b]}.
  const Eigen::MatrixXcd& D_matrix(int r, int degree);
  double node_condition(int degree);
  SymPoly apply_D(int r, const SymPoly& f);
  const SymPoly& poly(const Partition& n);

 private:
  struct Degree {
    std::vector<Partition> basis;
    std::map<Partition, int> index;
    std::vector<std::vector<cplx>> nodes;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd;
    double condition = 0.0;
    std::map<int, Eigen::MatrixXcd> D;
  };
  Degree& degree_data(int degree);
  SymPoly build(const Partition& n);

  MacParams mp_;
  std::uint64_t seed_;
  std::map<int, std::unique_ptr<Degree>> degrees_;
  std::map<Partition, SymPoly> polys_;
};

// One-shot wrappers around a fresh family.
SymPoly apply_D(int r, const SymPoly& f, const MacParams& mp, std::uint64_t seed = kDefaultSeed);
SymPoly macdonald_poly(const Partition& n, const MacParams& mp, std::uint64_t seed = kDefaultSeed);

// tau = (t^N, ..., t, 1); tau q^n multiplies component j by q^{n_j}.
std::vector<cplx> tau_q(const Partition& n, const MacParams& mp, int sign = 1);

// p_n(tau) directly and from the product formula.
SumPair evaluation_formula(MacdonaldFamily& fam, const Partition& n);
// P_m(tau q^n) against P_n(tau q^m).
SumPair symmetry_check(MacdonaldFamily& fam, const Partition& n, const Partition& m);
// p_{n*}(z) against (z_1...z_{N+1})^{n_1} p_n(1/z).
SumPair conjugation_check(MacdonaldFamily& fam, const Partition& n, const std::vector<cplx>& z);
// p_{n+(1,...,1)}(z) against (z_1...z_{N+1}) p_n(z).
SumPair homogeneity_check(MacdonaldFamily& fam, const Partition& n, const std::vector<cplx>& z);
SumPair macdonald_identity(int r, const MacParams& mp, const std::vector<cplx>& z);

Weight project_AN(const Partition& n);
Partition partition_of(const Weight& lambda);  // last part zero
Partition contragredient_partition(const Partition& n);
bool congruent_mod_diagonal(const Partition& a, const Partition& b);

enum class Bilinear { plain, contragredient, normalized };

// Bilinear sums at q = exp(i alpha), t = q^g; `fam` must carry those parameters.
SumPair bilinear_identity(MacdonaldFamily& fam, const Partition& n, const Partition& k, int M,
                          Bilinear variant = Bilinear::plain);

// Weights Delta(m), N(n), N_0 in the q-form used by the bilinear identities.
cplx bilinear_delta(const Partition& m, const MacParams& mp);
cplx bilinear_norm(const Partition& n, const MacParams& mp);
cplx bilinear_N0(int M, const MacParams& mp);

}  // namespace alcove
