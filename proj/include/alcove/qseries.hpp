#pragma once

#include "alcove/root_system.hpp"

#include <complex>
#include <vector>

namespace alcove {

using cplx = std::complex<double>;

struct QParams {
  cplx q;
  int truncation_K = 100000;  // hard cap on factors in an infinite product
  double tolerance = 1e-17;   // tail bound target
};

struct ProductValue {
  cplx value;
  int terms = 0;
  double tail_bound = 0.0;
};

// A computed pair of expressions that an identity claims are equal.
struct SumPair {
  cplx lhs;
  cplx rhs;
  double abs_diff() const { return std::abs(lhs - rhs); }
  // |lhs - rhs| / max(1, |rhs|)
  double residual() const;
};

// |a - b| <= tol * max(1, |b|)
bool close(cplx a, cplx b, double tol);

// prod_{k=0}^{m-1} sin(alpha/2 (z + k)); 1 for m = 0.
double trig_pochhammer(double z, int m, double alpha);
double trig_pochhammer(const GradedScalar& z, int m, double g, double alpha);

// (a; q)_m in the standard convention; m < 0 gives 1 / prod_{k=1}^{|m|} (1 - a q^{-k}).
cplx q_pochhammer(cplx a, const QParams& qp, int m);

// (a; q)_inf truncated once the tail bound drops below qp.tolerance.
ProductValue q_pochhammer_inf(cplx a, const QParams& qp);

// (a; q)_inf / (b; q)_inf evaluated factor by factor, safe when both products are huge.
cplx q_pochhammer_inf_ratio(cplx a, cplx b, const QParams& qp);

// (q, zeta, q / zeta; q)_inf
ProductValue theta(cplx zeta, const QParams& qp);

// q^w for real 0 < q.
cplx qpow(double q, cplx w);

// Bilateral sum over the weight lattice (max_a |<a, mu>| <= radius) against gamma * Theta(z).
SumPair aim_sum(int N, cplx g, const QParams& qp, const std::vector<cplx>& z, int radius);

// The constant gamma as a product over positive roots, and its compact product over n.
cplx aim_gamma(int N, cplx g, const QParams& qp);
cplx aim_gamma_compact(int N, cplx g, const QParams& qp);

// Sum over dominant mu with <a_max, mu> <= radius against (N+1) prod_n (q^{1+ng}; q)_inf / (q^{-ng}; q)_inf.
SumPair truncated_aim(int N, cplx g, const QParams& qp, int radius);

// Alcove sum in trigonometric form against 2^{N(M-1)} (N+1) prod sin(alpha/2 (m + n g)).
SumPair terminating_aim(int N, int M, double g);

// The same terminating sum in q-form with q = exp(2 pi i / ((N+1) g + M)).
SumPair terminating_aim_q(int N, int M, double g);

enum class RankOneSum { A5, A6, A7 };

struct RankOneParams {
  double q = 0.2;   // A5, A6
  cplx g = -0.3;    // A5, A6 need Re(g) < 0; A7 needs real g > 0
  cplx z = 0.17;    // A5
  int terms = 60;   // A5: symmetric radius, A6: number of terms
  int M = 1;        // A7
};

SumPair rank_one_sums(RankOneSum which, const RankOneParams& p);

}  // namespace alcove
