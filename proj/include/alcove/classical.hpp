#pragma once

#include "alcove/lattice_model.hpp"

#include <optional>
#include <random>
#include <vector>

namespace alcove {

// Ambient coordinates; x and p live on the hyperplane of zero sum.
struct PhasePoint {
  std::vector<double> x;
  std::vector<double> p;
};

struct ProjectivePoint {
  std::vector<cplx> z;  // z[0], ..., z[N]
};

// H with all p_j and x_j - x_k.
double hamiltonian_H(const PhasePoint& pt, const ModelParams& mp);
// H_r over r-subsets, r = 1..N+1.
double hamiltonian_Hr(int r, const PhasePoint& pt, const ModelParams& mp);
// Reduced form over the orbit of omega_r, r = 1..N.
double reduced_hamiltonian(int r, const PhasePoint& pt, const ModelParams& mp);
// Dual Hamiltonian sum_nu cos(alpha <nu, p_check>).
double dual_hamiltonian(int r, const std::vector<double>& p_check, const ModelParams& mp);

// V_nu(x) V_nu(-x) against prod_{<a,nu> = 1} (1 - sin^2(alpha g / 2) / sin^2(alpha/2 <a, x>)).
SumPair v_product_identity(const Weight& nu, const std::vector<double>& x, const ModelParams& mp);

// <a_j, x> for j = 1..N, and <omega_j, p>.
std::vector<double> simple_pairings(const std::vector<double>& x);
std::vector<double> fundamental_pairings(const std::vector<double>& p);

bool membership(const std::vector<double>& x, const ModelParams& mp, bool closed);

ProjectivePoint embed(const PhasePoint& pt, const ModelParams& mp);

struct Inversion {
  std::vector<double> x;
  std::optional<std::vector<double>> p;  // empty when some z_j vanishes
};

// require_angles turns a missing angle into OutsidePatch.
Inversion invert(const ProjectivePoint& zp, const ModelParams& mp, bool require_angles = false);

struct VertexEnergy {
  int r = 0;  // 0 is rho, r >= 1 is rho + M omega_r
  std::vector<double> point;
  double closed_form = 0.0;  // cos(2 pi r / (N+1)) E(rho) with E(rho) from the sine quotient
  double direct = 0.0;       // sum_j cos(alpha x_j)
  double dual = 0.0;         // orbit form at p_check = vertex
};

std::vector<VertexEnergy> vertex_energies(const ModelParams& mp);

// Uniform-ish interior point: positive barycentric weights on the N+1 vertices.
std::vector<double> random_interior_point(const ModelParams& mp, std::mt19937_64& rng);
// Momenta with <omega_j, p> uniform in (-pi, pi).
std::vector<double> random_momenta(int N, std::mt19937_64& rng);

}  // namespace alcove
