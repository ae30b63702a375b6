#pragma once

#include "alcove/exec.hpp"
#include "alcove/macdonald.hpp"
#include "alcove/qseries.hpp"
#include "alcove/root_system.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace alcove {

struct ModelParams {
  int N = 1;
  int M = 1;
  double g = 1.0;
  double alpha = 0.0;
  bool exceptional = false;  // g in {1/N, ..., 1/2, 1}

  double period() const { return (N + 1) * g + M; }  // 2 pi / alpha
  double angle(const GradedScalar& s) const { return alpha * s.evaluate(g); }
};

ModelParams new_model(int N, int M, double g);

// Ambient coordinates of rho + mu.
std::vector<double> lattice_point(const Weight& mu, const ModelParams& mp);

enum class VForm { at_point, reflected };
enum class HSign { plus, minus, sym };

// V_nu(rho + mu), or V_nu(-rho - mu - nu) for the reflected form.
double coeff_V(const Weight& nu, const Weight& mu, VForm form, const ModelParams& mp);
double coeff_V(const AmbientVector& nu, const Weight& mu, VForm form, const ModelParams& mp);

// V_nu at an arbitrary point of E given in ambient coordinates.
double coeff_V_at(const Weight& nu, const std::vector<double>& x, const ModelParams& mp);

// sign = +1 or -1.
double coeff_W(const Weight& nu, const Weight& mu, int sign, const ModelParams& mp);

double c_plus(const Weight& mu, const ModelParams& mp);
double c_minus(const Weight& mu, const ModelParams& mp);
double delta(const Weight& mu, const ModelParams& mp);

// Closed product for N_0 and the direct sum of Delta over the alcove.
double normalization_product(const ModelParams& mp);
double normalization_sum(const ModelParams& mp);

// Delta(mu + nu) V_nu(-rho - mu - nu) against Delta(mu) V_nu(rho + mu).
SumPair functional_relation_check(const Weight& mu, const Weight& nu, const ModelParams& mp);

// Rows and columns in alcove order.
Eigen::MatrixXd hamiltonian(int r, HSign sign, const ModelParams& mp, Exec exec = Exec::parallel);
Eigen::MatrixXd nonneg_hamiltonian(int r, const ModelParams& mp);

double energy(int r, const Weight& lambda, const ModelParams& mp);
cplx energy_plus(int r, const Weight& lambda, const ModelParams& mp);
std::vector<double> spectrum(int r, const ModelParams& mp);
std::vector<cplx> spectrum_plus(int r, const ModelParams& mp);

// E_r(rho) three ways: orbit sum, the quotient of sine products, and (r = 1) the geometric form.
double ground_energy_orbit(int r, const ModelParams& mp);
double ground_energy_product(int r, const ModelParams& mp);
double ground_energy_geometric(const ModelParams& mp);
// cos(2 pi r / (N+1)) E_1(rho)
double vertex_energy(int r, const ModelParams& mp);

Eigen::VectorXd psi0(const ModelParams& mp);

enum class Route { coefficient, spectral };

struct WaveBasis {
  Eigen::MatrixXcd psi;                        // psi(lambda, mu)
  std::vector<std::vector<double>> energies;  // energies[r-1][lambda]
  Route route = Route::coefficient;
};

WaveBasis wave_basis_coefficient_route(const ModelParams& mp, std::uint64_t seed = kDefaultSeed,
                                       Exec exec = Exec::parallel);
WaveBasis wave_basis_spectral_route(const ModelParams& mp, std::uint64_t seed = kDefaultSeed);

struct RealBasis {
  Eigen::MatrixXd C;        // Re psi, all labels
  Eigen::MatrixXd S;        // Im psi, all labels
  std::vector<int> domain;  // lambda <=lex lambda*
  // Orthonormal rows built from the domain: C rows (scaled by sqrt 2 off the diagonal of *), then S rows.
  Eigen::MatrixXd basis;
  std::vector<int> basis_label;
  std::vector<bool> basis_is_sine;
};

RealBasis real_basis(const WaveBasis& wb, const ModelParams& mp);

struct OrthogonalityReport {
  double p_offdiag = 0.0;  // max |off-diagonal| / N_0, monic normalization
  double p_diag = 0.0;     // max relative deviation from N_0 C_-/C_+
  double P_offdiag = 0.0;
  double P_diag = 0.0;     // max relative deviation from N_0 / Delta
  double scaling = 0.0;    // max relative gap between N_0 C_-/C_+ and N_0 / (Delta C_+^2)
};

OrthogonalityReport orthogonality_tables(const WaveBasis& wb, const ModelParams& mp);

}  // namespace alcove
