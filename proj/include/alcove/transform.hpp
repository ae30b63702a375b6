#pragma once

#include "alcove/lattice_model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace alcove {

struct TransformMatrix {
  ModelParams mp;
  Eigen::MatrixXcd F;  // F(lambda, mu) = Psi_lambda(rho + mu)
  std::vector<int> star;
  RealBasis real;
};

TransformMatrix build_transform(const WaveBasis& wb, const ModelParams& mp);

// f_hat(lambda) = (f, Psi_lambda) and back.
Eigen::VectorXcd forward(const Eigen::VectorXcd& f, const TransformMatrix& tm);
Eigen::VectorXcd inverse(const Eigen::VectorXcd& f_hat, const TransformMatrix& tm);

enum class Parity { cosine, sine };

struct RealCoefficients {
  Parity which = Parity::cosine;
  std::vector<int> labels;  // alcove indices from the * fundamental domain
  Eigen::VectorXcd values;
};

// f must be *-symmetric for the cosine transform and *-antisymmetric for the sine transform.
RealCoefficients cosine_sine(const Eigen::VectorXcd& f, Parity which, const TransformMatrix& tm, double tol = 1e-10);
Eigen::VectorXcd cosine_sine_inverse(const RealCoefficients& c, const TransformMatrix& tm);

// Max-norm residuals of the structural identities.
struct TransformReport {
  double symmetry = 0.0;         // F - F^t
  double unitarity = 0.0;        // F F^* - I
  double involution = 0.0;       // conj(F) F - I
  double conjugation = 0.0;      // conj(F) against F with rows relabelled by *
  double diagonalization = 0.0;  // F H_r - E_r F, worst r
  double bispectral = 0.0;       // (H_r^+ + H_r^-) acting on the spectral index against 2 E_r F
};

TransformReport transform_checks(const TransformMatrix& tm);

}  // namespace alcove
