#include "alcove/classical.hpp"
#include "alcove/lattice_model.hpp"
#include "alcove/macdonald.hpp"
#include "alcove/rank_one.hpp"
#include "alcove/transform.hpp"
#include "alcove/verify.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>

using namespace alcove;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class D>
double max_abs(const Eigen::MatrixBase<D>& a) {
  return a.size() ? static_cast<double>(a.cwiseAbs().maxCoeff()) : 0.0;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// worst / tol tracking for one criterion
struct Gauge {
  bool ok = true;
  std::string first_failure;
  void check(const std::string& what, double value, double tol) {
    if (std::isfinite(value) && value <= tol) return;
    if (ok) first_failure = what + " = " + std::to_string(value) + " > " + std::to_string(tol);
    ok = false;
  }
  void require(const std::string& what, bool cond) {
    if (cond) return;
    if (ok) first_failure = what;
    ok = false;
  }
};

int failures = 0;

void criterion(int k, const std::string& name, double time_limit, const std::function<void(Gauge&)>& body) {
  Gauge g;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(g);
  } catch (const std::exception& e) {
    g.require(std::string("exception: ") + e.what(), false);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs > time_limit)
    g.require("took " + std::to_string(secs) + " s, limit " + std::to_string(time_limit) + " s", false);
  failures += g.ok ? 0 : 1;
  std::printf("%s [%d] %s (%.2f s)%s%s\n", g.ok ? "PASS" : "FAIL", k, name.c_str(), secs, g.ok ? "" : ": ",
              g.first_failure.c_str());
  std::fflush(stdout);
}

std::string tag(int N, int M, double g) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(N=%d, M=%d, g=%.4g)", N, M, g);
  return buf;
}

void suite_rows(Gauge& gauge, const std::vector<CheckRow>& rows, const std::string& where) {
  for (const auto& r : rows)
    gauge.check(where + " " + r.suite + ": " + r.identity + (r.error.empty() ? "" : " [" + r.error + "]"), r.residual,
                r.tolerance);
}

}  // namespace

int main() {
  criterion(1, "normalization sum equals the closed product, relative 1e-10", 1.0, [](Gauge& G) {
    for (int N = 1; N <= 3; ++N)
      for (int M = 1; M <= 5; ++M)
        for (double g : {0.3, 0.6, 1.0, 1.4}) {
          const auto mp = new_model(N, M, g);
          const double p = normalization_product(mp);
          G.check("normalization " + tag(N, M, g), std::abs(normalization_sum(mp) - p) / p, 1e-10);
        }
  });

  criterion(2, "lattice count equals (N+M)!/(N!M!), 21 at (2,5)", 0.0, [](Gauge& G) {
    G.require("dim(2,5) == 21", AlcoveIndex(2, 5).size() == 21 && alcove_dimension(2, 5) == 21);
    for (int N = 1; N <= 4; ++N)
      for (int M = 1; M <= 8; ++M) {
        std::int64_t binom = 1;
        for (int k = 1; k <= N; ++k) binom = binom * (M + k) / k;
        G.require("dimension " + tag(N, M, 0), AlcoveIndex(N, M).size() == binom);
      }
  });

  criterion(3, "Hamiltonians Hermitian (exact), commuting 1e-10, H+ adjoint of H-", 10.0, [](Gauge& G) {
    for (int N = 1; N <= 3; ++N)
      for (int M = 1; M <= 4; ++M)
        for (double g : {0.3, 1.0 / N, 1.0, 1.4}) {
          const auto mp = new_model(N, M, g);
          std::vector<Eigen::MatrixXd> hs;
          for (int r = 1; r <= N; ++r) {
            const auto h = hamiltonian(r, HSign::sym, mp);
            const auto hp = hamiltonian(r, HSign::plus, mp);
            const auto hm = hamiltonian(r, HSign::minus, mp);
            G.require("Hermitian " + tag(N, M, g), (h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
            G.check("adjoint " + tag(N, M, g), max_abs(hp.transpose() - hm), 1e-12);
            hs.push_back(h);
          }
          for (int r = 0; r < N; ++r)
            for (int s = r + 1; s < N; ++s)
              G.check("commutator " + tag(N, M, g), max_abs(hs[r] * hs[s] - hs[s] * hs[r]),
                      1e-10 * std::max(1.0, hs[r].norm() * hs[s].norm()));
        }
  });

  criterion(4, "eigenbasis: routes agree 1e-8, orthonormal 1e-9, symmetric 1e-9, spectrum and extremes", 0.0,
            [](Gauge& G) {
              for (auto [N, M, g] : {std::tuple{1, 4, 0.4}, std::tuple{2, 3, 0.6}, std::tuple{2, 4, 1.4},
                                     std::tuple{3, 3, 0.3}, std::tuple{3, 4, 0.7}, std::tuple{2, 5, 0.7}}) {
                const auto mp = new_model(N, M, g);
                const auto t = tag(N, M, g);
                const auto c = wave_basis_coefficient_route(mp);
                const auto s = wave_basis_spectral_route(mp);
                const int D = static_cast<int>(c.psi.rows());
                const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(D, D);
                G.check("routes " + t, max_abs(c.psi - s.psi), 1e-8);
                G.check("orthonormal coefficient route " + t, max_abs(c.psi * c.psi.adjoint() - I), 1e-9);
                G.check("orthonormal spectral route " + t, max_abs(s.psi * s.psi.adjoint() - I), 1e-9);
                G.check("psi symmetric " + t, max_abs(c.psi - c.psi.transpose()), 1e-9);
                for (int r = 1; r <= N; ++r) {
                  const Eigen::MatrixXcd h = hamiltonian(r, HSign::sym, mp).cast<cplx>();
                  const auto E = spectrum(r, mp);
                  for (int l = 0; l < D; ++l) {
                    const Eigen::VectorXcd v = c.psi.row(l).transpose();
                    G.check("eigen-equation " + t, max_abs(h * v - E[l] * v), 1e-9);
                    G.check("spectral-route energy " + t, std::abs(s.energies[r - 1][l] - E[l]), 1e-10);
                  }
                  G.check("E_r(rho) orbit vs product " + t,
                          std::abs(spectrum(r, mp)[0] - ground_energy_product(r, mp)), 1e-10);
                }
                const double E0 = ground_energy_geometric(mp);
                G.check("E(rho) geometric " + t, std::abs(spectrum(1, mp)[0] - E0), 1e-10);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(1, HSign::sym, mp),
                                                                 Eigen::EigenvaluesOnly);
                G.check("max eigenvalue " + t, std::abs(es.eigenvalues().maxCoeff() - E0), 1e-10);
                G.check("min eigenvalue " + t,
                        std::abs(es.eigenvalues().minCoeff() - std::cos(2 * M_PI * ((N + 1) / 2) / (N + 1)) * E0),
                        1e-10);
              }
            });

  criterion(5, "transform symmetric, unitary, involutive, diagonalizing 1e-9; round trip 1e-10", 0.0, [](Gauge& G) {
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> nd;
    for (auto [N, M, g] : {std::tuple{1, 5, 0.4}, std::tuple{2, 3, 0.6}, std::tuple{3, 3, 0.3}, std::tuple{2, 4, 1.0}}) {
      const auto mp = new_model(N, M, g);
      const auto t = tag(N, M, g);
      const auto tm = build_transform(wave_basis_coefficient_route(mp), mp);
      const auto rep = transform_checks(tm);
      G.check("symmetric " + t, rep.symmetry, 1e-9);
      G.check("unitary " + t, rep.unitarity, 1e-9);
      G.check("involution " + t, rep.involution, 1e-9);
      G.check("conjugation relabelling " + t, rep.conjugation, 1e-9);
      G.check("F H = E F " + t, rep.diagonalization, 1e-9);
      const int D = static_cast<int>(tm.F.rows());
      double worst = 0.0;
      for (int s = 0; s < 100; ++s) {
        Eigen::VectorXcd f(D);
        for (int i = 0; i < D; ++i) f(i) = cplx(nd(rng), nd(rng));
        worst = std::max(worst, max_abs(inverse(forward(f, tm), tm) - f));
      }
      G.check("round trip " + t, worst, 1e-10);
    }
  });

  criterion(6, "rank-one closed form, eigenvalues, orthogonality against the general engine 1e-9", 0.0, [](Gauge& G) {
    for (int M = 1; M <= 6; ++M)
      for (double g : {0.4, 1.0}) {
        const auto rep = crosscheck(new_rank_one(M, g), kInf);
        const auto t = tag(1, M, g);
        G.check("coefficient route " + t, rep.coefficient_route, 1e-9);
        G.check("spectral route " + t, rep.spectral_route, 1e-9);
        G.check("eigenvalues " + t, rep.eigenvalues, 1e-9);
        G.check("eigen residual " + t, rep.eigen_residual, 1e-9);
        G.check("orthonormality " + t, rep.orthonormality, 1e-9);
      }
  });

  criterion(7, "Macdonald layer at generic and unit-circle parameters; bilinear identities 1e-9", 0.0, [](Gauge& G) {
    for (auto [N, M, g] : {std::tuple{1, 3, 0.6}, std::tuple{2, 3, 0.6}, std::tuple{2, 4, 0.6}})
      suite_rows(G, verify_suite("macdonald", SuiteConfig{N, M, g, 1e-10, kDefaultSeed}), tag(N, M, g));
  });

  criterion(8, "truncated and rank-one q-series sums 1e-8", 5.0, [](Gauge& G) {
    for (auto [N, q, g] : {std::tuple{1, 0.2, -0.3}, std::tuple{2, 0.3, -0.5}})
      G.check("truncated sum " + tag(N, 40, g), truncated_aim(N, g, QParams{q}, 40).residual(), 1e-8);
    RankOneParams a5;
    a5.terms = 80;
    G.check("A5", rank_one_sums(RankOneSum::A5, a5).residual(), 1e-8);
    G.check("A6", rank_one_sums(RankOneSum::A6, RankOneParams{}).residual(), 1e-8);
    for (int M = 1; M <= 6; ++M)
      for (double g : {0.4, 1.0}) {
        RankOneParams a7;
        a7.M = M;
        a7.g = g;
        G.check("A7 " + tag(1, M, g), rank_one_sums(RankOneSum::A7, a7).residual(), 1e-8);
      }
  });

  criterion(9, "classical round trip 1e-12, vertex energies, V-product identity 1e-12", 0.0, [](Gauge& G) {
    std::mt19937_64 rng(20240611);
    for (int N = 1; N <= 3; ++N)
      for (double g : {0.3, 1.0}) {
        const auto mp = new_model(N, 4, g);
        const auto t = tag(N, 4, g);
        double w = 0.0;
        for (int s = 0; s < 50; ++s) {
          const PhasePoint pt{random_interior_point(mp, rng), random_momenta(N, rng)};
          const auto inv = invert(embed(pt, mp), mp, true);
          for (int k = 0; k <= N; ++k) w = std::max({w, std::abs(inv.x[k] - pt.x[k]), std::abs((*inv.p)[k] - pt.p[k])});
          for (int r = 1; r <= N; ++r)
            for (const auto& nu : orbit_weights(r, N))
              G.check("V product " + t, v_product_identity(nu, pt.x, mp).residual(), 1e-12);
        }
        G.check("round trip " + t, w, 1e-12);
        for (const auto& v : vertex_energies(mp)) {
          G.check("vertex energy direct " + t, std::abs(v.direct - v.closed_form), 1e-12);
          G.check("vertex energy dual " + t, std::abs(v.dual - v.closed_form), 1e-12);
        }
      }
  });

  criterion(10, "full verify suite at exceptional couplings g = 1 and g = 1/N", 0.0, [](Gauge& G) {
    for (int N = 1; N <= 3; ++N)
      for (int M : {3, 4})
        for (double g : {1.0, 1.0 / N}) {
          if (N == 1 && g != 1.0) continue;
          suite_rows(G, verify_suite("all", SuiteConfig{N, M, g, 1e-10, kDefaultSeed}), tag(N, M, g));
        }
    // N = 2 and 3 also have g = 1/2
    for (int N = 2; N <= 3; ++N) suite_rows(G, verify_suite("all", SuiteConfig{N, 3, 0.5, 1e-10, kDefaultSeed}), tag(N, 3, 0.5));
  });

  return failures == 0 ? 0 : 1;
}
