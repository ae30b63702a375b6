#include "alcove/classical.hpp"
#include "alcove/errors.hpp"
#include "alcove/rank_one.hpp"
#include "alcove/transform.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace alcove;

namespace {

const double kPi = std::numbers::pi;

template <class D>
double max_abs(const Eigen::MatrixBase<D>& a) {
  return a.cwiseAbs().maxCoeff();
}

Eigen::VectorXcd random_function(int D, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::VectorXcd f(D);
  for (int i = 0; i < D; ++i) f(i) = cplx(nd(rng), nd(rng));
  return f;
}

TransformMatrix make(int N, int M, double g) {
  const auto mp = new_model(N, M, g);
  return build_transform(wave_basis_coefficient_route(mp), mp);
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("structural identities") {
    for (auto [N, M, g] : {std::tuple{2, 3, 0.6}, std::tuple{1, 4, 0.4}, std::tuple{3, 3, 1.0}, std::tuple{2, 4, 0.5}}) {
      const auto rep = transform_checks(make(N, M, g));
      CHECK(rep.symmetry < 1e-9);
      CHECK(rep.unitarity < 1e-9);
      CHECK(rep.involution < 1e-9);
      CHECK(rep.conjugation < 1e-9);
      CHECK(rep.diagonalization < 1e-9);
      CHECK(rep.bispectral < 1e-9);
    }
  }

  TEST_CASE("round trip and Parseval") {
    std::mt19937_64 rng(23);
    const auto tm = make(2, 3, 0.6);
    const int D = static_cast<int>(tm.F.rows());
    for (int s = 0; s < 100; ++s) {
      const auto f = random_function(D, rng);
      const auto fh = forward(f, tm);
      CHECK(max_abs(inverse(fh, tm) - f) < 1e-10);
      CHECK(std::abs(fh.norm() - f.norm()) < 1e-10 * f.norm());
    }
  }

  TEST_CASE("indicator and delta functions") {
    const auto tm = make(2, 3, 0.6);
    const int D = static_cast<int>(tm.F.rows());
    for (int k = 0; k < D; ++k) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(D);
      e(k) = 1.0;
      CHECK(max_abs(forward(tm.F.row(k).transpose(), tm) - e) < 1e-10);
    }
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(D);
    d(0) = 1.0;
    CHECK(max_abs(forward(d, tm) - psi0(tm.mp).cast<cplx>()) < 1e-10);
  }

  TEST_CASE("cosine and sine transforms") {
    std::mt19937_64 rng(29);
    const auto tm = make(2, 3, 0.6);
    const int D = static_cast<int>(tm.F.rows());
    for (int s = 0; s < 20; ++s) {
      const auto h = random_function(D, rng);
      Eigen::VectorXcd sym(D), anti(D);
      for (int i = 0; i < D; ++i) {
        sym(i) = h(i) + h(tm.star[i]);
        anti(i) = h(i) - h(tm.star[i]);
      }
      const auto c = cosine_sine(sym, Parity::cosine, tm);
      CHECK(max_abs(cosine_sine_inverse(c, tm) - sym) < 1e-9);
      const auto sn = cosine_sine(anti, Parity::sine, tm);
      CHECK(max_abs(cosine_sine_inverse(sn, tm) - anti) < 1e-9);
      CHECK_THROWS_AS(cosine_sine(sym, Parity::sine, tm), InvalidArgument);
      CHECK_THROWS_AS(cosine_sine(anti, Parity::cosine, tm), InvalidArgument);
    }
    // Psi^C_kappa has indicator coefficients
    const auto& rb = tm.real;
    for (std::size_t b = 0; b < rb.basis_label.size(); ++b) {
      if (rb.basis_is_sine[b]) continue;
      const Eigen::VectorXcd f = rb.basis.row(static_cast<Eigen::Index>(b)).transpose().cast<cplx>();
      const auto c = cosine_sine(f, Parity::cosine, tm);
      for (Eigen::Index i = 0; i < c.values.size(); ++i)
        CHECK(std::abs(c.values(i) - (c.labels[i] == rb.basis_label[b] ? 1.0 : 0.0)) < 1e-10);
    }
  }

  TEST_CASE("dimension mismatch") {
    const auto tm = make(1, 2, 0.4);
    CHECK_THROWS_AS(forward(Eigen::VectorXcd::Zero(5), tm), InvalidArgument);
  }
}

TEST_SUITE("rank_one") {
  TEST_CASE("cross-check against the general engine") {
    for (int M = 1; M <= 6; ++M)
      for (double g : {0.4, 1.0}) {
        const auto rep = crosscheck(new_rank_one(M, g), 1e-9);
        CHECK(rep.coefficient_route < 1e-9);
        CHECK(rep.spectral_route < 1e-9);
        CHECK(rep.orthonormality < 1e-11);
        CHECK(rep.hamiltonian < 1e-12);
        CHECK(rep.eigenvalues < 1e-11);
        CHECK(rep.eigen_residual < 1e-9);
      }
  }

  TEST_CASE("closed-form pieces") {
    const auto rm = new_rank_one(3, 0.4);
    CHECK(rm.alpha == doctest::Approx(2 * kPi / 3.8).epsilon(1e-15));
    CHECK(rank_one_delta(0, rm) == doctest::Approx(1.0).epsilon(1e-15));
    double s = 0.0;
    for (int m = 0; m <= 3; ++m) s += rank_one_delta(m, rm);
    CHECK(std::abs(s - rank_one_N0(rm)) < 1e-12);
    CHECK(std::abs(rank_one_N0(rm) - 6.7091262865029642990) < 1e-12);
    for (int l = 0; l <= 3; ++l)
      for (int m = 0; m <= 3; ++m) {
        CHECK(rank_one_term(l, m, l + 1, rm) == cplx(0.0));
        CHECK(std::abs(rank_one_P(l, m, rm) - rank_one_P(m, l, rm)) < 1e-12);
      }
    CHECK(std::abs(rank_one_P(0, 2, rm) - 1.0) < 1e-14);
    const auto ev = rank_one_eigenvalues(rm);
    for (int l = 0; l <= 3; ++l) CHECK(std::abs(ev[l] - 2 * std::cos(rm.alpha / 2 * (0.4 + l))) < 1e-15);
  }

  TEST_CASE("crosscheck raises on a tolerance it cannot meet") {
    CHECK_THROWS_AS(crosscheck(new_rank_one(4, 0.4), 0.0), OracleMismatch);
  }
}

TEST_SUITE("classical") {
  TEST_CASE("membership of vertices and barycenter") {
    for (auto [N, M, g] : {std::tuple{1, 3, 0.4}, std::tuple{2, 3, 0.6}, std::tuple{3, 4, 1.0}}) {
      const auto mp = new_model(N, M, g);
      const auto rho = lattice_point(Weight::zero(N), mp);
      CHECK(membership(rho, mp, true));
      CHECK_FALSE(membership(rho, mp, false));
      std::vector<double> bary(N + 1, 0.0);
      for (const auto& v : vertex_energies(mp)) {
        CHECK(membership(v.point, mp, true));
        CHECK_FALSE(membership(v.point, mp, false));
        for (int k = 0; k <= N; ++k) bary[k] += v.point[k] / (N + 1);
      }
      CHECK(membership(bary, mp, false));
    }
    CHECK_THROWS_AS(membership({1.0, 1.0}, new_model(1, 3, 0.4), true), InvalidArgument);
  }

  TEST_CASE("embed and invert round trip") {
    std::mt19937_64 rng(31);
    for (int N = 1; N <= 3; ++N)
      for (double g : {0.3, 1.0}) {
        const auto mp = new_model(N, 4, g);
        double w = 0.0;
        for (int s = 0; s < 50; ++s) {
          const PhasePoint pt{random_interior_point(mp, rng), random_momenta(N, rng)};
          const auto zp = embed(pt, mp);
          CHECK(zp.z[0] == cplx(1.0));
          const auto inv = invert(zp, mp, true);
          REQUIRE(inv.p.has_value());
          for (int k = 0; k <= N; ++k) w = std::max({w, std::abs(inv.x[k] - pt.x[k]), std::abs((*inv.p)[k] - pt.p[k])});
        }
        CHECK(w < 1e-12);
      }
  }

  TEST_CASE("actions at the edge of the patch") {
    const auto mp = new_model(2, 3, 0.6);
    ProjectivePoint zp{{cplx(0.5, 0.2), cplx(0.0), cplx(0.3, -0.1)}};
    const auto inv = invert(zp, mp);
    CHECK_FALSE(inv.p.has_value());
    CHECK(std::abs(simple_pairings(inv.x)[0] - mp.g) < 1e-13);
    CHECK_THROWS_AS(invert(zp, mp, true), OutsidePatch);
    ProjectivePoint near{{cplx(0.5, 0.2), cplx(1e-7), cplx(0.3, -0.1)}};
    CHECK(std::abs(simple_pairings(invert(near, mp).x)[0] - mp.g) < 1e-12);
  }

  TEST_CASE("Hamiltonians") {
    std::mt19937_64 rng(37);
    const auto mp = new_model(2, 3, 0.6);
    for (int s = 0; s < 10; ++s) {
      PhasePoint pt{random_interior_point(mp, rng), random_momenta(2, rng)};
      for (int r = 1; r <= 2; ++r) CHECK(std::abs(reduced_hamiltonian(r, pt, mp) - hamiltonian_Hr(r, pt, mp)) < 1e-12);
      pt.p.assign(3, 0.0);
      CHECK(hamiltonian_Hr(3, pt, mp) == doctest::Approx(1.0).epsilon(1e-15));
    }
    const PhasePoint at_rho{lattice_point(Weight::zero(2), mp), {0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(hamiltonian_H(at_rho, mp), OutsideConfigurationSpace);
  }

  TEST_CASE("dual Hamiltonian at the vertices") {
    for (auto [N, M, g] : {std::tuple{1, 3, 0.4}, std::tuple{2, 3, 0.6}, std::tuple{3, 4, 0.3}}) {
      const auto mp = new_model(N, M, g);
      const auto rho = lattice_point(Weight::zero(N), mp);
      for (int r = 1; r <= N; ++r) CHECK(std::abs(dual_hamiltonian(r, rho, mp) - ground_energy_orbit(r, mp)) < 1e-12);
      for (const auto& v : vertex_energies(mp)) {
        CHECK(std::abs(v.direct - v.closed_form) < 1e-12);
        CHECK(std::abs(v.dual - v.closed_form) < 1e-12);
      }
      if (N % 2 == 1)
        CHECK(std::abs(vertex_energies(mp)[(N + 1) / 2].closed_form + ground_energy_geometric(mp)) < 1e-12);
    }
  }

  TEST_CASE("V product identity") {
    std::mt19937_64 rng(41);
    for (auto [N, M, g] : {std::tuple{1, 3, 0.4}, std::tuple{2, 3, 0.6}, std::tuple{3, 4, 1.0}}) {
      const auto mp = new_model(N, M, g);
      for (int s = 0; s < 20; ++s) {
        const auto x = random_interior_point(mp, rng);
        for (int r = 1; r <= N; ++r)
          for (const auto& nu : orbit_weights(r, N)) CHECK(v_product_identity(nu, x, mp).residual() < 1e-12);
      }
    }
  }
}
