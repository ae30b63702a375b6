#include "alcove/verify.hpp"

#include "alcove/classical.hpp"
#include "alcove/errors.hpp"
#include "alcove/kernels.hpp"
#include "alcove/lattice_model.hpp"
#include "alcove/macdonald.hpp"
#include "alcove/qseries.hpp"
#include "alcove/rank_one.hpp"
#include "alcove/transform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace alcove {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Recorder {
 public:
  Recorder(std::string suite, const SuiteConfig& cfg, std::vector<CheckRow>& rows)
      : suite_(std::move(suite)), scale_(cfg.tol / 1e-10), rows_(rows) {}

  void add(const std::string& identity, Json params, double residual, double spec_tol) {
    const double tol = spec_tol * scale_;
    rows_.push_back({suite_, identity, std::move(params), residual, tol, std::isfinite(residual) && residual <= tol, "", {}});
  }

  void pair(const std::string& identity, Json params, double spec_tol, const std::function<SumPair()>& fn) {
    try {
      const SumPair sp = fn();
      add(identity, std::move(params), sp.residual(), spec_tol);
      rows_.back().detail = Json{{"lhs", {sp.lhs.real(), sp.lhs.imag()}},
                                 {"rhs", {sp.rhs.real(), sp.rhs.imag()}},
                                 {"abs_diff", sp.abs_diff()}};
    } catch (const std::exception& e) {
      rows_.push_back({suite_, identity, std::move(params), kInf, spec_tol * scale_, false, e.what(), {}});
    }
  }

  // Runs fn; an exception becomes a failing row.
  void run(const std::string& identity, Json params, double spec_tol, const std::function<double()>& fn) {
    try {
      add(identity, params, fn(), spec_tol);
    } catch (const std::exception& e) {
      rows_.push_back({suite_, identity, std::move(params), kInf, spec_tol * scale_, false, e.what(), {}});
    }
  }

 private:
  std::string suite_;
  double scale_;
  std::vector<CheckRow>& rows_;
};

Json model_json(const SuiteConfig& c) { return Json{{"N", c.N}, {"M", c.M}, {"g", c.g}}; }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

cplx coeff_of(const SymPoly& p, const Partition& m) {
  auto it = p.coeffs.find(m);
  return it == p.coeffs.end() ? cplx(0.0) : it->second;
}

std::vector<cplx> random_torus_point(int N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.141592653589793);
  std::uniform_real_distribution<double> r(0.7, 1.3);
  std::vector<cplx> z(N + 1);
  for (auto& v : z) v = std::polar(r(rng), u(rng));
  return z;
}

// Partitions with N+1 parts, weight <= max_weight and n_1 - n_{N+1} <= spread.
std::vector<Partition> labels_up_to(int N, int max_weight, int spread) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d)
    for (auto& p : partitions_of(d, N))
      if (p[0] - p[N] <= spread) out.push_back(p);
  return out;
}

void suite_aim(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("aim", cfg, rows);
  rec.pair("terminating sum against sine product", model_json(cfg), 1e-10,
          [&] { return terminating_aim(cfg.N, cfg.M, cfg.g); });
  rec.pair("terminating sum in q-form", model_json(cfg), 1e-10,
          [&] { return terminating_aim_q(cfg.N, cfg.M, cfg.g); });
  for (auto [N, q, g] : {std::tuple{1, 0.2, -0.3}, std::tuple{2, 0.3, -0.5}})
    rec.pair("truncated dominant-cone sum", Json{{"N", N}, {"q", q}, {"g", g}, {"radius", 40}}, 1e-8,
            [&] { return truncated_aim(N, g, QParams{q}, 40); });
  rec.pair("gamma product forms agree", Json{{"N", 2}, {"q", 0.3}, {"g", -0.4}}, 1e-10, [] {
    return SumPair{aim_gamma(2, -0.4, QParams{0.3}), aim_gamma_compact(2, -0.4, QParams{0.3})};
  });
  rec.pair("well-poised bilateral sum", Json{{"q", 0.2}, {"g", -0.3}, {"z", 0.17}, {"radius", 80}}, 1e-8, [] {
    RankOneParams p;
    p.terms = 80;
    return rank_one_sums(RankOneSum::A5, p);
  });
  rec.pair("q-Gauss type sum", Json{{"q", 0.2}, {"g", -0.3}, {"terms", 60}}, 1e-10,
          [] { return rank_one_sums(RankOneSum::A6, RankOneParams{}); });
  rec.pair("terminating rank-one sum", Json{{"M", cfg.M}, {"g", cfg.g}}, 1e-10, [&] {
    RankOneParams p;
    p.M = cfg.M;
    p.g = cfg.g;
    return rank_one_sums(RankOneSum::A7, p);
  });
}

void macdonald_checks(Recorder& rec, MacdonaldFamily& fam, const std::string& tag, const std::vector<Partition>& labels,
                      std::mt19937_64& rng) {
  const MacParams& mp = fam.params();
  const int N = mp.N;
  Json base = tag == "generic" ? Json{{"N", N}, {"q", mp.q.real()}, {"t", mp.t.real()}}
                               : Json{{"N", N}, {"alpha", *mp.alpha}, {"g", *mp.g}};
  auto with = [&](const char* key, Json v) {
    Json j = base;
    j[key] = std::move(v);
    return j;
  };

  rec.run("evaluation formula (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (const auto& n : labels) w = std::max(w, evaluation_formula(fam, n).residual());
    return w;
  });
  rec.run("eigen-equation residual (" + tag + ")", base, 1e-9, [&] {
    double w = 0.0;
    for (const auto& n : labels) {
      const SymPoly& p = fam.poly(n);
      for (int r = 1; r <= N + 1; ++r) {
        const SymPoly d = fam.apply_D(r, p);
        const cplx E = eigenvalue_E(n, r, mp);
        for (const auto& [m, c] : d.coeffs) w = std::max(w, std::abs(c - E * coeff_of(p, m)));
      }
    }
    return w;
  });
  rec.run("triangularity of D_r (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (const auto& n : labels) {
      SymPoly mono{N, {{n, 1.0}}};
      for (int r = 1; r <= N + 1; ++r) {
        const SymPoly d = fam.apply_D(r, mono);
        for (const auto& [m, c] : d.coeffs) {
          if (!partition_dominance(m, n)) w = std::max(w, std::abs(c));
          if (m == n) w = std::max(w, std::abs(c - eigenvalue_E(n, r, mp)));
        }
      }
    }
    return w;
  });
  rec.run("commuting D_r (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (int d = 1; d <= std::min(4, labels.back()[0] + 1); ++d) {
      SymPoly f{N, {}};
      std::normal_distribution<double> nd;
      for (const auto& m : fam.basis(d)) f.coeffs[m] = cplx(nd(rng), nd(rng));
      for (int r = 1; r <= N + 1; ++r)
        for (int s = r + 1; s <= N + 1; ++s) {
          const SymPoly a = fam.apply_D(r, fam.apply_D(s, f)), b = fam.apply_D(s, fam.apply_D(r, f));
          for (const auto& [m, c] : a.coeffs) w = std::max(w, rel(coeff_of(b, m), c));
        }
    }
    return w;
  });
  rec.run("symmetry P_m(tau q^n) = P_n(tau q^m) (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (const auto& n : labels)
      for (const auto& m : labels) w = std::max(w, symmetry_check(fam, n, m).residual());
    return w;
  });
  rec.run("conjugation p_{n*}(z) (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (const auto& n : labels) w = std::max(w, conjugation_check(fam, n, random_torus_point(N, rng)).residual());
    return w;
  });
  rec.run("homogeneity shift (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (const auto& n : labels) w = std::max(w, homogeneity_check(fam, n, random_torus_point(N, rng)).residual());
    return w;
  });
  rec.run("Macdonald identity (" + tag + ")", base, 1e-10, [&] {
    double w = 0.0;
    for (int r = 1; r <= N + 1; ++r) w = std::max(w, macdonald_identity(r, mp, random_torus_point(N, rng)).residual());
    return w;
  });
  rec.run("inversion invariance of coefficients (" + tag + ")", with("labels", labels.size()), 1e-9, [&] {
    MacdonaldFamily inv(mp.inverted());
    double w = 0.0;
    for (const auto& n : labels) {
      const SymPoly& a = fam.poly(n);
      const SymPoly& b = inv.poly(n);
      for (const auto& [m, c] : a.coeffs) w = std::max(w, rel(c, coeff_of(b, m)));
    }
    return w;
  });
}

void suite_macdonald(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("macdonald", cfg, rows);
  std::mt19937_64 rng(cfg.seed);
  const int N = cfg.N;
  const auto small = labels_up_to(N, std::min(cfg.M, 4), std::min(cfg.M, 4));

  MacdonaldFamily generic(MacParams::generic(N, 0.37, 0.58), cfg.seed);
  macdonald_checks(rec, generic, "generic", small, rng);

  const ModelParams mp = new_model(cfg.N, cfg.M, cfg.g);
  MacdonaldFamily unit(MacParams::unit_circle(N, mp.alpha, mp.g), cfg.seed);
  std::vector<Partition> alcove_labels;
  for (const auto& lam : enumerate_alcove(N, cfg.M)) alcove_labels.push_back(partition_of(lam));
  macdonald_checks(rec, unit, "unit circle", small, rng);
  rec.run("real coefficients on the unit circle", model_json(cfg), 1e-9, [&] {
    double w = 0.0;
    for (const auto& n : alcove_labels)
      for (const auto& [m, c] : unit.poly(n).coeffs) w = std::max(w, std::abs(c.imag()));
    return w;
  });
  rec.run("complex conjugate is the contragredient polynomial", model_json(cfg), 1e-9, [&] {
    double w = 0.0;
    for (const auto& lam : enumerate_alcove(N, cfg.M)) {
      const auto x = lattice_point(Weight{std::vector<int>(N, 1)}, mp);
      const cplx a = std::conj(unit.poly(partition_of(lam)).eval_trig(x, mp.alpha));
      const cplx b = unit.poly(partition_of(contragredient(lam))).eval_trig(x, mp.alpha);
      w = std::max(w, rel(a, b));
    }
    return w;
  });

  const auto grid_labels = labels_up_to(N, cfg.M, cfg.M);
  const std::pair<Bilinear, const char*> variants[] = {
      {Bilinear::plain, "bilinear identity"},
      {Bilinear::contragredient, "bilinear identity, contragredient pairing"},
      {Bilinear::normalized, "bilinear identity, P normalization"}};
  for (const auto& [v, name] : variants)
    rec.run(name, Json{{"N", N}, {"M", cfg.M}, {"g", cfg.g}, {"labels", grid_labels.size()}}, 1e-9, [&, v = v] {
      double w = 0.0;
      for (const auto& n : grid_labels)
        for (const auto& k : grid_labels) w = std::max(w, bilinear_identity(unit, n, k, cfg.M, v).residual());
      return w;
    });
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() ? static_cast<double>(a.cwiseAbs().maxCoeff()) : 0.0;
}

void suite_model(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("model", cfg, rows);
  std::mt19937_64 rng(cfg.seed);
  const ModelParams mp = new_model(cfg.N, cfg.M, cfg.g);
  const int N = mp.N;
  const AlcoveIndex idx(N, mp.M);
  const int D = idx.size();
  const Json P = model_json(cfg);

  rec.run("dimension (N+M)!/(N!M!)", P, 0.0,
          [&] { return std::abs(static_cast<double>(D - alcove_dimension(N, mp.M))); });
  rec.run("normalization sum of Delta", P, 1e-10,
          [&] { return std::abs(normalization_sum(mp) - normalization_product(mp)) / normalization_product(mp); });
  rec.run("Delta positive", P, 0.0, [&] {
    double bad = 0;
    for (const auto& mu : idx.points()) bad += delta(mu, mp) > 0.0 ? 0 : 1;
    return bad;
  });

  std::vector<Eigen::MatrixXd> Hs, Hp, Hm;
  for (int r = 1; r <= N; ++r) {
    Hs.push_back(hamiltonian(r, HSign::sym, mp));
    Hp.push_back(hamiltonian(r, HSign::plus, mp));
    Hm.push_back(hamiltonian(r, HSign::minus, mp));
  }
  rec.run("Hamiltonians Hermitian", P, 0.0, [&] {
    double w = 0.0;
    for (const auto& H : Hs) w = std::max(w, max_abs(H - H.transpose()));
    return w;
  });
  rec.run("Hamiltonians commute", P, 1e-10, [&] {
    double w = 0.0;
    for (int r = 0; r < N; ++r)
      for (int s = r + 1; s < N; ++s)
        w = std::max(w, max_abs(Hs[r] * Hs[s] - Hs[s] * Hs[r]) / std::max(1.0, Hs[r].norm() * Hs[s].norm()));
    return w;
  });
  rec.run("H_r^+ is the adjoint of H_r^-", P, 1e-12, [&] {
    double w = 0.0;
    for (int r = 0; r < N; ++r) w = std::max(w, max_abs(Hp[r].transpose() - Hm[r]));
    return w;
  });
  rec.run("H_r^- equals H_{N+1-r}^+", P, 1e-12, [&] {
    double w = 0.0;
    for (int r = 0; r < N; ++r) w = std::max(w, max_abs(Hm[r] - Hp[N - 1 - r]));
    return w;
  });
  rec.run("W^+_nu(mu) = W^-_nu(mu + nu) and positivity", P, 1e-12, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r)
      for (const auto& nu : orbit_weights(r, N))
        for (const auto& mu : idx.points()) {
          const double a = coeff_W(nu, mu, 1, mp);
          if (idx.index(mu + nu) < 0) {
            w = std::max(w, std::abs(a));
            continue;
          }
          if (!(a > 0.0)) return kInf;
          w = std::max(w, std::abs(a - coeff_W(nu, mu + nu, -1, mp)) / a);
        }
    return w;
  });
  rec.run("functional relation for Delta", P, 1e-11, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r)
      for (const auto& nu : orbit_weights(r, N))
        for (const auto& mu : idx.points())
          if (idx.index(mu + nu) >= 0) w = std::max(w, functional_relation_check(mu, nu, mp).residual());
    return w;
  });
  rec.run("constant-term identity sum_nu V_nu(x) = E_r(rho)", P, 1e-10, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r)
      for (int s = 0; s < 20; ++s) {
        const auto x = random_interior_point(mp, rng);
        double sum = 0.0, mag = 0.0;
        for (const auto& nu : orbit_weights(r, N)) {
          const double v = coeff_V_at(nu, x, mp);
          sum += v;
          mag += std::abs(v);
        }
        w = std::max(w, std::abs(sum - ground_energy_orbit(r, mp)) / std::max(1.0, mag));
      }
    return w;
  });
  if (std::abs(mp.g - 1.0) < 1e-12)
    rec.run("g = 1: V_nu(x) V_nu(-x - nu) = 1", P, 1e-10, [&] {
      double w = 0.0;
      for (int s = 0; s < 20; ++s) {
        const auto x = random_interior_point(mp, rng);
        for (int r = 1; r <= N; ++r)
          for (const auto& nu : orbit_weights(r, N)) {
            const auto v = ambient(nu).numeric();
            std::vector<double> y(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) y[k] = -x[k] - v[k];
            w = std::max(w, std::abs(coeff_V_at(nu, x, mp) * coeff_V_at(nu, y, mp) - 1.0));
          }
      }
      return w;
    });
  if (mp.exceptional)
    rec.run("exceptional g: reflected V refuses, W vanishes at the boundary", P, 0.0, [&] {
      double bad = 0;
      for (int r = 1; r <= N; ++r)
        for (const auto& nu : orbit_weights(r, N))
          for (const auto& mu : idx.points()) {
            if (idx.index(mu + nu) >= 0) continue;
            try {
              coeff_V(nu, mu, VForm::reflected, mp);
              bad += 1;
            } catch (const AmbiguousValue&) {
            }
            if (coeff_W(nu, mu, 1, mp) != 0.0 || coeff_V(nu, mu, VForm::at_point, mp) != 0.0) bad += 1;
          }
      return bad;
    });

  rec.run("ground energy: orbit sum against sine-product quotient", P, 1e-12, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r) w = std::max(w, std::abs(ground_energy_orbit(r, mp) - ground_energy_product(r, mp)));
    return w;
  });
  rec.run("ground energy: geometric form for r = 1", P, 1e-12,
          [&] { return std::abs(ground_energy_orbit(1, mp) - ground_energy_geometric(mp)); });

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es1(Hs[0]);
  rec.run("maximal eigenvalue of H_1 is E(rho)", P, 1e-10,
          [&] { return std::abs(es1.eigenvalues().maxCoeff() - ground_energy_geometric(mp)); });
  rec.run("minimal eigenvalue of H_1 at the vertex r = ceil(N/2)", P, 1e-10,
          [&] { return std::abs(es1.eigenvalues().minCoeff() - vertex_energy((N + 1) / 2, mp)); });
  rec.run("nonnegative Hamiltonian has zero ground energy", P, 1e-10, [&] {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nonneg_hamiltonian(1, mp), Eigen::EigenvaluesOnly);
    return std::abs(es.eigenvalues().minCoeff());
  });
  rec.run("spectrum of H_r matches E_r(rho + lambda)", P, 1e-10, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Hs[r - 1], Eigen::EigenvaluesOnly);
      auto e = spectrum(r, mp);
      std::sort(e.begin(), e.end());
      for (int i = 0; i < D; ++i) w = std::max(w, std::abs(es.eigenvalues()(i) - e[i]));
    }
    return w;
  });

  const Eigen::VectorXd g0 = psi0(mp);
  rec.run("ground state positive with unit norm", P, 1e-12, [&] {
    if (g0.minCoeff() <= 0.0) return kInf;
    return std::abs(g0.norm() - 1.0);
  });
  rec.run("ground state eigenvalue", P, 1e-10, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r)
      w = std::max(w, (Hs[r - 1] * g0 - ground_energy_orbit(r, mp) * g0).cwiseAbs().maxCoeff());
    return w;
  });

  WaveBasis coef, spec;
  rec.run("coefficient route builds", P, 0.0, [&] {
    coef = wave_basis_coefficient_route(mp, cfg.seed);
    return 0.0;
  });
  rec.run("spectral route builds", P, 0.0, [&] {
    spec = wave_basis_spectral_route(mp, cfg.seed);
    return 0.0;
  });
  if (coef.psi.size() == 0 || spec.psi.size() == 0) return;

  rec.run("coefficient and spectral routes agree", P, 1e-8, [&] { return max_abs(coef.psi - spec.psi); });
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(D, D);
  for (const auto* wb : {&coef, &spec}) {
    const std::string route = wb->route == Route::coefficient ? "coefficient" : "spectral";
    rec.run("orthonormal rows (" + route + ")", P, 1e-9, [&] { return max_abs(wb->psi * wb->psi.adjoint() - I); });
    rec.run("psi symmetric (" + route + ")", P, 1e-9, [&] { return max_abs(wb->psi - wb->psi.transpose()); });
    rec.run("joint eigenfunctions of H_r and H_r^+ (" + route + ")", P, 1e-9, [&] {
      double w = 0.0;
      for (int r = 1; r <= N; ++r) {
        const auto Ep = spectrum_plus(r, mp);
        for (int l = 0; l < D; ++l) {
          const Eigen::VectorXcd v = wb->psi.row(l).transpose();
          w = std::max(w, max_abs(Hs[r - 1].cast<cplx>() * v - wb->energies[r - 1][l] * v));
          w = std::max(w, max_abs(Hp[r - 1].cast<cplx>() * v - Ep[l] * v));
        }
      }
      return w;
    });
  }
  rec.run("row lambda = 0 is the ground state", P, 1e-10,
          [&] { return max_abs(coef.psi.row(0).transpose() - g0.cast<cplx>()); });
  rec.run("Psi_lambda(rho) real and positive", P, 1e-10, [&] {
    double w = 0.0;
    for (int l = 0; l < D; ++l) {
      if (!(coef.psi(l, 0).real() > 0.0)) return kInf;
      w = std::max(w, std::abs(coef.psi(l, 0).imag()));
    }
    return w;
  });
  rec.run("orthogonality tables", P, 1e-9, [&] {
    const auto rep = orthogonality_tables(coef, mp);
    return std::max({rep.p_offdiag, rep.p_diag, rep.P_offdiag, rep.P_diag, rep.scaling});
  });
  rec.run("real basis orthonormal and complete", P, 1e-9, [&] {
    const auto rb = real_basis(coef, mp);
    if (rb.basis.rows() != D) return kInf;
    double w = max_abs(rb.basis * rb.basis.transpose() - Eigen::MatrixXd::Identity(D, D));
    for (int l = 0; l < D; ++l) {
      w = std::max(w, max_abs(rb.C.row(l) - rb.C.row(idx.star(l))));
      w = std::max(w, max_abs(rb.S.row(l) + rb.S.row(idx.star(l))));
      for (int r = 1; r <= N; ++r) {
        const double E = coef.energies[r - 1][l];
        w = std::max(w, max_abs(Hs[r - 1] * rb.C.row(l).transpose() - E * rb.C.row(l).transpose()));
        w = std::max(w, max_abs(Hs[r - 1] * rb.S.row(l).transpose() - E * rb.S.row(l).transpose()));
      }
    }
    return w;
  });
  rec.run("serial and OpenMP kernels agree", P, 1e-12, [&] {
    double w = 0.0;
    for (int r = 1; r <= N; ++r)
      w = std::max(w, max_abs(kernels::assemble_plus_serial(r, mp) - kernels::assemble_plus_omp(r, mp)));
    w = std::max(w, (kernels::delta_values_serial(mp) - kernels::delta_values_omp(mp)).cwiseAbs().maxCoeff());
    const WaveBasis ser = wave_basis_coefficient_route(mp, cfg.seed, Exec::serial);
    return std::max(w, max_abs(ser.psi - coef.psi));
  });
}

void suite_transform(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("transform", cfg, rows);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> nd;
  const ModelParams mp = new_model(cfg.N, cfg.M, cfg.g);
  const Json P = model_json(cfg);
  TransformMatrix tm;
  try {
    tm = build_transform(wave_basis_coefficient_route(mp, cfg.seed), mp);
  } catch (const std::exception& e) {
    rows.push_back({"transform", "build transform", P, kInf, 0.0, false, e.what(), {}});
    return;
  }
  const int D = static_cast<int>(tm.F.rows());
  const auto rep = transform_checks(tm);
  rec.add("F symmetric", P, rep.symmetry, 1e-9);
  rec.add("F unitary", P, rep.unitarity, 1e-9);
  rec.add("conj(F) F = I", P, rep.involution, 1e-9);
  rec.add("conj(F) is F with rows relabelled by *", P, rep.conjugation, 1e-9);
  rec.add("F H_r = E_r F", P, rep.diagonalization, 1e-9);
  rec.add("bispectral difference equation", P, rep.bispectral, 1e-9);

  auto random_f = [&] {
    Eigen::VectorXcd f(D);
    for (int i = 0; i < D; ++i) f(i) = cplx(nd(rng), nd(rng));
    return f;
  };
  rec.run("round trip on 100 random functions", P, 1e-10, [&] {
    double w = 0.0;
    for (int s = 0; s < 100; ++s) {
      const Eigen::VectorXcd f = random_f();
      w = std::max(w, (inverse(forward(f, tm), tm) - f).cwiseAbs().maxCoeff() / f.cwiseAbs().maxCoeff());
    }
    return w;
  });
  rec.run("Parseval", P, 1e-10, [&] {
    const Eigen::VectorXcd f = random_f();
    return std::abs(forward(f, tm).norm() - f.norm()) / f.norm();
  });
  rec.run("transform of Psi_kappa is an indicator", P, 1e-9, [&] {
    double w = 0.0;
    for (int k = 0; k < D; ++k) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(D);
      e(k) = 1.0;
      w = std::max(w, (forward(tm.F.row(k).transpose(), tm) - e).cwiseAbs().maxCoeff());
    }
    return w;
  });
  rec.run("transform of the delta at the minimal vertex is Psi_0", P, 1e-10, [&] {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(D);
    d(0) = 1.0;
    return (forward(d, tm) - tm.F.row(0).transpose()).cwiseAbs().maxCoeff();
  });
  for (Parity par : {Parity::cosine, Parity::sine}) {
    const int sign = par == Parity::cosine ? 1 : -1;
    const std::string name = par == Parity::cosine ? "cosine" : "sine";
    rec.run(name + " transform round trip", P, 1e-9, [&] {
      double w = 0.0;
      for (int s = 0; s < 20; ++s) {
        const Eigen::VectorXcd h = random_f();
        Eigen::VectorXcd f(D);
        for (int i = 0; i < D; ++i) f(i) = h(i) + double(sign) * h(tm.star[i]);
        const auto c = cosine_sine(f, par, tm);
        const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
        w = std::max(w, (cosine_sine_inverse(c, tm) - f).cwiseAbs().maxCoeff() / scale);
      }
      return w;
    });
  }
  rec.run("cosine/sine transforms reject the wrong symmetry class", P, 0.0, [&] {
    double bad = 0;
    bool asym = false;
    for (int i = 0; i < D; ++i) asym |= tm.star[i] != i;
    const Eigen::VectorXcd f = random_f();
    Eigen::VectorXcd sym(D), anti(D);
    for (int i = 0; i < D; ++i) {
      sym(i) = f(i) + f(tm.star[i]);
      anti(i) = f(i) - f(tm.star[i]);
    }
    try {
      cosine_sine(anti, Parity::cosine, tm);
      bad += asym ? 1 : 0;
    } catch (const InvalidArgument&) {
      bad += asym ? 0 : 1;
    }
    try {
      cosine_sine(sym, Parity::sine, tm);
      bad += 1;
    } catch (const InvalidArgument&) {
    }
    return bad;
  });
}

void suite_rank_one(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("rank-one", cfg, rows);
  const Json P{{"M", cfg.M}, {"g", cfg.g}};
  const RankOneModel rm = new_rank_one(cfg.M, cfg.g);
  RankOneReport rep;
  try {
    rep = crosscheck(rm, kInf, cfg.seed);
  } catch (const std::exception& e) {
    rows.push_back({"rank-one", "cross-check", P, kInf, 0.0, false, e.what(), {}});
    return;
  }
  rec.add("closed form against coefficient route", P, rep.coefficient_route, 1e-9);
  rec.add("closed form against spectral route", P, rep.spectral_route, 1e-9);
  rec.add("closed form orthonormal", P, rep.orthonormality, 1e-11);
  rec.add("tridiagonal matrix equals lattice H_1", P, rep.hamiltonian, 1e-12);
  rec.add("eigenvalues 2 cos(alpha/2 (g + l))", P, rep.eigenvalues, 1e-11);
  rec.add("closed form eigenvectors", P, rep.eigen_residual, 1e-9);
  rec.add("closed form P_l real", P, rep.imaginary, 1e-9);
  rec.run("extreme eigenvalues +-2 cos(alpha g / 2)", P, 1e-11, [&] {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tridiagonal_hamiltonian(rm), Eigen::EigenvaluesOnly);
    const double e = 2.0 * std::cos(0.5 * rm.alpha * rm.g);
    return std::max(std::abs(es.eigenvalues().maxCoeff() - e), std::abs(es.eigenvalues().minCoeff() + e));
  });
  rec.run("3phi2 terminates after l + 1 terms", P, 0.0, [&] {
    double w = 0.0;
    for (int l = 0; l <= rm.M; ++l)
      for (int m = 0; m <= rm.M; ++m)
        for (int k = l + 1; k <= rm.M + 2; ++k) w = std::max(w, std::abs(rank_one_term(l, m, k, rm)));
    return w;
  });
}

void suite_classical(const SuiteConfig& cfg, std::vector<CheckRow>& rows) {
  Recorder rec("classical", cfg, rows);
  std::mt19937_64 rng(cfg.seed);
  const ModelParams mp = new_model(cfg.N, cfg.M, cfg.g);
  const int N = mp.N;
  const Json P = model_json(cfg);

  rec.run("embed then invert at 50 interior points", P, 1e-12, [&] {
    double w = 0.0;
    for (int s = 0; s < 50; ++s) {
      const PhasePoint pt{random_interior_point(mp, rng), random_momenta(N, rng)};
      const auto inv = invert(embed(pt, mp), mp, true);
      for (int k = 0; k <= N; ++k) w = std::max({w, std::abs(inv.x[k] - pt.x[k]), std::abs((*inv.p)[k] - pt.p[k])});
    }
    return w;
  });
  rec.run("V_nu(x) V_nu(-x) product identity", P, 1e-12, [&] {
    double w = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto x = random_interior_point(mp, rng);
      for (int r = 1; r <= N; ++r)
        for (const auto& nu : orbit_weights(r, N)) w = std::max(w, v_product_identity(nu, x, mp).residual());
    }
    return w;
  });
  rec.run("vertex energies: closed form, E(x) and orbit form", P, 1e-12, [&] {
    double w = 0.0;
    for (const auto& v : vertex_energies(mp))
      w = std::max({w, std::abs(v.direct - v.closed_form), std::abs(v.dual - v.closed_form)});
    return w;
  });
  rec.run("quantum spectrum inside the classical range", P, 1e-12, [&] {
    const auto vs = vertex_energies(mp);
    double lo = kInf, hi = -kInf;
    for (const auto& v : vs) {
      lo = std::min(lo, v.closed_form);
      hi = std::max(hi, v.closed_form);
    }
    const auto e = spectrum(1, mp);
    const auto [mn, mx] = std::minmax_element(e.begin(), e.end());
    return std::max({0.0, lo - *mn, *mx - hi, std::abs(*mx - hi), std::abs(*mn - lo)});
  });
  rec.run("lattice inside the closed simplex, vertices on the boundary", P, 0.0, [&] {
    double bad = 0;
    for (const auto& mu : enumerate_alcove(N, mp.M)) bad += membership(lattice_point(mu, mp), mp, true) ? 0 : 1;
    std::vector<double> bary(N + 1, 0.0);
    for (const auto& v : vertex_energies(mp)) {
      bad += membership(v.point, mp, true) && !membership(v.point, mp, false) ? 0 : 1;
      for (int k = 0; k <= N; ++k) bary[k] += v.point[k] / (N + 1);
    }
    bad += membership(bary, mp, false) ? 0 : 1;
    return bad;
  });
  rec.run("reduced Hamiltonian equals H_r on the hyperplane; H_{N+1} = cos(sum p)", P, 1e-12, [&] {
    double w = 0.0;
    for (int s = 0; s < 10; ++s) {
      const PhasePoint pt{random_interior_point(mp, rng), random_momenta(N, rng)};
      for (int r = 1; r <= N; ++r) w = std::max(w, std::abs(reduced_hamiltonian(r, pt, mp) - hamiltonian_Hr(r, pt, mp)));
      double ps = 0.0;
      for (double p : pt.p) ps += p;
      w = std::max(w, std::abs(hamiltonian_Hr(N + 1, pt, mp) - std::cos(ps)));
    }
    return w;
  });
  rec.run("2R^2 equals M", P, 1e-12, [&] { return std::abs(mp.period() - (N + 1) * mp.g - mp.M); });
  rec.run("actions extend to the boundary of the patch", P, 1e-12, [&] {
    double w = 0.0;
    for (int j = 1; j <= N; ++j) {
      ProjectivePoint zp{std::vector<cplx>(N + 1, cplx(0.6, 0.3))};
      zp.z[j] = 0.0;
      const auto inv = invert(zp, mp);
      if (inv.p) return kInf;
      w = std::max(w, std::abs(simple_pairings(inv.x)[j - 1] - mp.g));
      try {
        invert(zp, mp, true);
        return kInf;
      } catch (const OutsidePatch&) {
      }
    }
    ProjectivePoint eq{std::vector<cplx>(N + 1, cplx(0.0, 1.0))};
    for (double a : simple_pairings(invert(eq, mp).x))
      w = std::max(w, std::abs(a - (static_cast<double>(mp.M) / (N + 1) + mp.g)));
    return w;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "aim", "macdonald", "model", "transform", "rank-one", "classical"};
  return names;
}

std::vector<CheckRow> verify_suite(const std::string& which, const SuiteConfig& cfg) {
  new_model(cfg.N, cfg.M, cfg.g);
  if (!(cfg.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  std::vector<CheckRow> rows;
  const bool all = which == "all";
  bool known = all;
  auto want = [&](const char* name) {
    const bool hit = all || which == name;
    known |= hit;
    return hit;
  };
  if (want("aim")) suite_aim(cfg, rows);
  if (want("macdonald")) suite_macdonald(cfg, rows);
  if (want("model")) suite_model(cfg, rows);
  if (want("transform")) suite_transform(cfg, rows);
  if (want("rank-one")) suite_rank_one(cfg, rows);
  if (want("classical")) suite_classical(cfg, rows);
  if (!known) throw InvalidArgument("unknown suite: " + which);
  return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

}  // namespace alcove
