#include "alcove/cli.hpp"

#include "alcove/classical.hpp"
#include "alcove/errors.hpp"
#include "alcove/json_io.hpp"
#include "alcove/transform.hpp"
#include "alcove/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace alcove::cli {

namespace {

struct RunConfig {
  int N = 1;
  int M = 1;
  double g = 1.0;
  double tol = 1e-10;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out;
  // subcommand-specific
  std::string input;
  bool inverse = false;
  std::string kind = "fourier";
  std::string x, p, z;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* app, RunConfig& c, bool model_flags = true) {
  if (model_flags) {
    app->add_option("--n", c.N, "rank N");
    app->add_option("--m", c.M, "level M");
    app->add_option("--g", c.g, "coupling g > 0");
  }
  app->add_option("--tol", c.tol, "base tolerance (row tolerances scale by tol/1e-10)");
  app->add_option("--seed", c.seed, "seed for randomized checks");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", c.out, "output file (default stdout)");
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void json_only(const RunConfig& c) {
  if (c.format != "json") throw UsageError("this subcommand only writes json");
}

Json read_json_arg(const std::string& text, const char* name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw UsageError(std::string("--") + name + " is not valid JSON");
  }
}

std::vector<double> real_vector(const std::string& text, const char* name) {
  const Json j = read_json_arg(text, name);
  if (!j.is_array()) throw UsageError(std::string("--") + name + " must be a JSON array");
  std::vector<double> v;
  for (const auto& e : j) {
    if (!e.is_number()) throw UsageError(std::string("--") + name + " must hold numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

Json read_input(const std::string& path) {
  std::stringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error&) {
    throw UsageError("input is not valid JSON");
  }
}

int do_verify(const std::string& suite, const RunConfig& c, std::ostream& out, std::ostream& err) {
  SuiteConfig sc{c.N, c.M, c.g, c.tol, c.seed};
  const auto rows = verify_suite(suite, sc);
  const bool ok = all_pass(rows);
  if (c.format == "csv") {
    emit(c, rows_csv(rows), out);
  } else {
    Json failures = Json::array();
    for (const auto& r : rows)
      if (!r.pass) failures.push_back(r.suite + ": " + r.identity);
    emit(c,
         dump(Json{{"suite", suite},
                   {"params", {{"N", c.N}, {"M", c.M}, {"g", c.g}}},
                   {"tol", c.tol},
                   {"seed", c.seed},
                   {"pass", ok},
                   {"failures", failures},
                   {"rows", rows_json(rows)}}),
         out);
  }
  for (const auto& r : rows)
    if (!r.pass) err << "FAIL " << r.suite << ": " << r.identity << (r.error.empty() ? "" : " (" + r.error + ")") << '\n';
  return ok ? 0 : 1;
}

int model_build(const RunConfig& c, std::ostream& out) {
  const ModelParams mp = new_model(c.N, c.M, c.g);
  const AlcoveIndex idx(mp.N, mp.M);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "index,lambda,star\n";
    for (int i = 0; i < idx.size(); ++i) os << i << ',' << label_string(idx[i]) << ',' << idx.star(i) << '\n';
    emit(c, os.str(), out);
    return 0;
  }
  Json lattice = Json::array();
  for (const auto& w : idx.points()) lattice.push_back(weight_json(w));
  emit(c,
       dump(Json{{"params", params_json(mp)},
                 {"period", mp.period()},
                 {"dim", idx.size()},
                 {"normalization", normalization_product(mp)},
                 {"lattice", lattice}}),
       out);
  return 0;
}

int model_spectrum(const RunConfig& c, std::ostream& out) {
  const ModelParams mp = new_model(c.N, c.M, c.g);
  const AlcoveIndex idx(mp.N, mp.M);
  std::vector<std::vector<double>> E;
  std::vector<std::vector<cplx>> Ep;
  Json residuals = Json::object();
  double eig = 0.0;
  for (int r = 1; r <= mp.N; ++r) {
    E.push_back(spectrum(r, mp));
    Ep.push_back(spectrum_plus(r, mp));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(r, HSign::sym, mp), Eigen::EigenvaluesOnly);
    auto sorted = E.back();
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < idx.size(); ++i) eig = std::max(eig, std::abs(es.eigenvalues()(i) - sorted[i]));
  }
  residuals["matrix_spectrum_vs_formula"] = eig;
  residuals["ground_energy_orbit_vs_product"] = std::abs(ground_energy_orbit(1, mp) - ground_energy_product(1, mp));
  if (c.format == "csv") {
    std::ostringstream os;
    os << "lambda";
    for (int r = 1; r <= mp.N; ++r) os << ",E_" << r;
    os << '\n';
    for (int l = 0; l < idx.size(); ++l) {
      os << label_string(idx[l]);
      for (int r = 0; r < mp.N; ++r) os << ',' << Json(E[r][l]).dump();
      os << '\n';
    }
    emit(c, os.str(), out);
    return 0;
  }
  Json energies = Json::array();
  for (int l = 0; l < idx.size(); ++l) {
    Json e = Json::array(), ep = Json::array();
    for (int r = 0; r < mp.N; ++r) {
      e.push_back(E[r][l]);
      ep.push_back(complex_json(Ep[r][l]));
    }
    energies.push_back(Json{{"lambda", weight_json(idx[l])}, {"E", e}, {"E_plus", ep}});
  }
  emit(c, dump(Json{{"params", params_json(mp)}, {"dim", idx.size()}, {"energies", energies}, {"residuals", residuals}}),
       out);
  return 0;
}

int model_wavefunctions(const RunConfig& c, std::ostream& out) {
  const ModelParams mp = new_model(c.N, c.M, c.g);
  const AlcoveIndex idx(mp.N, mp.M);
  const WaveBasis wb = wave_basis_coefficient_route(mp, c.seed);
  if (c.format == "csv") {
    emit(c, matrix_csv(wb.psi, idx), out);
    return 0;
  }
  Json labels = Json::array();
  for (const auto& w : idx.points()) labels.push_back(weight_json(w));
  emit(c, dump(Json{{"params", params_json(mp)}, {"dim", idx.size()}, {"labels", labels}, {"psi", matrix_json(wb.psi)}}),
       out);
  return 0;
}

int transform_apply(const RunConfig& c, std::ostream& out) {
  const ModelParams mp = new_model(c.N, c.M, c.g);
  const AlcoveIndex idx(mp.N, mp.M);
  const Json in = read_input(c.input);
  const TransformMatrix tm = build_transform(wave_basis_coefficient_route(mp, c.seed), mp);
  Json labels = Json::array();
  Eigen::VectorXcd values;
  if (c.kind == "fourier") {
    const Eigen::VectorXcd f = lattice_function_from_json(in, idx.size());
    values = c.inverse ? inverse(f, tm) : forward(f, tm);
    for (const auto& w : idx.points()) labels.push_back(weight_json(w));
  } else {
    const Parity par = c.kind == "cosine" ? Parity::cosine : Parity::sine;
    if (c.inverse) {
      if (!in.is_object() || !in.contains("labels")) throw UsageError("inverse cosine/sine input needs labels and values");
      RealCoefficients rc;
      rc.which = par;
      for (const auto& l : in.at("labels")) {
        Weight w{l.get<std::vector<int>>()};
        const int i = idx.index(w);
        if (i < 0) throw UsageError("label outside the alcove");
        rc.labels.push_back(i);
      }
      rc.values = lattice_function_from_json(in.at("values"), static_cast<int>(rc.labels.size()));
      values = cosine_sine_inverse(rc, tm);
      for (const auto& w : idx.points()) labels.push_back(weight_json(w));
    } else {
      const auto rc = cosine_sine(lattice_function_from_json(in, idx.size()), par, tm, c.tol);
      values = rc.values;
      for (int i : rc.labels) labels.push_back(weight_json(idx[i]));
    }
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "label,value\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Weight w{labels[i].get<std::vector<int>>()};
      os << label_string(w) << ',' << complex_string(values(static_cast<Eigen::Index>(i))) << '\n';
    }
    emit(c, os.str(), out);
    return 0;
  }
  emit(c,
       dump(Json{{"params", params_json(mp)},
                 {"kind", c.kind},
                 {"direction", c.inverse ? "inverse" : "forward"},
                 {"labels", labels},
                 {"values", vector_json(values)}}),
       out);
  return 0;
}

int classical_embed(const RunConfig& c, std::ostream& out) {
  json_only(c);
  const ModelParams mp = new_model(c.N, c.M, c.g);
  if (c.x.empty() || c.p.empty()) throw UsageError("embed needs --x and --p");
  const PhasePoint pt{real_vector(c.x, "x"), real_vector(c.p, "p")};
  const ProjectivePoint zp = embed(pt, mp);
  Json z = Json::array();
  for (cplx v : zp.z) z.push_back(complex_json(v));
  emit(c, dump(Json{{"params", params_json(mp)}, {"x", pt.x}, {"p", pt.p}, {"z", z}}), out);
  return 0;
}

int classical_invert(const RunConfig& c, std::ostream& out) {
  json_only(c);
  const ModelParams mp = new_model(c.N, c.M, c.g);
  if (c.z.empty()) throw UsageError("invert needs --z");
  const Json zj = read_json_arg(c.z, "z");
  if (!zj.is_array()) throw UsageError("--z must be a JSON array");
  ProjectivePoint zp;
  for (const auto& e : zj) zp.z.push_back(complex_from_json(e));
  const Inversion inv = invert(zp, mp);
  Json j{{"params", params_json(mp)}, {"x", inv.x}, {"actions", simple_pairings(inv.x)}};
  if (inv.p) {
    j["p"] = *inv.p;
    j["angles_defined"] = true;
  } else {
    j["p"] = nullptr;
    j["angles_defined"] = false;
  }
  emit(c, dump(j), out);
  return 0;
}

int classical_energies(const RunConfig& c, std::ostream& out) {
  json_only(c);
  const ModelParams mp = new_model(c.N, c.M, c.g);
  Json vs = Json::array();
  for (const auto& v : vertex_energies(mp))
    vs.push_back(Json{{"r", v.r}, {"point", v.point}, {"closed_form", v.closed_form}, {"direct", v.direct}, {"dual", v.dual}});
  const auto e = spectrum(1, mp);
  const auto [mn, mx] = std::minmax_element(e.begin(), e.end());
  emit(c,
       dump(Json{{"params", params_json(mp)},
                 {"vertices", vs},
                 {"quantum_min", *mn},
                 {"quantum_max", *mx}}),
       out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quantum lattice model on the A_N alcove: spectra, wave functions, transforms", "alcove"};
  app.require_subcommand(1);

  auto* model = app.add_subcommand("model", "lattice model");
  model->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
  auto sub = [&](CLI::App* parent, const char* name, const char* help, bool model_flags = true) {
    auto* s = parent->add_subcommand(name, help);
    add_common(s, c, model_flags);
    return s;
  };
  actions.push_back({sub(model, "build", "dimension, alpha and lattice listing"), [&] { return model_build(c, out); }});
  actions.push_back({sub(model, "spectrum", "joint spectrum E_r(rho + lambda)"), [&] { return model_spectrum(c, out); }});
  actions.push_back(
      {sub(model, "wavefunctions", "psi matrix, rows lambda"), [&] { return model_wavefunctions(c, out); }});
  actions.push_back({sub(model, "verify", "model verification suite"), [&] { return do_verify("model", c, out, err); }});

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  for (const auto& name : suite_names())
    actions.push_back({sub(verify, name.c_str(), "run a verification suite"),
                       [&, name] { return do_verify(name, c, out, err); }});

  auto* transform = app.add_subcommand("transform", "eigenfunction transform");
  transform->require_subcommand(1);
  auto* apply = sub(transform, "apply", "transform a lattice function");
  apply->add_option("--in", c.input, "input JSON file, '-' for stdin");
  apply->add_flag("--inverse", c.inverse, "apply the inverse transform");
  apply->add_option("--kind", c.kind, "fourier, cosine or sine")->check(CLI::IsMember({"fourier", "cosine", "sine"}));
  actions.push_back({apply, [&] { return transform_apply(c, out); }});
  actions.push_back(
      {sub(transform, "verify", "transform verification suite"), [&] { return do_verify("transform", c, out, err); }});

  auto* classical = app.add_subcommand("classical", "classical phase space");
  classical->require_subcommand(1);
  auto* emb = sub(classical, "embed", "map (x, p) to a point of CP^N");
  emb->add_option("--x", c.x, "positions as a JSON array of N+1 numbers");
  emb->add_option("--p", c.p, "momenta as a JSON array of N+1 numbers");
  actions.push_back({emb, [&] { return classical_embed(c, out); }});
  auto* inv = sub(classical, "invert", "map a point of CP^N back to (x, p)");
  inv->add_option("--z", c.z, "homogeneous coordinates as a JSON array of [re, im] pairs");
  actions.push_back({inv, [&] { return classical_invert(c, out); }});
  actions.push_back({sub(classical, "energies", "vertex energies"), [&] { return classical_energies(c, out); }});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return 2;
  }

  try {
    for (auto& [s, fn] : actions)
      if (s->parsed()) return fn();
    err << app.help();
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const OutsideConfigurationSpace& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const OutsidePatch& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace alcove::cli
