#include "alcove/json_io.hpp"

#include "alcove/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace alcove {

namespace {

std::string num(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidArgument("expected a number or an [re, im] pair");
}

Json weight_json(const Weight& w) { return Json(w.l); }

Json params_json(const ModelParams& mp) {
  return Json{{"N", mp.N}, {"M", mp.M}, {"g", mp.g}, {"alpha", mp.alpha}, {"exceptional", mp.exceptional}};
}

Json vector_json(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

Eigen::VectorXcd lattice_function_from_json(const Json& j, int dim) {
  const Json& arr = j.is_object() && j.contains("values") ? j.at("values") : j;
  if (!arr.is_array()) throw InvalidArgument("lattice function must be a JSON array");
  if (static_cast<int>(arr.size()) != dim)
    throw InvalidArgument("lattice function has " + std::to_string(arr.size()) + " values, expected " +
                          std::to_string(dim));
  Eigen::VectorXcd f(dim);
  for (int i = 0; i < dim; ++i) f(i) = complex_from_json(arr[i]);
  return f;
}

Json row_json(const CheckRow& r) {
  Json j{{"suite", r.suite}, {"identity", r.identity}, {"params", r.params}};
  if (std::isfinite(r.residual))
    j["residual"] = r.residual;
  else
    j["residual"] = nullptr;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (!r.detail.is_null()) j["detail"] = r.detail;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json rows_json(const std::vector<CheckRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(row_json(r));
  return out;
}

std::string label_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.l.size(); ++i) s += (i ? " " : "") + std::to_string(w.l[i]);
  return s;
}

std::string complex_string(cplx z) {
  const std::string im = num(z.imag());
  return num(z.real()) + (im.front() == '-' ? "" : "+") + im + "j";
}

std::string matrix_csv(const Eigen::MatrixXcd& m, const AlcoveIndex& idx) {
  std::ostringstream os;
  os << "lambda\\mu";
  for (const auto& mu : idx.points()) os << ',' << label_string(mu);
  os << '\n';
  for (int l = 0; l < idx.size(); ++l) {
    os << label_string(idx[l]);
    for (int c = 0; c < idx.size(); ++c) os << ',' << complex_string(m(l, c));
    os << '\n';
  }
  return os.str();
}

std::string rows_csv(const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  os << "suite,identity,params,residual,tolerance,pass\n";
  for (const auto& r : rows)
    os << csv_field(r.suite) << ',' << csv_field(r.identity) << ',' << csv_field(r.params.dump()) << ','
       << num(r.residual) << ',' << num(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace alcove
