#pragma once

#include "alcove/lattice_model.hpp"
#include "alcove/verify.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace alcove {

Json complex_json(cplx z);  // [re, im]
// Accepts a number or an [re, im] pair.
cplx complex_from_json(const Json& j);

Json weight_json(const Weight& w);
Json params_json(const ModelParams& mp);

Json vector_json(const Eigen::VectorXcd& v);
Json matrix_json(const Eigen::MatrixXcd& m);  // row-major nested arrays
// A lattice function: either a bare array or an object with "values"; length must be dim.
Eigen::VectorXcd lattice_function_from_json(const Json& j, int dim);

Json row_json(const CheckRow& r);
Json rows_json(const std::vector<CheckRow>& rows);

std::string label_string(const Weight& w);  // "1 0 2"
std::string complex_string(cplx z);          // shortest round-trip, "re+imj"
// Header "lambda\mu" then one column per mu; one line per lambda.
std::string matrix_csv(const Eigen::MatrixXcd& m, const AlcoveIndex& idx);
std::string rows_csv(const std::vector<CheckRow>& rows);

}  // namespace alcove
