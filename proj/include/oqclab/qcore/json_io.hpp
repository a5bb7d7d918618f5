// Copyright 2026 The oqclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef OQCLAB_QCORE_JSON_IO_HPP
#define OQCLAB_QCORE_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "oqclab/qcore/types.hpp"

namespace oqc {

using Json = nlohmann::json;

// Shared JSON schema: complex entries as [re, im] pairs, row-major, with a
// "dim" header listing register labels and sizes.

inline Json dim_to_json(const HilbertDim& dim) {
  Json regs = Json::array();
  for (const auto& r : dim.registers())
    regs.push_back({{"label", r.label}, {"dim", r.dim}});
  return regs;
}

inline HilbertDim dim_from_json(const Json& j) {
  std::vector<RegisterSpec> regs;
  for (const auto& r : j)
    regs.push_back({r.at("label").get<std::string>(), r.at("dim").get<int>()});
  return HilbertDim(regs);
}

inline Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j) {
  const auto rows = j.size();
  if (rows == 0) throw InvariantViolation("empty matrix in JSON");
  const auto cols = j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j.at(i).at(k));
  return m;
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

inline Vector vector_from_json(const Json& j) {
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j.at(i));
  return v;
}

inline Json to_json(const DensityOperator& rho) {
  return Json{{"dim", dim_to_json(rho.dim())}, {"matrix", matrix_to_json(rho.matrix())}};
}

inline DensityOperator density_from_json(const Json& j) {
  return DensityOperator(matrix_from_json(j.at("matrix")), dim_from_json(j.at("dim")));
}

inline Json to_json(const PureState& psi) {
  return Json{{"dim", dim_to_json(psi.dim())}, {"vector", vector_to_json(psi.vector())}};
}

inline PureState pure_from_json(const Json& j) {
  return PureState(vector_from_json(j.at("vector")), dim_from_json(j.at("dim")));
}

inline Json to_json(const Ensemble& ens) {
  Json items = Json::array();
  for (const auto& it : ens.items())
    items.push_back({{"p", it.p}, {"vector", vector_to_json(it.psi.vector())}});
  return Json{{"dim", dim_to_json(ens.dim())}, {"items", items}};
}

inline Ensemble ensemble_from_json(const Json& j) {
  const HilbertDim dim = dim_from_json(j.at("dim"));
  std::vector<Ensemble::Item> items;
  for (const auto& it : j.at("items"))
    items.push_back({it.at("p").get<double>(),
                     PureState(vector_from_json(it.at("vector")), dim)});
  return Ensemble(std::move(items));
}

/// Finite doubles pass through; infinities become the strings "+inf"/"-inf".
inline Json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? Json("+inf") : Json("-inf");
  return Json(x);
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

} // namespace oqc

#endif
