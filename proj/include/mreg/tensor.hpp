// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "mreg/common.hpp"
#include "mreg/grid.hpp"

namespace mreg {

/// Flat double buffer with a shape tag; the unit of data the tape works on.
/// Shape conventions: {} scalar, {n0,n1} scalar field, {c,n0,n1} channel
/// stack / vector field, {co,ci,k,k} convolution filters.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(count(shape), 0.0) {}
  Tensor(std::vector<int> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    require(data.size() == count(shape), errc::invalid_parameter, "tensor shape/data mismatch");
  }

  static std::size_t count(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int v : s) n *= static_cast<std::size_t>(v);
    return n;
  }

  static Tensor scalar(double v) {
    Tensor t;
    t.data.assign(1, v);
    return t;
  }
  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

  std::size_t numel() const { return data.size(); }
  bool is_scalar() const { return shape.empty() && data.size() == 1; }

  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }
};

inline Tensor to_tensor(const ScalarField& f) {
  return Tensor({f.grid.dims[0], f.grid.dims[1]}, f.values);  // 2D fields
}

inline Tensor field_tensor(const ScalarField& f) {
  std::vector<int> s(f.grid.dims.begin(), f.grid.dims.end());
  return Tensor(std::move(s), f.values);
}

inline Tensor field_tensor(const VectorField& f) {
  std::vector<int> s;
  s.push_back(f.grid.dim());
  s.insert(s.end(), f.grid.dims.begin(), f.grid.dims.end());
  return Tensor(std::move(s), f.values);
}

inline ScalarField scalar_from_tensor(const Grid& g, const Tensor& t) {
  require(t.numel() == g.nodes(), errc::invalid_parameter, "tensor/grid size mismatch");
  return ScalarField(g, t.data);
}

inline VectorField vector_from_tensor(const Grid& g, const Tensor& t) {
  require(t.numel() == g.nodes() * g.dim(), errc::invalid_parameter,
          "tensor/grid size mismatch");
  return VectorField(g, t.data);
}

}  // namespace mreg
