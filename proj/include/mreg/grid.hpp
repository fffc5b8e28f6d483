// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mreg/common.hpp"

namespace mreg {

/// Regular sampling grid over [0,1]^d with nodes at j*spacing per axis,
/// spacing_k = 1/(dims_k - 1). d is 2 or 3.
struct Grid {
  std::vector<int> dims;
  std::vector<double> spacing;

  Grid() = default;
  explicit Grid(std::vector<int> d) : dims(std::move(d)) {
    require(dims.size() == 2 || dims.size() == 3, errc::invalid_parameter,
            "grid dimension must be 2 or 3");
    for (int n : dims)
      require(n >= 4, errc::invalid_parameter, "grid dims must be >= 4");
    spacing.resize(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) spacing[k] = 1.0 / (dims[k] - 1);
  }

  int dim() const { return static_cast<int>(dims.size()); }

  std::size_t nodes() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
  }

  double cell_volume() const {
    double v = 1.0;
    for (double s : spacing) v *= s;
    return v;
  }

  bool operator==(const Grid& o) const { return dims == o.dims; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Scalar samples on a Grid, row-major (last axis fastest).
struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), values(g.nodes(), fill) {}
  ScalarField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    require(values.size() == grid.nodes(), errc::invalid_parameter,
            "scalar field size mismatch");
  }

  double& at(std::size_t i) { return values[i]; }
  double at(std::size_t i) const { return values[i]; }
};

/// d vector components per node, component-major: values[c*nodes + node].
struct VectorField {
  Grid grid;
  std::vector<double> values;

  VectorField() = default;
  explicit VectorField(const Grid& g, double fill = 0.0)
      : grid(g), values(g.nodes() * g.dim(), fill) {}
  VectorField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    require(values.size() == grid.nodes() * grid.dim(), errc::invalid_parameter,
            "vector field size mismatch");
  }

  double* component(int c) { return values.data() + static_cast<std::size_t>(c) * grid.nodes(); }
  const double* component(int c) const {
    return values.data() + static_cast<std::size_t>(c) * grid.nodes();
  }
};

inline bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

/// Identity map: node coordinates as a VectorField.
inline VectorField identity_map(const Grid& g) {
  VectorField phi(g);
  const int d = g.dim();
  std::vector<int> idx(d, 0);
  for (std::size_t node = 0; node < g.nodes(); ++node) {
    std::size_t rem = node;
    for (int k = d - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % g.dims[k]);
      rem /= g.dims[k];
    }
    for (int c = 0; c < d; ++c) phi.component(c)[node] = idx[c] * g.spacing[c];
  }
  return phi;
}

}  // namespace mreg
