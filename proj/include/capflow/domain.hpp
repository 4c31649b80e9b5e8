#pragma once

#include <functional>
#include <vector>

#include "capflow/curves.hpp"

namespace capflow {

/// Cell-averaged saturations at one time.
struct State {
  double t = 0.0;
  std::vector<double> u;
};

/// Ordered homogeneous layers with lengths; interfaces sit between
/// consecutive layers. `origin` is the coordinate of the left end.
class DomainLayout {
 public:
  struct Layer {
    Medium medium;
    double length;
  };

  DomainLayout(std::vector<Layer> layers, double origin = 0.0);

  std::size_t layer_count() const { return layers_.size(); }
  const Layer& layer(std::size_t i) const { return layers_[i]; }
  const std::vector<Layer>& layers() const { return layers_; }

  double origin() const { return origin_; }
  double extent() const { return extent_; }
  double layer_start(std::size_t i) const { return starts_[i]; }
  double layer_end(std::size_t i) const { return starts_[i + 1]; }

  /// Interface k separates layers k and k+1.
  std::size_t interface_count() const { return layers_.size() - 1; }
  double interface_position(std::size_t k) const { return starts_[k + 1]; }

  /// Layer containing x; points on an interface belong to the right layer.
  std::size_t layer_of(double x) const;

 private:
  std::vector<Layer> layers_;
  double origin_, extent_;
  std::vector<double> starts_;  // layer_count()+1 entries
};

/// Cell-centered mesh, uniform within each layer; interfaces coincide with
/// cell edges exactly.
struct Mesh {
  std::vector<double> centers;
  std::vector<double> widths;
  std::vector<std::size_t> cell_layer;    // cell -> layer
  std::vector<std::size_t> layer_begin;   // first cell of each layer, plus total count
  std::vector<std::size_t> interface_left_cell;  // interface k -> left cell index

  std::size_t cell_count() const { return centers.size(); }
  std::size_t interface_count() const { return interface_left_cell.size(); }
  double edge_left(std::size_t k) const { return centers[k] - 0.5 * widths[k]; }
  double edge_right(std::size_t k) const { return centers[k] + 0.5 * widths[k]; }
};

Mesh build_mesh(const DomainLayout& layout, const std::vector<int>& cells_per_layer);

/// Initial data as one rule per layer (one-sided interface limits are then
/// plain evaluations at the interface coordinate).
class InitialData {
 public:
  InitialData() = default;
  InitialData(std::vector<std::function<double(double)>> layer_rules);

  /// Same rule in every layer.
  static InitialData uniform(std::function<double(double)> rule, std::size_t layer_count);
  static InitialData constant(double value, std::size_t layer_count);

  std::size_t layer_count() const { return rules_.size(); }
  double eval(std::size_t layer, double x) const { return rules_[layer](x); }

  /// One-sided traces at interface k: (left limit, right limit).
  std::pair<double, double> traces(const DomainLayout& layout, std::size_t k) const;

 private:
  std::vector<std::function<double(double)>> rules_;
};

/// Cell averages by 5-point Gauss-Legendre per cell. Values must lie in
/// [0,1] up to 1e-12 (then clamped); anything further out is a data error.
State project_initial(const InitialData& u0, const DomainLayout& layout, const Mesh& mesh);

}  // namespace capflow
