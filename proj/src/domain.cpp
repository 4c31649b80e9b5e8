#include "capflow/domain.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "capflow/errors.hpp"
#include "capflow/quadrature.hpp"

namespace capflow {

DomainLayout::DomainLayout(std::vector<Layer> layers, double origin)
    : layers_(std::move(layers)), origin_(origin) {
  if (layers_.empty()) throw invalid_input("layout needs at least one layer");
  starts_.resize(layers_.size() + 1);
  starts_[0] = origin_;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (!(layers_[i].length > 0.0)) {
      throw invalid_input("layout: layer " + std::to_string(i) + " has non-positive length");
    }
    starts_[i + 1] = starts_[i] + layers_[i].length;
  }
  extent_ = starts_.back() - origin_;
}

std::size_t DomainLayout::layer_of(double x) const {
  for (std::size_t i = 0; i + 1 < layers_.size(); ++i) {
    if (x < starts_[i + 1]) return i;
  }
  return layers_.size() - 1;
}

Mesh build_mesh(const DomainLayout& layout, const std::vector<int>& cells_per_layer) {
  if (cells_per_layer.size() != layout.layer_count()) {
    throw invalid_input("build_mesh: cells_per_layer length must equal layer count");
  }
  Mesh mesh;
  mesh.layer_begin.reserve(layout.layer_count() + 1);
  for (std::size_t i = 0; i < layout.layer_count(); ++i) {
    const int n = cells_per_layer[i];
    if (n <= 0) {
      throw invalid_input("build_mesh: layer " + std::to_string(i) +
                          " needs a positive cell count");
    }
    mesh.layer_begin.push_back(mesh.centers.size());
    const double x0 = layout.layer_start(i);
    const double dx = layout.layer(i).length / n;
    for (int k = 0; k < n; ++k) {
      mesh.centers.push_back(x0 + (k + 0.5) * dx);
      mesh.widths.push_back(dx);
      mesh.cell_layer.push_back(i);
    }
  }
  mesh.layer_begin.push_back(mesh.centers.size());
  for (std::size_t k = 0; k + 1 < layout.layer_count(); ++k) {
    mesh.interface_left_cell.push_back(mesh.layer_begin[k + 1] - 1);
  }
  return mesh;
}

InitialData::InitialData(std::vector<std::function<double(double)>> layer_rules)
    : rules_(std::move(layer_rules)) {
  if (rules_.empty()) throw invalid_input("initial data needs at least one layer rule");
  for (const auto& r : rules_) {
    if (!r) throw invalid_input("initial data rule is empty");
  }
}

InitialData InitialData::uniform(std::function<double(double)> rule, std::size_t layer_count) {
  std::vector<std::function<double(double)>> rules(layer_count, std::move(rule));
  return InitialData(std::move(rules));
}

InitialData InitialData::constant(double value, std::size_t layer_count) {
  return uniform([value](double) { return value; }, layer_count);
}

std::pair<double, double> InitialData::traces(const DomainLayout& layout, std::size_t k) const {
  const double x = layout.interface_position(k);
  return {rules_[k](x), rules_[k + 1](x)};
}

State project_initial(const InitialData& u0, const DomainLayout& layout, const Mesh& mesh) {
  if (u0.layer_count() != layout.layer_count()) {
    throw invalid_input("project_initial: initial data layer count mismatch");
  }
  State state;
  state.t = 0.0;
  state.u.resize(mesh.cell_count());
  for (std::size_t k = 0; k < mesh.cell_count(); ++k) {
    const std::size_t layer = mesh.cell_layer[k];
    auto f = [&](double x) { return u0.eval(layer, x); };
    double v = gauss5_average(f, mesh.edge_left(k), mesh.edge_right(k));
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      throw invalid_input("project_initial: initial data leaves [0,1] at cell " +
                          std::to_string(k) + " (value " + std::to_string(v) + ")");
    }
    state.u[k] = std::min(1.0, std::max(0.0, v));
  }
  return state;
}

}  // namespace capflow
