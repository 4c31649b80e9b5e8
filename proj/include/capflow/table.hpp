#pragma once

#include <vector>

namespace capflow {

/// Shape-preserving cubic Hermite table (Fritsch-Carlson tangent limiting).
/// The interpolant never overshoots the data on any interval, so monotone
/// data yields a monotone interpolant. Evaluation outside [x_front, x_back]
/// clamps to the end values.
class CubicTable {
 public:
  CubicTable() = default;

  /// x strictly increasing, same length as y, at least 2 nodes.
  CubicTable(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double deriv(double x) const;

  /// Leftmost x with value(x) = y, for tables with nondecreasing values.
  /// y is clamped to [y_front, y_back]; flat stretches map to their left end.
  double inverse(double y) const;

  bool nondecreasing() const { return nondecreasing_; }
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }
  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }
  std::size_t size() const { return x_.size(); }

 private:
  std::size_t interval_of(double x) const;

  std::vector<double> x_, y_, m_;  // nodes, values, limited tangents
  bool nondecreasing_ = false;
};

}  // namespace capflow
