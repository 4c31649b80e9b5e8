#include "capflow/table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "capflow/errors.hpp"

namespace capflow {

CubicTable::CubicTable(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) {
    throw invalid_input("table needs at least two nodes and matching value count");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x_[i] < x_[i + 1])) {
      throw invalid_input("table nodes must be strictly increasing (index " +
                          std::to_string(i + 1) + ")");
    }
  }
  nondecreasing_ = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (y_[i + 1] < y_[i]) nondecreasing_ = false;
  }

  // Secant slopes and three-point tangent estimates.
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
  m_.assign(n, 0.0);
  m_[0] = d[0];
  m_[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m_[i] = 0.0;  // local extremum or flat
    } else {
      const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
      const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
      m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  // Fritsch-Carlson limiter: keep the interpolant inside each data interval.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      m_[i] = 0.0;
      m_[i + 1] = 0.0;
      continue;
    }
    const double a = m_[i] / d[i];
    const double b = m_[i + 1] / d[i];
    if (a < 0.0) m_[i] = 0.0;
    if (b < 0.0) m_[i + 1] = 0.0;
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double t = 3.0 / std::sqrt(s);
      m_[i] = t * a * d[i];
      m_[i + 1] = t * b * d[i];
    }
  }
}

std::size_t CubicTable::interval_of(double x) const {
  // index i with x in [x_[i], x_[i+1]]
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  if (i + 1 >= x_.size()) i = x_.size() - 2;
  return i;
}

double CubicTable::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const std::size_t i = interval_of(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double CubicTable::deriv(double x) const {
  if (x < x_.front() || x > x_.back()) return 0.0;
  const std::size_t i = interval_of(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double g00 = (6 * t2 - 6 * t) / h;
  const double g10 = 3 * t2 - 4 * t + 1;
  const double g01 = (-6 * t2 + 6 * t) / h;
  const double g11 = 3 * t2 - 2 * t;
  return g00 * y_[i] + g10 * m_[i] + g01 * y_[i + 1] + g11 * m_[i + 1];
}

double CubicTable::inverse(double y) const {
  if (!nondecreasing_) throw internal_error("inverse requires nondecreasing table values");
  if (y <= y_.front()) return x_.front();
  if (y >= y_.back()) return x_.back();
  // bracket by table values: first node with y_[k] >= y
  const auto it = std::lower_bound(y_.begin(), y_.end(), y);
  std::size_t k = static_cast<std::size_t>(it - y_.begin());
  if (k == 0) return x_.front();
  if (y_[k] == y) {
    // exact node hit; step back over a flat run to its left end
    while (k > 0 && y_[k - 1] == y) --k;
    return x_[k];
  }
  double lo = x_[k - 1], hi = x_[k];
  // interpolant is monotone inside the bracket; plain bisection
  for (int iter = 0; iter < 80 && hi - lo > 1e-16 * (1.0 + std::fabs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace capflow
