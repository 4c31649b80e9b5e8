#include "capflow/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "capflow/errors.hpp"

namespace capflow {

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels < 1) throw invalid_input("simpson: panels must be positive");
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double x0 = a + k * h;
    const double x1 = x0 + h;
    acc += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
  }
  return acc;
}

std::vector<double> panel_nodes(double a, double b, int panels,
                                const std::vector<double>& breakpoints) {
  if (!(a < b)) throw invalid_input("panel_nodes: empty interval");
  if (panels < 1) throw invalid_input("panel_nodes: panels must be positive");
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(panels) + breakpoints.size() + 2);
  for (int k = 0; k <= panels; ++k) {
    nodes.push_back(a + (b - a) * static_cast<double>(k) / panels);
  }
  nodes.front() = a;
  nodes.back() = b;
  for (double bp : breakpoints) {
    if (bp > a && bp < b) nodes.push_back(bp);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [&](double u, double v) { return v - u < 1e-15 * (b - a); }),
              nodes.end());
  nodes.back() = b;
  return nodes;
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& nodes) {
  if (nodes.size() < 2) throw invalid_input("cumulative_integral: need at least two nodes");
  std::vector<double> out(nodes.size(), 0.0);
  double fl = f(nodes[0]);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double x0 = nodes[k], x1 = nodes[k + 1];
    const double xm = 0.5 * (x0 + x1);
    const double fr = f(x1);
    const double fm = f(xm);
    const double fml = f(0.5 * (x0 + xm));
    const double fmr = f(0.5 * (xm + x1));
    const double h = 0.5 * (x1 - x0);
    out[k + 1] = out[k] + (h / 6.0) * (fl + 4.0 * fml + 2.0 * fm + 4.0 * fmr + fr);
    fl = fr;
  }
  return out;
}

double gauss5_average(const std::function<double(double)>& f, double a, double b) {
  static const double xi[5] = {0.0, -0.5384693101056831, 0.5384693101056831,
                               -0.9061798459386640, 0.9061798459386640};
  static const double wi[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                               0.2369268850561891, 0.2369268850561891};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) acc += wi[i] * f(mid + half * xi[i]);
  return 0.5 * acc;  // weights sum to 2 on the reference interval
}

}  // namespace capflow
