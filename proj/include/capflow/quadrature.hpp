#pragma once

#include <functional>
#include <vector>

namespace capflow {

/// Composite Simpson rule over [a,b] with `panels` equal panels.
double simpson(const std::function<double(double)>& f, double a, double b, int panels);

/// Node set for a piecewise-smooth integrand: `panels` uniform nodes over
/// [a,b] merged with the interior breakpoints. Sorted, deduplicated.
std::vector<double> panel_nodes(double a, double b, int panels,
                                const std::vector<double>& breakpoints);

/// Cumulative integral tabulated at the given nodes: out[k] = int_{nodes[0]}^{nodes[k]} f.
/// Each internode interval is integrated with a two-panel Simpson rule, so
/// the result is exact for cubics piecewise and O(h^5) per interval otherwise.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& nodes);

/// 5-point Gauss-Legendre average of f over [a,b] (exact through degree 9).
double gauss5_average(const std::function<double(double)>& f, double a, double b);

}  // namespace capflow
