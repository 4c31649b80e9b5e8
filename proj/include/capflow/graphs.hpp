#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "capflow/curves.hpp"
#include "capflow/table.hpp"

namespace capflow {

/// Closed pressure interval [lo,hi]; rays are encoded with +-infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  static Interval below(double v) { return {-std::numeric_limits<double>::infinity(), v}; }
  static Interval above(double v) { return {v, std::numeric_limits<double>::infinity()}; }

  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool overlaps(const Interval& o, double slack) const {
    return lo <= o.hi + slack && o.lo <= hi + slack;
  }
};

/// Capillary pressure curve extended by vertical rays: the value set is
/// (-inf, alpha] at s=0, [beta, +inf) at s=1 and the singleton {pi(s)} inside.
/// The inverse is the total nondecreasing map R -> [0,1].
class MonotoneGraph {
 public:
  explicit MonotoneGraph(const Medium& medium);
  MonotoneGraph(Curve capillary, double alpha, double beta);

  Interval value_set(double s) const;

  /// The unique s with p in the value set: 0 below alpha, 1 above beta,
  /// otherwise the curve inverse by bracketed bisection (|ds| <= 1e-12).
  double inverse(double p) const;

  /// Same root, but also reports the final bisection bracket [s_lo, s_hi]
  /// with pi(s_lo) <= p <= pi(s_hi) guaranteed by the sign checks performed
  /// during the solve. The graph image of that bracket is an exact enclosure
  /// of the pressure value at the returned trace.
  double inverse_with_bracket(double p, double& s_lo, double& s_hi) const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const Curve& curve() const { return curve_; }

 private:
  Curve curve_;
  double alpha_, beta_;
};

/// Value sets of two graphs share a point (interval overlap, no tolerance).
bool graphs_intersect(const MonotoneGraph& g1, double s1, const MonotoneGraph& g2, double s2);

/// Strictly increasing primitive F(s) = int_0^s lambda * pi' da, tabulated at
/// quadrature nodes with F(0) = 0, plus its inverse on [0, F(1)].
class KirchhoffTransform {
 public:
  KirchhoffTransform() = default;

  double operator()(double s) const { return table_(s); }
  double inverse(double y) const;

  /// Exact integrand lambda(s) * pi'(s); the slope of F.
  double slope(double s) const { return mobility_(s) * capillary_.deriv(s); }

  double upper() const { return table_.y_back(); }  // F(1)
  int panels() const { return panels_; }
  /// Richardson-style estimate |F_panels - F_panels/2| recorded at build time.
  double quadrature_error_estimate() const { return quad_error_; }
  const CubicTable& table() const { return table_; }

 private:
  friend KirchhoffTransform build_kirchhoff(const Medium&, int);
  friend KirchhoffTransform build_kirchhoff_scaled(const Medium&, int, double);

  CubicTable table_;
  Curve mobility_, capillary_;
  double scale_ = 1.0;  // range renormalization factor applied to the table
  int panels_ = 0;
  double quad_error_ = 0.0;
};

/// Tabulate F by composite Simpson on `panels` uniform panels (split at the
/// curves' breakpoints). Throws invalid_input for panels < 64 or if the
/// table decreases beyond rounding.
KirchhoffTransform build_kirchhoff(const Medium& medium, int panels);

/// Same, with the integrand scaled by a constant factor (used by the
/// regularization ladder to renormalize the range).
KirchhoffTransform build_kirchhoff_scaled(const Medium& medium, int panels, double scale);

/// Truncated capillary pressures of a two-media pair on the common pressure
/// interval [alpha, beta] = [max(alpha_i), min(beta_i)], plus the bounded-ray
/// graph variants. Only constructible in the overlap case alpha < beta.
class TruncatedPair {
 public:
  TruncatedPair(const Medium& m1, const Medium& m2);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// pi_hat_i(s): the capillary value clamped to [alpha, beta]. For pairs
  /// whose ranges are ordered end-to-end this reduces to the one-sided
  /// truncations max(alpha, pi_1) and min(beta, pi_2).
  double hat(int which, double s) const;

  /// Bounded-ray graph value set: [min_j(alpha_j), alpha_i] at s=0,
  /// [beta_i, max_j(beta_j)] at s=1, singleton inside.
  Interval breve_set(int which, double s) const;

  const MonotoneGraph& graph(int which) const { return which == 0 ? g1_ : g2_; }

 private:
  MonotoneGraph g1_, g2_;
  double alpha_, beta_;        // overlap interval
  double alpha_min_, beta_max_;  // bounded-ray extremes
};

/// Throws no_overlap_error when max(alpha_i) >= min(beta_i).
TruncatedPair truncate_pair(const Medium& m1, const Medium& m2);

struct EquivalenceReport {
  int grid = 0;
  long disagreements = 0;
  double first_s1 = -1.0, first_s2 = -1.0;  // first disagreeing lattice point, if any
};

/// Compare the three transmission conditions (truncated equality, graph
/// intersection, bounded-ray intersection) on a grid x grid saturation
/// lattice. All three predicates share a 1e-12 pressure cushion so that
/// exact-arithmetic ties are classified consistently.
EquivalenceReport check_equivalence(const Medium& m1, const Medium& m2, int grid);

/// Integral of the minimum mobility along the pressure axis. psi is defined
/// on the overlap interval [alpha,beta]; psi_tilde on the full working
/// interval [min(alpha_i), max(beta_i)] and is identically zero in the
/// barrier case.
class PsiFunction {
 public:
  bool has_overlap() const { return static_cast<bool>(psi_); }
  bool degenerate() const;  // barrier case: psi_tilde == 0 everywhere

  double psi(double p) const;        // requires has_overlap()
  double psi_tilde(double p) const;  // total

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Build-time bound on the derivative of psi(pi_hat_i(F_i^{-1}(.))) for
  /// medium i in {0,1}; the composition is 1-Lipschitz in exact arithmetic.
  double lipschitz_bound(int which) const { return lipschitz_[which]; }

 private:
  friend PsiFunction build_psi(const Medium&, const Medium&, int);
  friend PsiFunction build_psi_n_impl(const MonotoneGraph&, const MonotoneGraph&,
                                      const Curve&, const Curve&, double, double, int);

  std::optional<CubicTable> psi_;
  std::optional<CubicTable> psi_tilde_;
  double alpha_ = 0.0, beta_ = 0.0;
  double lipschitz_[2] = {0.0, 0.0};
};

/// Tabulate psi (overlap case only; otherwise only psi_tilde is present)
/// with composite Simpson on `panels` panels.
PsiFunction build_psi(const Medium& m1, const Medium& m2, int panels);

}  // namespace capflow
