#include "capflow/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "capflow/errors.hpp"
#include "capflow/quadrature.hpp"

namespace capflow {

MonotoneGraph::MonotoneGraph(const Medium& medium)
    : curve_(medium.capillary()), alpha_(medium.alpha()), beta_(medium.beta()) {}

MonotoneGraph::MonotoneGraph(Curve capillary, double alpha, double beta)
    : curve_(std::move(capillary)), alpha_(alpha), beta_(beta) {
  if (!(alpha_ < beta_)) throw invalid_input("monotone graph requires alpha < beta");
}

Interval MonotoneGraph::value_set(double s) const {
  if (s <= 0.0) return Interval::below(alpha_);
  if (s >= 1.0) return Interval::above(beta_);
  return Interval::point(curve_(s));
}

double MonotoneGraph::inverse(double p) const {
  double lo, hi;
  return inverse_with_bracket(p, lo, hi);
}

double MonotoneGraph::inverse_with_bracket(double p, double& s_lo, double& s_hi) const {
  if (p <= alpha_) {
    s_lo = s_hi = 0.0;
    return 0.0;
  }
  if (p >= beta_) {
    s_lo = s_hi = 1.0;
    return 1.0;
  }
  // pi(0) <= p <= pi(1): [0,1] brackets by monotonicity.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (curve_(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  s_lo = lo;
  s_hi = hi;
  return 0.5 * (lo + hi);
}

bool graphs_intersect(const MonotoneGraph& g1, double s1, const MonotoneGraph& g2, double s2) {
  return g1.value_set(s1).overlaps(g2.value_set(s2));
}

namespace {

KirchhoffTransform build_kirchhoff_impl(const Medium& medium, int panels, double scale) {
  if (panels < 64) throw invalid_input("build_kirchhoff: panels must be >= 64");
  const Curve& lam = medium.mobility();
  const Curve& pi = medium.capillary();
  auto integrand = [&](double s) { return scale * lam(s) * pi.deriv(s); };

  std::vector<double> bps = lam.breakpoints();
  bps.insert(bps.end(), pi.breakpoints().begin(), pi.breakpoints().end());

  const auto nodes = panel_nodes(0.0, 1.0, panels, bps);
  std::vector<double> values = cumulative_integral(integrand, nodes);
  const auto coarse_nodes = panel_nodes(0.0, 1.0, std::max(64, panels / 2), bps);
  const auto coarse = cumulative_integral(integrand, coarse_nodes);

  // Monotonicity check: allow only rounding-level decrements, then flatten them.
  const double span = std::max(std::fabs(values.back()), 1.0);
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double inc = values[k + 1] - values[k];
    if (inc < -1e-13 * span) {
      throw invalid_input("build_kirchhoff: decreasing primitive at s=" +
                          std::to_string(nodes[k + 1]) +
                          " (invalid mobility/capillary pair for medium '" + medium.label() +
                          "')");
    }
    if (inc < 0.0) values[k + 1] = values[k];
  }
  values.front() = 0.0;

  KirchhoffTransform F;
  F.table_ = CubicTable(nodes, values);
  F.mobility_ = lam;
  F.capillary_ = pi;
  F.scale_ = scale;
  F.panels_ = panels;
  double err = 0.0;
  err = std::fabs(values.back() - coarse.back());
  F.quad_error_ = err;
  return F;
}

}  // namespace

KirchhoffTransform build_kirchhoff(const Medium& medium, int panels) {
  return build_kirchhoff_impl(medium, panels, 1.0);
}

KirchhoffTransform build_kirchhoff_scaled(const Medium& medium, int panels, double scale) {
  return build_kirchhoff_impl(medium, panels, scale);
}

double KirchhoffTransform::inverse(double y) const { return table_.inverse(y); }

TruncatedPair::TruncatedPair(const Medium& m1, const Medium& m2)
    : g1_(m1),
      g2_(m2),
      alpha_(std::max(m1.alpha(), m2.alpha())),
      beta_(std::min(m1.beta(), m2.beta())),
      alpha_min_(std::min(m1.alpha(), m2.alpha())),
      beta_max_(std::max(m1.beta(), m2.beta())) {
  if (!(alpha_ < beta_)) throw no_overlap_error(alpha_, beta_);
}

double TruncatedPair::hat(int which, double s) const {
  const MonotoneGraph& g = graph(which);
  double v;
  if (s <= 0.0)
    v = g.alpha();
  else if (s >= 1.0)
    v = g.beta();
  else
    v = g.curve()(s);
  return std::min(beta_, std::max(alpha_, v));
}

Interval TruncatedPair::breve_set(int which, double s) const {
  const MonotoneGraph& g = graph(which);
  if (s <= 0.0) return {alpha_min_, g.alpha()};
  if (s >= 1.0) return {g.beta(), beta_max_};
  return Interval::point(g.curve()(s));
}

TruncatedPair truncate_pair(const Medium& m1, const Medium& m2) { return {m1, m2}; }

EquivalenceReport check_equivalence(const Medium& m1, const Medium& m2, int grid) {
  if (grid < 2) throw invalid_input("check_equivalence: grid must be >= 2");
  const TruncatedPair pair(m1, m2);  // propagates no_overlap_error
  const MonotoneGraph g1(m1), g2(m2);

  // All three predicates share one pressure cushion so that values equal in
  // exact arithmetic but a few ulp apart in floating point are classified
  // the same way by each condition.
  const double cushion = 1e-12;

  EquivalenceReport report;
  report.grid = grid;
  for (int i = 0; i < grid; ++i) {
    const double s1 = static_cast<double>(i) / (grid - 1);
    const Interval v1 = g1.value_set(s1);
    const Interval b1 = pair.breve_set(0, s1);
    const double h1 = pair.hat(0, s1);
    for (int j = 0; j < grid; ++j) {
      const double s2 = static_cast<double>(j) / (grid - 1);
      const bool hat_equal = std::fabs(h1 - pair.hat(1, s2)) <= cushion;
      const bool tilde = v1.overlaps(g2.value_set(s2), cushion);
      const bool breve = b1.overlaps(pair.breve_set(1, s2), cushion);
      if (hat_equal != tilde || tilde != breve) {
        if (report.disagreements == 0) {
          report.first_s1 = s1;
          report.first_s2 = s2;
        }
        ++report.disagreements;
      }
    }
  }
  return report;
}

bool PsiFunction::degenerate() const {
  if (psi_) return false;
  return true;  // built without overlap: integrand vanishes identically
}

double PsiFunction::psi(double p) const {
  if (!psi_) throw no_overlap_error(alpha_, beta_);
  return (*psi_)(std::min(beta_, std::max(alpha_, p)));
}

double PsiFunction::psi_tilde(double p) const {
  if (!psi_tilde_) return 0.0;
  if (p <= psi_tilde_->x_front()) return 0.0;
  if (p >= psi_tilde_->x_back()) return psi_tilde_->y_back();
  return (*psi_tilde_)(p);
}

namespace {

// min_j lambda_j(graph_j^{-1}(a)); vanishes wherever any side is pinned to a
// saturation endpoint with degenerate mobility.
double min_mobility_at(const MonotoneGraph& g1, const MonotoneGraph& g2, const Curve& lam1,
                       const Curve& lam2, double a) {
  const double v1 = lam1(g1.inverse(a));
  const double v2 = lam2(g2.inverse(a));
  return std::min(v1, v2);
}

}  // namespace

PsiFunction build_psi(const Medium& m1, const Medium& m2, int panels) {
  if (panels < 64) throw invalid_input("build_psi: panels must be >= 64");
  const MonotoneGraph g1(m1), g2(m2);
  const Curve& lam1 = m1.mobility();
  const Curve& lam2 = m2.mobility();
  const double alpha = std::max(m1.alpha(), m2.alpha());
  const double beta = std::min(m1.beta(), m2.beta());
  const double lo = std::min(m1.alpha(), m2.alpha());
  const double hi = std::max(m1.beta(), m2.beta());

  PsiFunction out;
  out.alpha_ = alpha;
  out.beta_ = beta;

  auto integrand = [&](double a) { return min_mobility_at(g1, g2, lam1, lam2, a); };

  if (alpha < beta) {
    const auto nodes = panel_nodes(alpha, beta, panels, {});
    auto values = cumulative_integral(integrand, nodes);
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      if (values[k + 1] < values[k]) values[k + 1] = values[k];
    }
    values.front() = 0.0;
    out.psi_.emplace(nodes, values);

    // Derivative bound for psi(pi_hat_i(F_i^{-1}(y))): equals
    // min_j lambda_j / lambda_i <= 1 wherever the clamp is inactive, zero
    // where it is active. Record the grid maximum as the usable estimate.
    const Medium* media[2] = {&m1, &m2};
    const MonotoneGraph* graphs[2] = {&g1, &g2};
    for (int i = 0; i < 2; ++i) {
      double bound = 0.0;
      for (int k = 1; k < 1000; ++k) {
        const double s = static_cast<double>(k) / 1000.0;
        const double p = graphs[i]->curve()(s);
        if (p <= alpha || p >= beta) continue;  // clamp active: derivative 0
        const double li = media[i]->mobility()(s);
        if (li <= 0.0) continue;
        bound = std::max(bound, integrand(p) / li);
      }
      out.lipschitz_[i] = std::max(bound, 1.0);
    }
  }

  {
    const auto nodes = panel_nodes(lo, hi, panels, {alpha, beta});
    auto values = cumulative_integral(integrand, nodes);
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      if (values[k + 1] < values[k]) values[k + 1] = values[k];
    }
    values.front() = 0.0;
    out.psi_tilde_.emplace(nodes, values);
  }
  return out;
}

}  // namespace capflow
