#include "capflow/curves.hpp"

#include <cmath>
#include <utility>

#include "capflow/errors.hpp"

namespace capflow {

namespace {

struct PolyImpl final : Curve::Impl {
  std::vector<double> c;  // ascending powers
  double value(double s) const override {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * s + c[i];
    return v;
  }
  double deriv(double s) const override {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) v = v * s + c[i] * static_cast<double>(i);
    return v;
  }
};

struct TableImpl final : Curve::Impl {
  CubicTable t;
  double value(double s) const override { return t(s); }
  double deriv(double s) const override { return t.deriv(s); }
};

struct RuleImpl final : Curve::Impl {
  std::function<double(double)> f, df;
  double value(double s) const override { return f(s); }
  double deriv(double s) const override { return df(s); }
};

}  // namespace

Curve Curve::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw invalid_input("polynomial curve needs at least one coefficient");
  auto impl = std::make_shared<PolyImpl>();
  impl->c = std::move(coeffs);
  return Curve(impl);
}

Curve Curve::table(std::vector<double> x, std::vector<double> y) {
  auto impl = std::make_shared<TableImpl>();
  impl->t = CubicTable(std::move(x), std::move(y));
  impl->breakpoints = impl->t.xs();
  return Curve(impl);
}

Curve Curve::rule(std::function<double(double)> value, std::function<double(double)> deriv,
                  std::vector<double> breakpoints) {
  if (!value || !deriv) throw invalid_input("rule curve needs value and derivative callables");
  auto impl = std::make_shared<RuleImpl>();
  impl->f = std::move(value);
  impl->df = std::move(deriv);
  impl->breakpoints = std::move(breakpoints);
  return Curve(impl);
}

Curve Curve::sampled(const Curve& c, int nodes) {
  if (nodes < 2) throw invalid_input("sampled curve needs at least two nodes");
  std::vector<double> x(static_cast<std::size_t>(nodes)), y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<double>(i) / static_cast<double>(nodes - 1);
    y[i] = c(x[i]);
  }
  return table(std::move(x), std::move(y));
}

bool Curve::is_polynomial() const { return dynamic_cast<const PolyImpl*>(impl_.get()) != nullptr; }
bool Curve::is_table() const { return dynamic_cast<const TableImpl*>(impl_.get()) != nullptr; }

const std::vector<double>& Curve::poly_coeffs() const {
  auto* p = dynamic_cast<const PolyImpl*>(impl_.get());
  if (!p) throw internal_error("curve is not polynomial");
  return p->c;
}

const CubicTable& Curve::table_data() const {
  auto* p = dynamic_cast<const TableImpl*>(impl_.get());
  if (!p) throw internal_error("curve is not a table");
  return p->t;
}

Medium::Medium(double porosity, Curve mobility, Curve capillary, std::string label)
    : porosity_(porosity),
      mobility_(std::move(mobility)),
      capillary_(std::move(capillary)),
      label_(std::move(label)) {
  const std::string where = label_.empty() ? std::string("medium") : "medium '" + label_ + "'";
  if (!(porosity_ > 0.0) || porosity_ > 1.0) {
    throw invalid_input(where + ": porosity must be in (0,1], got " + std::to_string(porosity_));
  }
  const int samples = 257;
  for (int i = 0; i <= samples; ++i) {
    const double s = static_cast<double>(i) / samples;
    if (mobility_(s) < -1e-14) {
      throw invalid_input(where + ": mobility is negative at s=" + std::to_string(s));
    }
    if (i > 0 && i < samples && capillary_.deriv(s) <= 0.0) {
      throw invalid_input(where + ": capillary pressure is not strictly increasing at s=" +
                          std::to_string(s));
    }
  }
  alpha_ = capillary_(0.0);
  beta_ = capillary_(1.0);
  if (!(alpha_ < beta_)) {
    throw invalid_input(where + ": capillary endpoints must satisfy pi(0) < pi(1)");
  }
}

bool Medium::degenerate_mobility() const {
  return std::fabs(mobility_(0.0)) < 1e-14 && std::fabs(mobility_(1.0)) < 1e-14;
}

}  // namespace capflow
