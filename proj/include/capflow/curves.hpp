#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "capflow/table.hpp"

namespace capflow {

/// A scalar constitutive curve on [0,1]: capillary pressure or mobility.
/// Three interchangeable backings: polynomial coefficients (evaluated
/// exactly), a shape-preserving cubic table, or an arbitrary C^1 rule.
/// Immutable value type; copies share the backing.
class Curve {
 public:
  Curve() = default;

  static Curve polynomial(std::vector<double> coeffs);
  static Curve table(std::vector<double> x, std::vector<double> y);
  static Curve rule(std::function<double(double)> value, std::function<double(double)> deriv,
                    std::vector<double> breakpoints = {});

  /// Resample any curve onto a uniform table (used for preset export).
  static Curve sampled(const Curve& c, int nodes);

  double operator()(double s) const { return impl_->value(s); }
  double deriv(double s) const { return impl_->deriv(s); }

  /// Interior points where the curve is only piecewise smooth.
  /// Quadrature splits panels here.
  const std::vector<double>& breakpoints() const { return impl_->breakpoints; }

  bool is_polynomial() const;
  bool is_table() const;
  const std::vector<double>& poly_coeffs() const;
  const CubicTable& table_data() const;

  struct Impl {
    virtual ~Impl() = default;
    virtual double value(double s) const = 0;
    virtual double deriv(double s) const = 0;
    std::vector<double> breakpoints;
  };

 private:
  explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// One homogeneous layer: porosity plus its mobility and capillary curves.
/// Construction validates:
///   - porosity in (0,1]  (1 admits the linear-diffusion verification medium),
///   - mobility >= 0 on a sample grid,
///   - capillary strictly increasing on a sample grid.
/// Degenerate mobility (lambda(0)=lambda(1)=0) is the physical case but is
/// not forced, for the same reason porosity 1 is allowed.
class Medium {
 public:
  Medium(double porosity, Curve mobility, Curve capillary, std::string label = "");

  double porosity() const { return porosity_; }
  const Curve& mobility() const { return mobility_; }
  const Curve& capillary() const { return capillary_; }
  const std::string& label() const { return label_; }

  /// Capillary endpoints: alpha = pi(0), beta = pi(1).
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// True if the mobility vanishes at both saturation endpoints.
  bool degenerate_mobility() const;

 private:
  double porosity_ = 0.0;
  Curve mobility_, capillary_;
  std::string label_;
  double alpha_ = 0.0, beta_ = 0.0;
};

}  // namespace capflow
