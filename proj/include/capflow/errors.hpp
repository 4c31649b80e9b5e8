#pragma once

#include <stdexcept>
#include <string>

namespace capflow {

/// Invalid user input (bad curve data, bad config field, out-of-range value).
/// The message carries a field path or parameter name.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The capillary ranges of two media do not overlap (max alpha >= min beta),
/// so truncated pressures and the psi function on [alpha,beta] do not exist.
/// Callers fall back to the graph form of the transmission condition.
class no_overlap_error : public std::runtime_error {
 public:
  no_overlap_error(double alpha, double beta)
      : std::runtime_error("capillary ranges do not overlap: max(alpha_i)=" +
                           std::to_string(alpha) + " >= min(beta_i)=" + std::to_string(beta)),
        alpha_(alpha),
        beta_(beta) {}
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_, beta_;
};

/// A time step failed to converge after Newton, Gauss-Seidel fallback and
/// the allowed number of dt halvings.
class solver_failure : public std::runtime_error {
 public:
  solver_failure(const std::string& msg, double time, double residual)
      : std::runtime_error(msg), time_(time), residual_(residual) {}
  double time() const { return time_; }
  double residual() const { return residual_; }

 private:
  double time_, residual_;
};

/// Internal consistency violation (e.g. a root bracket that cannot exist
/// for valid curves). Indicates a bug or corrupted curve data, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace capflow
