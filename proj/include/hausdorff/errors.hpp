#pragma once

#include <stdexcept>
#include <string>

namespace hausdorff {

/// Malformed input: wrong shapes, inconsistent dimensions, bad parameters.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation points left the representable domain of a sampled function
/// and the discarded contribution is not negligible. Carries the estimate.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double mass_estimate)
      : std::runtime_error(what), mass_estimate_(mass_estimate) {}
  double mass_estimate() const { return mass_estimate_; }

 private:
  double mass_estimate_;
};

/// The requested frequency exceeds the oscillatory-quadrature budget.
/// Refusal is explicit: callers get the achieved error estimate, not a
/// silently wrong number.
class OscillationBudgetError : public std::runtime_error {
 public:
  OscillationBudgetError(const std::string& what, double requested,
                         double budget)
      : std::runtime_error(what), requested_(requested), budget_(budget) {}
  double requested() const { return requested_; }
  double budget() const { return budget_; }

 private:
  double requested_;
  double budget_;
};

/// Operator fails the Gelfand invertibility condition inf|F| > 0.
class NotInvertibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hausdorff
