#pragma once

#include <stdexcept>
#include <string>

namespace dualhs {

/// An input violates a hypothesis an operation relies on (non-m-primary
/// ideal, non-MCM module, unsupported ring regime, ...). The message names
/// the hypothesis.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : std::runtime_error("hypothesis unmet: " + hypothesis +
                           (detail.empty() ? "" : " (" + detail + ")")),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A search with a finite budget gave up (postulation not reached, no
/// reduction found, retry budget exhausted).
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dualhs
