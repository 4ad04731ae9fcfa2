#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibrect {

// Base of every error raised by the library. `kind()` is the stable,
// machine-readable name used by the CLI error line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error("DivisionByZero", what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what)
      : Error("IndexOutOfRange", what) {}
};

class NotAProperRectangle : public Error {
 public:
  explicit NotAProperRectangle(const std::string& what)
      : Error("NotAProperRectangle", what) {}
};

class StepBudgetExhausted : public Error {
 public:
  explicit StepBudgetExhausted(std::size_t budget)
      : Error("StepBudgetExhausted",
              "no violation found within " + std::to_string(budget) +
                  " steps"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class InvalidDimensions : public Error {
 public:
  explicit InvalidDimensions(const std::string& what)
      : Error("InvalidDimensions", what) {}
};

class PatternFailsBeforeK : public Error {
 public:
  PatternFailsBeforeK(std::size_t failing_step, std::size_t requested)
      : Error("PatternFailsBeforeK",
              "pattern fails at step " + std::to_string(failing_step) +
                  " before " + std::to_string(requested) +
                  " squares were cut"),
        failing_step_(failing_step) {}

  std::size_t failing_step() const noexcept { return failing_step_; }

 private:
  std::size_t failing_step_;
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& what)
      : Error("VerificationFailed", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// A well-formed tiling document that is not a valid paving. `failed()` names
// the checks that did not hold ("containment", "disjointness", "area", ...).
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(std::vector<std::string> failed)
      : Error("InvariantViolation", "invariant violated: " + join(failed)),
        failed_(std::move(failed)) {}

  const std::vector<std::string>& failed() const noexcept { return failed_; }

 private:
  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += ",";
      out += p;
    }
    return out;
  }

  std::vector<std::string> failed_;
};

class InvalidOptions : public Error {
 public:
  explicit InvalidOptions(const std::string& what)
      : Error("InvalidOptions", what) {}
};

}  // namespace fibrect
