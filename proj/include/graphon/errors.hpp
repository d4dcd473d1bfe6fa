#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphon {

// Error taxonomy shared by the whole library.  The CLI maps these to process
// exit codes: ConfigError -> 2, DomainError -> 3, NumericError -> 4.

// Malformed or inconsistent user input: bad config files, unknown keys,
// unparsable documents, invalid flag combinations.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically inadmissible request: parameters outside the region where
// the requested quantity is defined (e.g. Katz alpha at or beyond the
// spectral bound, a degenerate block for PageRank, out-of-range arguments).
// `detail` optionally carries the quantity that determines the admissible
// range (e.g. the dominant eigenvalue for Katz).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what,
                       double detail = std::nan(""))
      : std::runtime_error(what), detail_(detail) {}
  double detail() const { return detail_; }

private:
  double detail_;
};

// A numerical procedure failed to meet its contract: non-convergence,
// ill-conditioning, exhausted refinement budgets.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what,
                        double detail = std::nan(""))
      : std::runtime_error(what), detail_(detail) {}
  double detail() const { return detail_; }

private:
  double detail_;
};

}  // namespace graphon
