#ifndef WALG_ERRORS_HPP
#define WALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walg {

/// Caller passed arguments violating a documented precondition.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input is well-formed but mathematically inadmissible (e.g. a
/// non-nilpotent element where a nilpotent one is required).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// An internal invariant failed.  These signal bugs, not bad input:
/// a proved structural identity did not hold in the computation.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace walg

#endif
