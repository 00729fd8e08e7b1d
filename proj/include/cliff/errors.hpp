#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

/// A mechanical check of a mathematical claim found a counterexample.
/// Distinct from std::invalid_argument (caller error) so the CLI can map it
/// to its own exit code.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cliff
