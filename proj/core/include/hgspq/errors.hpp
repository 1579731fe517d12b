#pragma once

#include <stdexcept>
#include <string>

namespace hgspq {

// Precondition on an arithmetic or group-theoretic input was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size cap (group order, lattice size, search budget) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A derived quantity broke an invariant that must hold if the
// classification is correct (non-integral counting quotient, unmatched
// closed form, ...). Always a bug or a genuine counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hgspq
