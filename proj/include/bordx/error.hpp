#pragma once

#include <stdexcept>
#include <string>

namespace bordx {

// A presentation or matrix does not describe what it claims to (quotient not
// infinite cyclic, rewriting system not triangular, singular vertex cone...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data that is well-formed but cannot come from an actual manifold.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bordx
