#ifndef GAUSSGRASS_ERRORS_HPP
#define GAUSSGRASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaussgrass {

// Computation-level failure: degenerate family, point outside a chart,
// inconsistent linear system, empty dual fiber, ...
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: expression syntax, family-file schema, bad field spec,
// bad command arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussgrass

#endif
