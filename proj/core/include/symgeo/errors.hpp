#pragma once

#include <stdexcept>

namespace symgeo {

/* A computed state violated one of the library's own invariants.  The
 * command-line driver maps this to its own exit code, distinct from bad
 * input. */
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace symgeo
