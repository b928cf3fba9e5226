#pragma once

#include <stdexcept>
#include <vector>

#include "ouro/checker.hpp"

namespace ouro {

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Sorted, deduplicated value set. `exact` is true when it came from full
// enumeration of a finite domain; sampled sets compare by tolerance.
struct ScalarSet {
  std::vector<Scalar> values;
  bool exact = false;
};

struct ImageReport {
  ScalarSet image;
  ScalarSet fixed;
  bool equal = false;
};

// f applied over the enumerated or sampled domain. Inputs whose output is
// undefined are skipped; the set covers the defined part.
ScalarSet image(const FunctionDef& f, const CheckConfig& cfg);

// Points t of the base domain with f(t) = t up to tolerance; arity >= 2
// uses the diagonal t -> f(t,...,t).
ScalarSet fixed_points(const FunctionDef& f, const CheckConfig& cfg);

// Requires a Holds/HoldsProbably verdict for f; throws PreconditionError
// otherwise. Finite domains compare the two sets exactly; sampled sets by
// two-sided nearest-neighbor distance within tolerance.
ImageReport verify_fix_equals_image(const FunctionDef& f,
                                    const CheckConfig& cfg);

}  // namespace ouro
