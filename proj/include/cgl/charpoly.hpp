#pragma once

#include "cgl/intmatrix.hpp"
#include "cgl/polynomial.hpp"

namespace cgl {

/// Exact monic characteristic polynomial det(xI - M) by the
/// Faddeev-LeVerrier recurrence (all divisions exact over Z).
/// Block-diagonal structure is detected and factored per block.
IntPoly char_poly(const IntegerSymmetricMatrix& m);

}  // namespace cgl
