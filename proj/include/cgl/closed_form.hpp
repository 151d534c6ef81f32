#pragma once

#include "cgl/intmatrix.hpp"
#include "cgl/shape.hpp"
#include "cgl/spectrum.hpp"

namespace cgl {

/// Component-wise closed-form spectra for shape-recognized graphs:
///   Clique(k):     A {k-1, (-1)^(k-1)}  L {0, k^(k-1)}
///                  Q {2k-2, (k-2)^(k-1)}  CN {(k-1)(k-2), (-(k-2))^(k-1)}
///   Friendship(m): A {(1+-sqrt(8m+1))/2, 1^(m-1), (-1)^m}
///                  L {0, 2m+1, 3^m, 1^(m-1)}  CN {2m, (-1)^(2m)}
///                  Q via the 7-point matrix, m = 3 only
/// Throws UnsupportedComponent for anything else.
SpectrumMultiset closed_form_spectrum(const ShapeDescriptor& shape, MatrixKind kind);

}  // namespace cgl
