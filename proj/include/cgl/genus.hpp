#pragma once

#include <optional>
#include <string>

#include "cgl/graph.hpp"
#include "cgl/shape.hpp"

namespace cgl {

struct GenusReport {
    std::optional<long> exact;       // present iff every component is shape-recognized
    long euler_lower_bound = 0;      // sum of per-component Euler bounds
    std::string label;               // planar|toroidal|double-toroidal|triple-toroidal|genus>=4|unknown-bounded-below
};

/// Exact genus for graphs whose components are all cliques, friendship
/// graphs or graph D (complete-graph genus formula, 0 for the others,
/// additive over components); Euler lower bound otherwise.
GenusReport genus_classify(const SimpleGraph& g);
GenusReport genus_classify(const ShapeDescriptor& shape);

}  // namespace cgl
