#pragma once

#include <string>
#include <vector>

#include "cgl/graph.hpp"

namespace cgl {

enum class ComponentKind { Clique, Friendship, GraphD, Other };

/// One component class of a shape decomposition.
/// param is k for Clique(k), m for Friendship(m), unused otherwise.
struct ShapeComponent {
    ComponentKind kind;
    int param = 0;
    int n = 0;
    long m = 0;
    std::string cert;  // canonical certificate for Other components
    int count = 1;

    bool same_class(const ShapeComponent& o) const {
        return kind == o.kind && param == o.param && n == o.n && m == o.m && cert == o.cert;
    }
    std::string term_string() const;
};

/// Canonical multiset of recognized components.
class ShapeDescriptor {
public:
    ShapeDescriptor() = default;
    explicit ShapeDescriptor(std::vector<ShapeComponent> comps);

    const std::vector<ShapeComponent>& components() const { return comps_; }
    int total_n() const;
    long total_m() const;
    bool fully_recognized() const;  // no Other components
    std::string to_string() const;

    bool operator==(const ShapeDescriptor& o) const;

private:
    std::vector<ShapeComponent> comps_;  // canonical order, counts aggregated
};

/// Grammar: K<n>, F<m>, D, <int>*<term>, <term> + <term> (disjoint union),
/// <term> v <term> (join). '*' may be omitted after the integer.
SimpleGraph build_shape(const std::string& expr);

ShapeDescriptor recognize_shape(const SimpleGraph& g);

/// The 9-vertex graph obtained from 4K3 by three vertex contractions.
SimpleGraph graph_d();

/// Canonical form under relabeling; exhaustive for n <= 10, degree-sequence
/// certificate above that.
std::string canonical_certificate(const SimpleGraph& g);

}  // namespace cgl
