#include "cgl/genus.hpp"

namespace cgl {

namespace {

long clique_genus(long k) {
    if (k <= 3) return 0;
    return ((k - 3) * (k - 4) + 11) / 12;  // ceil((k-3)(k-4)/12)
}

long euler_lower_bound_component(long n, long m) {
    if (n < 3) return 0;
    const long num = m - 3 * n + 6;
    if (num <= 0) return 0;
    return (num + 5) / 6;  // ceil(num/6)
}

std::string label_for(long genus) {
    switch (genus) {
        case 0: return "planar";
        case 1: return "toroidal";
        case 2: return "double-toroidal";
        case 3: return "triple-toroidal";
        default: return "genus>=4 (" + std::to_string(genus) + ")";
    }
}

}  // namespace

GenusReport genus_classify(const ShapeDescriptor& shape) {
    GenusReport r;
    long euler = 0;
    long exact = 0;
    bool all_recognized = true;
    for (const auto& c : shape.components()) {
        euler += c.count * euler_lower_bound_component(c.n, c.m);
        switch (c.kind) {
            case ComponentKind::Clique:
                exact += c.count * clique_genus(c.param);
                break;
            case ComponentKind::Friendship:
            case ComponentKind::GraphD:
                break;  // planar pieces
            case ComponentKind::Other:
                all_recognized = false;
                break;
        }
    }
    r.euler_lower_bound = euler;
    if (all_recognized) {
        r.exact = exact;
        r.label = label_for(exact);
    } else {
        r.label = "unknown-bounded-below";
    }
    return r;
}

GenusReport genus_classify(const SimpleGraph& g) {
    return genus_classify(recognize_shape(g));
}

}  // namespace cgl
