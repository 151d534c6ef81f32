#include "cgl/graph.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace cgl {

void SimpleGraph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    if (adjacent(u, v)) return;
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    ++m_;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
    return d;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    c.labels_ = labels_;
    return c;
}

std::vector<GraphComponent> components(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<int> comp(n, -1);
    std::vector<GraphComponent> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> verts;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) && comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        SimpleGraph sub(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (g.adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (!g.labels().empty()) {
            std::vector<std::string> labels;
            labels.reserve(verts.size());
            for (int v : verts) labels.push_back(g.labels()[v]);
            sub.set_labels(std::move(labels));
        }
        out.push_back(GraphComponent{std::move(sub), std::move(verts)});
    }
    // discovery order already visits by smallest original vertex
    return out;
}

void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    const auto comps = components(g);
    std::vector<int> color(g.n(), 0);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].vertices) color[v] = static_cast<int>(c % 10);
    os << "graph \"" << name << "\" {\n";
    os << "  node [style=filled];\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  v" << v << " [fillcolor=\"" << palette[color[v]] << "\"";
        if (!g.labels().empty()) os << ", label=\"" << g.labels()[v] << "\"";
        os << "];\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
}

}  // namespace cgl
