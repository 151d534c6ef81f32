#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cgl {

/// Finite simple undirected graph, dense adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    long m() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    void add_edge(int u, int v);
    int degree(int v) const;
    std::vector<int> degrees() const;

    SimpleGraph complement() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::string> labels_;  // optional, for DOT export
};

/// Connected component with back-references into the parent graph.
struct GraphComponent {
    SimpleGraph graph;
    std::vector<int> vertices;  // component index -> original vertex
};

/// Components ordered by smallest original vertex.
std::vector<GraphComponent> components(const SimpleGraph& g);

/// DOT rendering, one graph per file; components get distinct colors.
void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name);

}  // namespace cgl
