#pragma once

#include <set>
#include <string>
#include <vector>

#include "cgl/graph.hpp"
#include "cgl/permutation.hpp"

namespace cgl {

/// Distinct centralizers of non-central elements, grouped by size.
/// Entries are (centralizer size, number of distinct centralizers), size descending.
struct CentralizerCensus {
    std::vector<std::pair<int, int>> entries;

    bool operator==(const CentralizerCensus&) const = default;
    std::string to_string() const;
};

/// Finite group as a closed multiplication table over element indices.
/// Element 0 is the identity. Immutable after construction.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
    int element_order(int a) const;

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<int>& table() const { return table_; }

    bool is_abelian() const;
    std::vector<int> center() const;
    std::vector<int> centralizer(int x) const;
    CentralizerCensus centralizer_census() const;
    bool is_ac_group() const;

    /// O(n^3) exhaustive check; intended for tests (closure construction
    /// already guarantees associativity).
    bool verify_associativity() const;

private:
    int n_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

/// Graph on non-central elements, edges between commuting pairs.
/// Vertex i corresponds to the i-th non-central element in index order;
/// vertices carry element labels. Throws AbelianGroup when the vertex set is empty.
SimpleGraph commuting_graph(const FiniteGroup& g);

struct GeneratedGroup {
    FiniteGroup group;
    std::vector<int> generator_index;  // where each input generator landed
};

/// Breadth-first closure of permutation generators; deterministic numbering
/// by discovery order with the identity first.
GeneratedGroup from_permutation_generators(const std::vector<Permutation>& gens, long cap = 10000);

/// 2x2 matrix over Z_p.
struct Mat2 {
    long a, b, c, d;
};

/// Abstract group generated by invertible 2x2 matrices over Z_p (p prime),
/// realized through the action on the p^2 column vectors.
GeneratedGroup from_matrix_generators(long p, const std::vector<Mat2>& gens, long cap = 10000);

}  // namespace cgl
