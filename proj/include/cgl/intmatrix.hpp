#pragma once

#include <string>
#include <vector>

#include "cgl/graph.hpp"

namespace cgl {

enum class MatrixKind { A, L, Q, CN };

MatrixKind matrix_kind_from_string(const std::string& s);
std::string to_string(MatrixKind k);

struct IntegerSymmetricMatrix {
    int n = 0;
    std::vector<long> a;  // row-major

    explicit IntegerSymmetricMatrix(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}
    long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    long trace() const;
};

/// A: 0/1 adjacency; L = D - A; Q = D + A; CN(i,j) = common neighbour count
/// for i != j (any pair, adjacent or not), zero diagonal.
IntegerSymmetricMatrix matrix_of(const SimpleGraph& g, MatrixKind kind);

/// max_i sum_j |a_ij|; every eigenvalue lies in [-bound, bound].
long gershgorin_bound(const IntegerSymmetricMatrix& m);

}  // namespace cgl
