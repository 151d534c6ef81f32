#include "cgl/intmatrix.hpp"

#include <cstdlib>

#include "cgl/errors.hpp"

namespace cgl {

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "A" || s == "a") return MatrixKind::A;
    if (s == "L" || s == "l") return MatrixKind::L;
    if (s == "Q" || s == "q") return MatrixKind::Q;
    if (s == "CN" || s == "cn") return MatrixKind::CN;
    throw Error("unknown matrix kind: " + s);
}

std::string to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::A: return "A";
        case MatrixKind::L: return "L";
        case MatrixKind::Q: return "Q";
        case MatrixKind::CN: return "CN";
    }
    return "?";
}

long IntegerSymmetricMatrix::trace() const {
    long t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

IntegerSymmetricMatrix matrix_of(const SimpleGraph& g, MatrixKind kind) {
    const int n = g.n();
    IntegerSymmetricMatrix m(n);
    switch (kind) {
        case MatrixKind::A:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = g.adjacent(i, j) ? 1 : 0;
            break;
        case MatrixKind::L:
        case MatrixKind::Q: {
            const long sign = kind == MatrixKind::L ? -1 : 1;
            for (int i = 0; i < n; ++i) {
                m.at(i, i) = g.degree(i);
                for (int j = 0; j < n; ++j)
                    if (g.adjacent(i, j)) m.at(i, j) = sign;
            }
            break;
        }
        case MatrixKind::CN:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    long c = 0;
                    for (int k = 0; k < n; ++k)
                        if (k != i && k != j && g.adjacent(i, k) && g.adjacent(j, k)) ++c;
                    m.at(i, j) = m.at(j, i) = c;
                }
            break;
    }
    return m;
}

long gershgorin_bound(const IntegerSymmetricMatrix& m) {
    long bound = 0;
    for (int i = 0; i < m.n; ++i) {
        long row = 0;
        for (int j = 0; j < m.n; ++j) row += std::labs(m.at(i, j));
        bound = std::max(bound, row);
    }
    return bound;
}

}  // namespace cgl
