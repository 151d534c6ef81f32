#include "cgl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgl {

Permutation Permutation::identity(int degree) {
    std::vector<int> m(degree);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

bool Permutation::is_bijection() const {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= degree() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map.size());
    for (int i = 0; i < degree(); ++i) inv[map[i]] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    std::vector<int> r(p.map.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.map[q.map[i]];
    return Permutation(std::move(r));
}

std::string Permutation::cycle_string() const {
    std::vector<char> seen(map.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || map[i] == i) continue;
        os << '(' << i;
        seen[i] = 1;
        for (int j = map[i]; j != i; j = map[j]) {
            os << ' ' << j;
            seen[j] = 1;
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

}  // namespace cgl
