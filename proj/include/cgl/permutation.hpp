#pragma once

#include <string>
#include <vector>

namespace cgl {

/// Permutation of {0..d-1}, stored as the image sequence.
/// Composition is function composition: (p*q)(x) = p(q(x)).
struct Permutation {
    std::vector<int> map;

    Permutation() = default;
    explicit Permutation(std::vector<int> m) : map(std::move(m)) {}

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(map.size()); }
    int operator()(int x) const { return map[x]; }

    bool is_bijection() const;
    Permutation inverse() const;
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    auto operator<=>(const Permutation&) const = default;
};

}  // namespace cgl
