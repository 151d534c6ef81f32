#pragma once

#include <gmpxx.h>

#include <vector>

#include "cgl/polynomial.hpp"

namespace cgl {

/// Open isolating interval (lo, hi) around a single real root; endpoints are
/// dyadic rationals that are never roots themselves.
struct RootInterval {
    mpq_class lo, hi;
    mpq_class mid() const { return (lo + hi) / 2; }
    mpq_class width() const { return hi - lo; }
};

/// Sturm chain of a square-free polynomial (integer arithmetic, sign-safe
/// pseudo-remainders, content stripped).
class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree);
    /// Number of distinct real roots in (a, b].
    int count_roots(const mpq_class& a, const mpq_class& b) const;
    int variations_at(const mpq_class& x) const;

private:
    std::vector<IntPoly> chain_;
};

/// Isolating intervals for every real root of a square-free polynomial with
/// no rational roots; all roots lie in [-bound, bound]. Ascending order.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p, long bound);

/// Bisect until width <= 2^-precision_bits.
void refine_root(const IntPoly& p, RootInterval& iv, int precision_bits);

/// Bisect until the point is strictly outside the interval (the root is known
/// not to equal it, e.g. an irrational root vs a rational point).
void refine_away_from(const IntPoly& p, RootInterval& iv, const mpq_class& point);

}  // namespace cgl
