#pragma once

#include <gmpxx.h>

#include "cgl/graph.hpp"

namespace cgl {

/// Zagreb indices with the Hansen-Vukicevic verdict.
/// The verdict is decided by the cross-multiplied integer comparison
/// M2*n vs M1*m; ratios are exact rationals. has_hv is false when m = 0.
struct ZagrebReport {
    long n = 0;
    long m = 0;
    mpz_class M1;
    mpz_class M2;
    bool has_hv = false;
    mpq_class hv_lhs;  // M2/m
    mpq_class hv_rhs;  // M1/n
    bool hv_holds = false;
    bool hv_equality = false;
};

ZagrebReport zagreb_indices(const SimpleGraph& g);

/// Same as zagreb_indices but requires at least one edge.
ZagrebReport hv_check(const SimpleGraph& g);

struct ComplementZagreb {
    mpz_class M1;
    mpq_class M2;  // integral for actual graphs; callers assert
};

/// Complement transfer formulas applied exactly.
ComplementZagreb complement_zagreb(long n, long m, const mpz_class& M1, const mpz_class& M2);

}  // namespace cgl
