#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cgl/intmatrix.hpp"
#include "cgl/polynomial.hpp"
#include "cgl/roots.hpp"

namespace cgl {

/// Exact rational eigenvalue, or an isolated real algebraic one annotated
/// with a factor of the characteristic polynomial (irreducible when the
/// implemented factorization found it, square-free otherwise).
struct SpectralValue {
    bool rational = true;
    mpq_class value;     // rational case
    IntPoly factor;      // minimal/square-free factor (both cases)
    RootInterval iv;     // irrational case; for rationals lo == hi == value

    double approx() const;
    mpq_class lower() const { return rational ? value : iv.lo; }
    mpq_class upper() const { return rational ? value : iv.hi; }
};

struct SpectralEntry {
    SpectralValue v;
    int mult = 1;
};

struct SpectrumMultiset {
    int n = 0;                          // matrix dimension = sum of multiplicities
    std::vector<SpectralEntry> entries; // ascending by value

    int total_multiplicity() const;
    /// Interval enclosure of sum(value * mult).
    std::pair<mpq_class, mpq_class> trace_bounds() const;
};

/// Exact-first eigenvalue pipeline: exact characteristic polynomial,
/// integer roots by a sieve over the Gershgorin range (divisor-filtered),
/// exact multiplicities by square-free decomposition, remaining real roots
/// isolated by Sturm sequences and refined to width <= 2^-precision_bits.
SpectrumMultiset spectrum(const IntegerSymmetricMatrix& m, int precision_bits = 50);

/// Refine every irrational entry to width <= 2^-precision_bits.
void refine_spectrum(SpectrumMultiset& s, int precision_bits);

/// Two multisets agree when multiplicities match pairwise and values are
/// equal exactly (both rational) or within tol.
bool spectra_agree(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol = 1e-9);

}  // namespace cgl
