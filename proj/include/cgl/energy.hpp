#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "cgl/graph.hpp"
#include "cgl/spectrum.hpp"

namespace cgl {

/// Certified enclosure of an energy value; exact rational when detected.
struct EnergyValue {
    mpq_class lo, hi;
    bool exact = false;
    mpq_class value;  // set iff exact

    double mid() const;
    std::string decimal() const;  // 6 places, round-half-away from the midpoint
};

/// -1, 0, +1, or nullopt when the enclosures overlap without an exact witness.
std::optional<int> certified_compare(const EnergyValue& a, const EnergyValue& b);
std::optional<int> certified_compare(const EnergyValue& a, const mpq_class& t);

struct EnergyReport {
    long n = 0;
    long m = 0;
    EnergyValue E, LE, LEplus, ECN;
    bool hypoenergetic = false;
    bool hyperenergetic = false;
    bool l_hyper = false;
    bool q_hyper = false;
    bool cn_hyper = false;
    std::string ordering;  // e.g. "E<LE+<LE", "E=LE=LE+"
};

/// Sum of |value - shift| over a spectrum, with exact rational contributions
/// kept exact. A full set of same-signed conjugate roots of one factor also
/// contributes exactly (via the trace of the factor).
EnergyValue energy_from_spectrum(const SpectrumMultiset& s, const mpq_class& shift);

/// E over A, LE / LE+ over L / Q shifted by 2m/n, E_CN over CN; flags against
/// the K_n baselines; total order of {E, LE, LE+} with certified ties only.
/// n <= 1 yields zero energies and false flags. When spectra_out is given it
/// receives the four spectra at their final refinement.
EnergyReport energies(const SimpleGraph& g,
                      std::map<MatrixKind, SpectrumMultiset>* spectra_out = nullptr);

std::string ele_ordering(const SimpleGraph& g);

}  // namespace cgl
