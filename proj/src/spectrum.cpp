#include "cgl/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cgl/charpoly.hpp"
#include "cgl/errors.hpp"

namespace cgl {

double SpectralValue::approx() const {
    if (rational) return value.get_d();
    return (iv.lo.get_d() + iv.hi.get_d()) / 2;
}

int SpectrumMultiset::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries) total += e.mult;
    return total;
}

std::pair<mpq_class, mpq_class> SpectrumMultiset::trace_bounds() const {
    mpq_class lo = 0, hi = 0;
    for (const auto& e : entries) {
        lo += e.v.lower() * e.mult;
        hi += e.v.upper() * e.mult;
    }
    return {lo, hi};
}

namespace {

IntPoly linear_factor(const mpq_class& r) {
    // q x - p for r = p/q
    return IntPoly(std::vector<mpz_class>{-r.get_num(), r.get_den()});
}

// All integer roots of a monic integer polynomial lie among the divisors of
// the trailing nonzero coefficient inside [-bound, bound]; sieve candidates
// by divisibility and deflate multiplicities out.
std::vector<std::pair<mpz_class, int>> extract_integer_roots(IntPoly& p, long bound) {
    std::vector<std::pair<mpz_class, int>> roots;
    int zero_mult = 0;
    while (p.degree() >= 1 && p[0] == 0) {
        p = p.deflate_linear(0);
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(0, zero_mult);
    for (long r = -bound; r <= bound && p.degree() >= 1; ++r) {
        if (r == 0) continue;
        mpz_class rz(r);
        if (!mpz_divisible_p(p[0].get_mpz_t(), rz.get_mpz_t())) continue;
        if (p.eval(rz) != 0) continue;
        int mult = 0;
        do {
            p = p.deflate_linear(rz);
            ++mult;
        } while (p.degree() >= 1 && p.eval(rz) == 0);
        roots.emplace_back(rz, mult);
    }
    return roots;
}

mpq_class pow2_inv(int bits) {
    mpq_class q(mpz_class(1), mpz_class(1) << bits);
    q.canonicalize();
    return q;
}

// Try to write a square-free real-rooted polynomial as a product of two
// integer factors by pairing subsets of its (refined) roots; verified by
// exact division, so failures only lose factor annotations, never soundness.
struct Reconstructor {
    const IntPoly& poly;
    std::vector<RootInterval>& roots;

    bool find_split(const std::vector<int>& idx, IntPoly* factor, std::vector<int>* part) {
        const int d = static_cast<int>(idx.size());
        if (d <= 2 || d > 14) return false;
        for (int size = 1; size <= d / 2; ++size) {
            std::vector<int> choose(size);
            for (int i = 0; i < size; ++i) choose[i] = i;
            while (true) {
                if (try_subset(idx, choose, factor)) {
                    part->clear();
                    for (int c : choose) part->push_back(idx[c]);
                    return true;
                }
                int i = size - 1;
                while (i >= 0 && choose[i] == d - size + i) --i;
                if (i < 0) break;
                ++choose[i];
                for (int j = i + 1; j < size; ++j) choose[j] = choose[j - 1] + 1;
            }
        }
        return false;
    }

    bool try_subset(const std::vector<int>& idx, const std::vector<int>& choose, IntPoly* factor) {
        // expand prod (x - r_i) with rational midpoints, round, verify exactly
        std::vector<mpq_class> coeff{1};  // ascending
        for (int c : choose) {
            const mpq_class r = roots[idx[c]].mid();
            std::vector<mpq_class> next(coeff.size() + 1, 0);
            for (size_t i = 0; i < coeff.size(); ++i) {
                next[i + 1] += coeff[i];
                next[i] -= r * coeff[i];
            }
            coeff = std::move(next);
        }
        std::vector<mpz_class> rounded(coeff.size());
        const mpq_class quarter(1, 4);
        for (size_t i = 0; i < coeff.size(); ++i) {
            const mpq_class& val = coeff[i];
            // round to nearest: floor((2 num + den) / (2 den)), canonical den > 0
            mpz_class nearest, twice = 2 * val.get_num() + val.get_den();
            mpz_class dden = 2 * val.get_den();
            mpz_fdiv_q(nearest.get_mpz_t(), twice.get_mpz_t(), dden.get_mpz_t());
            if (abs(val - mpq_class(nearest)) >= quarter) return false;
            rounded[i] = nearest;
        }
        IntPoly candidate{std::move(rounded)};
        if (candidate.degree() != static_cast<int>(choose.size())) return false;
        if (!poly.divisible_by(candidate)) return false;
        *factor = candidate;
        return true;
    }

    // Split idx into irreducible groups; returns (factor, root indices) pairs.
    void factorize(const IntPoly& p, std::vector<int> idx,
                   std::vector<std::pair<IntPoly, std::vector<int>>>* out) {
        IntPoly factor;
        std::vector<int> part;
        if (!find_split(idx, &factor, &part)) {
            out->emplace_back(p, std::move(idx));
            return;
        }
        std::vector<int> rest;
        for (int i : idx)
            if (std::find(part.begin(), part.end(), i) == part.end()) rest.push_back(i);
        IntPoly quotient = p.divexact(factor);
        factorize(factor, std::move(part), out);
        factorize(quotient, std::move(rest), out);
    }
};

}  // namespace

SpectrumMultiset spectrum(const IntegerSymmetricMatrix& m, int precision_bits) {
    SpectrumMultiset out;
    out.n = m.n;
    if (m.n == 0) return out;
    IntPoly p = char_poly(m);
    const long bound = gershgorin_bound(m);

    std::vector<SpectralEntry> entries;
    IntPoly residual = p;
    for (auto& [r, mult] : extract_integer_roots(residual, bound)) {
        SpectralValue v;
        v.rational = true;
        v.value = mpq_class(r);
        v.factor = linear_factor(v.value);
        v.iv = {v.value, v.value};
        entries.push_back({v, mult});
    }

    if (residual.degree() > 0) {
        for (auto& [sf, mult] : yun_squarefree(residual)) {
            if (sf.degree() == 0) continue;
            auto intervals = isolate_real_roots(sf, bound);
            if (static_cast<int>(intervals.size()) != sf.degree())
                throw Error("square-free factor has non-real roots; not a symmetric spectrum");
            // precision for reconstruction: coefficients are elementary
            // symmetric functions of roots, so errors scale like d*(1+B)^d
            const int d = sf.degree();
            const int recon_bits =
                20 + static_cast<int>(d * std::log2(2.0 + static_cast<double>(bound)));
            const int bits = std::max(precision_bits, d >= 3 ? recon_bits : 0);
            for (auto& iv : intervals) refine_root(sf, iv, bits);

            std::vector<std::pair<IntPoly, std::vector<int>>> factors;
            std::vector<int> all(intervals.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            Reconstructor rec{sf, intervals};
            rec.factorize(sf, std::move(all), &factors);

            for (auto& [factor, idx] : factors) {
                for (int i : idx) {
                    SpectralValue v;
                    v.rational = false;
                    v.factor = factor;
                    v.iv = intervals[i];
                    entries.push_back({v, mult});
                }
            }
        }
    }

    std::sort(entries.begin(), entries.end(), [](const SpectralEntry& a, const SpectralEntry& b) {
        return a.v.lower() < b.v.lower();
    });
    out.entries = std::move(entries);
    return out;
}

void refine_spectrum(SpectrumMultiset& s, int precision_bits) {
    const mpq_class target = pow2_inv(precision_bits);
    for (auto& e : s.entries) {
        if (e.v.rational) continue;
        if (e.v.iv.width() > target) refine_root(e.v.factor, e.v.iv, precision_bits);
    }
}

bool spectra_agree(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol) {
    if (a.n != b.n || a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.mult != y.mult) return false;
        if (x.v.rational && y.v.rational) {
            if (x.v.value != y.v.value) return false;
        } else {
            const double gap = std::max(std::abs(x.v.lower().get_d() - y.v.upper().get_d()),
                                        std::abs(x.v.upper().get_d() - y.v.lower().get_d()));
            if (gap > tol) return false;
        }
    }
    return true;
}

}  // namespace cgl
