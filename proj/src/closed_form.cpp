#include "cgl/closed_form.hpp"

#include <algorithm>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

void add_rational(std::vector<SpectralEntry>& entries, long value, int mult) {
    if (mult <= 0) return;
    SpectralValue v;
    v.rational = true;
    v.value = mpq_class(value);
    v.factor = IntPoly(std::vector<mpz_class>{-value, 1});
    v.iv = {v.value, v.value};
    entries.push_back({v, mult});
}

void add_factor_roots(std::vector<SpectralEntry>& entries, const IntPoly& f, long bound, int mult) {
    auto ivs = isolate_real_roots(f, bound);
    for (auto& iv : ivs) {
        refine_root(f, iv, 50);
        SpectralValue v;
        v.rational = false;
        v.factor = f;
        v.iv = iv;
        entries.push_back({v, mult});
    }
}

void clique_spectrum(std::vector<SpectralEntry>& entries, int k, MatrixKind kind, int copies) {
    switch (kind) {
        case MatrixKind::A:
            add_rational(entries, k - 1, copies);
            add_rational(entries, -1, (k - 1) * copies);
            break;
        case MatrixKind::L:
            add_rational(entries, 0, copies);
            add_rational(entries, k, (k - 1) * copies);
            break;
        case MatrixKind::Q:
            add_rational(entries, 2 * k - 2, copies);
            add_rational(entries, k - 2, (k - 1) * copies);
            break;
        case MatrixKind::CN:
            add_rational(entries, static_cast<long>(k - 1) * (k - 2), copies);
            add_rational(entries, -(k - 2), (k - 1) * copies);
            break;
    }
}

void friendship_spectrum(std::vector<SpectralEntry>& entries, int m, MatrixKind kind, int copies) {
    switch (kind) {
        case MatrixKind::A: {
            const mpz_class disc = 8L * m + 1;
            if (mpz_perfect_square_p(disc.get_mpz_t())) {
                mpz_class s = sqrt(disc);
                add_rational(entries, ((1 + s) / 2).get_si(), copies);
                add_rational(entries, ((1 - s) / 2).get_si(), copies);
            } else {
                // x^2 - x - 2m has roots (1 +- sqrt(8m+1))/2
                add_factor_roots(entries, IntPoly(std::vector<mpz_class>{-2L * m, -1, 1}),
                                 2L * m + 2, copies);
            }
            add_rational(entries, 1, (m - 1) * copies);
            add_rational(entries, -1, m * copies);
            break;
        }
        case MatrixKind::L:
            add_rational(entries, 0, copies);
            add_rational(entries, 2 * m + 1, copies);
            add_rational(entries, 3, m * copies);
            add_rational(entries, 1, (m - 1) * copies);
            break;
        case MatrixKind::Q: {
            if (m != 3)
                throw UnsupportedComponent("Q spectrum of Friendship(m) only provided for m = 3");
            // the 7-point matrix, evaluated through the exact pipeline
            static const SpectrumMultiset f3q = [] {
                return spectrum(matrix_of(build_shape("F3"), MatrixKind::Q));
            }();
            for (const auto& e : f3q.entries) entries.push_back({e.v, e.mult * copies});
            break;
        }
        case MatrixKind::CN:
            add_rational(entries, 2 * m, copies);
            add_rational(entries, -1, 2 * m * copies);
            break;
    }
}

bool same_value(const SpectralValue& a, const SpectralValue& b) {
    if (a.rational != b.rational) return false;
    if (a.rational) return a.value == b.value;
    return a.factor == b.factor && a.iv.lo == b.iv.lo && a.iv.hi == b.iv.hi;
}

}  // namespace

SpectrumMultiset closed_form_spectrum(const ShapeDescriptor& shape, MatrixKind kind) {
    std::vector<SpectralEntry> entries;
    for (const auto& c : shape.components()) {
        switch (c.kind) {
            case ComponentKind::Clique:
                clique_spectrum(entries, c.param, kind, c.count);
                break;
            case ComponentKind::Friendship:
                friendship_spectrum(entries, c.param, kind, c.count);
                break;
            case ComponentKind::GraphD:
                throw UnsupportedComponent("graph D has no closed-form spectrum here");
            case ComponentKind::Other:
                throw UnsupportedComponent("unrecognized component");
        }
    }
    std::sort(entries.begin(), entries.end(), [](const SpectralEntry& a, const SpectralEntry& b) {
        return a.v.lower() < b.v.lower();
    });
    std::vector<SpectralEntry> merged;
    for (auto& e : entries) {
        if (!merged.empty() && same_value(merged.back().v, e.v))
            merged.back().mult += e.mult;
        else
            merged.push_back(std::move(e));
    }
    SpectrumMultiset out;
    out.n = shape.total_n();
    out.entries = std::move(merged);
    return out;
}

}  // namespace cgl
