#include "cgl/energy.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "cgl/errors.hpp"
#include "cgl/intmatrix.hpp"
#include "cgl/roots.hpp"

namespace cgl {

double EnergyValue::mid() const {
    if (exact) return value.get_d();
    return (lo.get_d() + hi.get_d()) / 2;
}

std::string EnergyValue::decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", mid());
    return buf;
}

std::optional<int> certified_compare(const EnergyValue& a, const EnergyValue& b) {
    if (a.exact && b.exact) return cmp(a.value, b.value);
    if (a.hi < b.lo) return -1;
    if (b.hi < a.lo) return 1;
    return std::nullopt;
}

std::optional<int> certified_compare(const EnergyValue& a, const mpq_class& t) {
    if (a.exact) return cmp(a.value, t);
    if (a.hi < t) return -1;
    if (a.lo > t) return 1;
    return std::nullopt;
}

EnergyValue energy_from_spectrum(const SpectrumMultiset& s, const mpq_class& shift) {
    mpq_class exact_sum = 0;
    mpq_class int_lo = 0, int_hi = 0;
    bool any_interval = false;

    // group irrational entries by their annotated factor
    std::vector<const SpectralEntry*> irrational;
    for (const auto& e : s.entries) {
        if (e.v.rational) {
            exact_sum += abs(e.v.value - shift) * e.mult;
        } else {
            irrational.push_back(&e);
        }
    }

    std::vector<char> consumed(irrational.size(), 0);
    for (size_t i = 0; i < irrational.size(); ++i) {
        if (consumed[i]) continue;
        const IntPoly& f = irrational[i]->v.factor;
        std::vector<size_t> group{i};
        for (size_t j = i + 1; j < irrational.size(); ++j)
            if (!consumed[j] && irrational[j]->v.factor == f) group.push_back(j);

        // local sign-resolved copies
        std::vector<RootInterval> ivs;
        std::vector<int> signs;
        for (size_t gi : group) {
            RootInterval iv = irrational[gi]->v.iv;
            refine_away_from(f, iv, shift);
            ivs.push_back(iv);
            signs.push_back(iv.lo >= shift ? 1 : -1);
        }

        // a full conjugate set, equal multiplicities, uniform sign: the sum
        // telescopes to the factor trace, an exact rational
        const int d = f.degree();
        bool full_set = static_cast<int>(group.size()) == d;
        bool same_mult = true, same_sign = true;
        for (size_t k = 1; k < group.size(); ++k) {
            same_mult &= irrational[group[k]]->mult == irrational[group[0]]->mult;
            same_sign &= signs[k] == signs[0];
        }
        if (full_set && same_mult && same_sign && d >= 1) {
            mpq_class root_sum(-f[d - 1], f[d]);
            root_sum.canonicalize();
            exact_sum += mpq_class(signs[0]) * irrational[group[0]]->mult * (root_sum - d * shift);
        } else {
            any_interval = true;
            for (size_t k = 0; k < group.size(); ++k) {
                const int mult = irrational[group[k]]->mult;
                if (signs[k] > 0) {
                    int_lo += (ivs[k].lo - shift) * mult;
                    int_hi += (ivs[k].hi - shift) * mult;
                } else {
                    int_lo += (shift - ivs[k].hi) * mult;
                    int_hi += (shift - ivs[k].lo) * mult;
                }
            }
        }
        for (size_t gi : group) consumed[gi] = 1;
    }

    EnergyValue out;
    if (!any_interval) {
        out.exact = true;
        out.value = exact_sum;
        out.lo = out.hi = exact_sum;
    } else {
        out.exact = false;
        out.lo = exact_sum + int_lo;
        out.hi = exact_sum + int_hi;
    }
    return out;
}

namespace {

struct Labeled {
    const char* label;
    const EnergyValue* v;
};

std::optional<std::string> try_ordering(const EnergyValue& e, const EnergyValue& le,
                                        const EnergyValue& lep) {
    std::vector<Labeled> vals{{"E", &e}, {"LE", &le}, {"LE+", &lep}};
    // stable insertion order keeps E, LE, LE+ for ties
    for (size_t i = 1; i < vals.size(); ++i)
        for (size_t j = i; j > 0; --j) {
            auto c = certified_compare(*vals[j].v, *vals[j - 1].v);
            if (!c) return std::nullopt;
            if (*c < 0)
                std::swap(vals[j], vals[j - 1]);
            else
                break;
        }
    std::string chain = vals[0].label;
    for (size_t i = 1; i < vals.size(); ++i) {
        auto c = certified_compare(*vals[i - 1].v, *vals[i].v);
        if (!c) return std::nullopt;
        chain += (*c == 0) ? "=" : "<";
        chain += vals[i].label;
    }
    return chain;
}

}  // namespace

EnergyReport energies(const SimpleGraph& g, std::map<MatrixKind, SpectrumMultiset>* spectra_out) {
    EnergyReport r;
    r.n = g.n();
    r.m = g.m();
    if (g.n() <= 1) {
        r.E = r.LE = r.LEplus = r.ECN = EnergyValue{0, 0, true, 0};
        r.ordering = "E=LE=LE+";
        if (spectra_out) {
            spectra_out->clear();
            for (MatrixKind k : {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::CN})
                spectra_out->emplace(k, spectrum(matrix_of(g, k)));
        }
        return r;
    }

    mpq_class mean_degree(2 * g.m(), g.n());
    mean_degree.canonicalize();
    const mpq_class e_kn = mpq_class(2 * (g.n() - 1));
    const mpq_class ecn_kn = mpq_class(2L * (g.n() - 1) * (g.n() - 2));
    const mpq_class nq = mpq_class(g.n());

    std::map<MatrixKind, SpectrumMultiset> spectra;
    for (MatrixKind k : {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::CN})
        spectra.emplace(k, spectrum(matrix_of(g, k)));

    for (int bits : {50, 90, 140, 200}) {
        if (bits > 50)
            for (auto& [k, s] : spectra) refine_spectrum(s, bits);
        r.E = energy_from_spectrum(spectra.at(MatrixKind::A), 0);
        r.LE = energy_from_spectrum(spectra.at(MatrixKind::L), mean_degree);
        r.LEplus = energy_from_spectrum(spectra.at(MatrixKind::Q), mean_degree);
        r.ECN = energy_from_spectrum(spectra.at(MatrixKind::CN), 0);

        const auto hyper = certified_compare(r.E, e_kn);
        const auto hypo = certified_compare(r.E, nq);
        const auto lh = certified_compare(r.LE, e_kn);
        const auto qh = certified_compare(r.LEplus, e_kn);
        const auto cnh = certified_compare(r.ECN, ecn_kn);
        const auto chain = try_ordering(r.E, r.LE, r.LEplus);
        if (hyper && hypo && lh && qh && cnh && chain) {
            r.hyperenergetic = *hyper > 0;
            r.hypoenergetic = *hypo < 0;
            r.l_hyper = *lh > 0;
            r.q_hyper = *qh > 0;
            r.cn_hyper = *cnh > 0;
            r.ordering = *chain;
            if (spectra_out) *spectra_out = std::move(spectra);
            return r;
        }
    }
    throw UncertifiedComparison("energy comparison unresolved at 2^-200 refinement");
}

std::string ele_ordering(const SimpleGraph& g) {
    return energies(g).ordering;
}

}  // namespace cgl
