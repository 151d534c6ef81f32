#include "cgl/roots.hpp"

#include <algorithm>

#include "cgl/errors.hpp"

namespace cgl {

SturmChain::SturmChain(const IntPoly& squarefree) {
    IntPoly p0 = squarefree.primitive_part();
    IntPoly p1 = p0.derivative().primitive_part();
    chain_.push_back(p0);
    if (p1.is_zero()) return;
    chain_.push_back(p1);
    while (true) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        if (b.degree() == 0) break;
        // compute true remainder sign-correctly: scale a by lc(b)^(2k) (even
        // power, positive) so divisions stay integral, then long-divide.
        const int delta = a.degree() - b.degree();
        int scale_pow = delta + 1;
        if (scale_pow % 2 == 1) ++scale_pow;  // even => positive factor
        mpz_class scale = 1;
        for (int i = 0; i < scale_pow; ++i) scale *= b.lc();
        IntPoly scaled = a.mul_scalar(scale);
        // long division of scaled by b over Z (exact at every step because of
        // the lc power scaling)
        std::vector<mpz_class> rem(scaled.coeffs());
        for (int k = scaled.degree() - b.degree(); k >= 0; --k) {
            mpz_class& top = rem[k + b.degree()];
            if (top == 0) continue;
            mpz_class f = top / b.lc();  // exact by construction
            for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= f * b[i];
        }
        IntPoly r{std::vector<mpz_class>(rem.begin(),
                                         rem.begin() + b.degree())};
        if (r.is_zero()) break;  // squarefree input: only possible at degree 0 tail
        // strip positive content, then negate
        IntPoly next = r.primitive_part();
        if (r.lc() < 0) next = -next;  // primitive_part normalized lc>0; undo to keep true sign
        chain_.push_back(-next);
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int v = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
    return variations_at(a) - variations_at(b);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p, long bound) {
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    SturmChain chain(p);
    mpq_class lo(-(bound + 1)), hi(bound + 1);
    struct Seg {
        mpq_class lo, hi;
        int count;
    };
    std::vector<Seg> work;
    const int total = chain.count_roots(lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        // dyadic midpoints of non-root endpoints may still hit a root only if
        // the root is rational; callers guarantee no rational roots
        const int left = chain.count_roots(s.lo, mid);
        const int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

void refine_root(const IntPoly& p, RootInterval& iv, int precision_bits) {
    mpq_class width = iv.hi - iv.lo;
    mpq_class target(mpz_class(1), mpz_class(1) << precision_bits);
    target.canonicalize();
    if (width <= target) return;
    int s_lo = p.sign_at(iv.lo);
    if (s_lo == 0) throw Error("refine_root: endpoint is a root");
    while (iv.hi - iv.lo > target) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        const int s = p.sign_at(mid);
        if (s == 0) throw Error("refine_root: rational root encountered");
        if (s == s_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

void refine_away_from(const IntPoly& p, RootInterval& iv, const mpq_class& point) {
    if (point <= iv.lo || point >= iv.hi) return;
    int s_lo = p.sign_at(iv.lo);
    while (iv.lo < point && point < iv.hi) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        const int s = p.sign_at(mid);
        if (s == 0) throw Error("refine_away_from: rational root encountered");
        if (s == s_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

}  // namespace cgl
