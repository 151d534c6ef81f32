#include "cgl/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cgl/errors.hpp"

namespace cgl {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::from_descending(const std::vector<long>& coeffs) {
    std::vector<mpz_class> c(coeffs.rbegin(), coeffs.rend());
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

int IntPoly::sign_at(const mpz_class& num, const mpz_class& den) const {
    // sign of den^deg * p(num/den), den > 0
    if (is_zero()) return 0;
    mpz_class r = c_.back();
    mpz_class dp = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) {
        dp *= den;
        r = r * num + c_[i] * dp;
    }
    return sgn(r);
}

int IntPoly::sign_at(const mpq_class& x) const {
    return sign_at(x.get_num(), x.get_den());
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::mul_scalar(const mpz_class& k) const {
    if (k == 0) return {};
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v *= k;
    return IntPoly(std::move(c));
}

namespace {

// Long division assuming the quotient is integral; every leading-coefficient
// division must be exact. Returns false if not divisible over Z.
bool try_divexact(const IntPoly& p, const IntPoly& d, IntPoly* quotient) {
    if (d.is_zero()) throw Error("division by zero polynomial");
    if (p.is_zero()) {
        *quotient = {};
        return true;
    }
    if (p.degree() < d.degree()) return false;
    std::vector<mpz_class> rem(p.coeffs());
    std::vector<mpz_class> q(p.degree() - d.degree() + 1, 0);
    const mpz_class& lead = d.lc();
    for (int k = p.degree() - d.degree(); k >= 0; --k) {
        mpz_class& top = rem[k + d.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class f = top / lead;
        q[k] = f;
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * d[i];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    *quotient = IntPoly(std::move(q));
    return true;
}

// lc(d)^(deg p - deg d + 1) * p mod d
IntPoly pseudo_rem(const IntPoly& p, const IntPoly& d) {
    std::vector<mpz_class> r(p.coeffs());
    const int dd = d.degree();
    const mpz_class& lead = d.lc();
    int rd = p.degree();
    int steps = p.degree() - dd + 1;
    while (rd >= dd) {
        mpz_class top = r[rd];
        for (auto& v : r) v *= lead;
        --steps;
        if (top != 0)
            for (int i = 0; i <= dd; ++i) r[rd - dd + i] -= top * d[i];
        do { --rd; } while (rd >= 0 && r[rd] == 0);
    }
    IntPoly out{std::vector<mpz_class>(r.begin(), r.begin() + std::max(rd + 1, 0))};
    // keep the full lc^(delta+1) scaling even when steps skipped early
    while (steps-- > 0) out = out.mul_scalar(lead);
    return out;
}

mpz_class ipow(const mpz_class& base, int e) {
    mpz_class r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

IntPoly IntPoly::divexact(const IntPoly& d) const {
    IntPoly q;
    if (!try_divexact(*this, d, &q)) throw Error("polynomial division is not exact");
    return q;
}

bool IntPoly::divisible_by(const IntPoly& d) const {
    IntPoly q;
    return try_divexact(*this, d, &q);
}

IntPoly IntPoly::deflate_linear(const mpz_class& r) const {
    if (degree() < 1) throw Error("cannot deflate a constant");
    std::vector<mpz_class> q(c_.size() - 1);
    mpz_class carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + r * carry;
    }
    if (carry != 0) throw Error("not a root; deflation has nonzero remainder");
    return IntPoly(std::move(q));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lc() < 0) g = -g;
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& v = c_[i];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << '-';
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        mpz_class av = abs(v);
        if (av != 1 || i == 0) os << av.get_str();
        if (i >= 1) {
            os << 'x';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part().mul_scalar(b.content() == 0 ? 1 : b.content());
    if (b.is_zero()) return a.primitive_part().mul_scalar(a.content() == 0 ? 1 : a.content());
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    mpz_class g = 1, h = 1;
    while (true) {
        const int delta = A.degree() - B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return B.primitive_part().mul_scalar(cont);
        if (R.degree() == 0) return IntPoly::constant(cont);
        A = B;
        mpz_class divisor = g * ipow(h, delta);
        std::vector<mpz_class> coeffs(R.coeffs());
        for (auto& v : coeffs) v /= divisor;  // exact in the subresultant PRS
        B = IntPoly(std::move(coeffs));
        g = A.lc();
        if (delta > 0) {
            mpz_class num = ipow(g, delta);
            h = delta == 1 ? num : num / ipow(h, delta - 1);
        }
    }
}

std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& p) {
    if (p.degree() < 1) return {};
    IntPoly f = p.primitive_part();
    IntPoly fp = f.derivative();
    IntPoly g = poly_gcd(f, fp);
    std::vector<std::pair<IntPoly, int>> out;
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = f.divexact(g);
    IntPoly y = fp.divexact(g);
    IntPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        IntPoly fac = poly_gcd(w, z);
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = w.divexact(fac);
        y = z.divexact(fac);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

}  // namespace cgl
