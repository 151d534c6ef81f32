#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cgl {

/// Polynomial with exact integer coefficients, ascending order (c[i] is the
/// coefficient of x^i). Normalized: no stored leading zeros; zero polynomial
/// has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    /// From descending human order, e.g. {1, -60, -472, 288} = x^3-60x^2-472x+288.
    static IntPoly from_descending(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const mpz_class& operator[](int i) const { return c_[i]; }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    /// Sign of p(num/den) for den > 0, via the homogenized integer form.
    int sign_at(const mpz_class& num, const mpz_class& den) const;
    int sign_at(const mpq_class& x) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly mul_scalar(const mpz_class& k) const;
    /// Exact division; throws Error if not divisible.
    IntPoly divexact(const IntPoly& d) const;
    bool divisible_by(const IntPoly& d) const;
    /// Deflate by (x - r), r an exact root. Throws if r is not a root.
    IntPoly deflate_linear(const mpz_class& r) const;

    mpz_class content() const;          // gcd of coefficients, >= 0
    IntPoly primitive_part() const;     // content removed, leading coeff > 0

    bool operator==(const IntPoly&) const = default;
    std::string to_string() const;      // descending, e.g. "x^3 - 60x^2 - 472x + 288"

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Primitive gcd via the subresultant polynomial remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Yun square-free decomposition of a primitive polynomial:
/// p = prod f_i^i up to sign; returns the (f_i, i) with deg f_i > 0.
std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& p);

}  // namespace cgl
