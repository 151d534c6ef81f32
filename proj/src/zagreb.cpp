#include "cgl/zagreb.hpp"

#include "cgl/errors.hpp"

namespace cgl {

ZagrebReport zagreb_indices(const SimpleGraph& g) {
    ZagrebReport r;
    r.n = g.n();
    r.m = g.m();
    const auto deg = g.degrees();
    for (int v = 0; v < g.n(); ++v) r.M1 += mpz_class(deg[v]) * deg[v];
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) r.M2 += mpz_class(deg[u]) * deg[v];
    if (r.m >= 1) {
        r.has_hv = true;
        r.hv_lhs = mpq_class(r.M2, mpz_class(r.m));
        r.hv_lhs.canonicalize();
        r.hv_rhs = mpq_class(r.M1, mpz_class(r.n));
        r.hv_rhs.canonicalize();
        // exact cross-multiplied comparison, no floating point
        const mpz_class lhs = r.M2 * r.n;
        const mpz_class rhs = r.M1 * r.m;
        r.hv_holds = lhs >= rhs;
        r.hv_equality = lhs == rhs;
    }
    return r;
}

ZagrebReport hv_check(const SimpleGraph& g) {
    if (g.m() == 0) throw EmptyEdgeSet();
    return zagreb_indices(g);
}

ComplementZagreb complement_zagreb(long n, long m, const mpz_class& M1, const mpz_class& M2) {
    if (n < 0 || m < 0 || mpz_class(2) * m > mpz_class(n) * (n - 1))
        throw InconsistentInputs("need 0 <= m <= C(n,2)");
    const mpz_class nn = n, mm = m;
    ComplementZagreb out;
    out.M1 = nn * (nn - 1) * (nn - 1) - 4 * mm * (nn - 1) + M1;
    // M2c = n(n-1)^3/2 + 2m^2 - 3m(n-1)^2 + (n - 3/2) M1 - M2
    mpq_class m2c(nn * (nn - 1) * (nn - 1) * (nn - 1), 2);
    m2c.canonicalize();
    m2c += 2 * mm * mm - 3 * mm * (nn - 1) * (nn - 1);
    mpq_class half_term(mpz_class(2 * n - 3) * M1, 2);
    half_term.canonicalize();
    m2c += half_term;
    m2c -= M2;
    out.M2 = m2c;
    return out;
}

}  // namespace cgl
