#include "cgl/catalog.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

// ---------- permutation building blocks ----------

Permutation perm_from_images(std::vector<int> images) {
    Permutation p(std::move(images));
    if (!p.is_bijection()) throw Error("catalog recipe produced a non-bijection");
    return p;
}

Permutation cycle(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return perm_from_images(std::move(img));
}

// n-cycle rotation and the reflection i -> (n - i) mod n on an n-gon,
// offset into a larger domain
Permutation rotation(int degree, int offset, int n) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (int i = 0; i < n; ++i) img[offset + i] = offset + (i + 1) % n;
    return perm_from_images(std::move(img));
}

Permutation reflection(int degree, int offset, int n) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (int i = 0; i < n; ++i) img[offset + i] = offset + (n - i) % n;
    return perm_from_images(std::move(img));
}

// Dicyclic group of order 4m by left translation on its own elements:
// points 0..2m-1 are a^i, points 2m..4m-1 are a^i b.
std::pair<Permutation, Permutation> dicyclic_generators(int m) {
    const int two_m = 2 * m;
    std::vector<int> ia(4 * m), ib(4 * m);
    for (int i = 0; i < two_m; ++i) {
        ia[i] = (i + 1) % two_m;                          // a * a^i
        ia[two_m + i] = two_m + (i + 1) % two_m;          // a * a^i b
        ib[i] = two_m + ((two_m - i) % two_m);            // b * a^i = a^-i b
        ib[two_m + i] = ((m - i) % two_m + two_m) % two_m;  // b * a^i b = a^(m-i)
    }
    return {perm_from_images(std::move(ia)), perm_from_images(std::move(ib))};
}

// affine maps on Z3 x Z3, point (a,b) = 3a + b
Permutation affine_z3z3(int m00, int m01, int m10, int m11, int t0, int t1) {
    std::vector<int> img(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const int na = ((m00 * a + m01 * b + t0) % 3 + 3) % 3;
            const int nb = ((m10 * a + m11 * b + t1) % 3 + 3) % 3;
            img[3 * a + b] = 3 * na + nb;
        }
    return perm_from_images(std::move(img));
}

// ---------- GF(9) = F3[t]/(t^2+1), elements a + 3b for a + bt ----------

int gf9_add(int x, int y) {
    return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
}

int gf9_mul(int x, int y) {
    const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    const int re = ((a * c - b * d) % 3 + 3) % 3;  // t^2 = -1
    const int im = (a * d + b * c) % 3;
    return re + 3 * im;
}

struct Mat2GF9 {
    int a, b, c, d;
};

// action on the 81 column vectors of GF(9)^2
Permutation gf9_matrix_perm(const Mat2GF9& m) {
    std::vector<int> img(81);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) {
            const int nx = gf9_add(gf9_mul(m.a, x), gf9_mul(m.b, y));
            const int ny = gf9_add(gf9_mul(m.c, x), gf9_mul(m.d, y));
            img[9 * x + y] = 9 * nx + ny;
        }
    return perm_from_images(std::move(img));
}

// ---------- relation-word search helpers ----------

bool words_hold(const FiniteGroup& g, const std::vector<std::string>& words,
                const std::map<char, int>& gens) {
    for (const auto& w : words)
        if (evaluate_word(g, w, gens) != g.identity()) return false;
    return true;
}

int subgroup_order(const FiniteGroup& g, std::vector<int> gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{g.identity()};
    seen[g.identity()] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int e = stack.back();
        stack.pop_back();
        for (int s : gens) {
            const int p = g.mul(e, s);
            if (!seen[p]) {
                seen[p] = 1;
                ++count;
                stack.push_back(p);
            }
        }
    }
    return count;
}

// ---------- individual recipes ----------

GeneratedGroup dihedral(int n, long cap) {
    return from_permutation_generators({rotation(n, 0, n), reflection(n, 0, n)}, cap);
}

GeneratedGroup dicyclic(int m, long cap) {
    auto [a, b] = dicyclic_generators(m);
    return from_permutation_generators({a, b}, cap);
}

GeneratedGroup semidihedral16(long cap) {
    std::vector<int> s(8);
    for (int i = 0; i < 8; ++i) s[i] = (3 * i) % 8;
    return from_permutation_generators({rotation(8, 0, 8), perm_from_images(std::move(s))}, cap);
}

// (Z3 x Z3) : Q8 with the Theorem presentation generators. x and y run over
// the quaternion subgroup of SL(2,3) acting on the 9 translations, z over the
// nonzero translations; the first triple (in deterministic order) satisfying
// the defining relations is used.
GeneratedGroup z3z3_q8(long cap) {
    const std::vector<std::array<int, 4>> units = {
        {0, 2, 1, 0}, {0, 1, 2, 0},  // +-i
        {1, 1, 1, 2}, {2, 2, 2, 1},  // +-j
        {2, 1, 1, 1}, {1, 2, 2, 2},  // +-k
    };
    const std::vector<std::string> relations = {
        "x^4", "y^4", "z^3", "x^-1 y x y", "y^-2 z y^2 z", "x^-2 z x^2 z",
        "x^-1 z x^-1 (z y)^-2"};
    for (const auto& mx : units)
        for (const auto& my : units) {
            if (mx == my) continue;
            for (int t = 1; t < 9; ++t) {
                Permutation px = affine_z3z3(mx[0], mx[1], mx[2], mx[3], 0, 0);
                Permutation py = affine_z3z3(my[0], my[1], my[2], my[3], 0, 0);
                Permutation pz = affine_z3z3(1, 0, 0, 1, t / 3, t % 3);
                GeneratedGroup gg = from_permutation_generators({px, py, pz}, cap);
                if (gg.group.order() != 72) continue;
                std::map<char, int> gens{{'x', gg.generator_index[0]},
                                         {'y', gg.generator_index[1]},
                                         {'z', gg.generator_index[2]}};
                if (words_hold(gg.group, relations, gens)) return gg;
            }
        }
    throw Error("no generator assignment satisfies the (Z3xZ3):Q8 presentation");
}

// The order-48 group of Theorem 2.3(b). Constructed inside SL(2,9) as the
// preimage of an S4 <= PSL(2,9): the double cover with a unique involution.
// The presentation generators are found by a deterministic search.
GeneratedGroup sl23_circ_z2(long cap) {
    // quaternion units: i = diag(t, -t), j = [[0,1],[-1,0]], k = [[0,t],[t,0]]
    // omega = (-1+i+j+k)/2, u = (1+i)/sqrt(2) = diag(1-t, -1-t)
    const Mat2GF9 j{0, 1, 2, 0};
    const Mat2GF9 omega{gf9_add(1, 3 * 2), gf9_add(2, 3 * 2), gf9_add(1, 3 * 2), gf9_add(1, 3 * 1)};
    const Mat2GF9 u{gf9_add(1, 3 * 2), 0, 0, gf9_add(2, 3 * 2)};
    GeneratedGroup base =
        from_permutation_generators({gf9_matrix_perm(j), gf9_matrix_perm(omega), gf9_matrix_perm(u)}, cap);
    const FiniteGroup& g = base.group;
    if (g.order() != 48) throw Error("SL(2,3)oZ2 base construction has wrong order");

    const std::vector<std::string> relations = {"y^3", "z^4", "x^2 z^-2", "x^-1 y x y",
                                                "y^-1 z y^-1 z^-1 y^-1 z", "x z^-1 x y^-1 z y"};
    std::vector<int> order3, order4;
    for (int e = 0; e < g.order(); ++e) {
        const int o = g.element_order(e);
        if (o == 3) order3.push_back(e);
        if (o == 4) order4.push_back(e);
    }
    for (int z : order4)
        for (int x : order4) {
            if (g.mul(x, x) != g.mul(z, z)) continue;
            for (int y : order3) {
                std::map<char, int> gens{{'x', x}, {'y', y}, {'z', z}};
                if (!words_hold(g, relations, gens)) continue;
                if (subgroup_order(g, {x, y, z}) != 48) continue;
                GeneratedGroup out{g, {x, y, z}};
                return out;
            }
        }
    throw Error("no generator triple satisfies the SL(2,3)oZ2 presentation");
}

GeneratedGroup matrix_group_z3(const std::vector<Mat2>& mats, long cap) {
    return from_matrix_generators(3, mats, cap);
}

// direct product with extra cycles appended on fresh points
std::vector<Permutation> with_extra_cycle(std::vector<Permutation> gens, int extra) {
    const int degree = gens.front().degree();
    std::vector<Permutation> out;
    for (auto& g : gens) {
        std::vector<int> img(degree + extra);
        for (int i = 0; i < degree; ++i) img[i] = g.map[i];
        for (int i = 0; i < extra; ++i) img[degree + i] = degree + i;
        out.push_back(perm_from_images(std::move(img)));
    }
    std::vector<int> c(degree + extra);
    for (int i = 0; i < degree; ++i) c[i] = i;
    for (int i = 0; i < extra; ++i) c[degree + i] = degree + (i + 1) % extra;
    out.push_back(perm_from_images(std::move(c)));
    return out;
}

// ---------- the catalog table ----------

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> t;

    auto dihedral_entry = [](const std::string& name, int n, const std::string& genus,
                             const std::string& shape) {
        CatalogEntry e;
        e.name = name;
        e.expected_order = 2L * n;
        e.genus_class = genus;
        e.expected_shape = shape;
        e.generator_names = "rs";
        e.relations = {"r^" + std::to_string(n), "s^2", "s^-1 r s r"};
        e.recipe = [n](long cap) { return dihedral(n, cap); };
        return e;
    };
    auto dicyclic_entry = [](const std::string& name, int m, const std::string& genus,
                             const std::string& shape) {
        CatalogEntry e;
        e.name = name;
        e.expected_order = 4L * m;
        e.genus_class = genus;
        e.expected_shape = shape;
        e.generator_names = "ab";
        e.relations = {"a^" + std::to_string(2 * m), "b^2 a^-" + std::to_string(m), "b^-1 a b a"};
        e.recipe = [m](long cap) { return dicyclic(m, cap); };
        return e;
    };

    t.push_back(dihedral_entry("D6", 3, "planar", "K2 + 3*K1"));
    t.push_back(dihedral_entry("D10", 5, "planar", "K4 + 5*K1"));
    t.push_back(dihedral_entry("D12", 6, "planar", "K4 + 3*K2"));
    t.push_back(dihedral_entry("D14", 7, "toroidal", "K6 + 7*K1"));
    t.push_back(dihedral_entry("D16", 8, "toroidal", "K6 + 4*K2"));
    t.push_back(dihedral_entry("D18", 9, "double-toroidal", "K8 + 9*K1"));
    t.push_back(dihedral_entry("D20", 10, "double-toroidal", "K8 + 5*K2"));

    t.push_back(dicyclic_entry("Q12", 3, "planar", "K4 + 3*K2"));
    t.push_back(dicyclic_entry("Q16", 4, "toroidal", "K6 + 4*K2"));
    t.push_back(dicyclic_entry("Q20", 5, "double-toroidal", "K8 + 5*K2"));

    {
        CatalogEntry e;
        e.name = "QD16";
        e.expected_order = 16;
        e.genus_class = "toroidal";
        e.expected_shape = "K6 + 4*K2";
        e.generator_names = "rs";
        e.relations = {"r^8", "s^2", "s^-1 r s r^-3"};
        e.recipe = [](long cap) { return semidihedral16(cap); };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "A4";
        e.expected_order = 12;
        e.genus_class = "planar";
        e.expected_shape = "K3 + 4*K2";
        e.generator_names = "ab";
        e.relations = {"a^3", "b^2", "(a b)^3"};
        e.recipe = [](long cap) {
            return from_permutation_generators({cycle(4, {{0, 1, 2}}), cycle(4, {{0, 1}, {2, 3}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "S4";
        e.expected_order = 24;
        e.genus_class = "planar";
        e.generator_names = "ab";
        e.relations = {"a^4", "b^2", "(a b)^3"};
        e.recipe = [](long cap) {
            return from_permutation_generators({cycle(4, {{0, 1, 2, 3}}), cycle(4, {{0, 1}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "A5";
        e.expected_order = 60;
        e.genus_class = "planar";
        e.expected_shape = "5*K3 + 10*K2 + 6*K4";
        e.generator_names = "ab";
        e.relations = {"a^5", "b^3", "(a b)^5"};
        e.recipe = [](long cap) {
            return from_permutation_generators({cycle(5, {{0, 1, 2, 3, 4}}), cycle(5, {{0, 1, 2}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "Sz(2)";
        e.aliases = {"Sz2"};
        e.expected_order = 20;
        e.genus_class = "planar";
        e.expected_shape = "K4 + 5*K3";
        e.generator_names = "xy";
        e.relations = {"x^5", "y^4", "y^-1 x y x^-2"};
        e.recipe = [](long cap) {
            std::vector<int> y(5);
            for (int i = 0; i < 5; ++i) y[i] = (3 * i) % 5;
            return from_permutation_generators({rotation(5, 0, 5), perm_from_images(std::move(y))}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "Z7⋊Z3";
        e.aliases = {"Z7:Z3"};
        e.expected_order = 21;
        e.genus_class = "toroidal";
        e.expected_shape = "K6 + 7*K2";
        e.generator_names = "xy";
        e.relations = {"x^7", "y^3", "y^-1 x y x^-2"};
        e.recipe = [](long cap) {
            std::vector<int> y(7);
            for (int i = 0; i < 7; ++i) y[i] = (4 * i) % 7;
            return from_permutation_generators({rotation(7, 0, 7), perm_from_images(std::move(y))}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "SL(2,3)";
        e.aliases = {"SL23"};
        e.expected_order = 24;
        e.genus_class = "planar";
        e.expected_shape = "3*K2 + 4*K4";
        e.generator_names = "st";
        e.relations = {"s^4", "t^3", "s^-2 t^-1 s^2 t"};
        e.recipe = [](long cap) {
            return matrix_group_z3({{0, -1, 1, 0}, {1, 1, 0, 1}}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "GL(2,3)";
        e.aliases = {"GL23"};
        e.expected_order = 48;
        e.genus_class = "triple-toroidal";
        e.expected_shape = "3*K6 + 4*K4 + 6*K2";
        e.generator_names = "std";
        e.relations = {"s^4", "t^3", "d^2", "d s d s", "s^-2 t^-1 s^2 t"};
        e.recipe = [](long cap) {
            return matrix_group_z3({{0, -1, 1, 0}, {1, 1, 0, 1}, {-1, 0, 0, 1}}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "SL(2,3)∘Z2";
        e.aliases = {"SL(2,3)oZ2", "SL23oZ2"};
        e.expected_order = 48;
        e.genus_class = "triple-toroidal";
        e.expected_shape = "3*K6 + 4*K4 + 6*K2";
        e.generator_names = "xyz";
        e.relations = {"y^3", "z^4", "x^2 z^-2", "x^-1 y x y", "y^-1 z y^-1 z^-1 y^-1 z",
                       "x z^-1 x y^-1 z y"};
        e.recipe = [](long cap) { return sl23_circ_z2(cap); };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "S3×Z2×Z2";
        e.aliases = {"S3xZ2xZ2"};
        e.expected_order = 24;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 3*K4";
        e.generator_names = "rsuv";
        e.relations = {"r^3", "s^2", "s^-1 r s r", "u^2", "v^2",
                       "[r,u]", "[r,v]", "[s,u]", "[s,v]", "[u,v]"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                {cycle(7, {{0, 1, 2}}), cycle(7, {{1, 2}}), cycle(7, {{3, 4}}), cycle(7, {{5, 6}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "S3×Z4";
        e.aliases = {"S3xZ4"};
        e.expected_order = 24;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 3*K4";
        e.generator_names = "rsc";
        e.relations = {"r^3", "s^2", "s^-1 r s r", "c^4", "[r,c]", "[s,c]"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                {cycle(7, {{0, 1, 2}}), cycle(7, {{1, 2}}), cycle(7, {{3, 4, 5, 6}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "Z3⋊Z8";
        e.aliases = {"Z3:Z8"};
        e.expected_order = 24;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 3*K4";
        e.generator_names = "xy";
        e.relations = {"x^8", "y^3", "x^-1 y x y"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                {cycle(11, {{1, 2}, {3, 4, 5, 6, 7, 8, 9, 10}}), cycle(11, {{0, 1, 2}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "(Z3⋊Z4)×Z2";
        e.aliases = {"(Z3:Z4)xZ2"};
        e.expected_order = 24;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 3*K4";
        e.generator_names = "xyz";
        e.relations = {"x^4", "y^3", "z^2", "x y x^-1 y", "[x,z]", "[y,z]"};
        e.recipe = [](long cap) {
            auto [a, b] = dicyclic_generators(3);
            Permutation a2 = a * a;
            std::vector<Permutation> gens;
            for (const Permutation& p : {b, a2}) {
                std::vector<int> img(14);
                for (int i = 0; i < 12; ++i) img[i] = p.map[i];
                img[12] = 12;
                img[13] = 13;
                gens.push_back(perm_from_images(std::move(img)));
            }
            gens.push_back(cycle(14, {{12, 13}}));
            return from_permutation_generators(gens, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "(Z3×Z3)⋊Z2";
        e.aliases = {"(Z3xZ3):Z2"};
        e.expected_order = 18;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 9*K1";
        e.generator_names = "xyz";
        e.relations = {"x^3", "y^3", "z^2", "[x,y]", "z^-1 x z x", "z^-1 y z y"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                {cycle(6, {{0, 1, 2}}), cycle(6, {{3, 4, 5}}), cycle(6, {{1, 2}, {4, 5}})}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "(Z3×Z3)⋊Z4";
        e.aliases = {"(Z3xZ3):Z4"};
        e.expected_order = 36;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 9*K3";
        e.generator_names = "xy";
        e.relations = {"x^4", "y^3", "(y x^2)^2", "[x^-1 y x, y]"};
        e.recipe = [](long cap) {
            // x: (a,b) -> (-b,a); y: translation by (1,0)
            return from_permutation_generators(
                {affine_z3z3(0, -1, 1, 0, 0, 0), affine_z3z3(1, 0, 0, 1, 1, 0)}, cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "(Z3×Z3)⋊Q8";
        e.aliases = {"(Z3xZ3):Q8"};
        e.expected_order = 72;
        e.genus_class = "double-toroidal";
        e.expected_shape = "K8 + 9*F3";
        e.generator_names = "xyz";
        e.relations = {"x^4", "y^4", "z^3", "x^-1 y x y", "y^-2 z y^2 z", "x^-2 z x^2 z",
                       "x^-1 z x^-1 (z y)^-2"};
        e.recipe = [](long cap) { return z3z3_q8(cap); };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "D8×Z3";
        e.aliases = {"D8xZ3"};
        e.expected_order = 24;
        e.genus_class = "triple-toroidal";
        e.expected_shape = "3*K6";
        e.generator_names = "rsc";
        e.relations = {"r^4", "s^2", "s^-1 r s r", "c^3", "[r,c]", "[s,c]"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                with_extra_cycle({rotation(4, 0, 4), reflection(4, 0, 4)}, 3), cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "Q8×Z3";
        e.aliases = {"Q8xZ3"};
        e.expected_order = 24;
        e.genus_class = "triple-toroidal";
        e.expected_shape = "3*K6";
        e.generator_names = "abc";
        e.relations = {"a^4", "b^2 a^-2", "b^-1 a b a", "c^3", "[a,c]", "[b,c]"};
        e.recipe = [](long cap) {
            auto [a, b] = dicyclic_generators(2);
            return from_permutation_generators(with_extra_cycle({a, b}, 3), cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "D6×Z3";
        e.aliases = {"D6xZ3"};
        e.expected_order = 18;
        e.genus_class = "toroidal";
        e.expected_shape = "K6 + 3*K3";
        e.generator_names = "rsc";
        e.relations = {"r^3", "s^2", "s^-1 r s r", "c^3", "[r,c]", "[s,c]"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                with_extra_cycle({rotation(3, 0, 3), reflection(3, 0, 3)}, 3), cap);
        };
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "A4×Z2";
        e.aliases = {"A4xZ2"};
        e.expected_order = 24;
        e.genus_class = "toroidal";
        e.expected_shape = "K6 + 4*K4";
        e.generator_names = "abz";
        e.relations = {"a^3", "b^2", "(a b)^3", "z^2", "[a,z]", "[b,z]"};
        e.recipe = [](long cap) {
            return from_permutation_generators(
                {cycle(6, {{0, 1, 2}}), cycle(6, {{0, 1}, {2, 3}}), cycle(6, {{4, 5}})}, cap);
        };
        t.push_back(e);
    }
    return t;
}

// ---------- name resolution ----------

std::string fold_name(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (s.compare(i, 2, "\xC3\x97") == 0) {  // U+00D7 multiplication sign
            out += 'x';
            i += 2;
            continue;
        }
        if (s.compare(i, 3, "\xE2\x8B\x8A") == 0) {  // U+22CA right semidirect
            out += ':';
            i += 3;
            continue;
        }
        if (s.compare(i, 3, "\xE2\x88\x98") == 0) {  // U+2218 ring operator
            out += 'o';
            i += 3;
            continue;
        }
        out += static_cast<char>(std::tolower(c));
        ++i;
    }
    return out;
}

struct CacheState {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<GeneratedGroup>> built;
};

CacheState& cache_state() {
    static CacheState s;
    return s;
}

std::string cache_file_name(const std::string& name) {
    std::string f;
    for (unsigned char c : name) f += std::isalnum(c) ? static_cast<char>(c) : '_';
    return f + ".json";
}

std::shared_ptr<GeneratedGroup> load_from_disk(const CatalogEntry& entry, const char* dir) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / cache_file_name(entry.name);
    std::ifstream in(path);
    if (!in) return nullptr;
    try {
        nlohmann::json j;
        in >> j;
        const int order = j.at("order").get<int>();
        if (order != entry.expected_order) return nullptr;
        auto table = j.at("table").get<std::vector<int>>();
        auto labels = j.at("labels").get<std::vector<std::string>>();
        auto gens = j.at("generators").get<std::vector<int>>();
        auto g = std::make_shared<GeneratedGroup>(
            GeneratedGroup{FiniteGroup(order, std::move(table), std::move(labels)), std::move(gens)});
        return g;
    } catch (...) {
        return nullptr;
    }
}

void store_to_disk(const CatalogEntry& entry, const GeneratedGroup& g, const char* dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;
    nlohmann::json j;
    j["order"] = g.group.order();
    j["table"] = g.group.table();
    std::vector<std::string> labels;
    for (int i = 0; i < g.group.order(); ++i) labels.push_back(g.group.label(i));
    j["labels"] = labels;
    j["generators"] = g.generator_index;
    std::ofstream out(fs::path(dir) / cache_file_name(entry.name));
    if (out) out << j.dump();
}

std::shared_ptr<GeneratedGroup> build_generated(const std::string& name, long cap) {
    const CatalogEntry& entry = catalog_entry(name);
    auto& state = cache_state();
    std::lock_guard<std::mutex> lock(state.mutex);
    auto it = state.built.find(entry.name);
    if (it != state.built.end()) return it->second;

    std::shared_ptr<GeneratedGroup> g;
    const char* dir = std::getenv("CGL_CACHE_DIR");
    if (dir && *dir) g = load_from_disk(entry, dir);
    if (!g) {
        g = std::make_shared<GeneratedGroup>(entry.recipe(cap));
        if (g->group.order() != entry.expected_order)
            throw Error("catalog entry " + entry.name + " built order " +
                        std::to_string(g->group.order()) + ", expected " +
                        std::to_string(entry.expected_order));
        if (dir && *dir) store_to_disk(entry, *g, dir);
    }
    state.built.emplace(entry.name, g);
    return g;
}

// ---------- word evaluation ----------

struct WordParser {
    const FiniteGroup& g;
    const std::map<char, int>& gens;
    const std::string& w;
    size_t pos = 0;

    void skip() {
        while (pos < w.size() && (w[pos] == ' ' || w[pos] == '*')) ++pos;
    }

    bool done() {
        skip();
        return pos >= w.size();
    }

    char peek() {
        skip();
        return pos < w.size() ? w[pos] : '\0';
    }

    int power(int e, long k) const {
        if (k < 0) return power(g.inv(e), -k);
        int r = g.identity();
        for (long i = 0; i < k; ++i) r = g.mul(r, e);
        return r;
    }

    int sequence(char stop1, char stop2) {
        int acc = g.identity();
        while (!done()) {
            const char c = peek();
            if (c == stop1 || c == stop2) break;
            acc = g.mul(acc, item());
        }
        return acc;
    }

    int item() {
        int base;
        const char c = peek();
        if (c == '(') {
            ++pos;
            base = sequence(')', '\0');
            if (peek() != ')') throw Error("unbalanced '(' in relation word");
            ++pos;
        } else if (c == '[') {
            ++pos;
            const int a = sequence(',', '\0');
            if (peek() != ',') throw Error("missing ',' in commutator");
            ++pos;
            const int b = sequence(']', '\0');
            if (peek() != ']') throw Error("unbalanced '[' in relation word");
            ++pos;
            base = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        } else {
            auto it = gens.find(c);
            if (it == gens.end()) throw Error(std::string("unknown generator '") + c + "' in word");
            base = it->second;
            ++pos;
        }
        if (peek() == '^') {
            ++pos;
            skip();
            bool neg = false;
            if (pos < w.size() && (w[pos] == '-' || w[pos] == '+')) neg = w[pos++] == '-';
            size_t start = pos;
            while (pos < w.size() && std::isdigit(static_cast<unsigned char>(w[pos]))) ++pos;
            if (start == pos) throw Error("missing exponent in relation word");
            long k = std::stol(w.substr(start, pos - start));
            base = power(base, neg ? -k : k);
        }
        return base;
    }
};

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> table = make_catalog();
    return table;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    const std::string key = fold_name(name);
    for (const auto& e : catalog()) {
        if (fold_name(e.name) == key) return e;
        for (const auto& a : e.aliases)
            if (fold_name(a) == key) return e;
    }
    throw UnknownGroupName(name);
}

bool is_catalog_name(const std::string& name) {
    try {
        catalog_entry(name);
        return true;
    } catch (const UnknownGroupName&) {
        return false;
    }
}

std::shared_ptr<const FiniteGroup> build_group(const std::string& name, long cap) {
    auto g = build_generated(name, cap);
    return {g, &g->group};
}

std::map<char, int> generator_elements(const std::string& name, long cap) {
    const CatalogEntry& entry = catalog_entry(name);
    auto g = build_generated(name, cap);
    std::map<char, int> out;
    for (size_t i = 0; i < entry.generator_names.size(); ++i)
        out[entry.generator_names[i]] = g->generator_index.at(i);
    return out;
}

bool verify_relations(const std::string& name, long cap) {
    const CatalogEntry& entry = catalog_entry(name);
    auto g = build_generated(name, cap);
    const auto gens = generator_elements(name, cap);
    for (const auto& w : entry.relations)
        if (evaluate_word(g->group, w, gens) != g->group.identity()) return false;
    return true;
}

int evaluate_word(const FiniteGroup& g, const std::string& word, const std::map<char, int>& gens) {
    WordParser p{g, gens, word};
    const int result = p.sequence('\0', '\0');
    if (!p.done()) throw Error("trailing input in relation word: " + word);
    return result;
}

}  // namespace cgl
