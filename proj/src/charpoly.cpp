#include "cgl/charpoly.hpp"

#include <vector>

namespace cgl {

namespace {

// Faddeev-LeVerrier on one dense block; the per-step division by k is exact.
IntPoly fl_charpoly(const std::vector<mpz_class>& m, int n) {
    if (n == 0) return IntPoly::constant(1);
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    std::vector<mpz_class> b(m);
    std::vector<mpz_class> t(static_cast<size_t>(n) * n);
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += b[static_cast<size_t>(i) * n + i];
    c[n - 1] = -tr;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) b[static_cast<size_t>(i) * n + i] += c[n - k + 1];
        for (int i = 0; i < n; ++i) {
            const size_t row = static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) {
                mpz_class& acc = t[row + j];
                acc = 0;
                for (int l = 0; l < n; ++l) {
                    const mpz_class& mil = m[row + l];
                    if (mil != 0)
                        mpz_addmul(acc.get_mpz_t(), mil.get_mpz_t(),
                                   b[static_cast<size_t>(l) * n + j].get_mpz_t());
                }
            }
        }
        std::swap(b, t);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += b[static_cast<size_t>(i) * n + i];
        mpz_class ck = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = ck;
    }
    return IntPoly(std::move(c));
}

std::vector<std::vector<int>> pattern_blocks(const IntegerSymmetricMatrix& m) {
    const int n = m.n;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            blocks[id].push_back(u);
            for (int v = 0; v < n; ++v)
                if (v != u && comp[v] < 0 && m.at(u, v) != 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
    }
    return blocks;
}

}  // namespace

IntPoly char_poly(const IntegerSymmetricMatrix& m) {
    IntPoly result = IntPoly::constant(1);
    for (const auto& block : pattern_blocks(m)) {
        const int bn = static_cast<int>(block.size());
        std::vector<mpz_class> sub(static_cast<size_t>(bn) * bn);
        for (int i = 0; i < bn; ++i)
            for (int j = 0; j < bn; ++j) sub[static_cast<size_t>(i) * bn + j] = m.at(block[i], block[j]);
        result = result * fl_charpoly(sub, bn);
    }
    return result;
}

}  // namespace cgl
