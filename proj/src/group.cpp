#include "cgl/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "cgl/errors.hpp"

namespace cgl {

std::string CentralizerCensus::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << '(' << entries[i].first << ',' << entries[i].second << ')';
    }
    os << '}';
    return os.str();
}

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (n_ <= 0 || table_.size() != static_cast<size_t>(n_) * n_)
        throw Error("bad multiplication table");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
    }
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw Error("element 0 is not the identity");
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) inverse_[a] = b;
        if (inverse_[a] < 0 || mul(inverse_[a], a) != 0) throw Error("element has no inverse");
    }
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return a == 0 ? 1 : k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!commutes(a, b)) return false;
    return true;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < n_; ++a) {
        bool central = true;
        for (int b = 0; b < n_ && central; ++b) central = commutes(a, b);
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
    if (x < 0 || x >= n_) throw IndexOutOfRange("element " + std::to_string(x));
    std::vector<int> c;
    for (int b = 0; b < n_; ++b)
        if (commutes(x, b)) c.push_back(b);
    return c;
}

CentralizerCensus FiniteGroup::centralizer_census() const {
    if (is_abelian()) throw AbelianGroup();
    const auto z = center();
    std::vector<char> central(n_, 0);
    for (int c : z) central[c] = 1;
    std::set<std::vector<int>> distinct;
    for (int x = 0; x < n_; ++x)
        if (!central[x]) distinct.insert(centralizer(x));
    std::map<int, int, std::greater<>> by_size;
    for (const auto& c : distinct) ++by_size[static_cast<int>(c.size())];
    CentralizerCensus census;
    for (auto [size, count] : by_size) census.entries.emplace_back(size, count);
    return census;
}

bool FiniteGroup::is_ac_group() const {
    if (is_abelian()) throw AbelianGroup();
    const auto z = center();
    std::vector<char> central(n_, 0);
    for (int c : z) central[c] = 1;
    std::set<std::vector<int>> distinct;
    for (int x = 0; x < n_; ++x)
        if (!central[x]) distinct.insert(centralizer(x));
    for (const auto& c : distinct)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (!commutes(c[i], c[j])) return false;
    return true;
}

bool FiniteGroup::verify_associativity() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
}

SimpleGraph commuting_graph(const FiniteGroup& g) {
    const auto z = g.center();
    if (static_cast<int>(z.size()) == g.order()) throw AbelianGroup();
    std::vector<char> central(g.order(), 0);
    for (int c : z) central[c] = 1;
    std::vector<int> verts;
    for (int x = 0; x < g.order(); ++x)
        if (!central[x]) verts.push_back(x);
    SimpleGraph graph(static_cast<int>(verts.size()));
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(g.label(v));
    graph.set_labels(std::move(labels));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.commutes(verts[i], verts[j])) graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return graph;
}

GeneratedGroup from_permutation_generators(const std::vector<Permutation>& gens, long cap) {
    if (gens.empty()) throw EmptyGeneratorSet();
    if (cap < 1) throw Error("cap must be >= 1");
    const int degree = gens.front().degree();
    for (const auto& g : gens) {
        if (g.degree() != degree) throw Error("generators have mixed degrees");
        if (!g.is_bijection()) throw Error("generator is not a bijection");
    }

    std::vector<Permutation> elements;
    std::map<Permutation, int> index;
    std::deque<int> frontier;
    elements.push_back(Permutation::identity(degree));
    index.emplace(elements[0], 0);
    frontier.push_back(0);
    while (!frontier.empty()) {
        const int i = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Permutation p = elements[i] * g;
            auto [it, inserted] = index.emplace(p, static_cast<int>(elements.size()));
            if (inserted) {
                if (static_cast<long>(elements.size()) >= cap) throw ClosureExceedsCap(cap);
                elements.push_back(std::move(p));
                frontier.push_back(it->second);
            }
        }
    }

    const int n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = index.at(elements[a] * elements[b]);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& e : elements) labels.push_back(e.cycle_string());

    GeneratedGroup out{FiniteGroup(n, std::move(table), std::move(labels)), {}};
    out.generator_index.reserve(gens.size());
    for (const auto& g : gens) out.generator_index.push_back(index.at(g));
    return out;
}

GeneratedGroup from_matrix_generators(long p, const std::vector<Mat2>& gens, long cap) {
    if (gens.empty()) throw EmptyGeneratorSet();
    auto norm = [p](long x) { return ((x % p) + p) % p; };
    std::vector<Permutation> perms;
    perms.reserve(gens.size());
    for (const auto& mat : gens) {
        const long a = norm(mat.a), b = norm(mat.b), c = norm(mat.c), d = norm(mat.d);
        if (norm(a * d - b * c) == 0) throw SingularGenerator();
        std::vector<int> image(static_cast<size_t>(p) * p);
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y)
                image[x * p + y] = static_cast<int>(norm(a * x + b * y) * p + norm(c * x + d * y));
        perms.emplace_back(std::move(image));
    }
    return from_permutation_generators(perms, cap);
}

}  // namespace cgl
