#include "cgl/shape.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

// ---- shape expression parsing ----
// expr   := term (('+' | unicode-sqcup) term)*
// term   := factor (('v' | unicode-vee) factor)*
// factor := INT '*'? factor | primary
// primary:= 'K' INT | 'F' INT | 'D' | '(' expr ')'

struct Parser {
    std::string src;
    size_t pos = 0;

    explicit Parser(std::string s) : src(std::move(s)) {}

    void skip_ws() {
        while (pos < src.size()) {
            if (std::isspace(static_cast<unsigned char>(src[pos]))) {
                ++pos;
            } else if (src.compare(pos, 3, "\xE2\x8A\x94") == 0) {  // ⊔ behaves like '+'
                src[pos] = '+';
                src.erase(pos + 1, 2);
            } else if (src.compare(pos, 3, "\xE2\x88\xA8") == 0) {  // ∨ behaves like 'v'
                src[pos] = 'v';
                src.erase(pos + 1, 2);
            } else {
                break;
            }
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw MalformedExpression("expected integer at position " + std::to_string(start));
        return std::stol(src.substr(start, pos - start));
    }

    SimpleGraph expr() {
        SimpleGraph g = term();
        while (eat('+')) g = disjoint_union(g, term());
        return g;
    }

    SimpleGraph term() {
        SimpleGraph g = factor();
        while (peek() == 'v') {
            ++pos;
            g = join(g, factor());
        }
        return g;
    }

    SimpleGraph factor() {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            long count = integer();
            eat('*');
            if (count < 1) throw MalformedExpression("multiplicity must be >= 1");
            SimpleGraph unit = factor();
            SimpleGraph g = unit;
            for (long i = 1; i < count; ++i) g = disjoint_union(g, unit);
            return g;
        }
        return primary();
    }

    SimpleGraph primary() {
        char c = peek();
        if (c == 'K') {
            ++pos;
            long k = integer();
            if (k < 1) throw MalformedExpression("K needs a positive order");
            SimpleGraph g(static_cast<int>(k));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
            return g;
        }
        if (c == 'F') {
            ++pos;
            long m = integer();
            if (m < 1) throw MalformedExpression("F needs a positive triangle count");
            return friendship(static_cast<int>(m));
        }
        if (c == 'D') {
            ++pos;
            return graph_d();
        }
        if (c == '(') {
            ++pos;
            SimpleGraph g = expr();
            if (!eat(')')) throw MalformedExpression("missing ')'");
            return g;
        }
        throw MalformedExpression(std::string("unexpected character '") + c + "'");
    }

    static SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
        SimpleGraph g(a.n() + b.n());
        for (int u = 0; u < a.n(); ++u)
            for (int v = u + 1; v < a.n(); ++v)
                if (a.adjacent(u, v)) g.add_edge(u, v);
        for (int u = 0; u < b.n(); ++u)
            for (int v = u + 1; v < b.n(); ++v)
                if (b.adjacent(u, v)) g.add_edge(a.n() + u, a.n() + v);
        return g;
    }

    static SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
        SimpleGraph g = disjoint_union(a, b);
        for (int u = 0; u < a.n(); ++u)
            for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
        return g;
    }

    static SimpleGraph friendship(int m) {
        SimpleGraph g(2 * m + 1);
        for (int i = 1; i <= 2 * m; ++i) g.add_edge(0, i);
        for (int i = 0; i < m; ++i) g.add_edge(1 + 2 * i, 2 + 2 * i);
        return g;
    }
};

// ---- canonical labeling (n <= 10) ----
// Maximal column-major adjacency bitstring over all permutations that map
// vertices onto same-degree vertices. Placing slot s appends the bits
// (perm[0],v), ..., (perm[s-1],v), so prefixes grow monotonically and
// strictly-smaller branches prune.

struct Canon {
    const SimpleGraph& g;
    int n;
    std::vector<std::vector<int>> candidates;  // per slot, degree-compatible vertices
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<char> prefix;
    std::vector<char> best;
    bool have_best = false;

    explicit Canon(const SimpleGraph& graph) : g(graph), n(graph.n()) {}

    std::string run() {
        auto deg = g.degrees();
        std::vector<int> slot_degree = deg;
        std::sort(slot_degree.begin(), slot_degree.end(), std::greater<>());
        candidates.assign(n, {});
        for (int s = 0; s < n; ++s)
            for (int v = 0; v < n; ++v)
                if (deg[v] == slot_degree[s]) candidates[s].push_back(v);
        perm.assign(n, -1);
        used.assign(n, 0);
        extend(0, true);

        std::ostringstream os;
        os << n << ':';
        for (char b : best) os << (b ? '1' : '0');
        return os.str();
    }

    // tight: prefix equals best on [0, len). Only then may a smaller segment prune.
    void extend(int slot, bool tight) {
        if (slot == n) {
            if (!have_best || prefix > best) best = prefix;
            have_best = true;
            return;
        }
        for (int v : candidates[slot]) {
            if (used[v]) continue;
            const size_t len = prefix.size();
            for (int i = 0; i < slot; ++i) prefix.push_back(g.adjacent(perm[i], v) ? 1 : 0);
            bool skip = false;
            bool child_tight = tight;
            if (have_best && tight) {
                for (size_t i = len; i < prefix.size(); ++i) {
                    if (prefix[i] != best[i]) {
                        if (prefix[i] < best[i])
                            skip = true;
                        else
                            child_tight = false;
                        break;
                    }
                }
            }
            if (!skip) {
                used[v] = 1;
                perm[slot] = v;
                extend(slot + 1, child_tight);
                used[v] = 0;
            }
            prefix.resize(len);
        }
    }
};

bool is_clique(const SimpleGraph& g) {
    const int k = g.n();
    for (int v = 0; v < k; ++v)
        if (g.degree(v) != k - 1) return false;
    return true;
}

// One hub adjacent to everything, the rest a perfect matching of triangles.
bool is_friendship(const SimpleGraph& g, int* m_out) {
    const int n = g.n();
    if (n < 5 || n % 2 == 0) return false;  // F1 = K3 is reported as a clique
    const int m = (n - 1) / 2;
    int hub = -1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == n - 1) {
            if (hub >= 0) return false;
            hub = v;
        } else if (d != 2) {
            return false;
        }
    }
    if (hub < 0) return false;
    for (int v = 0; v < n; ++v) {
        if (v == hub) continue;
        int partner = 0;
        for (int u = 0; u < n; ++u)
            if (u != hub && u != v && g.adjacent(v, u)) ++partner;
        if (partner != 1) return false;
    }
    *m_out = m;
    return true;
}

std::string degseq_certificate(const SimpleGraph& g) {
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    std::ostringstream os;
    os << "degseq:" << g.n() << ':';
    for (size_t i = 0; i < deg.size(); ++i) os << (i ? "," : "") << deg[i];
    return os.str();
}

const std::string& graph_d_certificate() {
    static const std::string cert = canonical_certificate(graph_d());
    return cert;
}

int kind_rank(ComponentKind k) {
    switch (k) {
        case ComponentKind::Clique: return 0;
        case ComponentKind::Friendship: return 1;
        case ComponentKind::GraphD: return 2;
        case ComponentKind::Other: return 3;
    }
    return 4;
}

}  // namespace

SimpleGraph build_shape(const std::string& expr) {
    Parser p(expr);
    SimpleGraph g = p.expr();
    p.skip_ws();
    if (p.pos != p.src.size())
        throw MalformedExpression("trailing input at position " + std::to_string(p.pos));
    return g;
}

SimpleGraph graph_d() {
    // four triangles glued at three cut vertices (Figure-1 layout)
    SimpleGraph g(9);
    const int edges[][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                            {4, 5}, {4, 6}, {5, 6}, {3, 7}, {3, 8}, {7, 8}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string canonical_certificate(const SimpleGraph& g) {
    if (g.n() > 10) return degseq_certificate(g);
    if (g.n() == 0) return "0:";
    Canon c(g);
    return c.run();
}

std::string ShapeComponent::term_string() const {
    switch (kind) {
        case ComponentKind::Clique: return "K" + std::to_string(param);
        case ComponentKind::Friendship: return "F" + std::to_string(param);
        case ComponentKind::GraphD: return "D";
        case ComponentKind::Other: {
            std::ostringstream os;
            os << "Other(n=" << n << ",m=" << m << ")";
            return os.str();
        }
    }
    return "?";
}

ShapeDescriptor::ShapeDescriptor(std::vector<ShapeComponent> comps) {
    std::sort(comps.begin(), comps.end(), [](const ShapeComponent& a, const ShapeComponent& b) {
        if (a.n != b.n) return a.n > b.n;
        const int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
        if (ra != rb) return ra < rb;
        if (a.param != b.param) return a.param > b.param;
        return a.cert < b.cert;
    });
    for (auto& c : comps) {
        if (!comps_.empty() && comps_.back().same_class(c))
            comps_.back().count += c.count;
        else
            comps_.push_back(c);
    }
}

int ShapeDescriptor::total_n() const {
    int total = 0;
    for (const auto& c : comps_) total += c.n * c.count;
    return total;
}

long ShapeDescriptor::total_m() const {
    long total = 0;
    for (const auto& c : comps_) total += c.m * c.count;
    return total;
}

bool ShapeDescriptor::fully_recognized() const {
    return std::none_of(comps_.begin(), comps_.end(),
                        [](const ShapeComponent& c) { return c.kind == ComponentKind::Other; });
}

std::string ShapeDescriptor::to_string() const {
    if (comps_.empty()) return "(empty)";
    std::ostringstream os;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << " + ";
        if (comps_[i].count > 1) os << comps_[i].count << '*';
        os << comps_[i].term_string();
    }
    return os.str();
}

bool ShapeDescriptor::operator==(const ShapeDescriptor& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].same_class(o.comps_[i]) || comps_[i].count != o.comps_[i].count) return false;
    return true;
}

ShapeDescriptor recognize_shape(const SimpleGraph& g) {
    std::vector<ShapeComponent> out;
    for (const auto& comp : components(g)) {
        const SimpleGraph& c = comp.graph;
        ShapeComponent sc;
        sc.n = c.n();
        sc.m = c.m();
        sc.count = 1;
        int m = 0;
        if (is_clique(c)) {
            sc.kind = ComponentKind::Clique;
            sc.param = c.n();
        } else if (is_friendship(c, &m)) {
            sc.kind = ComponentKind::Friendship;
            sc.param = m;
        } else if (c.n() == 9 && c.m() == 12 && canonical_certificate(c) == graph_d_certificate()) {
            sc.kind = ComponentKind::GraphD;
        } else {
            sc.kind = ComponentKind::Other;
            sc.cert = canonical_certificate(c);
        }
        out.push_back(std::move(sc));
    }
    return ShapeDescriptor(std::move(out));
}

}  // namespace cgl
