#include "posetgen/dag.hpp"

#include <cstring>
#include <stdexcept>
#include <string>

namespace posetgen {

namespace {

void check_vertex(const char* what, int n, int v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
    }
}

// Kahn's algorithm. Returns vertices in topological order, or an empty
// vector if the graph has a directed cycle (n > 0).
std::vector<int> topological_order(const Dag& g) {
    const int n = g.size();
    std::vector<int> indegree(n, 0);
    for (int i = 0; i < n; ++i) {
        BitMatrix::for_each_set_bit(g.adj.row(i), [&](int j) { ++indegree[j]; });
    }
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        BitMatrix::for_each_set_bit(g.adj.row(v), [&](int w) {
            if (--indegree[w] == 0) queue.push_back(w);
        });
    }
    if (static_cast<int>(order.size()) != n) order.clear();
    return order;
}

// Reachability matrix: row v holds every vertex reachable from v by a
// nonempty path. Processes vertices in reverse topological order so each
// successor row is final when used. Throws on cyclic input.
BitMatrix closure_matrix(const Dag& g) {
    const int n = g.size();
    std::vector<int> order = topological_order(g);
    if (n > 0 && order.empty()) {
        throw std::invalid_argument("transitive closure: input graph has a directed cycle");
    }
    BitMatrix reach = g.adj;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto dst = reach.row(v);
        BitMatrix::for_each_set_bit(g.adj.row(v), [&](int w) { reach.or_row_into(w, dst); });
    }
    return reach;
}

// Given a closure matrix, an edge (u,v) belongs to the reduction iff no
// intermediate w has u->w and w->v. Counts kept edges without
// materializing the reduced graph.
int reduction_edge_count(const BitMatrix& closure) {
    const int n = closure.size();
    BitMatrix t = closure.transposed();
    int kept = 0;
    for (int u = 0; u < n; ++u) {
        BitMatrix::for_each_set_bit(closure.row(u), [&](int v) {
            if (!closure.rows_intersect(u, t.row(v))) ++kept;
        });
    }
    return kept;
}

} // namespace

void Dag::add_edge(int i, int j) {
    check_vertex("add_edge", size(), i);
    check_vertex("add_edge", size(), j);
    if (i == j) throw std::invalid_argument("add_edge: self-loop rejected");
    adj.set(i, j);
}

void Dag::remove_edge(int i, int j) {
    check_vertex("remove_edge", size(), i);
    check_vertex("remove_edge", size(), j);
    adj.clear(i, j);
}

std::vector<Edge> Dag::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i) {
        BitMatrix::for_each_set_bit(adj.row(i), [&](int j) { out.emplace_back(i, j); });
    }
    return out;
}

Dag Dag::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw std::invalid_argument("from_edges: n must be positive");
    Dag g(n);
    for (auto [i, j] : edges) {
        check_vertex("from_edges", n, i);
        check_vertex("from_edges", n, j);
        if (i == j) throw std::invalid_argument("from_edges: self-loop rejected");
        g.adj.set(i, j);
    }
    if (!is_acyclic(g)) throw std::invalid_argument("from_edges: edge set has a directed cycle");
    return g;
}

Dag empty_dag(int n) {
    if (n < 1) throw std::invalid_argument("empty_dag: n must be positive");
    return Dag(n);
}

bool would_create_cycle(const Dag& g, int i, int j) {
    const int n = g.size();
    check_vertex("would_create_cycle", n, i);
    check_vertex("would_create_cycle", n, j);
    if (i == j) throw std::invalid_argument("would_create_cycle: self-loop proposal");
    if (g.has_edge(i, j)) throw std::invalid_argument("would_create_cycle: edge already present");
    // (i,j) closes a cycle iff i is reachable from j. Word-parallel BFS.
    const int words = g.adj.words_per_row();
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    frontier[j >> 6] = std::uint64_t{1} << (j & 63);
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        BitMatrix::for_each_set_bit({frontier.data(), frontier.size()},
                                    [&](int v) { g.adj.or_row_into(v, next); });
        bool any_new = false;
        for (int w = 0; w < words; ++w) {
            visited[w] |= frontier[w];
            next[w] &= ~visited[w];
            frontier[w] = next[w];
            any_new = any_new || next[w];
        }
        if ((visited[i >> 6] >> (i & 63)) & 1u) return true;
        if (!any_new) return false;
    }
}

bool is_acyclic(const Dag& g) {
    return g.size() == 0 || !topological_order(g).empty();
}

Dag transitive_closure(const Dag& g) {
    Dag out(g.size());
    out.adj = closure_matrix(g);
    return out;
}

Dag transitive_reduction(const Dag& g) {
    const int n = g.size();
    BitMatrix closure = closure_matrix(g);
    BitMatrix t = closure.transposed();
    Dag out(n);
    for (int u = 0; u < n; ++u) {
        BitMatrix::for_each_set_bit(closure.row(u), [&](int v) {
            if (!closure.rows_intersect(u, t.row(v))) out.adj.set(u, v);
        });
    }
    return out;
}

int class_size_exponent(const Dag& g) {
    BitMatrix closure = closure_matrix(g);
    return closure.popcount() - reduction_edge_count(closure);
}

PosetKey poset_key(const Dag& g) {
    return PosetKey{closure_matrix(g)};
}

std::vector<Edge> PosetKey::relation_pairs() const {
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i) {
        BitMatrix::for_each_set_bit(rel.row(i), [&](int j) { out.emplace_back(i, j); });
    }
    return out;
}

bool PosetKey::valid() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (rel.get(i, i)) return false;
    }
    BitMatrix t = rel.transposed();
    for (int i = 0; i < n; ++i) {
        if (rel.rows_intersect(i, t.row(i))) return false; // some i<j with j<i
        // transitivity: j in rel[i] requires rel[j] subset of rel[i]
        bool ok = true;
        BitMatrix::for_each_set_bit(rel.row(i), [&](int j) {
            auto ri = rel.row(i);
            auto rj = rel.row(j);
            for (std::size_t w = 0; w < ri.size(); ++w) {
                if (rj[w] & ~ri[w]) {
                    ok = false;
                    return;
                }
            }
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<std::uint8_t> PosetKey::to_bytes() const {
    const int n = size();
    const std::size_t nbits = static_cast<std::size_t>(n) * n;
    std::vector<std::uint8_t> out(4 + (nbits + 7) / 8, 0);
    std::uint32_t n32 = static_cast<std::uint32_t>(n);
    out[0] = static_cast<std::uint8_t>(n32);
    out[1] = static_cast<std::uint8_t>(n32 >> 8);
    out[2] = static_cast<std::uint8_t>(n32 >> 16);
    out[3] = static_cast<std::uint8_t>(n32 >> 24);
    for (int i = 0; i < n; ++i) {
        BitMatrix::for_each_set_bit(rel.row(i), [&](int j) {
            std::size_t b = static_cast<std::size_t>(i) * n + j;
            out[4 + b / 8] |= static_cast<std::uint8_t>(1u << (b % 8));
        });
    }
    return out;
}

PosetKey PosetKey::from_bytes(const std::uint8_t* data, std::size_t len) {
    if (len < 4) throw std::invalid_argument("PosetKey::from_bytes: truncated header");
    std::uint32_t n32 = static_cast<std::uint32_t>(data[0]) | (static_cast<std::uint32_t>(data[1]) << 8) |
                        (static_cast<std::uint32_t>(data[2]) << 16) | (static_cast<std::uint32_t>(data[3]) << 24);
    if (n32 == 0 || n32 > (1u << 20)) throw std::invalid_argument("PosetKey::from_bytes: bad element count");
    const int n = static_cast<int>(n32);
    const std::size_t nbits = static_cast<std::size_t>(n) * n;
    if (len != 4 + (nbits + 7) / 8) {
        throw std::invalid_argument("PosetKey::from_bytes: length does not match element count");
    }
    PosetKey key{BitMatrix(n)};
    for (std::size_t b = 0; b < nbits; ++b) {
        if ((data[4 + b / 8] >> (b % 8)) & 1u) {
            key.rel.set(static_cast<int>(b / n), static_cast<int>(b % n));
        }
    }
    if (!key.valid()) throw std::invalid_argument("PosetKey::from_bytes: relation is not a strict order");
    return key;
}

std::strong_ordering PosetKey::operator<=>(const PosetKey& other) const {
    if (size() != other.size()) return size() <=> other.size();
    const int n = size();
    const std::size_t nbits = static_cast<std::size_t>(n) * n;
    // compare the serialized byte stream without materializing it
    for (std::size_t base = 0; base < nbits; base += 8) {
        unsigned a = 0, b = 0;
        for (unsigned k = 0; k < 8 && base + k < nbits; ++k) {
            std::size_t bit = base + k;
            a |= static_cast<unsigned>(rel.get(static_cast<int>(bit / n), static_cast<int>(bit % n))) << k;
            b |= static_cast<unsigned>(other.rel.get(static_cast<int>(bit / n), static_cast<int>(bit % n))) << k;
        }
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::size_t PosetKeyHash::operator()(const PosetKey& k) const {
    // FNV-1a over the row words plus the size
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(k.size()));
    for (std::uint64_t w : k.rel.words()) mix(w);
    return static_cast<std::size_t>(h);
}

std::vector<Edge> hasse_edges(const PosetKey& p) {
    if (!p.valid()) throw std::invalid_argument("hasse_edges: key violates strict-order invariants");
    Dag g(p.size());
    g.adj = p.rel;
    return transitive_reduction(g).edges();
}

} // namespace posetgen
