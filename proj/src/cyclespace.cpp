#include "balgraph/cyclespace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace balgraph {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

struct BfsForest {
    std::vector<VertexIndex> parent;
    std::vector<EdgeIndex> parent_edge;
    std::vector<std::size_t> depth;
    std::vector<bool> tree_edge;
};

BfsForest bfs_forest(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    BfsForest f{std::vector<VertexIndex>(n, kNoVertex), std::vector<EdgeIndex>(n, MultiGraph::kNoEdge),
                std::vector<std::size_t>(n, 0), std::vector<bool>(g.edge_count(), false)};
    std::vector<bool> seen(n, false);
    for (VertexIndex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::deque<VertexIndex> queue{root};
        while (!queue.empty()) {
            VertexIndex x = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(x)) {
                if (seen[inc.neighbor]) continue;
                seen[inc.neighbor] = true;
                f.parent[inc.neighbor] = x;
                f.parent_edge[inc.neighbor] = inc.edge;
                f.depth[inc.neighbor] = f.depth[x] + 1;
                f.tree_edge[inc.edge] = true;
                queue.push_back(inc.neighbor);
            }
        }
    }
    return f;
}

// Closes non-tree edge e = (x, y) through the tree: x, e, y, ..., lca, ..., x.
Ttrail fundamental_cycle(const MultiGraph& g, const BfsForest& f, EdgeIndex e) {
    const auto& rec = g.edge(e);
    Ttrail t;
    t.vertices.push_back(rec.u);
    t.edges.push_back(e);
    t.terminal = rec.u;
    if (rec.is_loop()) return t;

    VertexIndex a = rec.w, b = rec.u;
    while (f.depth[a] > f.depth[b]) a = f.parent[a];
    while (f.depth[b] > f.depth[a]) b = f.parent[b];
    while (a != b) {
        a = f.parent[a];
        b = f.parent[b];
    }
    const VertexIndex lca = a;

    VertexIndex cur = rec.w;
    while (cur != lca) {
        t.vertices.push_back(cur);
        t.edges.push_back(f.parent_edge[cur]);
        cur = f.parent[cur];
    }
    std::vector<VertexIndex> down;
    for (VertexIndex x = rec.u; x != lca; x = f.parent[x]) down.push_back(x);
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
        t.vertices.push_back(cur);
        t.edges.push_back(f.parent_edge[*it]);
        cur = *it;
    }
    return t;
}

Ttrail slice(const Ttrail& p, std::size_t begin, std::size_t end, VertexIndex terminal) {
    Ttrail piece;
    piece.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(begin),
                          p.vertices.begin() + static_cast<std::ptrdiff_t>(end));
    piece.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(begin),
                       p.edges.begin() + static_cast<std::ptrdiff_t>(end));
    piece.terminal = terminal;
    return piece;
}

}  // namespace

EdgeSet EdgeSet::of(std::size_t edge_count, const std::vector<EdgeIndex>& edges) {
    EdgeSet s(edge_count);
    for (auto e : edges) s.bits_.flip(e);
    return s;
}

EdgeSet EdgeSet::of(const MultiGraph& g, const Ttrail& p) {
    EdgeSet s(g.edge_count());
    for (auto e : p.edges) s.insert(e);
    return s;
}

std::vector<EdgeIndex> EdgeSet::members() const {
    std::vector<EdgeIndex> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(static_cast<EdgeIndex>(i));
    return out;
}

std::size_t f2_rank(const std::vector<EdgeSet>& vectors) {
    if (vectors.empty()) return 0;
    std::map<std::size_t, boost::dynamic_bitset<>> pivots;
    std::size_t rank = 0;
    for (const auto& v : vectors) {
        boost::dynamic_bitset<> bits = v.bits();
        for (auto p = bits.find_first(); p != boost::dynamic_bitset<>::npos; p = bits.find_first()) {
            auto it = pivots.find(p);
            if (it == pivots.end()) {
                pivots.emplace(p, std::move(bits));
                ++rank;
                break;
            }
            bits ^= it->second;
        }
    }
    return rank;
}

std::vector<VertexIndex> boundary(const MultiGraph& g, const EdgeSet& s) {
    std::vector<bool> odd(g.vertex_count(), false);
    for (auto e : s.members()) {
        const auto& rec = g.edge(e);
        if (rec.is_loop()) continue;
        odd[rec.u] = !odd[rec.u];
        odd[rec.w] = !odd[rec.w];
    }
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (odd[v]) out.push_back(v);
    return out;
}

std::vector<CycleWitness> cycle_space_basis(const MultiGraph& g) {
    BfsForest forest = bfs_forest(g);
    std::vector<CycleWitness> basis;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (forest.tree_edge[e]) continue;
        Ttrail t = fundamental_cycle(g, forest, e);
        basis.push_back({EdgeSet::of(g, t), std::move(t)});
    }
    return basis;
}

WeakCycleSpace weak_cycle_space(const MultiGraph& g, std::size_t k) {
    Quotient q = quotient_graph(g, k_edge_classes(g, k));
    WeakCycleSpace out;
    for (auto& c : cycle_space_basis(q.graph)) out.basis.push_back(std::move(c.edges));
    out.dim = out.basis.size();
    return out;
}

std::vector<Ttrail> decompose_homological_cycle(const MultiGraph& g, const EdgeSet& c) {
    if (c.universe() != g.edge_count()) throw std::invalid_argument("edge set does not match graph");
    if (!boundary(g, c).empty()) throw std::invalid_argument("edge set is not a homological cycle");

    EdgeSet remaining = c;
    std::vector<Ttrail> cycles;
    while (!remaining.empty()) {
        const EdgeIndex first = remaining.members().front();
        const auto& rec = g.edge(first);
        if (rec.is_loop()) {
            cycles.push_back(Ttrail{{rec.u}, {first}, rec.u});
            remaining.erase(first);
            continue;
        }
        Ttrail walk{{rec.u}, {first}, kNoVertex};
        std::vector<std::size_t> position(g.vertex_count(), static_cast<std::size_t>(-1));
        std::vector<bool> on_walk(g.edge_count(), false);
        position[rec.u] = 0;
        on_walk[first] = true;
        VertexIndex cur = rec.w;
        while (position[cur] == static_cast<std::size_t>(-1)) {
            position[cur] = walk.vertices.size();
            walk.vertices.push_back(cur);
            auto next = std::find_if(g.incident(cur).begin(), g.incident(cur).end(), [&](const Incidence& inc) {
                return remaining.contains(inc.edge) && !on_walk[inc.edge] && !g.edge(inc.edge).is_loop();
            });
            if (next == g.incident(cur).end()) throw std::logic_error("homological cycle walk stalled");
            on_walk[next->edge] = true;
            walk.edges.push_back(next->edge);
            cur = next->neighbor;
        }
        Ttrail cycle = slice(walk, position[cur], walk.edges.size(), cur);
        for (auto e : cycle.edges) remaining.erase(e);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<Ttrail> decompose_into_short(const MultiGraph& g, const Ttrail& p) {
    return decompose_into_short(g, k_edge_classes(g, 3), p);
}

std::vector<Ttrail> decompose_into_short(const MultiGraph& g, const Partition& classes3, const Ttrail& p) {
    if (p.trivial()) return {};
    if (classify_sequence(g, p) == SequenceKind::NotATtrail)
        throw std::invalid_argument("decompose_into_short: input is not a ttrail");
    const VertexIndex start = p.start();
    if (!classes3.same_block(start, p.terminal))
        throw std::invalid_argument("decompose_into_short: endpoints are not 3-edge-connected");
    std::vector<Ttrail> pieces;
    std::size_t begin = 0;
    for (std::size_t j = 1; j < p.vertices.size(); ++j) {
        if (!classes3.same_block(p.vertices[j], start)) continue;
        pieces.push_back(slice(p, begin, j, p.vertices[j]));
        begin = j;
    }
    pieces.push_back(slice(p, begin, p.edges.size(), p.terminal));
    return pieces;
}

bool is_short(const MultiGraph& g, const Partition& classes3, const Ttrail& p) {
    if (p.trivial()) return true;
    if (classify_sequence(g, p) == SequenceKind::NotATtrail) return false;
    if (!classes3.same_block(p.start(), p.terminal)) return false;
    return std::none_of(p.vertices.begin() + 1, p.vertices.end(),
                        [&](VertexIndex v) { return classes3.same_block(v, p.start()); });
}

std::vector<ShortGenerator> select_short_generators(const MultiGraph& g) {
    return select_short_generators(g, k_edge_classes(g, 3));
}

std::vector<ShortGenerator> select_short_generators(const MultiGraph& g, const Partition& classes3) {
    const std::size_t n = g.vertex_count();
    std::vector<ShortGenerator> shorts;
    UnionFind joined(n);
    std::vector<VertexIndex> parent(n);
    std::vector<EdgeIndex> parent_edge(n);
    std::vector<bool> seen(n);

    for (const auto& block : classes3.blocks()) {
        std::size_t pieces = block.size();
        for (VertexIndex w : block) {
            if (pieces == 1) break;
            // BFS from w that never passes through another vertex of w's class.
            std::fill(seen.begin(), seen.end(), false);
            seen[w] = true;
            std::deque<VertexIndex> queue{w};
            std::vector<VertexIndex> reached;
            while (!queue.empty()) {
                VertexIndex x = queue.front();
                queue.pop_front();
                for (const auto& inc : g.incident(x)) {
                    if (seen[inc.neighbor]) continue;
                    seen[inc.neighbor] = true;
                    parent[inc.neighbor] = x;
                    parent_edge[inc.neighbor] = inc.edge;
                    if (classes3.same_block(inc.neighbor, w))
                        reached.push_back(inc.neighbor);
                    else
                        queue.push_back(inc.neighbor);
                }
            }
            for (VertexIndex x : reached) {
                if (!joined.unite(w, x)) continue;
                --pieces;
                Ttrail t;
                t.terminal = x;
                for (VertexIndex y = x; y != w; y = parent[y]) {
                    t.vertices.push_back(parent[y]);
                    t.edges.push_back(parent_edge[y]);
                }
                std::reverse(t.vertices.begin(), t.vertices.end());
                std::reverse(t.edges.begin(), t.edges.end());
                shorts.push_back({EdgeSet::of(g, t), std::move(t), w, x});
            }
        }
        if (pieces != 1) throw std::logic_error("short generators failed to span a 3-class");
    }
    return shorts;
}

BasisExtension basis_extension(const MultiGraph& g) {
    BasisExtension b;
    b.components = connected_components(g);
    b.classes = k_edge_classes(g, 3);
    b.cycles = cycle_space_basis(g);
    b.shorts = select_short_generators(g, b.classes);

    UnionFind quotient(b.classes.size());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& rec = g.edge(e);
        if (quotient.unite(b.classes.block_of(rec.u), b.classes.block_of(rec.w))) b.forest_edges.push_back(e);
    }
    for (const auto& block : b.classes.blocks()) b.reps.push_back(block.front());

    const std::size_t n = g.vertex_count(), m = g.edge_count();
    const std::size_t con = b.components.size(), con3 = b.classes.size();
    if (b.cycles.size() != m + con - n || b.shorts.size() != n - con3 || b.forest_edges.size() != con3 - con)
        throw std::logic_error("basis extension has the wrong shape");

    std::vector<EdgeSet> family;
    for (const auto& c : b.cycles) family.push_back(c.edges);
    for (const auto& s : b.shorts) family.push_back(s.edges);
    for (auto e : b.forest_edges) family.push_back(EdgeSet::of(m, {e}));
    if (f2_rank(family) != m) throw std::logic_error("basis extension is not a basis of F2^E");
    return b;
}

}  // namespace balgraph
