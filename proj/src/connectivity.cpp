#include "balgraph/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace balgraph {

Partition::Partition(std::size_t vertex_count, std::vector<std::vector<VertexIndex>> blocks) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition block is empty");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(vertex_count, unset);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (auto v : blocks[i]) {
            if (v >= vertex_count || block_of_[v] != unset)
                throw std::invalid_argument("partition blocks overlap or leave the vertex range");
            block_of_[v] = i;
        }
    }
    if (std::find(block_of_.begin(), block_of_.end(), unset) != block_of_.end())
        throw std::invalid_argument("partition does not cover every vertex");
    blocks_ = std::move(blocks);
}

bool Partition::refines(const Partition& coarser) const {
    if (block_of_.size() != coarser.block_of_.size()) return false;
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const auto& b) {
        return std::all_of(b.begin(), b.end(), [&](VertexIndex v) { return coarser.same_block(v, b.front()); });
    });
}

Partition connected_components(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexIndex>> blocks;
    for (VertexIndex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<VertexIndex> block{root};
        seen[root] = true;
        for (std::size_t head = 0; head < block.size(); ++head) {
            for (const auto& inc : g.incident(block[head])) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = true;
                    block.push_back(inc.neighbor);
                }
            }
        }
        blocks.push_back(std::move(block));
    }
    return Partition(n, std::move(blocks));
}

namespace {

// Net flow per edge: +1 along (u -> w) of the edge record, -1 against it.
struct UnitFlow {
    std::vector<int> net;
    std::size_t value = 0;
};

int direction(const EdgeRecord& rec, VertexIndex from) { return rec.u == from ? 1 : -1; }

UnitFlow unit_capacity_flow(const MultiGraph& g, VertexIndex source, VertexIndex sink, std::size_t cap) {
    UnitFlow flow;
    flow.net.assign(g.edge_count(), 0);
    const std::size_t n = g.vertex_count();
    struct Parent {
        VertexIndex vertex;
        EdgeIndex edge;
    };
    std::vector<Parent> parent(n);
    std::vector<bool> seen(n);
    while (flow.value < cap) {
        std::fill(seen.begin(), seen.end(), false);
        std::deque<VertexIndex> queue{source};
        seen[source] = true;
        while (!queue.empty() && !seen[sink]) {
            VertexIndex x = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(x)) {
                const auto& rec = g.edge(inc.edge);
                if (rec.is_loop() || seen[inc.neighbor]) continue;
                if (flow.net[inc.edge] * direction(rec, x) >= 1) continue;  // saturated this way
                seen[inc.neighbor] = true;
                parent[inc.neighbor] = {x, inc.edge};
                queue.push_back(inc.neighbor);
            }
        }
        if (!seen[sink]) break;
        for (VertexIndex y = sink; y != source; y = parent[y].vertex) {
            const auto& rec = g.edge(parent[y].edge);
            flow.net[parent[y].edge] += direction(rec, parent[y].vertex);
        }
        ++flow.value;
    }
    return flow;
}

std::vector<Ttrail> decompose_flow(const MultiGraph& g, const UnitFlow& flow, VertexIndex source, VertexIndex sink) {
    std::vector<bool> used(g.edge_count(), false);
    std::vector<Ttrail> paths;
    for (std::size_t i = 0; i < flow.value; ++i) {
        Ttrail p;
        VertexIndex x = source;
        while (x != sink) {
            bool moved = false;
            for (const auto& inc : g.incident(x)) {
                const auto& rec = g.edge(inc.edge);
                if (used[inc.edge] || rec.is_loop()) continue;
                if (flow.net[inc.edge] * direction(rec, x) != 1) continue;
                used[inc.edge] = true;
                p.vertices.push_back(x);
                p.edges.push_back(inc.edge);
                x = inc.neighbor;
                moved = true;
                break;
            }
            if (!moved) throw std::logic_error("flow decomposition stalled; conservation violated");
        }
        p.terminal = sink;
        paths.push_back(std::move(p));
    }
    return paths;
}

void check_vertex(const MultiGraph& g, VertexIndex v) {
    if (v >= g.vertex_count()) throw std::out_of_range("vertex index outside graph");
}

}  // namespace

DisjointPaths max_edge_disjoint_paths(const MultiGraph& g, VertexIndex u, VertexIndex v, std::size_t cap) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("max_edge_disjoint_paths: endpoints coincide");
    if (cap == 0) throw std::invalid_argument("max_edge_disjoint_paths: cap must be positive");
    UnitFlow flow = unit_capacity_flow(g, u, v, cap);
    return {flow.value, decompose_flow(g, flow, u, v)};
}

Partition k_edge_classes(const MultiGraph& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k_edge_classes: k must be positive");
    Partition part = connected_components(g);
    for (std::size_t level = 2; level <= k; ++level) {
        std::vector<std::vector<VertexIndex>> refined;
        for (const auto& block : part.blocks()) {
            const std::size_t first = refined.size();
            for (VertexIndex x : block) {
                auto joined = std::find_if(refined.begin() + static_cast<std::ptrdiff_t>(first), refined.end(),
                                           [&](const auto& sub) {
                                               return unit_capacity_flow(g, sub.front(), x, level).value >= level;
                                           });
                if (joined == refined.end())
                    refined.push_back({x});
                else
                    joined->push_back(x);
            }
        }
        part = Partition(g.vertex_count(), std::move(refined));
    }
    return part;
}

Quotient quotient_graph(const MultiGraph& g, const Partition& part) {
    if (part.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not match graph");
    MultiGraph::Builder builder;
    for (const auto& block : part.blocks()) builder.add_vertex(g.vertex_id(block.front()));
    Quotient q;
    q.vertex_map.resize(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) q.vertex_map[v] = static_cast<VertexIndex>(part.block_of(v));
    for (const auto& e : g.edges()) builder.add_edge(e.id, q.vertex_map[e.u], q.vertex_map[e.w]);
    q.graph = std::move(builder).build();
    return q;
}

}  // namespace balgraph
