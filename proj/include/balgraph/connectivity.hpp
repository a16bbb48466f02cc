#pragma once

#include <vector>

#include "balgraph/multigraph.hpp"

namespace balgraph {

/// Partition of the vertex set. Blocks are ordered by their smallest member
/// (in insertion order) and each block lists its members in insertion order.
class Partition {
public:
    Partition() = default;
    /// Normalizes the block order; throws std::invalid_argument unless the blocks
    /// cover 0..vertex_count-1 exactly once.
    Partition(std::size_t vertex_count, std::vector<std::vector<VertexIndex>> blocks);

    std::size_t size() const noexcept { return blocks_.size(); }
    std::size_t vertex_count() const noexcept { return block_of_.size(); }
    const std::vector<std::vector<VertexIndex>>& blocks() const noexcept { return blocks_; }
    const std::vector<VertexIndex>& block(std::size_t i) const { return blocks_.at(i); }
    std::size_t block_of(VertexIndex v) const { return block_of_.at(v); }
    bool same_block(VertexIndex a, VertexIndex b) const { return block_of(a) == block_of(b); }
    /// True when every block of *this lies inside a block of coarser.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<VertexIndex>> blocks_;
    std::vector<std::size_t> block_of_;
};

Partition connected_components(const MultiGraph& g);

struct DisjointPaths {
    std::size_t count = 0;
    std::vector<Ttrail> paths;  // pairwise edge-disjoint, u -> v
};

/// Up to `cap` pairwise edge-disjoint ttrails from u to v, by unit-capacity
/// augmenting paths. Loops are ignored. Throws std::invalid_argument when
/// u == v or cap == 0, std::out_of_range for unknown vertices.
DisjointPaths max_edge_disjoint_paths(const MultiGraph& g, VertexIndex u, VertexIndex v, std::size_t cap);

/// k-edge-connectivity classes, refined level by level from the components.
Partition k_edge_classes(const MultiGraph& g, std::size_t k);

struct Quotient {
    MultiGraph graph;                     // one vertex per block, named after its first member
    std::vector<VertexIndex> vertex_map;  // original vertex -> quotient vertex
};

/// Glues each block to a single vertex; edge ids and order are preserved and
/// edges inside a block become loops.
Quotient quotient_graph(const MultiGraph& g, const Partition& part);

}  // namespace balgraph
