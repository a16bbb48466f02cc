#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "balgraph/connectivity.hpp"
#include "balgraph/multigraph.hpp"

namespace balgraph {

/// Vector of F2^E, equivalently a set of edges. Addition is symmetric difference.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t edge_count) : bits_(edge_count) {}
    static EdgeSet of(std::size_t edge_count, const std::vector<EdgeIndex>& edges);
    static EdgeSet of(const MultiGraph& g, const Ttrail& p);  // epsilon(p)

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(EdgeIndex e) const { return bits_.test(e); }
    void insert(EdgeIndex e) { bits_.set(e); }
    void erase(EdgeIndex e) { bits_.reset(e); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    std::vector<EdgeIndex> members() const;

    EdgeSet& operator+=(const EdgeSet& other) {
        bits_ ^= other.bits_;
        return *this;
    }
    friend EdgeSet operator+(EdgeSet a, const EdgeSet& b) { return a += b; }
    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.members() < b.members(); }

    const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

private:
    boost::dynamic_bitset<> bits_;
};

/// Rank over F2 of a family of edge sets.
std::size_t f2_rank(const std::vector<EdgeSet>& vectors);

/// delta(s): each edge maps to the sum of its endpoints. Returned as a vertex
/// list in insertion order.
std::vector<VertexIndex> boundary(const MultiGraph& g, const EdgeSet& s);

struct CycleWitness {
    EdgeSet edges;
    Ttrail trail;
};

/// Fundamental cycles of the BFS spanning forest (roots at the first vertex of
/// each component, incidences scanned in edge order), one per non-tree edge.
std::vector<CycleWitness> cycle_space_basis(const MultiGraph& g);

struct WeakCycleSpace {
    std::size_t dim = 0;
    std::vector<EdgeSet> basis;
};

WeakCycleSpace weak_cycle_space(const MultiGraph& g, std::size_t k);

/// Splits a homological cycle into edge-disjoint cycles by the walk-until-repeat
/// procedure. Throws std::invalid_argument if boundary(c) is nonempty.
std::vector<Ttrail> decompose_homological_cycle(const MultiGraph& g, const EdgeSet& c);

/// Cuts a 3-weakly closed ttrail at every inner vertex in the start's 3-class.
/// Throws std::invalid_argument if the endpoints are not 3-edge-connected.
std::vector<Ttrail> decompose_into_short(const MultiGraph& g, const Ttrail& p);
std::vector<Ttrail> decompose_into_short(const MultiGraph& g, const Partition& classes3, const Ttrail& p);

/// True when p is a short 3-weakly closed ttrail w.r.t. the given 3-classes.
bool is_short(const MultiGraph& g, const Partition& classes3, const Ttrail& p);

struct ShortGenerator {
    EdgeSet edges;
    Ttrail trail;
    VertexIndex from;
    VertexIndex to;
};

/// m-1 short ttrails per 3-class of m vertices whose endpoint pairs span the class.
std::vector<ShortGenerator> select_short_generators(const MultiGraph& g);
std::vector<ShortGenerator> select_short_generators(const MultiGraph& g, const Partition& classes3);

/// Fundamental cycles, short generators and quotient-forest edges: together a
/// basis of F2^E. This is the fixed frame every coordinate map is read against.
struct BasisExtension {
    Partition components;
    Partition classes;  // 3-edge-connectivity classes
    std::vector<CycleWitness> cycles;
    std::vector<ShortGenerator> shorts;
    std::vector<EdgeIndex> forest_edges;
    std::vector<VertexIndex> reps;  // first vertex of each 3-class, in block order
};

/// Throws std::logic_error if the assembled family is not an F2 basis.
BasisExtension basis_extension(const MultiGraph& g);

}  // namespace balgraph
