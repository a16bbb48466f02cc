#pragma once

#include <optional>
#include <vector>

#include "balgraph/abelian.hpp"
#include "balgraph/cyclespace.hpp"
#include "balgraph/linsolve.hpp"
#include "balgraph/multigraph.hpp"

namespace balgraph {

struct EdgeLabeling {
    std::vector<GroupElement> values;  // indexed by edge
    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

struct VertexLabeling {
    std::vector<GroupElement> values;  // indexed by vertex
    friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;
};

struct FullLabeling {
    VertexLabeling vertices;
    EdgeLabeling edges;
    friend bool operator==(const FullLabeling&, const FullLabeling&) = default;
};

/// Which group of labelings: balanced edge functions (H), balanceable vertex
/// functions (B), or balanced functions on vertices and edges (W).
enum class LabelingKind { H, B, W };

std::string_view to_string(LabelingKind kind);
LabelingKind parse_labeling_kind(std::string_view text);

/// phi coordinates: values on the forest edges, and edge sums over the short
/// generators (which lie in A2 for balanced input).
struct EdgeCoordinates {
    std::vector<GroupElement> forest;
    std::vector<GroupElement> shorts;
    friend bool operator==(const EdgeCoordinates&, const EdgeCoordinates&) = default;
};

/// psi coordinates: values on class representatives, and for every other
/// vertex (in vertex order) its difference from its representative.
struct VertexCoordinates {
    std::vector<GroupElement> reps;
    std::vector<GroupElement> diffs;
    friend bool operator==(const VertexCoordinates&, const VertexCoordinates&) = default;
};

/// xi coordinates: representatives, forest edges, and short-generator values.
struct FullCoordinates {
    std::vector<GroupElement> reps;
    std::vector<GroupElement> forest;
    std::vector<GroupElement> shorts;
    friend bool operator==(const FullCoordinates&, const FullCoordinates&) = default;
};

/// Sum of a labeling along a ttrail: start and inner vertices plus every edge.
GroupElement trail_value(const FiniteAbelianGroup& group, const FullLabeling& h, const Ttrail& p);
GroupElement trail_value(const FiniteAbelianGroup& group, const EdgeLabeling& f, const Ttrail& p);

/// The shared frame for one graph: basis extension plus the two integer systems
/// (the square F2^E basis system and the balancing system) factored once.
///
/// Every decider and coordinate map reads the same cycles, shorts, forest edges
/// and representatives, so phi, psi and xi agree with each other.
class BalanceFrame {
public:
    explicit BalanceFrame(MultiGraph g);

    const MultiGraph& graph() const noexcept { return graph_; }
    const BasisExtension& basis() const noexcept { return basis_; }
    /// Vertices that are not class representatives, in vertex order.
    const std::vector<VertexIndex>& non_reps() const noexcept { return non_reps_; }
    /// Representative of v's 3-class.
    VertexIndex rep_of(VertexIndex v) const { return basis_.reps[basis_.classes.block_of(v)]; }

    std::size_t con() const noexcept { return basis_.components.size(); }
    std::size_t con3() const noexcept { return basis_.classes.size(); }

    GroupStructure group_structure(LabelingKind which) const;
    BigInt count_balanced(const FiniteAbelianGroup& group, LabelingKind which) const;

    bool is_balanced_edges(const FiniteAbelianGroup& group, const EdgeLabeling& f) const;
    bool is_balanced_full(const FiniteAbelianGroup& group, const FullLabeling& h) const;
    bool is_balanceable(const FiniteAbelianGroup& group, const VertexLabeling& gv) const;

    /// An edge labeling balancing gv, or nullopt when gv is not balanceable.
    std::optional<EdgeLabeling> balance(const FiniteAbelianGroup& group, const VertexLabeling& gv) const;

    EdgeCoordinates phi(const FiniteAbelianGroup& group, const EdgeLabeling& f) const;
    EdgeLabeling phi_inv(const FiniteAbelianGroup& group, const EdgeCoordinates& coords) const;
    VertexCoordinates psi(const FiniteAbelianGroup& group, const VertexLabeling& gv) const;
    VertexLabeling psi_inv(const FiniteAbelianGroup& group, const VertexCoordinates& coords) const;
    FullCoordinates xi(const FiniteAbelianGroup& group, const FullLabeling& h) const;
    FullLabeling xi_inv(const FiniteAbelianGroup& group, const FullCoordinates& coords) const;

    const LinearSystem& basis_system() const noexcept { return basis_system_; }
    const LinearSystem& balancing_system() const noexcept { return balancing_system_; }

private:
    void check(const FiniteAbelianGroup& group, const EdgeLabeling& f) const;
    void check(const FiniteAbelianGroup& group, const VertexLabeling& gv) const;
    GroupElement vertex_sum(const FiniteAbelianGroup& group, const VertexLabeling& gv,
                            const std::vector<VertexIndex>& vertices) const;

    MultiGraph graph_;
    BasisExtension basis_;
    std::vector<VertexIndex> non_reps_;
    LinearSystem basis_system_;      // rows: cycles, forest singletons, shorts
    LinearSystem balancing_system_;  // rows: cycles, doubled shorts
};

/// The balancer for a vertex function that is 2a at v and 0 elsewhere:
/// -a on non-loop edges at v, -2a on loops at v, 0 elsewhere.
EdgeLabeling point_balancer(const MultiGraph& g, const FiniteAbelianGroup& group, VertexIndex v,
                            const GroupElement& a);

// One-shot forms; each builds a BalanceFrame.
GroupStructure group_structure(const MultiGraph& g, LabelingKind which);
BigInt count_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, LabelingKind which);
bool is_balanced_edges(const MultiGraph& g, const FiniteAbelianGroup& group, const EdgeLabeling& f);
bool is_balanced_full(const MultiGraph& g, const FiniteAbelianGroup& group, const FullLabeling& h);
bool is_balanceable(const MultiGraph& g, const FiniteAbelianGroup& group, const VertexLabeling& gv);
std::optional<EdgeLabeling> balance(const MultiGraph& g, const FiniteAbelianGroup& group, const VertexLabeling& gv);

}  // namespace balgraph
