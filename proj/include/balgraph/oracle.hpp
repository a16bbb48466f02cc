#pragma once

#include <cstdint>
#include <vector>

#include "balgraph/abelian.hpp"
#include "balgraph/connectivity.hpp"
#include "balgraph/cyclespace.hpp"
#include "balgraph/errors.hpp"
#include "balgraph/labelings.hpp"

namespace balgraph {

struct OracleBounds {
    std::size_t max_edges_for_cycles = 14;
    std::uint64_t max_labelings = 1'000'000;
    std::uint64_t max_deletion_checks = 10'000'000;
};

/// Every simple cycle, one representative per edge set, ordered by the sorted
/// edge-index set. Loops are 1-cycles and parallel pairs 2-cycles.
std::vector<Ttrail> enumerate_simple_cycles(const MultiGraph& g, const OracleBounds& bounds = {});

/// Balancedness straight from the definition: zero sum along every simple cycle.
/// Enumerates the cycles once so repeated checks stay cheap.
class CycleOracle {
public:
    explicit CycleOracle(const MultiGraph& g, const OracleBounds& bounds = {});

    const std::vector<Ttrail>& cycles() const noexcept { return cycles_; }
    bool is_balanced(const FiniteAbelianGroup& group, const EdgeLabeling& f) const;
    bool is_balanced(const FiniteAbelianGroup& group, const FullLabeling& h) const;

private:
    std::size_t vertex_count_;
    std::size_t edge_count_;
    std::vector<Ttrail> cycles_;
};

bool oracle_is_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, const EdgeLabeling& f,
                        const OracleBounds& bounds = {});
bool oracle_is_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, const FullLabeling& h,
                        const OracleBounds& bounds = {});

/// Exhaustive count. B is counted as the set of vertex parts of balanced full
/// labelings, so its cost is that of W. Throws BoundExceeded past the bound.
std::uint64_t oracle_count_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, LabelingKind which,
                                    const OracleBounds& bounds = {});

/// Number of labelings the exhaustive count for `which` would visit, or nullopt on overflow.
std::optional<std::uint64_t> oracle_search_size(const MultiGraph& g, const FiniteAbelianGroup& group,
                                                LabelingKind which);

/// u ~ v iff no deletion of k-1 edges separates them. Throws BoundExceeded when
/// the number of deletion sets times |E| passes the bound.
Partition oracle_k_classes(const MultiGraph& g, std::size_t k, const OracleBounds& bounds = {});

}  // namespace balgraph
