#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "balgraph/errors.hpp"

namespace balgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z_{n1} x ... x Z_{nk}; residues are kept reduced.
struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite Abelian group given in product-of-cyclic form.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    /// Throws std::invalid_argument if some modulus is < 1.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
    std::size_t rank() const noexcept { return moduli_.size(); }
    BigInt cardinality() const;
    /// |A| as a machine integer, or nullopt if it does not fit.
    std::optional<std::uint64_t> small_cardinality() const;

    GroupElement zero() const;
    /// Reduces arbitrary integers into canonical residues.
    GroupElement element(std::vector<std::int64_t> values) const;
    bool contains(const GroupElement& a) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(std::int64_t k, const GroupElement& a) const;
    bool is_zero(const GroupElement& a) const;

    /// Mixed-radix rank/unrank in lexicographic order (first factor most significant).
    std::uint64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::uint64_t index) const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<std::int64_t> moduli_;
};

/// Exponents of the descriptor A^a x A2^b x (2A)^c.
struct GroupStructure {
    std::size_t exp_A = 0;
    std::size_t exp_A2 = 0;
    std::size_t exp_2A = 0;

    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

std::string to_string(const GroupStructure& s);

std::uint64_t element_order(const FiniteAbelianGroup& group, const GroupElement& a);
bool in_two_torsion(const FiniteAbelianGroup& group, const GroupElement& a);
/// |A2|, where A2 = {a : 2a = 0} includes the identity.
std::uint64_t two_torsion_count(const FiniteAbelianGroup& group);
/// Canonical half of b (smallest residue per coordinate), if b lies in 2A.
std::optional<GroupElement> half(const FiniteAbelianGroup& group, const GroupElement& b);
bool in_double_image(const FiniteAbelianGroup& group, const GroupElement& b);
BigInt double_image_cardinality(const FiniteAbelianGroup& group);
BigInt structure_cardinality(const GroupStructure& s, const FiniteAbelianGroup& group);

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Lexicographic enumeration of every element. Throws BoundExceeded above `bound`.
std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup& group,
                                             std::uint64_t bound = kDefaultEnumerationBound);

/// Parses `Z2xZ4` style specs (case-insensitive, no spaces).
FiniteAbelianGroup parse_group(std::string_view spec);
/// Parses a comma-separated residue list; residues must already be canonical.
GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view literal);
std::string format_element(const GroupElement& a);

}  // namespace balgraph
