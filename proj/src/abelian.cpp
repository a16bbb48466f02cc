#include "balgraph/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace balgraph {

namespace {

std::int64_t reduce(std::int64_t value, std::int64_t n) {
    std::int64_t r = value % n;
    return r < 0 ? r + n : r;
}

void require_same_shape(const FiniteAbelianGroup& group, const GroupElement& a) {
    if (!group.contains(a)) throw std::invalid_argument("element does not belong to the group");
}

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    for (auto n : moduli_)
        if (n < 1) throw std::invalid_argument("cyclic factor order must be at least 1");
}

BigInt FiniteAbelianGroup::cardinality() const {
    BigInt c = 1;
    for (auto n : moduli_) c *= n;
    return c;
}

std::optional<std::uint64_t> FiniteAbelianGroup::small_cardinality() const {
    BigInt c = cardinality();
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return static_cast<std::uint64_t>(c);
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)}; }

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> values) const {
    if (values.size() != moduli_.size()) throw std::invalid_argument("residue count does not match group rank");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = reduce(values[i], moduli_[i]);
    return GroupElement{std::move(values)};
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.residues.size() != moduli_.size()) return false;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
    return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        r.residues[i] += b.residues[i];
        if (r.residues[i] >= moduli_[i]) r.residues[i] -= moduli_[i];
    }
    return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        r.residues[i] -= b.residues[i];
        if (r.residues[i] < 0) r.residues[i] += moduli_[i];
    }
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const { return sub(zero(), a); }

GroupElement FiniteAbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t n = moduli_[i];
        r.residues[i] = static_cast<std::int64_t>((static_cast<__int128>(reduce(k, n)) * a.residues[i]) % n);
    }
    return r;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
    return std::all_of(a.residues.begin(), a.residues.end(), [](std::int64_t r) { return r == 0; });
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(a.residues[i]);
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
    GroupElement a = zero();
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        auto n = static_cast<std::uint64_t>(moduli_[i]);
        a.residues[i] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return a;
}

std::string to_string(const GroupStructure& s) {
    std::string out;
    auto term = [&](std::size_t exp, const char* base) {
        if (exp == 0) return;
        if (!out.empty()) out += " x ";
        out += std::string(base) + "^" + std::to_string(exp);
    };
    term(s.exp_A, "A");
    term(s.exp_A2, "A2");
    term(s.exp_2A, "(2A)");
    return out.empty() ? "1" : out;
}

std::uint64_t element_order(const FiniteAbelianGroup& group, const GroupElement& a) {
    require_same_shape(group, a);
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < group.rank(); ++i) {
        auto n = static_cast<std::uint64_t>(group.moduli()[i]);
        auto r = static_cast<std::uint64_t>(a.residues[i]);
        order = std::lcm(order, n / std::gcd(n, r));
    }
    return order;
}

bool in_two_torsion(const FiniteAbelianGroup& group, const GroupElement& a) {
    require_same_shape(group, a);
    return group.is_zero(group.scale(2, a));
}

std::uint64_t two_torsion_count(const FiniteAbelianGroup& group) {
    std::uint64_t count = 1;
    for (auto n : group.moduli()) count *= (n % 2 == 0) ? 2 : 1;
    return count;
}

std::optional<GroupElement> half(const FiniteAbelianGroup& group, const GroupElement& b) {
    require_same_shape(group, b);
    GroupElement x = group.zero();
    for (std::size_t i = 0; i < group.rank(); ++i) {
        std::int64_t n = group.moduli()[i];
        std::int64_t r = b.residues[i];
        if (n % 2 == 0) {
            if (r % 2 != 0) return std::nullopt;
            x.residues[i] = r / 2;
        } else {
            x.residues[i] = (r % 2 == 0 ? r : r + n) / 2;
        }
    }
    return x;
}

bool in_double_image(const FiniteAbelianGroup& group, const GroupElement& b) { return half(group, b).has_value(); }

BigInt double_image_cardinality(const FiniteAbelianGroup& group) { return group.cardinality() / two_torsion_count(group); }

BigInt structure_cardinality(const GroupStructure& s, const FiniteAbelianGroup& group) {
    BigInt total = 1;
    total *= boost::multiprecision::pow(group.cardinality(), static_cast<unsigned>(s.exp_A));
    total *= boost::multiprecision::pow(BigInt(two_torsion_count(group)), static_cast<unsigned>(s.exp_A2));
    total *= boost::multiprecision::pow(double_image_cardinality(group), static_cast<unsigned>(s.exp_2A));
    return total;
}

std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup& group, std::uint64_t bound) {
    auto size = group.small_cardinality();
    if (!size || *size > bound)
        throw BoundExceeded("group of order " + group.cardinality().str() + " exceeds enumeration bound " +
                            std::to_string(bound));
    std::vector<GroupElement> out;
    out.reserve(*size);
    for (std::uint64_t i = 0; i < *size; ++i) out.push_back(group.element_at(i));
    return out;
}

FiniteAbelianGroup parse_group(std::string_view spec) {
    std::string lower(spec);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower.empty()) throw std::invalid_argument("empty group spec");
    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = lower.find('x', pos);
        std::string_view factor = std::string_view(lower).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (factor.size() < 2 || factor.front() != 'z')
            throw std::invalid_argument("malformed group spec '" + std::string(spec) + "', expected e.g. Z2xZ4");
        std::int64_t n = parse_int(factor.substr(1), "cyclic order");
        if (n < 1) throw std::invalid_argument("cyclic factor order must be at least 1");
        moduli.push_back(n);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return FiniteAbelianGroup(std::move(moduli));
}

GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view literal) {
    GroupElement a;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = literal.find(',', pos);
        a.residues.push_back(
            parse_int(literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), "residue"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (a.residues.size() != group.rank())
        throw std::invalid_argument("expected " + std::to_string(group.rank()) + " residues, got " +
                                    std::to_string(a.residues.size()));
    for (std::size_t i = 0; i < group.rank(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= group.moduli()[i])
            throw std::invalid_argument("residue " + std::to_string(a.residues[i]) + " outside [0, " +
                                        std::to_string(group.moduli()[i]) + ")");
    return a;
}

std::string format_element(const GroupElement& a) {
    std::string out;
    for (std::size_t i = 0; i < a.residues.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.residues[i]);
    }
    return out;
}

}  // namespace balgraph
