#pragma once

#include <string>
#include <vector>

#include "mlat/core.hpp"

// Substructures of a finite multiplicative Lie algebra: subalgebras, ideals,
// the three centers, derived ideals, quotients, and ideal enumeration.

namespace mlat {

// A subset of a parent algebra's ids, kept sorted and deduplicated, with the
// three structural flags computed on construction. Holds a non-owning view of
// the parent, which must outlive the subset.
class SubSet {
public:
    SubSet(const FiniteMla& parent, std::vector<ElementId> members);

    const std::vector<ElementId>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(ElementId x) const { return in_[x] != 0; }
    const FiniteMla& parent() const { return *parent_; }

    bool is_subgroup() const { return subgroup_; }
    // subgroup additionally closed under star
    bool is_subalgebra() const { return subalgebra_; }
    // normal subgroup with g * h inside for every g in G, h in the subset
    // (and the mirrored direction, which never diverges for valid algebras)
    bool is_ideal() const { return ideal_; }

    bool operator==(const SubSet& other) const { return members_ == other.members_; }

private:
    const FiniteMla* parent_;
    std::vector<ElementId> members_;
    std::vector<char> in_;
    bool subgroup_ = false, subalgebra_ = false, ideal_ = false;
};

// Least subalgebra containing the seed: closes under mul, inv and star, and
// always contains 0.
SubSet closure_subalgebra(const FiniteMla& g, const std::vector<ElementId>& seed);

// Least ideal containing the seed: additionally closes under conjugation by
// every group element and absorption g * h for all g in G, h in the set.
SubSet closure_ideal(const FiniteMla& g, const std::vector<ElementId>& seed);

// { x : xy == yx for all y }
SubSet group_center(const FiniteMla& g);
// { x : x * y == 1 for all y } (equivalently y * x == 1 for all y)
SubSet lie_center(const FiniteMla& g);
// intersection of the two
SubSet joint_center(const FiniteMla& g);

// Ideal generated by all star values.
SubSet star_derived(const FiniteMla& g);
// Ideal generated by all commutators.
SubSet commutator_derived(const FiniteMla& g);
// Ideal generated by both together; equals their product as sets.
SubSet m_derived(const FiniteMla& g);

struct Quotient {
    FiniteMla algebra;
    std::vector<ElementId> projection;  // parent id -> quotient id
};

// Quotient by an ideal with canonical coset numbering: the coset of 0 is 0
// and the rest are ordered by least member. The result is validated.
Quotient quotient(const FiniteMla& g, const SubSet& ideal);

inline constexpr int kDefaultIdealBound = 64;

// Every ideal, as the join closure of the principal ideals. Sorted by
// (size, members). Refuses orders above `bound`.
std::vector<SubSet> enumerate_ideals(const FiniteMla& g, int bound = kDefaultIdealBound);

// For a quotient by an ideal meeting the relevant derived ideal trivially,
// each center of the quotient equals the image of the center. One clause per
// center kind; `held` is the trivial-intersection hypothesis, `verified` the
// set equality (only meaningful when the hypothesis held).
struct QuotientCenterReport {
    struct Clause {
        std::string center;  // "Z", "LZ", "joint"
        bool held = false;
        bool verified = false;
    };
    Clause clauses[3];
    bool all_held_verified() const {
        for (const auto& c : clauses)
            if (c.held && !c.verified) return false;
        return true;
    }
};

QuotientCenterReport check_quotient_center_images(const FiniteMla& g, const SubSet& ideal);

}  // namespace mlat
