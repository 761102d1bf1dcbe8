#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mlat/core.hpp"

// Maps between algebras, the homomorphism check, and exhaustive isomorphism
// search. Maps are non-owning views: the source and target algebras must
// outlive the map object.

namespace mlat {

struct MlaMap {
    const FiniteMla* source = nullptr;
    const FiniteMla* target = nullptr;
    std::vector<ElementId> image;  // image[x] for every source id

    bool is_bijective() const;
};

struct HomCheck {
    bool ok = true;
    // On failure: which operation broke ("mul" or "star") and the least pair.
    std::string operation;
    std::vector<ElementId> witness;
};

// Verifies f(x op y) == f(x) op f(y) for both operations over all pairs,
// reporting the lexicographically least failing pair.
HomCheck is_homomorphism(const MlaMap& f);

// Per-element invariants preserved by isomorphism, plus global subset sizes.
// Equality is necessary (not sufficient) for the algebras to be isomorphic.
struct Fingerprint {
    // sorted multiset of (group order, star annihilator size, conjugacy
    // class size) over all elements
    std::vector<std::array<int, 3>> elements;
    int center_size = 0;
    int lie_center_size = 0;
    int star_derived_size = 0;
    int commutator_derived_size = 0;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteMla& g);

// All isomorphisms source -> target in lexicographic image order, truncated
// to `limit` when given. Backtracking over a greedily chosen generating
// sequence with per-element invariant pruning; exhaustive, so an empty
// result is a proof of non-isomorphism.
std::vector<MlaMap> find_isomorphisms(const FiniteMla& a, const FiniteMla& b,
                                      std::optional<int> limit = std::nullopt);

// Greedy generating sequence: repeatedly adjoin the element of largest group
// order (least id on ties) not yet generated. Exposed for reuse and tests.
std::vector<ElementId> generating_sequence(const FiniteMla& g);

}  // namespace mlat
