#pragma once

#include <string>
#include <vector>

// Independent reference implementations used to cross-check the library.
// Everything works on raw tables and avoids the library's own closure and
// search machinery.

namespace oracle {

using Table = std::vector<std::vector<int>>;

struct Violation {
    std::string axiom;  // "group" or "1".."5"
    std::vector<int> witness;
};

// Group laws plus the five defining identities, scanned directly off the
// tables; least witness per axiom, axioms in ascending order.
std::vector<Violation> axiom_violations(const Table& mul, const Table& star);

bool is_subgroup(const Table& mul, const std::vector<int>& members);
bool is_ideal(const Table& mul, const Table& star, const std::vector<int>& members);

// Every ideal, by sweeping all subsets containing 0. Exponential; keep the
// order small. Sorted by (size, members).
std::vector<std::vector<int>> all_ideals(const Table& mul, const Table& star);

// Number of bijections fixing 0 that preserve both tables, by scanning all
// permutations. Factorial; keep the order <= 8.
long long isomorphism_count(const Table& mul1, const Table& star1, const Table& mul2,
                            const Table& star2);

// Invariant factors d_1 | d_2 | ... of a commutative group, recovered from
// the counts of elements of each prime-power order.
std::vector<long long> abelian_invariants(const Table& mul);

// prod over pairs gcd(d_i, d_j): the tensor square order of a commutative
// group with trivial star.
long long abelian_tensor_order(const Table& mul);

// Order of the abelianization of a presentation, via integer row reduction
// of the relator exponent matrix. Returns 0 when infinite.
long long abelianized_presentation_order(int generators,
                                         const std::vector<std::vector<int>>& relators);

}  // namespace oracle
