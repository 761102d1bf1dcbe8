#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mlat/morphism.hpp"
#include "mlat/structure.hpp"

// Tensor square of an algebra with itself: generators are element pairs,
// relations are instantiated over all element triples, and the resulting
// presentation is realized either by coset enumeration or, for groups that
// are commutative with trivial star, by Smith normal form of a relation
// matrix.

namespace mlat {

// A presentation over symbol generators. Words are sequences of signed
// letters: +(i+1) is generator i, -(i+1) its inverse.
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;  // freely reduced, sorted, deduplicated
    // star of two generators, as a word over the generators (possibly empty)
    std::vector<std::vector<std::vector<int>>> star_gen;
};

// Instantiates the defining relations of the tensor square over all element
// triples of g: one relator family per bilinearity direction and two mixed
// families, 4 n^3 words before reduction and deduplication. Generator (x,y)
// has index x*n + y.
Presentation tensor_presentation(const FiniteMla& g);

inline constexpr int kDefaultBudget = 100000;

struct PresentedGroup {
    std::vector<std::vector<ElementId>> mul;
    std::vector<ElementId> gen_image;       // generator -> element
    std::vector<std::vector<int>> words;    // element -> defining word (letters)
};

// Coset enumeration over the trivial subgroup: scans rows in order, defines
// the least undefined entry, processes deductions and coincidences to a
// fixpoint between definitions. Throws BudgetExceeded when the live row
// count would pass `budget`; otherwise the returned table is the full
// multiplication table of the presented group, with element 0 the identity.
PresentedGroup enumerate_presented_group(const Presentation& p, int budget = kDefaultBudget);

// Extends a star given on generators to the whole group by rewriting along
// the defining expansion identities over each element's stored word, then
// certifies the result by running the full validator. AxiomFailure if the
// certification fails.
FiniteMla extend_star(const std::vector<std::vector<ElementId>>& mul,
                      const std::vector<ElementId>& gen_image,
                      const std::vector<std::vector<int>>& words,
                      const std::vector<std::vector<std::vector<int>>>& star_gen,
                      std::string name = "");

struct TensorSquare {
    std::shared_ptr<const FiniteMla> base;
    std::shared_ptr<const FiniteMla> algebra;
    std::vector<std::vector<ElementId>> gen_map;  // (x,y) -> element realizing it
    std::string method;                           // "snf" or "enumeration"
};

inline constexpr int kDefaultEnumerationOrderBound = 12;
inline constexpr int kDefaultSnfOrderBound = 64;

// Fast path for commutative groups with trivial star: cyclic decomposition
// via Smith normal form, tensor factors gcd(d_i, d_j) per factor pair.
TensorSquare abelian_tensor_snf(const FiniteMla& g, int max_order = kDefaultMaxOrder);

enum class TensorMethod { automatic, snf, enumeration };

// Dispatches on method; "automatic" prefers snf when applicable. Order
// bounds: enumeration up to base order 12, snf up to 64.
TensorSquare tensor_square(const FiniteMla& g, TensorMethod method = TensorMethod::automatic,
                           int budget = kDefaultBudget,
                           int max_order = kDefaultMaxOrder);

// Re-checks the defining relations and the identity-slot collapse through
// gen_map over all base tuples. Cheap; used by tests and the suites.
bool verify_tensor_relations(const TensorSquare& t);

// Ideal of the tensor algebra generated by everything with one slot in s.
SubSet pair_ideal(const TensorSquare& t, const SubSet& s);

// Tensor square of a quotient vs quotient of the tensor square by the
// matching pair ideal; the two are isomorphic, witnessed explicitly.
struct TensorQuotientIsoReport {
    bool found = false;
    int left_order = 0, right_order = 0;
    std::vector<ElementId> witness;  // image array of the found isomorphism
};

TensorQuotientIsoReport check_tensor_quotient_iso(const FiniteMla& g, const SubSet& ideal,
                                                  TensorMethod method = TensorMethod::automatic,
                                                  int budget = kDefaultBudget);

// Pair ideals of the three centers land inside the corresponding centers of
// the tensor algebra. Equality is recorded but only containment asserted.
struct CenterContainmentReport {
    struct Clause {
        std::string center;
        bool contained = false;
        bool equal = false;
        int pair_ideal_size = 0;
        int center_size = 0;
    };
    Clause clauses[3];
    bool all_contained() const {
        return clauses[0].contained && clauses[1].contained && clauses[2].contained;
    }
};

CenterContainmentReport check_center_containments(const FiniteMla& g,
                                                  TensorMethod method = TensorMethod::automatic,
                                                  int budget = kDefaultBudget);

// When the joint center of the tensor square equals the pair ideal of the
// joint center, the tensor square of g / joint-center is isomorphic to the
// tensor square modulo its joint center.
struct CapabilityReport {
    bool premise_held = false;
    bool verified = false;
    int quotient_tensor_order = 0;
    std::vector<ElementId> witness;
};

CapabilityReport check_capability_condition(const FiniteMla& g,
                                            TensorMethod method = TensorMethod::automatic,
                                            int budget = kDefaultBudget);

struct IsoclinismWitness;

// Isoclinic algebras whose joint-center pair ideals exhaust the tensor
// centers have isoclinic tensor squares.
struct TensorIsoclinismReport {
    bool base_isoclinic = false;
    bool centers_match1 = false, centers_match2 = false;
    bool applicable() const { return base_isoclinic && centers_match1 && centers_match2; }
    bool verified = false;
};

TensorIsoclinismReport check_tensor_isoclinism(const FiniteMla& g1, const FiniteMla& g2,
                                               TensorMethod method = TensorMethod::automatic,
                                               int budget = kDefaultBudget);

}  // namespace mlat
