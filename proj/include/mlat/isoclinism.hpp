#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mlat/morphism.hpp"
#include "mlat/structure.hpp"

// Isoclinism of algebras and of central extensions, stem extensions, and the
// pullback construction.

namespace mlat {

struct NotAnIdeal : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotCentral : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotAMorphism : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct RestrictedAlgebra {
    FiniteMla algebra;
    std::vector<ElementId> members;  // restricted id -> parent id, ascending
};

// Standalone algebra on a subalgebra's members, renumbered in ascending
// member order (so 0 stays 0). Validated.
RestrictedAlgebra restrict_to_subalgebra(const FiniteMla& g, const SubSet& s);

// total --beta--> quotient with kernel an ideal inside the joint center.
class CentralExtension {
public:
    // Canonical form: quotient built by the canonical coset numbering.
    CentralExtension(const FiniteMla& total, const std::vector<ElementId>& kernel_ids);

    // Direct assembly with a supplied quotient and projection; every
    // structural requirement is re-verified.
    CentralExtension(std::shared_ptr<const FiniteMla> total,
                     std::vector<ElementId> kernel_ids,
                     std::shared_ptr<const FiniteMla> quot,
                     std::vector<ElementId> projection);

    const FiniteMla& total() const { return *total_; }
    const FiniteMla& quot() const { return *quotient_; }
    std::shared_ptr<const FiniteMla> total_ptr() const { return total_; }
    std::shared_ptr<const FiniteMla> quotient_ptr() const { return quotient_; }
    const std::vector<ElementId>& kernel() const { return kernel_; }
    const std::vector<ElementId>& projection() const { return projection_; }
    SubSet kernel_subset() const { return SubSet(*total_, kernel_); }

private:
    void verify() const;

    std::shared_ptr<const FiniteMla> total_;
    std::vector<ElementId> kernel_;
    std::shared_ptr<const FiniteMla> quotient_;
    std::vector<ElementId> projection_;
};

CentralExtension make_extension(const FiniteMla& g, const std::vector<ElementId>& kernel_ids);

// Kernel contained in the derived ideal generated by stars and commutators.
bool is_stem(const CentralExtension& e);

// Equivalent form: every non-trivial ideal inside the kernel meets that
// derived ideal non-trivially. Evaluated independently of is_stem so the two
// can be compared; a diverging input would be a finding.
struct StemCriterionResult {
    bool holds = false;
    // least non-trivial ideal inside the kernel missing the derived ideal
    std::optional<std::vector<ElementId>> witness_ideal;
};

StemCriterionResult stem_criterion(const CentralExtension& e,
                                   int ideal_bound = kDefaultIdealBound);

// A pair of isomorphisms (lambda on the quotient side, mu between derived
// ideals) commuting with the commutator and star pairings. Self-contained:
// owns the four algebras the image arrays refer to.
struct IsoclinismWitness {
    std::string kind;  // "algebra" or "extension"
    std::shared_ptr<const FiniteMla> top1, top2;  // lambda's domain and codomain
    std::shared_ptr<const FiniteMla> der1, der2;  // mu's domain and codomain
    std::vector<ElementId> proj1, proj2;          // total -> top
    std::vector<ElementId> emb1, emb2;            // derived id -> total id
    std::vector<ElementId> lambda, mu;            // image arrays
};

// Exhaustive search over isomorphism candidates for lambda then mu, in
// canonical order; first witness returned, absence is a proof within the
// searched (complete) candidate sets. Representative independence of the
// two pairings is verified once per input.
std::optional<IsoclinismWitness> find_isoclinism(const FiniteMla& g1, const FiniteMla& g2);

// Same search with lambda between the extension quotients and lifts taken
// through the projections.
std::optional<IsoclinismWitness> find_extension_isoclinism(const CentralExtension& e1,
                                                           const CentralExtension& e2);

// Structural consequences an extension witness must satisfy; each is checked
// directly rather than trusted.
struct WitnessPropertyReport {
    bool beta_square = false;        // lambda after beta1 == beta2 after mu on the derived ideal
    bool mixed_pairing = false;      // mu carries (x*g)[x,g] to the lifted counterpart
    bool kernel_slice = false;       // mu(H1 meet derived) == H2 meet derived
    bool induced_algebra_witness = false;  // induced joint-center quotient maps form an algebra witness
    bool center_biconditional = false;     // kernel == joint center on one side iff on the other
    std::vector<std::string> findings;
    bool all() const {
        return beta_square && mixed_pairing && kernel_slice && induced_algebra_witness &&
               center_biconditional;
    }
};

WitnessPropertyReport verify_witness_properties(const CentralExtension& e1,
                                                const CentralExtension& e2,
                                                const IsoclinismWitness& w);

// A morphism of central extensions: maps on kernels (restricted algebra
// numbering), totals, and quotients with both squares commuting.
struct ExtensionMorphism {
    std::vector<ElementId> kernel_map;  // kernel1 restricted id -> kernel2 restricted id
    std::vector<ElementId> total_map;   // total1 id -> total2 id
    std::vector<ElementId> quot_map;    // quot1 id -> quot2 id
};

// Decides whether the morphism is isoclinic two ways: by the criterion
// (quotient map bijective and the total map's kernel missing the derived
// ideal) and by direct evaluation of the witness definition on the derived
// restriction. Divergence is reported as a finding, never reconciled.
struct IsoclinicMorphismReport {
    bool criterion = false;
    std::string criterion_reason;  // on false: "nu" or "kernel"
    bool direct = false;
    bool concordant = false;
    // when isoclinic: image of the total map times kernel2 covers total2
    bool image_kernel_covers = false;
    std::vector<std::string> findings;
};

IsoclinicMorphismReport is_isoclinic_morphism(const CentralExtension& e1,
                                              const CentralExtension& e2,
                                              const ExtensionMorphism& m);

// Quotients the extension by the largest ideal inside the kernel meeting the
// derived ideal trivially (ties broken by least member list); the result is
// stem and isoclinic to the input, both facts verified.
struct StemReduceResult {
    std::vector<ElementId> reducing_ideal;
    CentralExtension reduced;
    std::optional<IsoclinismWitness> witness;
    bool reduced_is_stem = false;
    std::vector<std::string> findings;
};

StemReduceResult stem_reduce(const CentralExtension& e, int ideal_bound = kDefaultIdealBound);

// Fibered product over nu : quot1 -> quot2, an extension over quot1 whose
// kernel is the product of the two kernels.
CentralExtension pullback_extension(const CentralExtension& e1, const CentralExtension& e2,
                                    const std::vector<ElementId>& nu_image,
                                    int max_order = kDefaultMaxOrder);

}  // namespace mlat
