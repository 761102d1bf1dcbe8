#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core representation of finite multiplicative Lie algebras: a group table
// plus a second binary operation (written `star` throughout) on element ids
// 0..n-1, with id 0 fixed as the group identity.

namespace mlat {

using ElementId = int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad JSON, missing fields, wrong sizes).
struct ParseError : Error {
    using Error::Error;
};

// Well-formed text that does not describe a group table.
struct StructureError : Error {
    using Error::Error;
};

// An operation was called outside its stated domain.
struct PreconditionError : Error {
    using Error::Error;
};

// Coset enumeration ran out of its row budget; never a wrong answer.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ValidationReport;

// A star-table extension turned out to violate the defining identities.
struct AxiomFailure : Error {
    explicit AxiomFailure(std::string msg) : Error(std::move(msg)) {}
};

// Outcome of checking the five defining identities plus the group laws.
// `violations` holds at most one entry per axiom, carrying the
// lexicographically least witness tuple; substituting the witness back into
// the named identity reproduces the failure.
struct ValidationReport {
    struct Violation {
        std::string axiom;  // "1".."5" or "group"
        std::vector<ElementId> witness;
    };
    bool valid = true;
    std::vector<Violation> violations;
};

class FiniteMla {
public:
    // Builds the algebra from explicit operation tables. Group laws
    // (identity at 0, Latin square, two-sided inverses, associativity) are
    // checked here and a StructureError names the first offending cell.
    // The star identities are NOT checked; call validate_axioms.
    FiniteMla(std::vector<std::vector<ElementId>> mul,
              std::vector<std::vector<ElementId>> star,
              std::string name = "",
              std::vector<std::string> element_names = {});

    FiniteMla(const FiniteMla& other);
    FiniteMla& operator=(const FiniteMla& other);
    FiniteMla(FiniteMla&&) noexcept = default;
    FiniteMla& operator=(FiniteMla&&) noexcept = default;

    int order() const { return n_; }

    ElementId mul(ElementId x, ElementId y) const { return mul_[x][y]; }
    ElementId star(ElementId x, ElementId y) const { return star_[x][y]; }
    ElementId inv(ElementId x) const { return inv_[x]; }
    // x y x^-1
    ElementId conj(ElementId x, ElementId y) const {
        return mul_[mul_[x][y]][inv_[x]];
    }
    // x y x^-1 y^-1
    ElementId comm(ElementId x, ElementId y) const {
        return mul_[conj(x, y)][inv_[y]];
    }
    int element_order(ElementId x) const;

    const std::vector<std::vector<ElementId>>& mul_table() const { return mul_; }
    const std::vector<std::vector<ElementId>>& star_table() const { return star_; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<std::string>& element_names() const { return element_names_; }

    bool is_abelian() const;
    bool has_trivial_star() const;

    // Tri-state star status: unknown until validate_axioms has run on this
    // object; downstream modules insist on a prior valid report.
    bool star_validated() const { return star_state_.load() == 1; }
    bool star_known_invalid() const { return star_state_.load() == 2; }
    void require_validated(const char* who) const;

    bool same_tables(const FiniteMla& other) const;

private:
    friend ValidationReport validate_axioms(const FiniteMla&, int);

    int n_ = 0;
    std::vector<std::vector<ElementId>> mul_;
    std::vector<std::vector<ElementId>> star_;
    std::vector<ElementId> inv_;
    std::string name_;
    std::vector<std::string> element_names_;
    mutable std::atomic<int8_t> star_state_{0};  // 0 unknown, 1 valid, 2 invalid
};

// Checks the five defining identities over all tuples (O(n^3) lookups) and
// records the least witness per violated axiom. Total and deterministic;
// with threads > 1 the tuple space is partitioned by the first coordinate
// and the merged report equals the single-threaded one. Marks the algebra's
// star status as a side effect.
ValidationReport validate_axioms(const FiniteMla& g, int threads = 1);

ElementId conjugate(const FiniteMla& g, ElementId x, ElementId y);
ElementId commutator(const FiniteMla& g, ElementId x, ElementId y);

inline constexpr int kDefaultMaxOrder = 4096;

// Componentwise product and star; validates the result.
FiniteMla direct_product(const FiniteMla& g1, const FiniteMla& g2,
                         int max_order = kDefaultMaxOrder);

// star == identity everywhere; always a valid structure.
FiniteMla trivial_star_of_group(std::vector<std::vector<ElementId>> mul,
                                std::string name = "");

// star[x][y] = [x,y]; the validator is run and its report returned
// alongside the algebra.
std::pair<FiniteMla, ValidationReport> commutator_star_of_group(
    std::vector<std::vector<ElementId>> mul, std::string name = "");

// Text format: { "name": str, "order": n, "mul": [[id;n];n],
// "star": [[id;n];n], "names": [str;n]? }. Unknown keys are ignored.
// Round trip load(store(g)) == g field for field.
FiniteMla load_algebra(const std::string& text);
std::string store_algebra(const FiniteMla& g);

}  // namespace mlat
