#include "mlat/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mlat {

SubSet::SubSet(const FiniteMla& parent, std::vector<ElementId> members)
    : parent_(&parent), members_(std::move(members)), in_(parent.order(), 0) {
    const int n = parent.order();
    for (ElementId x : members_)
        if (x < 0 || x >= n)
            throw PreconditionError("subset member " + std::to_string(x) +
                                    " out of range for order " + std::to_string(n));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (ElementId x : members_) in_[x] = 1;

    const FiniteMla& g = *parent_;
    subgroup_ = !members_.empty() && in_[0];
    if (subgroup_)
        for (ElementId a : members_) {
            if (!in_[g.inv(a)]) { subgroup_ = false; break; }
            for (ElementId b : members_)
                if (!in_[g.mul(a, b)]) { subgroup_ = false; break; }
            if (!subgroup_) break;
        }
    subalgebra_ = subgroup_;
    if (subalgebra_)
        for (ElementId a : members_) {
            for (ElementId b : members_)
                if (!in_[g.star(a, b)]) { subalgebra_ = false; break; }
            if (!subalgebra_) break;
        }
    ideal_ = subalgebra_;
    if (ideal_)
        for (ElementId x = 0; x < n && ideal_; ++x)
            for (ElementId h : members_)
                if (!in_[g.conj(x, h)] || !in_[g.star(x, h)] || !in_[g.star(h, x)]) {
                    ideal_ = false;
                    break;
                }
}

namespace {

SubSet close(const FiniteMla& g, const std::vector<ElementId>& seed, bool ideal) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    std::vector<ElementId> work;
    auto add = [&](ElementId x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(0);
    for (ElementId x : seed) {
        if (x < 0 || x >= n)
            throw PreconditionError("seed element " + std::to_string(x) +
                                    " out of range for order " + std::to_string(n));
        add(x);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        ElementId a = work[i];
        add(g.inv(a));
        for (size_t j = 0; j <= i; ++j) {
            ElementId b = work[j];
            add(g.mul(a, b));
            add(g.mul(b, a));
            add(g.star(a, b));
            add(g.star(b, a));
        }
        if (ideal)
            for (ElementId x = 0; x < n; ++x) {
                add(g.conj(x, a));
                add(g.star(x, a));
                add(g.star(a, x));
            }
    }
    std::vector<ElementId> members;
    for (ElementId x = 0; x < n; ++x)
        if (in[x]) members.push_back(x);
    return SubSet(g, std::move(members));
}

}  // namespace

SubSet closure_subalgebra(const FiniteMla& g, const std::vector<ElementId>& seed) {
    g.require_validated("closure_subalgebra");
    return close(g, seed, false);
}

SubSet closure_ideal(const FiniteMla& g, const std::vector<ElementId>& seed) {
    g.require_validated("closure_ideal");
    return close(g, seed, true);
}

SubSet group_center(const FiniteMla& g) {
    g.require_validated("group_center");
    const int n = g.order();
    std::vector<ElementId> members;
    for (ElementId x = 0; x < n; ++x) {
        bool central = true;
        for (ElementId y = 0; y < n; ++y)
            if (g.mul(x, y) != g.mul(y, x)) { central = false; break; }
        if (central) members.push_back(x);
    }
    return SubSet(g, std::move(members));
}

SubSet lie_center(const FiniteMla& g) {
    g.require_validated("lie_center");
    const int n = g.order();
    std::vector<ElementId> members;
    for (ElementId x = 0; x < n; ++x) {
        bool central = true;
        for (ElementId y = 0; y < n; ++y)
            if (g.star(x, y) != 0) { central = false; break; }
        if (central) members.push_back(x);
    }
    return SubSet(g, std::move(members));
}

SubSet joint_center(const FiniteMla& g) {
    g.require_validated("joint_center");
    SubSet z = group_center(g), lz = lie_center(g);
    std::vector<ElementId> members;
    for (ElementId x : z.members())
        if (lz.contains(x)) members.push_back(x);
    return SubSet(g, std::move(members));
}

SubSet star_derived(const FiniteMla& g) {
    g.require_validated("star_derived");
    const int n = g.order();
    std::set<ElementId> seed;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) seed.insert(g.star(x, y));
    return close(g, {seed.begin(), seed.end()}, true);
}

SubSet commutator_derived(const FiniteMla& g) {
    g.require_validated("commutator_derived");
    const int n = g.order();
    std::set<ElementId> seed;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) seed.insert(g.comm(x, y));
    return close(g, {seed.begin(), seed.end()}, true);
}

SubSet m_derived(const FiniteMla& g) {
    g.require_validated("m_derived");
    const int n = g.order();
    std::set<ElementId> seed;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            seed.insert(g.star(x, y));
            seed.insert(g.comm(x, y));
        }
    return close(g, {seed.begin(), seed.end()}, true);
}

Quotient quotient(const FiniteMla& g, const SubSet& ideal) {
    g.require_validated("quotient");
    if (&ideal.parent() != &g || !ideal.is_ideal())
        throw PreconditionError("quotient requires an ideal of the same algebra");
    const int n = g.order();

    // Coset of x is identified by its least member.
    std::vector<ElementId> least(n, -1);
    for (ElementId x = 0; x < n; ++x) {
        if (least[x] != -1) continue;
        std::vector<ElementId> coset;
        for (ElementId h : ideal.members()) coset.push_back(g.mul(x, h));
        ElementId m = *std::min_element(coset.begin(), coset.end());
        for (ElementId y : coset) least[y] = m;
    }
    std::vector<ElementId> reps;  // sorted least members; coset of 0 first
    for (ElementId x = 0; x < n; ++x)
        if (least[x] == x) reps.push_back(x);
    std::vector<ElementId> proj(n);
    for (ElementId x = 0; x < n; ++x)
        proj[x] = static_cast<ElementId>(
            std::lower_bound(reps.begin(), reps.end(), least[x]) - reps.begin());

    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m));
    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            mul[a][b] = proj[g.mul(reps[a], reps[b])];
            star[a][b] = proj[g.star(reps[a], reps[b])];
        }
    std::string name = g.name();
    if (!name.empty()) {
        name += "/{";
        for (size_t i = 0; i < ideal.members().size(); ++i)
            name += (i ? "," : "") + std::to_string(ideal.members()[i]);
        name += "}";
    }
    FiniteMla q(std::move(mul), std::move(star), std::move(name));
    ValidationReport r = validate_axioms(q);
    if (!r.valid)
        throw AxiomFailure("quotient by an ideal failed validation");
    return {std::move(q), std::move(proj)};
}

std::vector<SubSet> enumerate_ideals(const FiniteMla& g, int bound) {
    g.require_validated("enumerate_ideals");
    if (g.order() > bound)
        throw PreconditionError("ideal enumeration bound " + std::to_string(bound) +
                                " exceeded by order " + std::to_string(g.order()));
    const int n = g.order();
    std::set<std::vector<ElementId>> found;
    found.insert(close(g, {}, true).members());
    for (ElementId x = 0; x < n; ++x) found.insert(close(g, {x}, true).members());

    // Join closure: every ideal is the join of the principal ideals of its
    // members, and binary joins reach any finite join.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<ElementId>> snapshot(found.begin(), found.end());
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<ElementId> seed = snapshot[i];
                seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
                auto joined = close(g, seed, true).members();
                if (found.insert(joined).second) grew = true;
            }
    }
    std::vector<SubSet> out;
    for (const auto& members : found) out.emplace_back(g, members);
    std::sort(out.begin(), out.end(), [](const SubSet& a, const SubSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

QuotientCenterReport check_quotient_center_images(const FiniteMla& g, const SubSet& ideal) {
    g.require_validated("check_quotient_center_images");
    Quotient q = quotient(g, ideal);

    auto meets_trivially = [&](const SubSet& derived) {
        for (ElementId x : ideal.members())
            if (x != 0 && derived.contains(x)) return false;
        return true;
    };
    auto image_of = [&](const SubSet& s) {
        std::set<ElementId> img;
        for (ElementId x : s.members()) img.insert(q.projection[x]);
        return img;
    };
    auto as_set = [](const SubSet& s) {
        return std::set<ElementId>(s.members().begin(), s.members().end());
    };

    QuotientCenterReport report;
    report.clauses[0].center = "Z";
    report.clauses[0].held = meets_trivially(commutator_derived(g));
    report.clauses[0].verified = image_of(group_center(g)) == as_set(group_center(q.algebra));
    report.clauses[1].center = "LZ";
    report.clauses[1].held = meets_trivially(star_derived(g));
    report.clauses[1].verified = image_of(lie_center(g)) == as_set(lie_center(q.algebra));
    report.clauses[2].center = "joint";
    report.clauses[2].held = meets_trivially(m_derived(g));
    report.clauses[2].verified = image_of(joint_center(g)) == as_set(joint_center(q.algebra));
    return report;
}

}  // namespace mlat
