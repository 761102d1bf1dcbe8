#include "mlat/isoclinism.hpp"

#include <algorithm>

namespace mlat {

RestrictedAlgebra restrict_to_subalgebra(const FiniteMla& g, const SubSet& s) {
    g.require_validated("restrict_to_subalgebra");
    if (!s.is_subalgebra())
        throw PreconditionError("restriction requires a subalgebra");
    const auto& mem = s.members();
    const int m = static_cast<int>(mem.size());
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < m; ++i) index[mem[i]] = i;
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m));
    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            mul[a][b] = index[g.mul(mem[a], mem[b])];
            star[a][b] = index[g.star(mem[a], mem[b])];
            if (mul[a][b] < 0 || star[a][b] < 0)
                throw StructureError("subalgebra closure flag was inconsistent");
        }
    FiniteMla alg(std::move(mul), std::move(star),
                  g.name().empty() ? "restriction" : g.name() + ".sub");
    ValidationReport r = validate_axioms(alg);
    if (!r.valid)
        throw StructureError("restriction of a valid algebra failed validation");
    return RestrictedAlgebra{std::move(alg), mem};
}

void CentralExtension::verify() const {
    if (!total_ || !quotient_) throw PreconditionError("extension algebras must be non-null");
    total_->require_validated("CentralExtension");
    quotient_->require_validated("CentralExtension");
    const FiniteMla& g = *total_;
    const FiniteMla& q = *quotient_;
    SubSet k(g, kernel_);
    if (!k.is_ideal())
        throw NotAnIdeal("kernel is not an ideal of the total algebra");
    SubSet zc = joint_center(g);
    for (ElementId h : kernel_)
        if (!zc.contains(h))
            throw NotCentral("kernel is not contained in the joint center");
    if (static_cast<int>(projection_.size()) != g.order())
        throw PreconditionError("projection must cover every total element");
    std::vector<char> hit(q.order(), 0);
    for (ElementId v : projection_) {
        if (v < 0 || v >= q.order())
            throw PreconditionError("projection value out of range");
        hit[v] = 1;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
        throw PreconditionError("projection is not surjective");
    for (ElementId a = 0; a < g.order(); ++a)
        for (ElementId b = 0; b < g.order(); ++b) {
            if (projection_[g.mul(a, b)] != q.mul(projection_[a], projection_[b]) ||
                projection_[g.star(a, b)] != q.star(projection_[a], projection_[b]))
                throw PreconditionError("projection is not a homomorphism");
        }
    std::vector<ElementId> fiber;
    for (ElementId a = 0; a < g.order(); ++a)
        if (projection_[a] == 0) fiber.push_back(a);
    if (fiber != kernel_)
        throw PreconditionError("projection kernel does not match the declared kernel");
}

CentralExtension::CentralExtension(const FiniteMla& total,
                                   const std::vector<ElementId>& kernel_ids) {
    total.require_validated("CentralExtension");
    total_ = std::make_shared<FiniteMla>(total);
    SubSet k(*total_, kernel_ids);
    kernel_ = k.members();
    if (!k.is_ideal())
        throw NotAnIdeal("kernel is not an ideal of the total algebra");
    SubSet zc = joint_center(*total_);
    for (ElementId h : kernel_)
        if (!zc.contains(h))
            throw NotCentral("kernel is not contained in the joint center");
    Quotient q = quotient(*total_, k);
    quotient_ = std::make_shared<FiniteMla>(std::move(q.algebra));
    projection_ = std::move(q.projection);
    verify();
}

CentralExtension::CentralExtension(std::shared_ptr<const FiniteMla> total,
                                   std::vector<ElementId> kernel_ids,
                                   std::shared_ptr<const FiniteMla> quot,
                                   std::vector<ElementId> projection)
    : total_(std::move(total)),
      kernel_(std::move(kernel_ids)),
      quotient_(std::move(quot)),
      projection_(std::move(projection)) {
    std::sort(kernel_.begin(), kernel_.end());
    kernel_.erase(std::unique(kernel_.begin(), kernel_.end()), kernel_.end());
    verify();
}

CentralExtension make_extension(const FiniteMla& g,
                                const std::vector<ElementId>& kernel_ids) {
    return CentralExtension(g, kernel_ids);
}

bool is_stem(const CentralExtension& e) {
    SubSet md = m_derived(e.total());
    return std::all_of(e.kernel().begin(), e.kernel().end(),
                       [&](ElementId h) { return md.contains(h); });
}

StemCriterionResult stem_criterion(const CentralExtension& e, int ideal_bound) {
    const FiniteMla& g = e.total();
    // Ideals of the total algebra inside the central kernel are exactly the
    // ideals of the kernel itself, enumerated on its restriction.
    RestrictedAlgebra kr = restrict_to_subalgebra(g, e.kernel_subset());
    std::vector<SubSet> inner = enumerate_ideals(kr.algebra, ideal_bound);
    SubSet md = m_derived(g);
    StemCriterionResult res;
    res.holds = true;
    for (const SubSet& si : inner) {
        if (si.size() <= 1) continue;
        std::vector<ElementId> up;
        up.reserve(si.size());
        for (ElementId r : si.members()) up.push_back(kr.members[r]);
        SubSet in_total(g, up);
        if (!in_total.is_ideal())
            throw StructureError("subgroup of the central kernel failed to be an ideal");
        bool meets = std::any_of(up.begin(), up.end(),
                                 [&](ElementId x) { return x != 0 && md.contains(x); });
        if (!meets) {
            res.holds = false;
            res.witness_ideal = std::move(up);
            break;
        }
    }
    return res;
}

namespace {

struct PairingData {
    // top id x top id -> derived (restricted) id
    std::vector<std::vector<ElementId>> comm, star;
};

// Tabulates both pairings over fibers of proj, verifying they are constant
// on each fiber pair and land inside the derived ideal.
PairingData pairings_over(const FiniteMla& total, const std::vector<ElementId>& proj,
                          int top_order, const std::vector<int>& derived_index) {
    PairingData t;
    t.comm.assign(top_order, std::vector<ElementId>(top_order, -1));
    t.star.assign(top_order, std::vector<ElementId>(top_order, -1));
    const int n = total.order();
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) {
            const ElementId pa = proj[a], pb = proj[b];
            const int dc = derived_index[total.comm(a, b)];
            const int ds = derived_index[total.star(a, b)];
            if (dc < 0 || ds < 0)
                throw StructureError("pairing value escaped the derived ideal");
            if (t.comm[pa][pb] < 0)
                t.comm[pa][pb] = dc;
            else if (t.comm[pa][pb] != dc)
                throw StructureError("commutator pairing is not constant on fibers");
            if (t.star[pa][pb] < 0)
                t.star[pa][pb] = ds;
            else if (t.star[pa][pb] != ds)
                throw StructureError("star pairing is not constant on fibers");
        }
    return t;
}

struct SearchSide {
    std::shared_ptr<const FiniteMla> top;
    std::shared_ptr<const FiniteMla> der;
    std::vector<ElementId> proj;  // total id -> top id
    std::vector<ElementId> emb;   // derived id -> total id
};

SearchSide algebra_side(const FiniteMla& g) {
    Quotient q = quotient(g, joint_center(g));
    RestrictedAlgebra r = restrict_to_subalgebra(g, m_derived(g));
    r.algebra.set_name(g.name().empty() ? "derived" : g.name() + ".derived");
    SearchSide s;
    s.top = std::make_shared<FiniteMla>(std::move(q.algebra));
    s.proj = std::move(q.projection);
    s.der = std::make_shared<FiniteMla>(std::move(r.algebra));
    s.emb = std::move(r.members);
    return s;
}

SearchSide extension_side(const CentralExtension& e) {
    RestrictedAlgebra r = restrict_to_subalgebra(e.total(), m_derived(e.total()));
    r.algebra.set_name(e.total().name().empty() ? "derived"
                                                : e.total().name() + ".derived");
    SearchSide s;
    s.top = e.quotient_ptr();
    s.proj = e.projection();
    s.der = std::make_shared<FiniteMla>(std::move(r.algebra));
    s.emb = std::move(r.members);
    return s;
}

std::vector<int> inverse_embedding(int total_order, const std::vector<ElementId>& emb) {
    std::vector<int> index(total_order, -1);
    for (int i = 0; i < static_cast<int>(emb.size()); ++i) index[emb[i]] = i;
    return index;
}

std::optional<IsoclinismWitness> witness_search(const char* kind, const FiniteMla& total1,
                                                const FiniteMla& total2, SearchSide s1,
                                                SearchSide s2) {
    const std::vector<int> dix1 = inverse_embedding(total1.order(), s1.emb);
    const std::vector<int> dix2 = inverse_embedding(total2.order(), s2.emb);
    const PairingData t1 = pairings_over(total1, s1.proj, s1.top->order(), dix1);
    const PairingData t2 = pairings_over(total2, s2.proj, s2.top->order(), dix2);

    const std::vector<MlaMap> lambdas = find_isomorphisms(*s1.top, *s2.top);
    if (lambdas.empty()) return std::nullopt;
    const std::vector<MlaMap> mus = find_isomorphisms(*s1.der, *s2.der);
    if (mus.empty()) return std::nullopt;

    const int k = s1.top->order();
    for (const MlaMap& lam : lambdas)
        for (const MlaMap& mu : mus) {
            bool ok = true;
            for (int pa = 0; pa < k && ok; ++pa)
                for (int pb = 0; pb < k; ++pb) {
                    const int qa = lam.image[pa], qb = lam.image[pb];
                    if (mu.image[t1.comm[pa][pb]] != t2.comm[qa][qb] ||
                        mu.image[t1.star[pa][pb]] != t2.star[qa][qb]) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            IsoclinismWitness w;
            w.kind = kind;
            w.top1 = s1.top;
            w.top2 = s2.top;
            w.der1 = s1.der;
            w.der2 = s2.der;
            w.proj1 = s1.proj;
            w.proj2 = s2.proj;
            w.emb1 = s1.emb;
            w.emb2 = s2.emb;
            w.lambda = lam.image;
            w.mu = mu.image;
            return w;
        }
    return std::nullopt;
}

}  // namespace

std::optional<IsoclinismWitness> find_isoclinism(const FiniteMla& g1, const FiniteMla& g2) {
    g1.require_validated("find_isoclinism");
    g2.require_validated("find_isoclinism");
    return witness_search("algebra", g1, g2, algebra_side(g1), algebra_side(g2));
}

std::optional<IsoclinismWitness> find_extension_isoclinism(const CentralExtension& e1,
                                                           const CentralExtension& e2) {
    return witness_search("extension", e1.total(), e2.total(), extension_side(e1),
                          extension_side(e2));
}

WitnessPropertyReport verify_witness_properties(const CentralExtension& e1,
                                                const CentralExtension& e2,
                                                const IsoclinismWitness& w) {
    const FiniteMla& g1 = e1.total();
    const FiniteMla& g2 = e2.total();
    if (w.proj1 != e1.projection() || w.proj2 != e2.projection())
        throw PreconditionError("witness projections do not match the extensions");
    const std::vector<int> dix1 = inverse_embedding(g1.order(), w.emb1);
    const std::vector<int> dix2 = inverse_embedding(g2.order(), w.emb2);
    // least lift of each quotient element on the right side
    std::vector<ElementId> lift2(w.top2->order(), -1);
    for (ElementId a = 0; a < g2.order(); ++a)
        if (lift2[w.proj2[a]] < 0) lift2[w.proj2[a]] = a;

    WitnessPropertyReport rep;

    rep.beta_square = true;
    for (int d = 0; d < static_cast<int>(w.emb1.size()); ++d)
        if (w.lambda[w.proj1[w.emb1[d]]] != w.proj2[w.emb2[w.mu[d]]]) {
            rep.beta_square = false;
            rep.findings.push_back("projection square failed at derived element " +
                                   std::to_string(d));
            break;
        }

    rep.mixed_pairing = true;
    for (int d = 0; d < static_cast<int>(w.emb1.size()) && rep.mixed_pairing; ++d)
        for (ElementId a = 0; a < g1.order(); ++a) {
            const ElementId x = w.emb1[d];
            const int left = dix1[g1.mul(g1.star(x, a), g1.comm(x, a))];
            const ElementId x2 = w.emb2[w.mu[d]];
            const ElementId a2 = lift2[w.lambda[w.proj1[a]]];
            const int right = dix2[g2.mul(g2.star(x2, a2), g2.comm(x2, a2))];
            if (left < 0 || right < 0)
                throw StructureError("mixed pairing escaped the derived ideal");
            if (w.mu[left] != right) {
                rep.mixed_pairing = false;
                rep.findings.push_back("mixed pairing failed at derived element " +
                                       std::to_string(d) + ", group element " +
                                       std::to_string(a));
                break;
            }
        }

    std::vector<ElementId> slice1, slice2;
    for (ElementId h : e1.kernel())
        if (dix1[h] >= 0) slice1.push_back(w.mu[dix1[h]]);
    for (ElementId h : e2.kernel())
        if (dix2[h] >= 0) slice2.push_back(dix2[h]);
    std::sort(slice1.begin(), slice1.end());
    std::sort(slice2.begin(), slice2.end());
    rep.kernel_slice = slice1 == slice2;
    if (!rep.kernel_slice)
        rep.findings.push_back("kernel slices of the derived ideals do not correspond");

    // Induced map between joint-center quotients, built through least lifts
    // and checked for well-definedness, bijectivity, the homomorphism laws,
    // and the pairing squares with the same mu.
    SubSet zc1 = joint_center(g1);
    SubSet zc2 = joint_center(g2);
    Quotient q1 = quotient(g1, zc1);
    Quotient q2 = quotient(g2, zc2);
    bool induced_ok = true;
    std::vector<ElementId> lbar(q1.algebra.order(), -1);
    for (ElementId a = 0; a < g1.order() && induced_ok; ++a) {
        const ElementId target = q2.projection[lift2[w.lambda[w.proj1[a]]]];
        ElementId& slot = lbar[q1.projection[a]];
        if (slot < 0)
            slot = target;
        else if (slot != target) {
            induced_ok = false;
            rep.findings.push_back("induced central-quotient map is not well defined");
        }
    }
    if (induced_ok) {
        MlaMap f{&q1.algebra, &q2.algebra, lbar};
        if (!f.is_bijective() || !is_homomorphism(f).ok) {
            induced_ok = false;
            rep.findings.push_back("induced central-quotient map is not an isomorphism");
        }
    }
    if (induced_ok) {
        std::vector<ElementId> rep1(q1.algebra.order(), -1), rep2(q2.algebra.order(), -1);
        for (ElementId a = 0; a < g1.order(); ++a)
            if (rep1[q1.projection[a]] < 0) rep1[q1.projection[a]] = a;
        for (ElementId a = 0; a < g2.order(); ++a)
            if (rep2[q2.projection[a]] < 0) rep2[q2.projection[a]] = a;
        for (int c = 0; c < q1.algebra.order() && induced_ok; ++c)
            for (int cp = 0; cp < q1.algebra.order(); ++cp) {
                const ElementId a = rep1[c], b = rep1[cp];
                const ElementId a2 = rep2[lbar[c]], b2 = rep2[lbar[cp]];
                if (w.mu[dix1[g1.comm(a, b)]] != dix2[g2.comm(a2, b2)] ||
                    w.mu[dix1[g1.star(a, b)]] != dix2[g2.star(a2, b2)]) {
                    induced_ok = false;
                    rep.findings.push_back(
                        "induced central-quotient map fails a pairing square");
                    break;
                }
            }
    }
    rep.induced_algebra_witness = induced_ok;

    const bool k1_central = e1.kernel() == zc1.members();
    const bool k2_central = e2.kernel() == zc2.members();
    rep.center_biconditional = k1_central == k2_central;
    if (!rep.center_biconditional)
        rep.findings.push_back("kernel equals the joint center on exactly one side");
    return rep;
}

IsoclinicMorphismReport is_isoclinic_morphism(const CentralExtension& e1,
                                              const CentralExtension& e2,
                                              const ExtensionMorphism& m) {
    const FiniteMla& g1 = e1.total();
    const FiniteMla& g2 = e2.total();
    const FiniteMla& k1 = e1.quot();
    const FiniteMla& k2 = e2.quot();
    if (static_cast<int>(m.total_map.size()) != g1.order() ||
        static_cast<int>(m.quot_map.size()) != k1.order() ||
        m.kernel_map.size() != e1.kernel().size())
        throw NotAMorphism("map sizes do not match the extensions");
    for (ElementId v : m.total_map)
        if (v < 0 || v >= g2.order()) throw NotAMorphism("total map value out of range");
    for (ElementId v : m.quot_map)
        if (v < 0 || v >= k2.order()) throw NotAMorphism("quotient map value out of range");
    for (ElementId v : m.kernel_map)
        if (v < 0 || v >= static_cast<int>(e2.kernel().size()))
            throw NotAMorphism("kernel map value out of range");

    MlaMap tm{&g1, &g2, m.total_map};
    HomCheck hc = is_homomorphism(tm);
    if (!hc.ok)
        throw NotAMorphism("total map fails the " + hc.operation + " homomorphism law");
    MlaMap qm{&k1, &k2, m.quot_map};
    hc = is_homomorphism(qm);
    if (!hc.ok)
        throw NotAMorphism("quotient map fails the " + hc.operation + " homomorphism law");
    for (size_t i = 0; i < e1.kernel().size(); ++i) {
        const ElementId img = m.total_map[e1.kernel()[i]];
        const auto& k2ids = e2.kernel();
        const auto it = std::lower_bound(k2ids.begin(), k2ids.end(), img);
        if (it == k2ids.end() || *it != img)
            throw NotAMorphism("total map does not carry the kernel into the kernel");
        if (m.kernel_map[i] != static_cast<ElementId>(it - k2ids.begin()))
            throw NotAMorphism("kernel square does not commute");
    }
    for (ElementId a = 0; a < g1.order(); ++a)
        if (m.quot_map[e1.projection()[a]] != e2.projection()[m.total_map[a]])
            throw NotAMorphism("quotient square does not commute");

    IsoclinicMorphismReport rep;
    const bool nu_bijective = qm.is_bijective();
    RestrictedAlgebra der1 = restrict_to_subalgebra(g1, m_derived(g1));
    RestrictedAlgebra der2 = restrict_to_subalgebra(g2, m_derived(g2));
    const std::vector<int> dix1 = inverse_embedding(g1.order(), der1.members);
    const std::vector<int> dix2 = inverse_embedding(g2.order(), der2.members);

    bool kernel_clear = true;
    for (ElementId x : der1.members)
        if (x != 0 && m.total_map[x] == 0) {
            kernel_clear = false;
            break;
        }
    rep.criterion = nu_bijective && kernel_clear;
    if (!rep.criterion) rep.criterion_reason = nu_bijective ? "kernel" : "nu";

    // Direct reading of the definition: the quotient map together with the
    // restriction of the total map must form an extension isoclinism.
    bool direct = nu_bijective;
    std::vector<ElementId> mu_r(der1.members.size());
    if (direct) {
        std::vector<char> seen(der2.members.size(), 0);
        for (size_t d = 0; d < der1.members.size(); ++d) {
            const int to = dix2[m.total_map[der1.members[d]]];
            if (to < 0) throw StructureError("total map pushed the derived ideal outside");
            mu_r[d] = to;
            if (seen[to]) direct = false;
            seen[to] = 1;
        }
        if (der1.members.size() != der2.members.size()) direct = false;
    }
    if (direct) {
        const PairingData t1 = pairings_over(g1, e1.projection(), k1.order(), dix1);
        const PairingData t2 = pairings_over(g2, e2.projection(), k2.order(), dix2);
        for (int a = 0; a < k1.order() && direct; ++a)
            for (int b = 0; b < k1.order(); ++b) {
                const int qa = m.quot_map[a], qb = m.quot_map[b];
                if (mu_r[t1.comm[a][b]] != t2.comm[qa][qb] ||
                    mu_r[t1.star[a][b]] != t2.star[qa][qb]) {
                    direct = false;
                    break;
                }
            }
    }
    rep.direct = direct;
    rep.concordant = rep.criterion == rep.direct;
    if (!rep.concordant)
        rep.findings.push_back("criterion and direct evaluation disagree");

    if (rep.criterion || rep.direct) {
        std::vector<char> covered(g2.order(), 0);
        for (ElementId a = 0; a < g1.order(); ++a)
            for (ElementId h : e2.kernel()) covered[g2.mul(m.total_map[a], h)] = 1;
        rep.image_kernel_covers =
            std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
        if (!rep.image_kernel_covers)
            rep.findings.push_back(
                "image of the total map times the kernel does not cover the target");
    }
    return rep;
}

StemReduceResult stem_reduce(const CentralExtension& e, int ideal_bound) {
    const FiniteMla& g = e.total();
    RestrictedAlgebra kr = restrict_to_subalgebra(g, e.kernel_subset());
    std::vector<SubSet> inner = enumerate_ideals(kr.algebra, ideal_bound);
    SubSet md = m_derived(g);
    std::vector<std::vector<ElementId>> candidates;
    for (const SubSet& si : inner) {
        std::vector<ElementId> up;
        up.reserve(si.size());
        for (ElementId r : si.members()) up.push_back(kr.members[r]);
        const bool clear = std::none_of(up.begin(), up.end(), [&](ElementId x) {
            return x != 0 && md.contains(x);
        });
        if (clear) candidates.push_back(std::move(up));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    const std::vector<ElementId>& chosen = candidates.front();
    SubSet j(g, chosen);
    if (!j.is_ideal())
        throw StructureError("subgroup of the central kernel failed to be an ideal");
    Quotient q = quotient(g, j);
    std::vector<ElementId> new_kernel;
    for (ElementId h : e.kernel()) new_kernel.push_back(q.projection[h]);
    std::sort(new_kernel.begin(), new_kernel.end());
    new_kernel.erase(std::unique(new_kernel.begin(), new_kernel.end()), new_kernel.end());

    StemReduceResult res{chosen, CentralExtension(q.algebra, new_kernel), std::nullopt,
                         false, {}};
    res.witness = find_extension_isoclinism(e, res.reduced);
    res.reduced_is_stem = is_stem(res.reduced);
    if (!res.witness)
        res.findings.push_back("reduced extension is not isoclinic to the input");
    if (!res.reduced_is_stem) res.findings.push_back("reduced extension is not stem");
    return res;
}

CentralExtension pullback_extension(const CentralExtension& e1, const CentralExtension& e2,
                                    const std::vector<ElementId>& nu_image, int max_order) {
    const FiniteMla& k1 = e1.quot();
    const FiniteMla& k2 = e2.quot();
    if (static_cast<int>(nu_image.size()) != k1.order())
        throw NotAMorphism("nu must cover every quotient element");
    for (ElementId v : nu_image)
        if (v < 0 || v >= k2.order()) throw NotAMorphism("nu value out of range");
    MlaMap nu{&k1, &k2, nu_image};
    HomCheck hc = is_homomorphism(nu);
    if (!hc.ok) throw NotAMorphism("nu fails the " + hc.operation + " homomorphism law");

    const FiniteMla& g1 = e1.total();
    const FiniteMla& g2 = e2.total();
    std::vector<std::pair<ElementId, ElementId>> elems;
    std::vector<std::vector<int>> index(g1.order(), std::vector<int>(g2.order(), -1));
    for (ElementId a = 0; a < g1.order(); ++a)
        for (ElementId b = 0; b < g2.order(); ++b)
            if (nu_image[e1.projection()[a]] == e2.projection()[b]) {
                index[a][b] = static_cast<int>(elems.size());
                elems.emplace_back(a, b);
            }
    const int m = static_cast<int>(elems.size());
    if (m > max_order)
        throw PreconditionError("pullback order exceeds the configured maximum " +
                                std::to_string(max_order));
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m));
    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto [a, b] = elems[i];
            const auto [c, d] = elems[j];
            mul[i][j] = index[g1.mul(a, c)][g2.mul(b, d)];
            star[i][j] = index[g1.star(a, c)][g2.star(b, d)];
            if (mul[i][j] < 0 || star[i][j] < 0)
                throw StructureError("matching set is not closed under the operations");
        }
    FiniteMla total(std::move(mul), std::move(star), g1.name() + "_x_" + g2.name());
    ValidationReport r = validate_axioms(total);
    if (!r.valid) throw AxiomFailure("pullback failed validation");

    std::vector<ElementId> kernel_ids;
    for (ElementId h1 : e1.kernel())
        for (ElementId h2 : e2.kernel())
            if (index[h1][h2] >= 0) kernel_ids.push_back(index[h1][h2]);
    std::sort(kernel_ids.begin(), kernel_ids.end());
    if (static_cast<int>(kernel_ids.size()) !=
        static_cast<int>(e1.kernel().size() * e2.kernel().size()))
        throw StructureError("pullback kernel is not the product of the kernels");

    std::vector<ElementId> projection(m);
    for (int i = 0; i < m; ++i) projection[i] = e1.projection()[elems[i].first];
    return CentralExtension(std::make_shared<FiniteMla>(std::move(total)),
                            std::move(kernel_ids), e1.quotient_ptr(),
                            std::move(projection));
}

}  // namespace mlat
