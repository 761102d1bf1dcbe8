#include "mlat/morphism.hpp"

#include <algorithm>
#include <array>

#include "mlat/structure.hpp"

namespace mlat {

bool MlaMap::is_bijective() const {
    if (!source || !target) return false;
    if (source->order() != target->order()) return false;
    std::vector<char> seen(target->order(), 0);
    for (ElementId y : image) {
        if (y < 0 || y >= target->order() || seen[y]) return false;
        seen[y] = 1;
    }
    return static_cast<int>(image.size()) == source->order();
}

HomCheck is_homomorphism(const MlaMap& f) {
    const FiniteMla& s = *f.source;
    const FiniteMla& t = *f.target;
    if (static_cast<int>(f.image.size()) != s.order())
        throw PreconditionError("map image size does not match source order");
    for (ElementId y : f.image)
        if (y < 0 || y >= t.order())
            throw PreconditionError("map image value out of range");
    const int n = s.order();
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (f.image[s.mul(x, y)] != t.mul(f.image[x], f.image[y]))
                return {false, "mul", {x, y}};
            if (f.image[s.star(x, y)] != t.star(f.image[x], f.image[y]))
                return {false, "star", {x, y}};
        }
    return {};
}

namespace {

// (group order, star annihilator size, conjugacy class size) per element.
std::vector<std::array<int, 3>> element_invariants(const FiniteMla& g) {
    const int n = g.order();
    std::vector<int> class_size(n, 0);
    std::vector<int> cls(n, -1);
    for (ElementId x = 0; x < n; ++x) {
        if (cls[x] != -1) continue;
        std::vector<ElementId> orbit;
        for (ElementId z = 0; z < n; ++z) {
            ElementId y = g.conj(z, x);
            if (cls[y] == -1) {
                cls[y] = x;
                orbit.push_back(y);
            }
        }
        for (ElementId y : orbit) class_size[y] = static_cast<int>(orbit.size());
    }
    std::vector<std::array<int, 3>> inv(n);
    for (ElementId x = 0; x < n; ++x) {
        int ann = 0;
        for (ElementId y = 0; y < n; ++y)
            if (g.star(x, y) == 0) ++ann;
        inv[x] = {g.element_order(x), ann, class_size[x]};
    }
    return inv;
}

}  // namespace

Fingerprint fingerprint(const FiniteMla& g) {
    g.require_validated("fingerprint");
    Fingerprint fp;
    fp.elements = element_invariants(g);
    std::sort(fp.elements.begin(), fp.elements.end());
    fp.center_size = group_center(g).size();
    fp.lie_center_size = lie_center(g).size();
    fp.star_derived_size = star_derived(g).size();
    fp.commutator_derived_size = commutator_derived(g).size();
    return fp;
}

std::vector<ElementId> generating_sequence(const FiniteMla& g) {
    g.require_validated("generating_sequence");
    const int n = g.order();
    std::vector<ElementId> gens;
    SubSet reach = closure_subalgebra(g, gens);
    while (reach.size() < n) {
        ElementId best = -1;
        int best_order = -1;
        for (ElementId x = 0; x < n; ++x) {
            if (reach.contains(x)) continue;
            int o = g.element_order(x);
            if (o > best_order) {
                best_order = o;
                best = x;
            }
        }
        gens.push_back(best);
        reach = closure_subalgebra(g, gens);
    }
    return gens;
}

namespace {

enum class Op : uint8_t { kGen, kMul, kStar, kInv };

struct Step {
    ElementId elem;  // source id this step produces
    Op op;
    int a = 0, b = 0;  // indices into the discovery list
};

// Discovery schedule: how every element of g is reached from {0} + gens by
// mul/star/inv of earlier entries. A homomorphism is determined by replaying
// this schedule on the generator images.
std::vector<Step> derivation_schedule(const FiniteMla& g,
                                      const std::vector<ElementId>& gens) {
    const int n = g.order();
    std::vector<Step> steps;
    std::vector<ElementId> known;
    std::vector<char> seen(n, 0);
    auto push = [&](ElementId e, Op op, int a, int b) {
        if (!seen[e]) {
            seen[e] = 1;
            known.push_back(e);
            steps.push_back({e, op, a, b});
        }
    };
    push(0, Op::kGen, -1, -1);
    for (ElementId x : gens) push(x, Op::kGen, -1, -1);
    for (size_t i = 0; i < known.size(); ++i) {
        ElementId u = known[i];
        push(g.inv(u), Op::kInv, static_cast<int>(i), 0);
        for (size_t j = 0; j <= i; ++j) {
            ElementId v = known[j];
            push(g.mul(u, v), Op::kMul, static_cast<int>(i), static_cast<int>(j));
            push(g.mul(v, u), Op::kMul, static_cast<int>(j), static_cast<int>(i));
            push(g.star(u, v), Op::kStar, static_cast<int>(i), static_cast<int>(j));
            push(g.star(v, u), Op::kStar, static_cast<int>(j), static_cast<int>(i));
        }
    }
    if (static_cast<int>(known.size()) != n)
        throw PreconditionError("generating sequence does not generate the algebra");
    return steps;
}

}  // namespace

std::vector<MlaMap> find_isomorphisms(const FiniteMla& a, const FiniteMla& b,
                                      std::optional<int> limit) {
    a.require_validated("find_isomorphisms");
    b.require_validated("find_isomorphisms");
    std::vector<MlaMap> out;
    if (a.order() != b.order()) return out;
    if (!(fingerprint(a) == fingerprint(b))) return out;

    const int n = a.order();
    auto inv_a = element_invariants(a);
    auto inv_b = element_invariants(b);
    std::vector<ElementId> gens = generating_sequence(a);
    std::vector<Step> schedule = derivation_schedule(a, gens);
    const int k = static_cast<int>(gens.size());

    // Candidate target images per generator slot, ascending.
    std::vector<std::vector<ElementId>> candidates(k);
    for (int t = 0; t < k; ++t)
        for (ElementId y = 0; y < n; ++y)
            if (inv_b[y] == inv_a[gens[t]]) candidates[t].push_back(y);

    std::vector<ElementId> chosen(k, -1);
    std::vector<char> used(n, 0);
    std::vector<ElementId> img(n);

    auto try_assignment = [&]() {
        std::vector<ElementId> slot_img(schedule.size());
        int gen_slot = 0;
        for (size_t s = 0; s < schedule.size(); ++s) {
            const Step& st = schedule[s];
            ElementId val = 0;
            switch (st.op) {
                case Op::kGen:
                    val = (s == 0) ? 0 : chosen[gen_slot++];
                    break;
                case Op::kMul:
                    val = b.mul(slot_img[st.a], slot_img[st.b]);
                    break;
                case Op::kStar:
                    val = b.star(slot_img[st.a], slot_img[st.b]);
                    break;
                case Op::kInv:
                    val = b.inv(slot_img[st.a]);
                    break;
            }
            slot_img[s] = val;
            img[st.elem] = val;
        }
        MlaMap f{&a, &b, img};
        if (!f.is_bijective()) return;
        if (!is_homomorphism(f).ok) return;
        out.push_back(std::move(f));
    };

    auto dfs = [&](auto&& self, int t) -> void {
        if (t == k) {
            try_assignment();
            return;
        }
        for (ElementId c : candidates[t]) {
            if (used[c]) continue;
            used[c] = 1;
            chosen[t] = c;
            self(self, t + 1);
            used[c] = 0;
        }
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(),
              [](const MlaMap& f, const MlaMap& g) { return f.image < g.image; });
    if (limit && static_cast<int>(out.size()) > *limit) out.resize(*limit);
    return out;
}

}  // namespace mlat
