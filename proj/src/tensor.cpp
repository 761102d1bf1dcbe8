#include "mlat/tensor.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mlat/isoclinism.hpp"

namespace mlat {

Presentation tensor_presentation(const FiniteMla& g) {
    g.require_validated("tensor_presentation");
    const int n = g.order();
    Presentation p;
    p.generator_count = n * n;
    auto pos = [n](ElementId x, ElementId y) { return x * n + y + 1; };
    auto neg = [n](ElementId x, ElementId y) { return -(x * n + y + 1); };

    std::vector<std::vector<int>> raw;
    raw.reserve(4 * n * n * n);
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z) {
                // (x . (y z))^-1 (x . y) (^y x . ^y z)  [second slot expansion]
                raw.push_back({neg(x, g.mul(y, z)), pos(x, y),
                               pos(g.conj(y, x), g.conj(y, z))});
                // ((x y) . z)^-1 (^x y . ^x z) (x . z)  [first slot expansion]
                raw.push_back({neg(g.mul(x, y), z), pos(g.conj(x, y), g.conj(x, z)),
                               pos(x, z)});
                // ((x*y) . ^y z) (^z x . (y*z))^-1 (^x y . (x*z)^-1)^-1
                raw.push_back({pos(g.star(x, y), g.conj(y, z)),
                               neg(g.conj(z, x), g.star(y, z)),
                               neg(g.conj(x, y), g.inv(g.star(x, z)))});
                // (^z x . (y*z)) ((y*x)^-1 . ^y z)^-1 ((z*x) . ^x y)^-1
                raw.push_back({pos(g.conj(z, x), g.star(y, z)),
                               neg(g.inv(g.star(y, x)), g.conj(y, z)),
                               neg(g.star(z, x), g.conj(x, y))});
            }

    for (auto& w : raw) {
        std::vector<int> reduced;
        for (int letter : w) {
            if (!reduced.empty() && reduced.back() == -letter)
                reduced.pop_back();
            else
                reduced.push_back(letter);
        }
        w = std::move(reduced);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (auto& w : raw)
        if (!w.empty()) p.relators.push_back(std::move(w));

    p.star_gen.assign(p.generator_count,
                      std::vector<std::vector<int>>(p.generator_count));
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId xp = 0; xp < n; ++xp)
                for (ElementId yp = 0; yp < n; ++yp)
                    // (x.y) * (x'.y') = (y*x)^-1 . (x'*y')
                    p.star_gen[x * n + y][xp * n + yp] = {
                        pos(g.inv(g.star(y, x)), g.star(xp, yp))};
    return p;
}

namespace {

// Coset table machinery. Letters come in generator/inverse pairs: letter 2i
// is generator i, letter 2i+1 its inverse.
struct CosetTable {
    int nletters;
    int budget;
    std::vector<std::vector<int>> tab;
    std::vector<int> parent;  // union-find for coincidences
    int live = 0;
    // Freshly set entries (c, l) awaiting relator scans through them.
    std::deque<std::pair<int, int>> dq;

    explicit CosetTable(int letters, int budget_) : nletters(letters), budget(budget_) {
        new_coset();
    }

    int new_coset() {
        if (live + 1 > budget)
            throw BudgetExceeded("coset enumeration exceeded the row budget of " +
                                 std::to_string(budget));
        tab.emplace_back(nletters, -1);
        parent.push_back(static_cast<int>(parent.size()));
        ++live;
        return static_cast<int>(tab.size()) - 1;
    }

    int rep(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    bool is_live(int c) { return rep(c) == c; }

    int get(int c, int l) {
        int v = tab[c][l];
        if (v < 0) return -1;
        v = rep(v);
        tab[c][l] = v;
        return v;
    }

    static int invlet(int l) { return l ^ 1; }

    void set_entry(int c, int l, int d) {
        tab[c][l] = d;
        tab[d][invlet(l)] = c;
        dq.emplace_back(c, l);
        dq.emplace_back(d, invlet(l));
    }

    void merge(int a, int b, std::deque<int>& dead) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        dead.push_back(b);
    }

    void coincidence(int a, int b) {
        std::deque<int> dead;
        merge(a, b, dead);
        while (!dead.empty()) {
            int y = dead.front();
            dead.pop_front();
            for (int l = 0; l < nletters; ++l) {
                int d = tab[y][l];
                if (d < 0) continue;
                if (tab[d][invlet(l)] == y) tab[d][invlet(l)] = -1;
                int u = rep(y), v = rep(d);
                if (tab[u][l] >= 0) {
                    merge(rep(tab[u][l]), v, dead);
                    dq.emplace_back(u, l);
                } else if (tab[v][invlet(l)] >= 0) {
                    merge(rep(tab[v][invlet(l)]), u, dead);
                    dq.emplace_back(v, invlet(l));
                } else {
                    set_entry(u, l, v);
                }
            }
        }
    }

    // Trace a relator at a live coset, filling a one-letter gap or merging
    // on a closure mismatch. Returns true when the table changed.
    bool scan(const std::vector<int>& rl, int c) {
        int f = c;
        size_t i = 0;
        while (i < rl.size()) {
            int v = get(f, rl[i]);
            if (v < 0) break;
            f = v;
            ++i;
        }
        if (i == rl.size()) {
            if (f != c) {
                coincidence(f, c);
                return true;
            }
            return false;
        }
        int b = c;
        size_t j = rl.size();
        while (j > i) {
            int v = get(b, invlet(rl[j - 1]));
            if (v < 0) break;
            b = v;
            --j;
        }
        if (j == i) {
            if (f != b) {
                coincidence(f, b);
                return true;
            }
            return false;
        }
        if (j == i + 1) {
            set_entry(f, rl[i], b);
            return true;
        }
        return false;
    }
};

}  // namespace

PresentedGroup enumerate_presented_group(const Presentation& p, int budget) {
    if (budget < 1) throw PreconditionError("budget must be positive");
    const int L = 2 * std::max(p.generator_count, 1);
    CosetTable ct(L, budget);

    // Relator words over letters.
    std::vector<std::vector<int>> rels;
    rels.reserve(p.relators.size());
    for (const auto& w : p.relators) {
        std::vector<int> rl;
        rl.reserve(w.size());
        for (int s : w) rl.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
        rels.push_back(std::move(rl));
    }

    // Rotations of every relator grouped by leading letter: a new entry
    // (c, l) can only complete scans that cross it, and each of those is a
    // rotation starting with l at c.
    std::vector<std::vector<std::vector<int>>> by_letter(L);
    for (const auto& rl : rels)
        for (size_t k = 0; k < rl.size(); ++k) {
            std::vector<int> rot;
            rot.reserve(rl.size());
            for (size_t t = 0; t < rl.size(); ++t)
                rot.push_back(rl[(k + t) % rl.size()]);
            by_letter[rot[0]].push_back(std::move(rot));
        }
    for (auto& v : by_letter) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    for (;;) {
        // Drain pending deductions, scanning only the rotations a new entry
        // can affect.
        while (!ct.dq.empty()) {
            auto [c, l] = ct.dq.front();
            ct.dq.pop_front();
            c = ct.rep(c);
            if (ct.tab[c][l] < 0) continue;
            for (const auto& rl : by_letter[l]) {
                ct.scan(rl, c);
                c = ct.rep(c);
            }
        }
        // Define the least undefined entry, scanning rows in order.
        int dc = -1, dl = -1;
        for (int c = 0; c < static_cast<int>(ct.tab.size()) && dc < 0; ++c) {
            if (!ct.is_live(c)) continue;
            for (int l = 0; l < L; ++l)
                if (ct.get(c, l) < 0) {
                    dc = c;
                    dl = l;
                    break;
                }
        }
        if (dc >= 0) {
            int m = ct.new_coset();
            ct.set_entry(dc, dl, m);
            continue;
        }
        // Table is total; one full pass certifies scan stability, and any
        // change it makes is drained on the next iteration.
        bool changed = false;
        for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c) {
            if (!ct.is_live(c)) continue;
            for (const auto& rl : rels) {
                if (ct.scan(rl, c)) changed = true;
                if (!ct.is_live(c)) break;
            }
        }
        if (!changed && ct.dq.empty()) break;
    }

    // Compact live cosets preserving order.
    std::vector<int> newid(ct.tab.size(), -1);
    std::vector<int> order;
    for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c)
        if (ct.is_live(c)) {
            newid[c] = static_cast<int>(order.size());
            order.push_back(c);
        }
    const int m = static_cast<int>(order.size());
    std::vector<std::vector<int>> act(m, std::vector<int>(L));
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < L; ++l) act[i][l] = newid[ct.get(order[i], l)];

    // Every relator closes everywhere in the finished table.
    for (int i = 0; i < m; ++i)
        for (const auto& rl : rels) {
            int c = i;
            for (int l : rl) c = act[c][l];
            if (c != i)
                throw StructureError("coset table failed final relator verification");
        }

    // First words by breadth-first search from the identity coset, letters
    // in ascending order.
    PresentedGroup out;
    out.words.assign(m, {});
    std::vector<char> have(m, 0);
    have[0] = 1;
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        for (int l = 0; l < L; ++l) {
            int d = act[c][l];
            if (!have[d]) {
                have[d] = 1;
                out.words[d] = out.words[c];
                out.words[d].push_back(l % 2 ? -(l / 2 + 1) : (l / 2 + 1));
                bfs.push_back(d);
            }
        }
    }

    out.mul.assign(m, std::vector<ElementId>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = a;
            for (int s : out.words[b]) c = act[c][s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1];
            out.mul[a][b] = c;
        }
    out.gen_image.resize(p.generator_count);
    for (int i = 0; i < p.generator_count; ++i) out.gen_image[i] = act[0][2 * i];
    return out;
}

FiniteMla extend_star(const std::vector<std::vector<ElementId>>& mul,
                      const std::vector<ElementId>& gen_image,
                      const std::vector<std::vector<int>>& words,
                      const std::vector<std::vector<std::vector<int>>>& star_gen,
                      std::string name) {
    const int m = static_cast<int>(mul.size());
    std::vector<ElementId> inv(m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (mul[x][y] == 0) {
                inv[x] = y;
                break;
            }
    auto conj = [&](ElementId x, ElementId y) { return mul[mul[x][y]][inv[x]]; };
    auto elt_of_letter = [&](int s) {
        return s > 0 ? gen_image[s - 1] : inv[gen_image[-s - 1]];
    };
    auto elt_of_word = [&](const std::vector<int>& w) {
        ElementId e = 0;
        for (int s : w) e = mul[e][elt_of_letter(s)];
        return e;
    };

    // Star of two single letters, from the generator table plus the inverse
    // slot expansions: x^-1 * y = (^(x^-1)(x*y))^-1 and
    // x * y^-1 = ^(y^-1)((x*y)^-1).
    auto star_ll = [&](auto&& self, int la, int lb) -> ElementId {
        if (la > 0 && lb > 0) return elt_of_word(star_gen[la - 1][lb - 1]);
        if (la < 0) {
            ElementId e = self(self, -la, lb);
            return inv[conj(elt_of_letter(la), e)];
        }
        ElementId e = self(self, la, -lb);
        return conj(elt_of_letter(lb), inv[e]);
    };
    // l * (m v) = (l*m) . ^m(l*v), folded from the right.
    auto star_letter_word = [&](int l, const std::vector<int>& v) {
        ElementId acc = 0;
        for (size_t k = v.size(); k-- > 0;)
            acc = mul[star_ll(star_ll, l, v[k])][conj(elt_of_letter(v[k]), acc)];
        return acc;
    };

    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m));
    for (int y = 0; y < m; ++y) {
        // cache l * word(y) for every letter
        std::vector<ElementId> slw(2 * gen_image.size() + 1);
        for (size_t g = 0; g < gen_image.size(); ++g) {
            slw[2 * g] = star_letter_word(static_cast<int>(g) + 1, words[y]);
            slw[2 * g + 1] = star_letter_word(-(static_cast<int>(g) + 1), words[y]);
        }
        for (int x = 0; x < m; ++x) {
            // (l u) * v = ^l(u*v) . (l*v), folded from the right
            ElementId acc = 0;
            const auto& u = words[x];
            for (size_t k = u.size(); k-- > 0;) {
                int s = u[k];
                ElementId lv = s > 0 ? slw[2 * (s - 1)] : slw[2 * (-s - 1) + 1];
                acc = mul[conj(elt_of_letter(s), acc)][lv];
            }
            star[x][y] = acc;
        }
    }

    FiniteMla out(mul, std::move(star), std::move(name));
    ValidationReport r = validate_axioms(out);
    if (!r.valid) {
        std::string msg = "extended star failed certification:";
        for (const auto& v : r.violations) {
            msg += " axiom " + v.axiom + " at (";
            for (size_t i = 0; i < v.witness.size(); ++i)
                msg += (i ? "," : "") + std::to_string(v.witness[i]);
            msg += ")";
        }
        throw AxiomFailure(msg);
    }
    return out;
}

namespace {

// Smith normal form of M, tracking only the right transform R so that the
// original generators decompose as g = R h over the diagonalized ones.
void smith_normal_form(std::vector<std::vector<long long>>& M,
                       std::vector<std::vector<long long>>& R) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    R.assign(cols, std::vector<long long>(cols, 0));
    for (int i = 0; i < cols; ++i) R[i][i] = 1;

    auto col_sub = [&](int target, int source, long long q) {
        if (!q) return;
        for (int i = 0; i < rows; ++i) M[i][target] -= q * M[i][source];
        for (int i = 0; i < cols; ++i) R[i][target] -= q * R[i][source];
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(R[i][a], R[i][b]);
    };

    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (M[i][j] != 0 && (pi < 0 || std::llabs(M[i][j]) < best)) {
                    best = std::llabs(M[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(M[t], M[pi]);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                long long q = M[i][t] / M[t][t];
                for (int j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {
                    std::swap(M[t], M[i]);  // remainder becomes the pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (M[t][j] == 0) continue;
                long long q = M[t][j] / M[t][t];
                col_sub(j, t, q);
                if (M[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (M[i][j] % M[t][t] != 0) {
                            col_sub(t, j, -1);  // pull column j into the pivot column
                            clean = false;
                        }
            }
        }
        if (M[t][t] < 0)
            for (int j = t; j < cols; ++j) M[t][j] = -M[t][j];
        ++t;
    }
}

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

TensorSquare abelian_tensor_snf(const FiniteMla& g, int max_order) {
    g.require_validated("abelian_tensor_snf");
    if (!g.is_abelian())
        throw PreconditionError("snf tensor path requires a commutative group");
    if (!g.has_trivial_star())
        throw PreconditionError("snf tensor path requires a trivial star");
    const int n = g.order();

    // Present the group on all n elements: one relation per unordered pair.
    std::vector<std::vector<long long>> M;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            std::vector<long long> row(n, 0);
            row[x] += 1;
            row[y] += 1;
            row[g.mul(x, y)] -= 1;
            if (std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; }))
                M.push_back(std::move(row));
        }
    std::vector<std::vector<long long>> R;
    smith_normal_form(M, R);

    std::vector<long long> diag(n, 0);
    for (int t = 0; t < n && t < static_cast<int>(M.size()); ++t) diag[t] = M[t][t];
    std::vector<int> factor_cols;
    std::vector<long long> ds;
    for (int t = 0; t < n; ++t) {
        if (diag[t] == 0)
            throw StructureError("relation matrix of a finite group had a free column");
        if (diag[t] > 1) {
            factor_cols.push_back(t);
            ds.push_back(diag[t]);
        }
    }
    const int f = static_cast<int>(ds.size());
    std::vector<std::vector<long long>> expo(n, std::vector<long long>(f));
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < f; ++j) expo[x][j] = positive_mod(R[x][factor_cols[j]], ds[j]);
    for (int j = 0; j < f; ++j)
        if (expo[0][j] != 0)
            throw StructureError("identity decomposed with a non-zero exponent");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int j = 0; j < f; ++j)
                if (expo[g.mul(x, y)][j] != (expo[x][j] + expo[y][j]) % ds[j])
                    throw StructureError("cyclic decomposition failed to reconstruct the table");

    // Tensor factors: gcd per ordered factor pair.
    std::vector<long long> tf;
    std::vector<std::pair<int, int>> tf_src;
    long long order = 1;
    for (int j = 0; j < f; ++j)
        for (int k = 0; k < f; ++k) {
            long long d = std::gcd(ds[j], ds[k]);
            if (d > 1) {
                tf.push_back(d);
                tf_src.emplace_back(j, k);
                order *= d;
                if (order > max_order)
                    throw PreconditionError("tensor square order exceeds the configured maximum " +
                                            std::to_string(max_order));
            }
        }
    const int F = static_cast<int>(tf.size());
    const int m = static_cast<int>(order);

    auto encode = [&](const std::vector<long long>& tuple) {
        long long id = 0;
        for (int i = 0; i < F; ++i) id = id * tf[i] + tuple[i];
        return static_cast<ElementId>(id);
    };
    std::vector<std::vector<long long>> decoded(m, std::vector<long long>(F));
    for (int e = 0; e < m; ++e) {
        long long v = e;
        for (int i = F - 1; i >= 0; --i) {
            decoded[e][i] = v % tf[i];
            v /= tf[i];
        }
    }
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m));
    std::vector<long long> tuple(F);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (int i = 0; i < F; ++i)
                tuple[i] = (decoded[a][i] + decoded[b][i]) % tf[i];
            mul[a][b] = encode(tuple);
        }
    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m, 0));
    FiniteMla algebra(std::move(mul), std::move(star),
                      g.name().empty() ? "tensor" : g.name() + ".tensor");
    ValidationReport rep = validate_axioms(algebra);
    if (!rep.valid) throw AxiomFailure("snf tensor square failed validation");

    TensorSquare out;
    out.base = std::make_shared<FiniteMla>(g);
    out.algebra = std::make_shared<FiniteMla>(std::move(algebra));
    out.method = "snf";
    out.gen_map.assign(n, std::vector<ElementId>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int i = 0; i < F; ++i)
                tuple[i] = (expo[x][tf_src[i].first] * expo[y][tf_src[i].second]) % tf[i];
            out.gen_map[x][y] = encode(tuple);
        }
    return out;
}

TensorSquare tensor_square(const FiniteMla& g, TensorMethod method, int budget,
                           int max_order) {
    g.require_validated("tensor_square");
    const int n = g.order();
    const bool snf_applicable = g.is_abelian() && g.has_trivial_star();
    if (method == TensorMethod::automatic)
        method = (snf_applicable && n <= kDefaultSnfOrderBound) ? TensorMethod::snf
                                                                : TensorMethod::enumeration;
    if (method == TensorMethod::snf) {
        if (!snf_applicable)
            throw PreconditionError(
                "snf tensor path requires a commutative group with trivial star");
        if (n > kDefaultSnfOrderBound)
            throw PreconditionError("snf tensor path is bounded at order " +
                                    std::to_string(kDefaultSnfOrderBound));
        return abelian_tensor_snf(g, max_order);
    }
    if (n > kDefaultEnumerationOrderBound)
        throw PreconditionError("enumeration tensor path is bounded at order " +
                                std::to_string(kDefaultEnumerationOrderBound));

    Presentation p = tensor_presentation(g);
    PresentedGroup pg = enumerate_presented_group(p, budget);
    if (static_cast<int>(pg.mul.size()) > max_order)
        throw PreconditionError("tensor square order exceeds the configured maximum " +
                                std::to_string(max_order));
    FiniteMla algebra = extend_star(pg.mul, pg.gen_image, pg.words, p.star_gen,
                                    g.name().empty() ? "tensor" : g.name() + ".tensor");
    TensorSquare out;
    out.base = std::make_shared<FiniteMla>(g);
    out.algebra = std::make_shared<FiniteMla>(std::move(algebra));
    out.method = "enumeration";
    out.gen_map.assign(n, std::vector<ElementId>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) out.gen_map[x][y] = pg.gen_image[x * n + y];
    for (int y = 0; y < n; ++y)
        if (out.gen_map[0][y] != 0 || out.gen_map[y][0] != 0)
            throw StructureError("identity slot of the tensor square did not collapse");
    return out;
}

bool verify_tensor_relations(const TensorSquare& t) {
    const FiniteMla& g = *t.base;
    const FiniteMla& a = *t.algebra;
    const auto& gm = t.gen_map;
    const int n = g.order();
    for (ElementId y = 0; y < n; ++y)
        if (gm[0][y] != 0 || gm[y][0] != 0) return false;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z) {
                if (gm[x][g.mul(y, z)] !=
                    a.mul(gm[x][y], gm[g.conj(y, x)][g.conj(y, z)]))
                    return false;
                if (gm[g.mul(x, y)][z] !=
                    a.mul(gm[g.conj(x, y)][g.conj(x, z)], gm[x][z]))
                    return false;
                ElementId lhs = a.mul(gm[g.star(x, y)][g.conj(y, z)],
                                      a.inv(gm[g.conj(z, x)][g.star(y, z)]));
                if (lhs != gm[g.conj(x, y)][g.inv(g.star(x, z))]) return false;
                lhs = a.mul(gm[g.conj(z, x)][g.star(y, z)],
                            a.inv(gm[g.star(z, x)][g.conj(x, y)]));
                if (lhs != gm[g.inv(g.star(y, x))][g.conj(y, z)]) return false;
            }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId xp = 0; xp < n; ++xp)
                for (ElementId yp = 0; yp < n; ++yp)
                    if (a.star(gm[x][y], gm[xp][yp]) !=
                        gm[g.inv(g.star(y, x))][g.star(xp, yp)])
                        return false;
    return true;
}

SubSet pair_ideal(const TensorSquare& t, const SubSet& s) {
    if (!s.parent().same_tables(*t.base))
        throw PreconditionError("pair ideal subset must live in the tensor base");
    const int n = t.base->order();
    std::vector<ElementId> seed;
    for (ElementId x : s.members())
        for (ElementId y = 0; y < n; ++y) {
            seed.push_back(t.gen_map[x][y]);
            seed.push_back(t.gen_map[y][x]);
        }
    return closure_ideal(*t.algebra, seed);
}

TensorQuotientIsoReport check_tensor_quotient_iso(const FiniteMla& g, const SubSet& ideal,
                                                  TensorMethod method, int budget) {
    TensorQuotientIsoReport report;
    Quotient q = quotient(g, ideal);
    TensorSquare left = tensor_square(q.algebra, method, budget);
    TensorSquare whole = tensor_square(g, method, budget);
    SubSet pi = pair_ideal(whole, SubSet(*whole.base, ideal.members()));
    Quotient right = quotient(*whole.algebra, pi);
    report.left_order = left.algebra->order();
    report.right_order = right.algebra.order();
    auto isos = find_isomorphisms(*left.algebra, right.algebra, 1);
    report.found = !isos.empty();
    if (report.found) report.witness = isos.front().image;
    return report;
}

CenterContainmentReport check_center_containments(const FiniteMla& g, TensorMethod method,
                                                  int budget) {
    TensorSquare t = tensor_square(g, method, budget);
    CenterContainmentReport report;
    const SubSet centers_g[3] = {group_center(g), lie_center(g), joint_center(g)};
    const SubSet centers_t[3] = {group_center(*t.algebra), lie_center(*t.algebra),
                                 joint_center(*t.algebra)};
    const char* names[3] = {"Z", "LZ", "joint"};
    for (int i = 0; i < 3; ++i) {
        SubSet pi = pair_ideal(t, SubSet(*t.base, centers_g[i].members()));
        auto& clause = report.clauses[i];
        clause.center = names[i];
        clause.pair_ideal_size = pi.size();
        clause.center_size = centers_t[i].size();
        clause.contained = std::all_of(pi.members().begin(), pi.members().end(),
                                       [&](ElementId x) { return centers_t[i].contains(x); });
        clause.equal = clause.contained && pi.size() == centers_t[i].size();
    }
    return report;
}

CapabilityReport check_capability_condition(const FiniteMla& g, TensorMethod method,
                                            int budget) {
    CapabilityReport report;
    TensorSquare t = tensor_square(g, method, budget);
    SubSet zc = joint_center(g);
    SubSet pi = pair_ideal(t, SubSet(*t.base, zc.members()));
    SubSet zt = joint_center(*t.algebra);
    report.premise_held = pi.members() == zt.members();
    if (!report.premise_held) return report;

    Quotient q = quotient(g, zc);
    TensorSquare left = tensor_square(q.algebra, method, budget);
    Quotient right = quotient(*t.algebra, zt);
    report.quotient_tensor_order = left.algebra->order();
    auto isos = find_isomorphisms(*left.algebra, right.algebra, 1);
    report.verified = !isos.empty();
    if (report.verified) report.witness = isos.front().image;
    return report;
}

TensorIsoclinismReport check_tensor_isoclinism(const FiniteMla& g1, const FiniteMla& g2,
                                               TensorMethod method, int budget) {
    TensorIsoclinismReport report;
    report.base_isoclinic = find_isoclinism(g1, g2).has_value();
    TensorSquare t1 = tensor_square(g1, method, budget);
    TensorSquare t2 = tensor_square(g2, method, budget);
    auto centers_match = [&](const TensorSquare& t, const FiniteMla& g) {
        SubSet pi = pair_ideal(t, SubSet(*t.base, joint_center(g).members()));
        return pi.members() == joint_center(*t.algebra).members();
    };
    report.centers_match1 = centers_match(t1, g1);
    report.centers_match2 = centers_match(t2, g2);
    if (report.applicable())
        report.verified = find_isoclinism(*t1.algebra, *t2.algebra).has_value();
    return report;
}

}  // namespace mlat
