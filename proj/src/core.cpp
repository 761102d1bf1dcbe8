#include "mlat/core.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace mlat {

namespace {

void check_group_table(const std::vector<std::vector<ElementId>>& mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw StructureError("empty multiplication table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul[i].size()) != n)
            throw StructureError("mul row " + std::to_string(i) + " has " +
                                 std::to_string(mul[i].size()) + " entries, expected " +
                                 std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (mul[i][j] < 0 || mul[i][j] >= n)
                throw StructureError("mul entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") out of range");
    }
    for (int x = 0; x < n; ++x) {
        if (mul[0][x] != x)
            throw StructureError("element 0 is not a left identity at " + std::to_string(x));
        if (mul[x][0] != x)
            throw StructureError("element 0 is not a right identity at " + std::to_string(x));
    }
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[mul[i][j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw StructureError("row " + std::to_string(i) + " not a permutation");
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) seen[mul[i][j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw StructureError("column " + std::to_string(j) + " not a permutation");
    }
    for (int x = 0; x < n; ++x) {
        int y = -1;
        for (int j = 0; j < n; ++j)
            if (mul[x][j] == 0) { y = j; break; }
        if (y < 0 || mul[y][x] != 0)
            throw StructureError("element " + std::to_string(x) +
                                 " has no two-sided inverse");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
                    throw StructureError("associativity fails at (" + std::to_string(x) +
                                         "," + std::to_string(y) + "," + std::to_string(z) +
                                         ")");
}

}  // namespace

FiniteMla::FiniteMla(std::vector<std::vector<ElementId>> mul,
                     std::vector<std::vector<ElementId>> star,
                     std::string name,
                     std::vector<std::string> element_names)
    : n_(static_cast<int>(mul.size())),
      mul_(std::move(mul)),
      star_(std::move(star)),
      name_(std::move(name)),
      element_names_(std::move(element_names)) {
    check_group_table(mul_);
    if (static_cast<int>(star_.size()) != n_)
        throw StructureError("star table has " + std::to_string(star_.size()) +
                             " rows, expected " + std::to_string(n_));
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(star_[i].size()) != n_)
            throw StructureError("star row " + std::to_string(i) + " has " +
                                 std::to_string(star_[i].size()) + " entries, expected " +
                                 std::to_string(n_));
        for (int j = 0; j < n_; ++j)
            if (star_[i][j] < 0 || star_[i][j] >= n_)
                throw StructureError("star entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") out of range");
    }
    if (!element_names_.empty() && static_cast<int>(element_names_.size()) != n_)
        throw StructureError("names list has " + std::to_string(element_names_.size()) +
                             " entries, expected " + std::to_string(n_));
    inv_.assign(n_, 0);
    for (int x = 0; x < n_; ++x)
        for (int j = 0; j < n_; ++j)
            if (mul_[x][j] == 0) { inv_[x] = j; break; }
}

FiniteMla::FiniteMla(const FiniteMla& other)
    : n_(other.n_),
      mul_(other.mul_),
      star_(other.star_),
      inv_(other.inv_),
      name_(other.name_),
      element_names_(other.element_names_) {
    star_state_.store(other.star_state_.load());
}

FiniteMla& FiniteMla::operator=(const FiniteMla& other) {
    if (this != &other) {
        n_ = other.n_;
        mul_ = other.mul_;
        star_ = other.star_;
        inv_ = other.inv_;
        name_ = other.name_;
        element_names_ = other.element_names_;
        star_state_.store(other.star_state_.load());
    }
    return *this;
}

int FiniteMla::element_order(ElementId x) const {
    int k = 1;
    ElementId e = x;
    while (e != 0) {
        e = mul_[e][x];
        ++k;
    }
    return k;
}

bool FiniteMla::is_abelian() const {
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (mul_[x][y] != mul_[y][x]) return false;
    return true;
}

bool FiniteMla::has_trivial_star() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (star_[x][y] != 0) return false;
    return true;
}

void FiniteMla::require_validated(const char* who) const {
    if (star_state_.load() != 1)
        throw PreconditionError(std::string(who) +
                                " requires an algebra with a prior valid axiom report" +
                                (name_.empty() ? "" : " (" + name_ + ")"));
}

bool FiniteMla::same_tables(const FiniteMla& other) const {
    return n_ == other.n_ && mul_ == other.mul_ && star_ == other.star_;
}

namespace {

// Least-witness scan of one axiom over x in [x_lo, x_hi). Returns the
// witness tuple or empty.
std::vector<ElementId> scan_axiom(const FiniteMla& g, int axiom, int x_lo, int x_hi) {
    const int n = g.order();
    for (int x = x_lo; x < x_hi; ++x) {
        if (axiom == 1) {
            if (g.star(x, x) != 0) return {x};
            continue;
        }
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                bool ok = true;
                switch (axiom) {
                    case 2:  // x*(yz) == (x*y) . ^y(x*z)
                        ok = g.star(x, g.mul(y, z)) ==
                             g.mul(g.star(x, y), g.conj(y, g.star(x, z)));
                        break;
                    case 3:  // (xy)*z == ^x(y*z) . (x*z)
                        ok = g.star(g.mul(x, y), z) ==
                             g.mul(g.conj(x, g.star(y, z)), g.star(x, z));
                        break;
                    case 4: {  // ((x*y)*^y z)((y*z)*^z x)((z*x)*^x y) == 1
                        ElementId t1 = g.star(g.star(x, y), g.conj(y, z));
                        ElementId t2 = g.star(g.star(y, z), g.conj(z, x));
                        ElementId t3 = g.star(g.star(z, x), g.conj(x, y));
                        ok = g.mul(g.mul(t1, t2), t3) == 0;
                        break;
                    }
                    case 5:  // ^z(x*y) == (^z x)*(^z y)
                        ok = g.conj(z, g.star(x, y)) ==
                             g.star(g.conj(z, x), g.conj(z, y));
                        break;
                }
                if (!ok) return {x, y, z};
            }
        }
    }
    return {};
}

}  // namespace

ValidationReport validate_axioms(const FiniteMla& g, int threads) {
    const int n = g.order();
    ValidationReport report;
    if (threads < 1) threads = 1;
    threads = std::min(threads, n);

    for (int axiom = 1; axiom <= 5; ++axiom) {
        std::vector<ElementId> witness;
        if (threads == 1) {
            witness = scan_axiom(g, axiom, 0, n);
        } else {
            std::vector<std::vector<ElementId>> partial(threads);
            std::vector<std::thread> pool;
            int chunk = (n + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                int lo = t * chunk, hi = std::min(n, lo + chunk);
                pool.emplace_back([&, t, lo, hi] {
                    if (lo < hi) partial[t] = scan_axiom(g, axiom, lo, hi);
                });
            }
            for (auto& th : pool) th.join();
            // The first coordinate dominates the tuple order, so the first
            // non-empty slice result is the global least witness.
            for (auto& w : partial)
                if (!w.empty()) { witness = std::move(w); break; }
        }
        if (!witness.empty()) {
            report.valid = false;
            report.violations.push_back({std::to_string(axiom), std::move(witness)});
        }
    }
    g.star_state_.store(report.valid ? 1 : 2);
    return report;
}

ElementId conjugate(const FiniteMla& g, ElementId x, ElementId y) {
    return g.conj(x, y);
}

ElementId commutator(const FiniteMla& g, ElementId x, ElementId y) {
    return g.comm(x, y);
}

FiniteMla direct_product(const FiniteMla& g1, const FiniteMla& g2, int max_order) {
    g1.require_validated("direct_product");
    g2.require_validated("direct_product");
    long long n = static_cast<long long>(g1.order()) * g2.order();
    if (n > max_order)
        throw PreconditionError("direct product order " + std::to_string(n) +
                                " exceeds the configured maximum " +
                                std::to_string(max_order));
    const int n1 = g1.order(), n2 = g2.order(), m = static_cast<int>(n);
    auto pack = [n2](ElementId a, ElementId b) { return a * n2 + b; };
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m));
    std::vector<std::vector<ElementId>> star(m, std::vector<ElementId>(m));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d) {
                    mul[pack(a, b)][pack(c, d)] = pack(g1.mul(a, c), g2.mul(b, d));
                    star[pack(a, b)][pack(c, d)] = pack(g1.star(a, c), g2.star(b, d));
                }
    std::string name = g1.name().empty() || g2.name().empty()
                           ? std::string()
                           : g1.name() + "x" + g2.name();
    FiniteMla out(std::move(mul), std::move(star), std::move(name));
    ValidationReport r = validate_axioms(out);
    if (!r.valid)
        throw AxiomFailure("direct product of validated algebras failed validation");
    return out;
}

FiniteMla trivial_star_of_group(std::vector<std::vector<ElementId>> mul,
                                std::string name) {
    const int n = static_cast<int>(mul.size());
    std::vector<std::vector<ElementId>> star(n, std::vector<ElementId>(n, 0));
    FiniteMla out(std::move(mul), std::move(star), std::move(name));
    ValidationReport r = validate_axioms(out);
    if (!r.valid)
        throw AxiomFailure("trivial star failed validation");  // unreachable
    return out;
}

std::pair<FiniteMla, ValidationReport> commutator_star_of_group(
    std::vector<std::vector<ElementId>> mul, std::string name) {
    FiniteMla probe(mul, std::vector<std::vector<ElementId>>(
                             mul.size(), std::vector<ElementId>(mul.size(), 0)));
    const int n = probe.order();
    std::vector<std::vector<ElementId>> star(n, std::vector<ElementId>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) star[x][y] = probe.comm(x, y);
    FiniteMla out(std::move(mul), std::move(star), std::move(name));
    ValidationReport r = validate_axioms(out);
    return {std::move(out), std::move(r)};
}

FiniteMla load_algebra(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level is not an object");
    for (const char* field : {"name", "order", "mul", "star"})
        if (!j.contains(field))
            throw ParseError(std::string("missing field \"") + field + "\"");
    if (!j["name"].is_string()) throw ParseError("field \"name\" is not a string");
    if (!j["order"].is_number_integer()) throw ParseError("field \"order\" is not an integer");
    const int n = j["order"].get<int>();
    if (n < 1) throw ParseError("field \"order\" must be positive");

    auto read_table = [&](const char* field) {
        const auto& t = j[field];
        if (!t.is_array() || static_cast<int>(t.size()) != n)
            throw ParseError(std::string("field \"") + field + "\" is not a " +
                             std::to_string(n) + "-row array");
        std::vector<std::vector<ElementId>> out(n);
        for (int i = 0; i < n; ++i) {
            const auto& row = t[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError(std::string("field \"") + field + "\" row " +
                                 std::to_string(i) + " is not a " + std::to_string(n) +
                                 "-entry array");
            out[i].resize(n);
            for (int k = 0; k < n; ++k) {
                if (!row[k].is_number_integer())
                    throw ParseError(std::string("field \"") + field + "\" entry (" +
                                     std::to_string(i) + "," + std::to_string(k) +
                                     ") is not an integer");
                out[i][k] = row[k].get<int>();
            }
        }
        return out;
    };

    std::vector<std::string> names;
    if (j.contains("names")) {
        const auto& nm = j["names"];
        if (!nm.is_array() || static_cast<int>(nm.size()) != n)
            throw ParseError("field \"names\" is not a " + std::to_string(n) +
                             "-entry array");
        for (const auto& s : nm) {
            if (!s.is_string()) throw ParseError("field \"names\" has a non-string entry");
            names.push_back(s.get<std::string>());
        }
    }
    return FiniteMla(read_table("mul"), read_table("star"),
                     j["name"].get<std::string>(), std::move(names));
}

std::string store_algebra(const FiniteMla& g) {
    nlohmann::json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["mul"] = g.mul_table();
    j["star"] = g.star_table();
    if (!g.element_names().empty()) j["names"] = g.element_names();
    return j.dump(2) + "\n";
}

}  // namespace mlat
