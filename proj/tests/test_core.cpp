#include <string>
#include <vector>

#include "doctest.h"
#include "mlat/core.hpp"
#include "mlat/corpus.hpp"
#include "oracles.hpp"

using namespace mlat;

namespace {

// Every shipped multiplication table, for sweeps.
std::vector<std::pair<std::string, std::vector<std::vector<ElementId>>>> all_tables() {
    std::vector<std::pair<std::string, std::vector<std::vector<ElementId>>>> out;
    for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 16})
        out.emplace_back("c" + std::to_string(n), cyclic_table(n));
    out.emplace_back("v4", klein_table());
    out.emplace_back("d4", dihedral8_table());
    out.emplace_back("q8", quaternion8_table());
    out.emplace_back("s3", symmetric3_table());
    out.emplace_back("m16", modular16_table());
    return out;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("group law violations are rejected with the offending cell") {
    std::vector<std::vector<ElementId>> star2{{0, 0}, {0, 0}};
    CHECK_THROWS_AS(FiniteMla({{0, 1}, {1, 1}}, star2), StructureError);
    CHECK_THROWS_WITH_AS(FiniteMla({{0, 1}, {1, 1}}, star2),
                         doctest::Contains("row 1"), StructureError);
    CHECK_THROWS_WITH_AS(FiniteMla({{1, 0}, {0, 1}}, star2),
                         doctest::Contains("identity"), StructureError);
    CHECK_THROWS_WITH_AS(FiniteMla({}, {}), doctest::Contains("empty"), StructureError);
    CHECK_THROWS_AS(FiniteMla({{0, 1}, {1, 0}}, {{0, 0}}), StructureError);
    CHECK_THROWS_AS(FiniteMla({{0, 1}, {1, 2}}, star2), StructureError);
}

TEST_CASE("oracle flags non-groups the same way") {
    CHECK(oracle::axiom_violations({{0, 1}, {1, 1}}, {{0, 0}, {0, 0}}).front().axiom ==
          "group");
    CHECK(oracle::axiom_violations({{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}).front().axiom ==
          "group");
}

TEST_CASE("trivial and commutator stars validate on the whole corpus") {
    for (const auto& [name, tab] : all_tables()) {
        CAPTURE(name);
        FiniteMla t = trivial_star_of_group(tab, name);
        ValidationReport rt = validate_axioms(t);
        CHECK(rt.valid);
        CHECK(rt.violations.empty());
        CHECK(oracle::axiom_violations(t.mul_table(), t.star_table()).empty());
        CHECK(t.has_trivial_star());

        auto [c, rc] = commutator_star_of_group(tab, name);
        CHECK(rc.valid);
        CHECK(c.star_validated());
        CHECK(oracle::axiom_violations(c.mul_table(), c.star_table()).empty());
    }
}

TEST_CASE("implementation and oracle agree on a broken star") {
    auto mul = cyclic_table(3);
    std::vector<std::vector<ElementId>> star(3, std::vector<ElementId>(3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) star[x][y] = x;
    FiniteMla g(mul, star);
    ValidationReport r = validate_axioms(g);
    CHECK_FALSE(r.valid);
    CHECK(g.star_known_invalid());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().axiom == "1");
    CHECK(r.violations.front().witness == std::vector<ElementId>{1});

    auto ov = oracle::axiom_violations(mul, star);
    REQUIRE_FALSE(ov.empty());
    CHECK(ov.front().axiom == "1");
    CHECK(ov.front().witness == std::vector<int>{1});
    // Same axioms flagged, same least witnesses.
    REQUIRE(r.violations.size() == ov.size());
    for (std::size_t i = 0; i < ov.size(); ++i) {
        CHECK(r.violations[i].axiom == ov[i].axiom);
        CHECK(std::vector<int>(r.violations[i].witness.begin(),
                               r.violations[i].witness.end()) == ov[i].witness);
    }
}

TEST_CASE("several sabotaged stars produce oracle-identical reports") {
    for (const auto& [name, tab] : all_tables()) {
        if (tab.size() > 8) continue;
        CAPTURE(name);
        auto star = trivial_star_of_group(tab, name).star_table();
        star[tab.size() - 1][0] = static_cast<int>(tab.size()) - 1;  // break one cell
        FiniteMla g(tab, star);
        ValidationReport r = validate_axioms(g);
        auto ov = oracle::axiom_violations(tab, star);
        CHECK(r.valid == ov.empty());
        REQUIRE(r.violations.size() == ov.size());
        for (std::size_t i = 0; i < ov.size(); ++i) {
            CHECK(r.violations[i].axiom == ov[i].axiom);
            CHECK(std::vector<int>(r.violations[i].witness.begin(),
                                   r.violations[i].witness.end()) == ov[i].witness);
        }
    }
}

TEST_CASE("threaded validation matches single-threaded") {
    auto [g, r1] = commutator_star_of_group(dihedral8_table(), "d4");
    for (int threads : {2, 4}) {
        ValidationReport rt = validate_axioms(g, threads);
        CHECK(rt.valid == r1.valid);
        REQUIRE(rt.violations.size() == r1.violations.size());
    }
    auto mul = cyclic_table(4);
    std::vector<std::vector<ElementId>> star(4, std::vector<ElementId>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) star[x][y] = (x + y) % 4 == 0 ? 0 : 1;
    FiniteMla bad(mul, star);
    ValidationReport s1 = validate_axioms(bad, 1);
    for (int threads : {2, 4}) {
        ValidationReport st = validate_axioms(bad, threads);
        REQUIRE(st.violations.size() == s1.violations.size());
        for (std::size_t i = 0; i < s1.violations.size(); ++i) {
            CHECK(st.violations[i].axiom == s1.violations[i].axiom);
            CHECK(st.violations[i].witness == s1.violations[i].witness);
        }
    }
}

TEST_CASE("dihedral arithmetic fixtures") {
    FiniteMla d4 = trivial_star_of_group(dihedral8_table(), "d4");
    // r = 1, s = 4; frozen by hand from the r^k s^j numbering.
    CHECK(d4.conj(1, 4) == 6);
    CHECK(d4.comm(1, 4) == 2);
    CHECK(d4.element_order(1) == 4);
    CHECK(d4.element_order(2) == 2);
    CHECK(d4.element_order(4) == 2);
    CHECK(d4.inv(1) == 3);
    CHECK(d4.inv(4) == 4);
    CHECK_FALSE(d4.is_abelian());

    FiniteMla q8 = trivial_star_of_group(quaternion8_table(), "q8");
    CHECK(q8.element_order(2) == 2);  // i^2 = -1, the unique involution
    for (int x : {1, 3, 4, 5, 6, 7}) CHECK(q8.element_order(x) == 4);
}

TEST_CASE("store and load round trip") {
    auto [g, rep] = commutator_star_of_group(dihedral8_table(), "d4_comm");
    REQUIRE(rep.valid);
    FiniteMla back = load_algebra(store_algebra(g));
    CHECK(back.same_tables(g));
    CHECK(back.name() == "d4_comm");
    CHECK(back.order() == 8);
}

TEST_CASE("malformed algebra text raises ParseError") {
    CHECK_THROWS_AS(load_algebra("not json"), ParseError);
    CHECK_THROWS_AS(load_algebra("[]"), ParseError);
    CHECK_THROWS_AS(load_algebra("{\"name\":\"x\",\"order\":2,\"mul\":[[0,1],[1,0]]}"),
                    ParseError);
    CHECK_THROWS_AS(load_algebra("{\"name\":\"x\",\"order\":0,\"mul\":[],\"star\":[]}"),
                    ParseError);
    // Structurally broken but well-formed text is a StructureError instead.
    CHECK_THROWS_AS(
        load_algebra(
            "{\"name\":\"x\",\"order\":2,\"mul\":[[0,1],[1,1]],\"star\":[[0,0],[0,0]]}"),
        StructureError);
}

TEST_CASE("copying preserves validation state") {
    FiniteMla g = trivial_star_of_group(klein_table(), "v4");
    REQUIRE(g.star_validated());
    FiniteMla copy(g);
    CHECK(copy.star_validated());
    FiniteMla assigned = trivial_star_of_group(cyclic_table(2));
    assigned = g;
    CHECK(assigned.star_validated());

    FiniteMla raw(klein_table(), klein_table());  // xor star, never validated
    CHECK_FALSE(raw.star_validated());
    CHECK_THROWS_AS(raw.require_validated("test"), PreconditionError);
}

TEST_CASE("direct product multiplies componentwise") {
    FiniteMla c2 = trivial_star_of_group(cyclic_table(2), "c2");
    FiniteMla c4 = trivial_star_of_group(cyclic_table(4), "c4");
    FiniteMla p = direct_product(c2, c4);
    CHECK(p.order() == 8);
    CHECK(p.is_abelian());
    CHECK(p.has_trivial_star());
    CHECK(p.star_validated());
    // pack(a, b) = a * 4 + b
    CHECK(p.mul(4, 1) == 5);   // (1,0)+(0,1) = (1,1)
    CHECK(p.mul(5, 7) == 0);   // (1,1)+(1,3) = (0,0)
    CHECK(p.element_order(5) == 4);

    FiniteMla d4 = trivial_star_of_group(dihedral8_table(), "d4");
    CHECK(direct_product(d4, c2).order() == 16);
    CHECK_FALSE(direct_product(d4, c2).is_abelian());
    CHECK_THROWS_AS(direct_product(d4, d4, 32), PreconditionError);
}

TEST_CASE("commutator star equals trivial star exactly on abelian groups") {
    for (const auto& [name, tab] : all_tables()) {
        CAPTURE(name);
        FiniteMla t = trivial_star_of_group(tab, name);
        auto [c, rep] = commutator_star_of_group(tab, name);
        REQUIRE(rep.valid);
        CHECK(c.same_tables(t) == t.is_abelian());
    }
}

}  // TEST_SUITE
