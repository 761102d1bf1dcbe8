// Acceptance gate: ten end-to-end criteria, one line each, exit 0 only if
// every one passes. Works against a freshly written corpus in a temp dir.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mlat/cli.hpp"
#include "mlat/corpus.hpp"
#include "mlat/isoclinism.hpp"
#include "mlat/morphism.hpp"
#include "mlat/structure.hpp"
#include "mlat/suites.hpp"
#include "mlat/tensor.hpp"
#include "oracles.hpp"

using namespace mlat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

const CentralExtension* find_ext(const Corpus& c, const std::string& name) {
    for (const auto& e : c.extensions)
        if (e.name == name) return &e.extension;
    return nullptr;
}

std::string suite_note(const SuiteReport& r) {
    int pass = 0;
    for (const auto& c : r.cases)
        if (c.status == "pass") ++pass;
    std::ostringstream ss;
    ss << pass << "/" << r.cases.size() << " cases pass";
    return ss.str();
}

bool all_pass(const SuiteReport& r) {
    for (const auto& c : r.cases)
        if (c.status != "pass") return false;
    return !r.cases.empty();
}

// --- criteria -------------------------------------------------------------

Outcome axioms_over_corpus(const Corpus& corpus) {
    Check c;
    long long t0 = now_ms();
    c.expect(corpus.algebras.size() >= 20, "corpus unexpectedly small");
    for (const auto& ca : corpus.algebras) {
        const auto& tab = ca.algebra.mul_table();
        c.expect(ca.algebra.order() >= 1 && ca.algebra.order() <= 16,
                 ca.name + ": order outside 1..16");
        c.expect(validate_axioms(ca.algebra).valid, ca.name + ": corpus entry invalid");
        FiniteMla triv = trivial_star_of_group(tab, ca.name);
        c.expect(validate_axioms(triv).valid, ca.name + ": trivial star invalid");
        auto [comm, rep] = commutator_star_of_group(tab, ca.name);
        c.expect(rep.valid, ca.name + ": commutator star invalid");
        c.expect(oracle::axiom_violations(tab, triv.star_table()).empty(),
                 ca.name + ": oracle disagrees on trivial star");
        c.expect(oracle::axiom_violations(tab, comm.star_table()).empty(),
                 ca.name + ": oracle disagrees on commutator star");
    }
    auto broken_star = trivial_star_of_group(klein_table()).star_table();
    broken_star[1][1] = 1;
    ValidationReport r = validate_axioms(FiniteMla(klein_table(), broken_star));
    c.expect(!r.valid, "broken star accepted");
    c.expect(!r.violations.empty() && r.violations.front().axiom == "1" &&
                 r.violations.front().witness == std::vector<ElementId>{1},
             "broken star witness wrong");
    long long ms = now_ms() - t0;
    c.expect(ms < 5000, "too slow: " + std::to_string(ms) + "ms");
    return {c.ok, c.ok ? std::to_string(ms) + "ms" : c.why};
}

Outcome tensor_examples(const Corpus& corpus) {
    Check c;
    long long t0 = now_ms();
    for (int n = 2; n <= 9; ++n) {
        FiniteMla cn = trivial_star_of_group(cyclic_table(n), "c" + std::to_string(n));
        TensorSquare t = tensor_square(cn, TensorMethod::snf);
        c.expect(t.algebra->order() == n, "cyclic tensor order wrong at n=" + std::to_string(n));
        c.expect(t.algebra->order() == oracle::abelian_tensor_order(cn.mul_table()),
                 "oracle disagrees at n=" + std::to_string(n));
        c.expect(!find_isomorphisms(*t.algebra, cn).empty(),
                 "tensor not isomorphic to base at n=" + std::to_string(n));
        if (n <= 4) {
            TensorSquare e = tensor_square(cn, TensorMethod::enumeration, 100000);
            c.expect(!find_isomorphisms(*t.algebra, *e.algebra).empty(),
                     "methods disagree at n=" + std::to_string(n));
        }
    }
    const FiniteMla* v4 = corpus.find_algebra("v4");
    c.expect(v4 != nullptr, "v4 missing from corpus");
    if (v4) {
        TensorSquare t = tensor_square(*v4, TensorMethod::automatic, 100000);
        c.expect(t.algebra->order() == 16, "klein tensor order wrong");
        int expo = 1;
        for (int x = 0; x < t.algebra->order(); ++x)
            expo = std::max(expo, t.algebra->element_order(x));
        c.expect(expo == 2, "klein tensor exponent wrong");
        c.expect(joint_center(*t.algebra).members() ==
                     pair_ideal(t, joint_center(*v4)).members(),
                 "joint center of the tensor square differs from the pair ideal");
    }
    long long ms = now_ms() - t0;
    c.expect(ms < 60000, "too slow: " + std::to_string(ms) + "ms");
    return {c.ok, c.ok ? std::to_string(ms) + "ms" : c.why};
}

Outcome quotient_center_suite(const SuiteReport& r) {
    Check c;
    c.expect(r.passed(), "suite reports failure");
    c.expect(!r.cases.empty(), "no cases ran");
    for (const auto& sc : r.cases) c.expect(sc.status != "fail", sc.id + " failed");
    return {c.ok, c.ok ? suite_note(r) : c.why};
}

Outcome tensor_quotient_and_containments(const SuiteReport& r32, const SuiteReport& r33) {
    Check c;
    c.expect(r32.passed(), "quotient-isomorphism suite reports failure");
    bool some_pass = false;
    for (const auto& sc : r32.cases) some_pass = some_pass || sc.status == "pass";
    c.expect(some_pass, "quotient-isomorphism suite is vacuous");
    c.expect(r33.passed(), "containment suite reports failure");
    c.expect(!r33.cases.empty(), "containment suite is vacuous");
    return {c.ok, c.ok ? suite_note(r32) + "; " + suite_note(r33) : c.why};
}

Outcome isoclinism_search(const Corpus& corpus) {
    Check c;
    const FiniteMla* d4 = corpus.find_algebra("d4");
    const FiniteMla* q8 = corpus.find_algebra("q8");
    const FiniteMla* c8 = corpus.find_algebra("c8");
    c.expect(d4 && q8 && c8, "standard algebras missing from corpus");
    if (!c.ok) return {false, c.why};
    c.expect(find_isoclinism(*d4, *q8).has_value(), "dihedral~quaternion witness missing");
    c.expect(!find_isoclinism(*d4, *c8).has_value(), "dihedral vs cyclic found a witness");

    std::vector<const CorpusAlgebra*> abelian;
    for (const auto& ca : corpus.algebras)
        if (ca.algebra.is_abelian() && ca.algebra.has_trivial_star())
            abelian.push_back(&ca);
    c.expect(abelian.size() >= 10, "too few abelian corpus algebras");
    int pairs = 0;
    for (std::size_t i = 0; i < abelian.size() && c.ok; ++i)
        for (std::size_t j = i; j < abelian.size() && c.ok; ++j) {
            ++pairs;
            c.expect(find_isoclinism(abelian[i]->algebra, abelian[j]->algebra).has_value(),
                     abelian[i]->name + " vs " + abelian[j]->name + ": no witness");
        }
    return {c.ok, c.ok ? std::to_string(pairs) + " abelian pairs all witnessed" : c.why};
}

Outcome extension_isoclinism(const Corpus& corpus, const SuiteReport& r42) {
    Check c;
    const CentralExtension* e1 = find_ext(corpus, "d4_center");
    const CentralExtension* e2 = find_ext(corpus, "q8_center");
    c.expect(e1 && e2, "central extensions missing from corpus");
    if (!c.ok) return {false, c.why};
    auto w = find_extension_isoclinism(*e1, *e2);
    c.expect(w.has_value(), "dihedral~quaternion extension witness missing");
    if (w) {
        WitnessPropertyReport pr = verify_witness_properties(*e1, *e2, *w);
        c.expect(pr.all(), "witness fails its structural consequences");
    }
    c.expect(r42.passed(), "witness-property suite reports failure");
    int witnessed = 0;
    for (const auto& sc : r42.cases)
        if (sc.status == "pass") ++witnessed;
    c.expect(witnessed >= 1, "no witnessed extension pairs in the suite");
    bool d4q8_listed = false;
    for (const auto& sc : r42.cases)
        if (sc.id == "d4_center ~ q8_center") d4q8_listed = sc.status == "pass";
    c.expect(d4q8_listed, "d4_center ~ q8_center not verified in the suite");
    return {c.ok, c.ok ? suite_note(r42) : c.why};
}

Outcome morphism_concordance(const SuiteReport& r45) {
    Check c;
    c.expect(all_pass(r45), "a constructed morphism was discordant or skipped");
    c.expect(r45.cases.size() >= 20,
             "only " + std::to_string(r45.cases.size()) + " morphisms constructed");
    bool saw_nu = false, saw_kernel = false, saw_iso = false;
    for (const auto& sc : r45.cases) {
        if (sc.detail.find("(nu)") != std::string::npos) saw_nu = true;
        if (sc.detail.find("(kernel)") != std::string::npos) saw_kernel = true;
        if (sc.detail.find("criterion=true") != std::string::npos) saw_iso = true;
    }
    c.expect(saw_nu, "no case with a non-bijective induced quotient map");
    c.expect(saw_kernel, "no case with the kernel meeting the derived ideal");
    c.expect(saw_iso, "no isoclinic morphism case");
    return {c.ok,
            c.ok ? std::to_string(r45.cases.size()) + " morphisms, criterion == direct on all"
                 : c.why};
}

Outcome stem_machinery(const SuiteReport& rcrit, const SuiteReport& rred) {
    Check c;
    c.expect(all_pass(rcrit), "criterion/containment concordance failed");
    c.expect(all_pass(rred), "a reduction failed to be stem or isoclinic");
    c.expect(rcrit.cases.size() == rred.cases.size(),
             "suites cover different extension sets");
    return {c.ok,
            c.ok ? std::to_string(rcrit.cases.size()) + " central extensions checked twice"
                 : c.why};
}

Outcome pullback_over_corpus(const Corpus& corpus) {
    Check c;
    int built = 0;
    for (const auto& ce1 : corpus.extensions)
        for (const auto& ce2 : corpus.extensions) {
            const CentralExtension& e1 = ce1.extension;
            const CentralExtension& e2 = ce2.extension;
            auto isos = find_isomorphisms(e1.quot(), e2.quot(), 1);
            if (isos.empty()) continue;
            CentralExtension pb = pullback_extension(e1, e2, isos.front().image);
            ++built;
            c.expect(static_cast<int>(pb.kernel().size()) ==
                         static_cast<int>(e1.kernel().size() * e2.kernel().size()),
                     ce1.name + " x " + ce2.name + ": kernel is not the product");
            c.expect(pb.total().order() ==
                         e1.total().order() * static_cast<int>(e2.kernel().size()),
                     ce1.name + " x " + ce2.name + ": total order wrong");
            c.expect(pb.quot().order() == e1.quot().order(),
                     ce1.name + " x " + ce2.name + ": quotient changed");
        }
    c.expect(built >= 8, "too few corpus pairs with isomorphic quotients");
    return {c.ok, c.ok ? std::to_string(built) + " pullbacks built and checked" : c.why};
}

Outcome determinism(const std::string& dir) {
    Check c;
    fs::path tmp = fs::path(dir) / "reports";
    fs::create_directories(tmp);
    std::string p1 = (tmp / "a.json").string(), p2 = (tmp / "b.json").string();

    auto read_all = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto twice = [&](std::vector<std::string> args, const std::string& label,
                     std::vector<std::string> variant = {}) {
        if (variant.empty()) variant = args;
        std::ostringstream o1, e1s, o2, e2s;
        std::vector<std::string> a1 = args, a2 = variant;
        a1.insert(a1.end(), {"--out", p1});
        a2.insert(a2.end(), {"--out", p2});
        int c1 = run(a1, o1, e1s);
        int c2 = run(a2, o2, e2s);
        c.expect(c1 == c2, label + ": exit codes differ");
        std::string r1 = read_all(p1), r2 = read_all(p2);
        c.expect(!r1.empty(), label + ": empty report");
        c.expect(r1 == r2, label + ": reports differ");
        c.expect(o1.str() == o2.str(), label + ": stdout differs");
    };

    std::string d4 = dir + "/d4.mla", q8 = dir + "/q8.mla", s3 = dir + "/s3.mla";
    twice({"validate", d4}, "validate");
    twice({"validate", d4}, "validate-threads", {"validate", d4, "--threads", "4"});
    twice({"invariants", q8}, "invariants");
    twice({"quotient", d4, "--ideal", "0,2"}, "quotient");
    twice({"tensor", s3}, "tensor-enumeration");
    twice({"tensor", dir + "/c2xc4.mla"}, "tensor-snf");
    twice({"isoclinic", d4, q8}, "isoclinic");
    twice({"ext-isoclinic", dir + "/d4_center.ext", dir + "/q8_center.ext"},
          "ext-isoclinic");
    twice({"stem-reduce", dir + "/d4xc2_center.ext"}, "stem-reduce");
    twice({"pullback", dir + "/d4_center.ext", dir + "/q8_center.ext", "--nu", "0,1,2,3"},
          "pullback");
    twice({"check", "lemma3.2", "--corpus", dir}, "check");
    twice({"check", "lemma3.1", "--corpus", dir}, "check-threads",
          {"check", "lemma3.1", "--corpus", dir, "--threads", "4"});
    return {c.ok, c.ok ? "12 command pairs byte-identical" : c.why};
}

}  // namespace

int main() {
    fs::path dir =
        fs::temp_directory_path() / ("mlat-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    write_default_corpus(dir.string());
    Corpus corpus = load_corpus(dir.string());

    std::map<std::string, SuiteReport> reports;
    for (const char* name :
         {"lemma3.1", "lemma3.2", "lemma3.3", "lemma4.2", "thm4.5", "stem-criterion",
          "stem-reduce"})
        reports.emplace(name, run_suite(name, corpus, 2));

    int failures = 0;
    auto report = [&failures](int n, const char* what, Outcome o) {
        std::printf("criterion %2d: %s - %s (%s)\n", n, o.pass ? "PASS" : "FAIL", what,
                    o.note.c_str());
        if (!o.pass) ++failures;
    };
    auto guarded = [](auto fn) -> Outcome {
        try {
            return fn();
        } catch (const std::exception& e) {
            return {false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "axiom validation over the whole corpus, broken star rejected",
           guarded([&] { return axioms_over_corpus(corpus); }));
    report(2, "cyclic and Klein tensor squares with method cross-checks",
           guarded([&] { return tensor_examples(corpus); }));
    report(3, "quotient-center suite has zero failures",
           guarded([&] { return quotient_center_suite(reports.at("lemma3.1")); }));
    report(4, "tensor-quotient isomorphisms and center containments",
           guarded([&] {
               return tensor_quotient_and_containments(reports.at("lemma3.2"),
                                                       reports.at("lemma3.3"));
           }));
    report(5, "isoclinism witnesses found and refuted by exhaustive search",
           guarded([&] { return isoclinism_search(corpus); }));
    report(6, "extension isoclinism witnesses verified structurally",
           guarded([&] { return extension_isoclinism(corpus, reports.at("lemma4.2")); }));
    report(7, "morphism criterion concordant with direct evaluation",
           guarded([&] { return morphism_concordance(reports.at("thm4.5")); }));
    report(8, "stem criterion concordance and stem reduction",
           guarded([&] {
               return stem_machinery(reports.at("stem-criterion"),
                                     reports.at("stem-reduce"));
           }));
    report(9, "pullback kernels and orders over all corpus pairs",
           guarded([&] { return pullback_over_corpus(corpus); }));
    report(10, "byte-identical reports across reruns and thread counts",
           guarded([&] { return determinism(dir.string()); }));

    std::error_code ec;
    fs::remove_all(dir, ec);
    if (failures) {
        std::printf("%d criteria failed\n", failures);
        return 1;
    }
    std::printf("all criteria pass\n");
    return 0;
}
