#include "mlat/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <thread>

#include "mlat/tensor.hpp"

namespace mlat {

namespace {

std::string id_list(const std::vector<ElementId>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string yesno(bool b) { return b ? "true" : "false"; }

struct Job {
    std::string id;
    std::function<void(SuiteCase&)> fn;
};

// Evaluates jobs independently and reassembles results in build order, so
// the report is the same for any thread count. Budget and precondition
// escapes become case statuses; anything else structural is a failure.
std::vector<SuiteCase> run_jobs(const std::vector<Job>& jobs, int threads) {
    std::vector<SuiteCase> out(jobs.size());
    auto eval = [&](std::size_t k) {
        SuiteCase c;
        c.id = jobs[k].id;
        c.status = "pass";
        try {
            jobs[k].fn(c);
        } catch (const BudgetExceeded& ex) {
            c.status = "budget-exceeded";
            c.detail = ex.what();
        } catch (const PreconditionError& ex) {
            c.status = "not-applicable";
            c.detail = ex.what();
        } catch (const Error& ex) {
            c.status = "fail";
            c.detail = ex.what();
        }
        out[k] = std::move(c);
    };
    if (threads <= 1 || jobs.size() <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) eval(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nt = std::min<int>(threads, static_cast<int>(jobs.size()));
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= jobs.size()) return;
                    eval(k);
                }
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

SuiteReport assemble(std::string suite, const std::vector<Job>& jobs, int threads) {
    SuiteReport rep;
    rep.suite = std::move(suite);
    rep.cases = run_jobs(jobs, threads);
    if (rep.cases.empty())
        rep.warnings.push_back("vacuous: no applicable cases");
    return rep;
}

// Quotient centers: for each ideal meeting the relevant derived ideal
// trivially, the quotient's center is the center's image.
std::vector<Job> quotient_center_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        if (ca.algebra.order() > 8) continue;
        for (const auto& ideal : enumerate_ideals(ca.algebra)) {
            const FiniteMla* g = &ca.algebra;
            std::vector<ElementId> ids = ideal.members();
            jobs.push_back({ca.name + " I=" + id_list(ids), [g, ids](SuiteCase& c) {
                                auto r = check_quotient_center_images(*g, SubSet(*g, ids));
                                bool any_held = false;
                                for (const auto& cl : r.clauses) {
                                    if (!c.detail.empty()) c.detail += " ";
                                    c.detail += cl.center +
                                                (cl.held ? (cl.verified ? ":ok" : ":FAIL")
                                                         : ":n/a");
                                    any_held = any_held || cl.held;
                                }
                                if (!any_held)
                                    c.status = "not-applicable";
                                else if (!r.all_held_verified())
                                    c.status = "fail";
                            }});
        }
    }
    return jobs;
}

// Tensor square of a quotient vs quotient of the tensor square.
std::vector<Job> tensor_quotient_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        if (ca.algebra.order() > 6) continue;
        for (const auto& ideal : enumerate_ideals(ca.algebra)) {
            const FiniteMla* g = &ca.algebra;
            std::vector<ElementId> ids = ideal.members();
            jobs.push_back({ca.name + " I=" + id_list(ids), [g, ids](SuiteCase& c) {
                                auto r = check_tensor_quotient_iso(*g, SubSet(*g, ids));
                                c.detail = "orders " + std::to_string(r.left_order) + "/" +
                                           std::to_string(r.right_order);
                                if (!r.found) c.status = "fail";
                            }});
        }
    }
    return jobs;
}

// Center pair ideals sit inside the corresponding tensor centers.
std::vector<Job> center_containment_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        const FiniteMla* g = &ca.algebra;
        jobs.push_back({ca.name, [g](SuiteCase& c) {
                            auto r = check_center_containments(*g);
                            for (const auto& cl : r.clauses) {
                                if (!c.detail.empty()) c.detail += "; ";
                                c.detail += cl.center + " " +
                                            std::to_string(cl.pair_ideal_size) + "/" +
                                            std::to_string(cl.center_size) +
                                            (cl.contained ? (cl.equal ? " equal" : " strict")
                                                          : " NOT CONTAINED");
                            }
                            if (!r.all_contained()) c.status = "fail";
                        }});
    }
    return jobs;
}

// Capability transfer: when the tensor center equals the center's pair
// ideal, the tensor square is a central quotient of a tensor square.
std::vector<Job> capability_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        const FiniteMla* g = &ca.algebra;
        jobs.push_back({ca.name, [g](SuiteCase& c) {
                            auto r = check_capability_condition(*g);
                            if (!r.premise_held) {
                                c.status = "not-applicable";
                                c.detail = "premise does not hold";
                                return;
                            }
                            c.detail = "quotient tensor order " +
                                       std::to_string(r.quotient_tensor_order);
                            if (!r.verified) c.status = "fail";
                        }});
    }
    return jobs;
}

// Isoclinic pairs with matching tensor centers have isoclinic tensors.
std::vector<Job> tensor_isoclinism_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < corpus.algebras.size(); ++i) {
        if (corpus.algebras[i].algebra.order() > 8) continue;
        for (std::size_t j = i + 1; j < corpus.algebras.size(); ++j) {
            if (corpus.algebras[j].algebra.order() > 8) continue;
            const FiniteMla* a = &corpus.algebras[i].algebra;
            const FiniteMla* b = &corpus.algebras[j].algebra;
            jobs.push_back({corpus.algebras[i].name + " ~ " + corpus.algebras[j].name,
                            [a, b](SuiteCase& c) {
                                if (!find_isoclinism(*a, *b)) {
                                    c.status = "not-applicable";
                                    c.detail = "not isoclinic";
                                    return;
                                }
                                auto r = check_tensor_isoclinism(*a, *b);
                                if (!r.applicable()) {
                                    c.status = "not-applicable";
                                    c.detail = std::string("center equality fails: ") +
                                               (r.centers_match1 ? "" : "left ") +
                                               (r.centers_match2 ? "" : "right");
                                    return;
                                }
                                c.detail = "tensor squares isoclinic: " + yesno(r.verified);
                                if (!r.verified) c.status = "fail";
                            }});
        }
    }
    return jobs;
}

// Every found extension witness must satisfy its structural consequences;
// stem pairs must additionally have isomorphic kernels.
std::vector<Job> extension_witness_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < corpus.extensions.size(); ++i)
        for (std::size_t j = i; j < corpus.extensions.size(); ++j) {
            const CentralExtension* a = &corpus.extensions[i].extension;
            const CentralExtension* b = &corpus.extensions[j].extension;
            jobs.push_back({corpus.extensions[i].name + " ~ " + corpus.extensions[j].name,
                            [a, b](SuiteCase& c) {
                                auto w = find_extension_isoclinism(*a, *b);
                                if (!w) {
                                    c.status = "not-applicable";
                                    c.detail = "no witness";
                                    return;
                                }
                                auto pr = verify_witness_properties(*a, *b, *w);
                                bool ok = pr.all();
                                c.detail = std::string("beta:") + yesno(pr.beta_square) +
                                           " pairing:" + yesno(pr.mixed_pairing) +
                                           " slice:" + yesno(pr.kernel_slice) +
                                           " induced:" + yesno(pr.induced_algebra_witness) +
                                           " center-iff:" + yesno(pr.center_biconditional);
                                if (is_stem(*a) && is_stem(*b)) {
                                    auto k1 = restrict_to_subalgebra(a->total(), a->kernel_subset());
                                    auto k2 = restrict_to_subalgebra(b->total(), b->kernel_subset());
                                    bool kiso =
                                        !find_isomorphisms(k1.algebra, k2.algebra, 1).empty();
                                    c.detail += std::string(" stem-kernels-isomorphic:") +
                                                yesno(kiso);
                                    ok = ok && kiso;
                                }
                                for (const auto& f : pr.findings) c.detail += "; " + f;
                                if (!ok) c.status = "fail";
                            }});
        }
    return jobs;
}

// Constructed-morphism corpus for the criterion/direct concordance: the
// identity on each extension, the collapse by every ideal of each total,
// and the embedding into the product with a two-element factor.
struct MorphismCase {
    std::string id;
    CentralExtension e1;
    CentralExtension e2;
    ExtensionMorphism m;
};

MorphismCase identity_case(const CorpusExtension& ce) {
    MorphismCase mc{"identity " + ce.name, ce.extension, ce.extension, {}};
    auto iota_of = [](std::size_t n) {
        std::vector<ElementId> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<ElementId>(i);
        return v;
    };
    mc.m.kernel_map = iota_of(ce.extension.kernel().size());
    mc.m.total_map = iota_of(ce.extension.total().order());
    mc.m.quot_map = iota_of(ce.extension.quot().order());
    return mc;
}

MorphismCase collapse_case(const CorpusExtension& ce, const std::vector<ElementId>& nids) {
    const CentralExtension& e1 = ce.extension;
    const FiniteMla& g = e1.total();
    Quotient q = quotient(g, SubSet(g, nids));
    std::vector<ElementId> k2;
    for (ElementId h : e1.kernel()) k2.push_back(q.projection[h]);
    std::sort(k2.begin(), k2.end());
    k2.erase(std::unique(k2.begin(), k2.end()), k2.end());
    MorphismCase mc{"collapse " + ce.name + " by " + id_list(nids), e1,
                    CentralExtension(q.algebra, k2), {}};
    mc.m.total_map = q.projection;
    mc.m.quot_map.assign(e1.quot().order(), -1);
    const auto& b1 = e1.projection();
    for (ElementId x = 0; x < g.order(); ++x)
        if (mc.m.quot_map[b1[x]] < 0)
            mc.m.quot_map[b1[x]] = mc.e2.projection()[q.projection[x]];
    mc.m.kernel_map.resize(e1.kernel().size());
    for (std::size_t i = 0; i < e1.kernel().size(); ++i) {
        ElementId im = q.projection[e1.kernel()[i]];
        auto it = std::lower_bound(mc.e2.kernel().begin(), mc.e2.kernel().end(), im);
        mc.m.kernel_map[i] = static_cast<ElementId>(it - mc.e2.kernel().begin());
    }
    return mc;
}

MorphismCase embed_case(const CorpusExtension& ce) {
    const CentralExtension& e1 = ce.extension;
    const FiniteMla& g = e1.total();
    std::vector<std::vector<ElementId>> two{{0, 1}, {1, 0}};
    FiniteMla big = direct_product(g, trivial_star_of_group(two, "c2"));
    big.set_name(g.name() + "xc2");
    std::vector<ElementId> k2;
    for (ElementId h : e1.kernel()) {
        k2.push_back(2 * h);
        k2.push_back(2 * h + 1);
    }
    MorphismCase mc{"embed " + ce.name, e1, CentralExtension(big, k2), {}};
    mc.m.total_map.resize(g.order());
    for (ElementId a = 0; a < g.order(); ++a) mc.m.total_map[a] = 2 * a;
    mc.m.quot_map.assign(e1.quot().order(), -1);
    const auto& b1 = e1.projection();
    for (ElementId x = 0; x < g.order(); ++x)
        if (mc.m.quot_map[b1[x]] < 0)
            mc.m.quot_map[b1[x]] = mc.e2.projection()[2 * x];
    mc.m.kernel_map.resize(e1.kernel().size());
    for (std::size_t i = 0; i < e1.kernel().size(); ++i) {
        auto it = std::lower_bound(mc.e2.kernel().begin(), mc.e2.kernel().end(),
                                   2 * e1.kernel()[i]);
        mc.m.kernel_map[i] = static_cast<ElementId>(it - mc.e2.kernel().begin());
    }
    return mc;
}

std::vector<Job> morphism_concordance_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    auto add = [&jobs](MorphismCase&& built) {
        auto mc = std::make_shared<MorphismCase>(std::move(built));
        jobs.push_back({mc->id, [mc](SuiteCase& c) {
                            IsoclinicMorphismReport r;
                            try {
                                r = is_isoclinic_morphism(mc->e1, mc->e2, mc->m);
                            } catch (const NotAMorphism& ex) {
                                c.status = "fail";
                                c.detail = ex.what();
                                return;
                            }
                            c.detail = "criterion=" + yesno(r.criterion);
                            if (!r.criterion) c.detail += "(" + r.criterion_reason + ")";
                            c.detail += " direct=" + yesno(r.direct);
                            if (r.criterion && r.direct)
                                c.detail += " covers=" + yesno(r.image_kernel_covers);
                            for (const auto& f : r.findings) c.detail += "; " + f;
                            if (!r.concordant || (r.criterion && !r.image_kernel_covers))
                                c.status = "fail";
                        }});
    };
    for (const auto& ce : corpus.extensions) add(identity_case(ce));
    for (const auto& ce : corpus.extensions)
        for (const auto& n : enumerate_ideals(ce.extension.total()))
            add(collapse_case(ce, n.members()));
    for (const auto& ce : corpus.extensions) add(embed_case(ce));
    return jobs;
}

// All central kernels of g: the subalgebras of the joint center, lifted
// back to parent ids. In the joint center every subgroup qualifies.
std::vector<std::vector<ElementId>> central_kernels(const FiniteMla& g) {
    RestrictedAlgebra rz = restrict_to_subalgebra(g, joint_center(g));
    std::vector<std::vector<ElementId>> out;
    for (const auto& s : enumerate_ideals(rz.algebra)) {
        std::vector<ElementId> up;
        up.reserve(s.members().size());
        for (ElementId x : s.members()) up.push_back(rz.members[x]);
        std::sort(up.begin(), up.end());
        out.push_back(std::move(up));
    }
    return out;
}

// The ideal-lattice form of the stem test agrees with the containment form.
std::vector<Job> stem_criterion_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        if (ca.algebra.order() > 16) continue;
        for (auto& kernel : central_kernels(ca.algebra)) {
            const FiniteMla* g = &ca.algebra;
            jobs.push_back({ca.name + " H=" + id_list(kernel),
                            [g, kernel](SuiteCase& c) {
                                CentralExtension e = make_extension(*g, kernel);
                                auto sc = stem_criterion(e);
                                bool st = is_stem(e);
                                c.detail = "criterion=" + yesno(sc.holds) +
                                           " stem=" + yesno(st);
                                if (sc.witness_ideal)
                                    c.detail += " witness=" + id_list(*sc.witness_ideal);
                                if (sc.holds != st) {
                                    c.detail += " (divergence finding)";
                                    c.status = "fail";
                                }
                            }});
        }
    }
    return jobs;
}

// Reduction to a stem extension: result is stem and isoclinic to the input.
std::vector<Job> stem_reduce_jobs(const Corpus& corpus) {
    std::vector<Job> jobs;
    for (const auto& ca : corpus.algebras) {
        if (ca.algebra.order() > 16) continue;
        for (auto& kernel : central_kernels(ca.algebra)) {
            const FiniteMla* g = &ca.algebra;
            jobs.push_back({ca.name + " H=" + id_list(kernel),
                            [g, kernel](SuiteCase& c) {
                                auto r = stem_reduce(make_extension(*g, kernel));
                                c.detail = "J=" + id_list(r.reducing_ideal) +
                                           " reduced kernel " + id_list(r.reduced.kernel());
                                for (const auto& f : r.findings) c.detail += "; " + f;
                                if (!r.reduced_is_stem || !r.witness || !r.findings.empty())
                                    c.status = "fail";
                            }});
        }
    }
    return jobs;
}

// Supplied covers of the same base: mutually isoclinic with isomorphic
// kernels.
std::vector<Job> cover_jobs(const Corpus& corpus) {
    std::map<std::string, std::vector<const CorpusExtension*>> groups;
    for (const auto& ce : corpus.extensions)
        if (!ce.cover_of.empty()) groups[ce.cover_of].push_back(&ce);
    std::vector<Job> jobs;
    for (const auto& [tag, members] : groups)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i; j < members.size(); ++j) {
                const CorpusExtension* a = members[i];
                const CorpusExtension* b = members[j];
                jobs.push_back({tag + ": " + a->name + " ~ " + b->name,
                                [a, b](SuiteCase& c) {
                                    if (!is_stem(a->extension) || !is_stem(b->extension)) {
                                        c.status = "not-applicable";
                                        c.detail = "tagged cover is not stem";
                                        return;
                                    }
                                    auto w = find_extension_isoclinism(a->extension,
                                                                       b->extension);
                                    if (!w) {
                                        c.status = "fail";
                                        c.detail = "no witness found";
                                        return;
                                    }
                                    auto pr = verify_witness_properties(a->extension,
                                                                        b->extension, *w);
                                    auto k1 = restrict_to_subalgebra(
                                        a->extension.total(), a->extension.kernel_subset());
                                    auto k2 = restrict_to_subalgebra(
                                        b->extension.total(), b->extension.kernel_subset());
                                    bool kiso =
                                        !find_isomorphisms(k1.algebra, k2.algebra, 1).empty();
                                    c.detail = std::string("witness verified:") +
                                               yesno(pr.all()) +
                                               " kernels isomorphic:" + yesno(kiso);
                                    if (!pr.all() || !kiso) c.status = "fail";
                                }});
            }
    return jobs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lemma3.1",       "lemma3.2",    "lemma3.3", "prop3.6", "prop3.8",
        "lemma4.2",       "thm4.5",      "stem-criterion",
        "stem-reduce",    "covers"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Corpus& corpus, int threads) {
    std::vector<Job> jobs;
    if (name == "lemma3.1")
        jobs = quotient_center_jobs(corpus);
    else if (name == "lemma3.2")
        jobs = tensor_quotient_jobs(corpus);
    else if (name == "lemma3.3")
        jobs = center_containment_jobs(corpus);
    else if (name == "prop3.6")
        jobs = capability_jobs(corpus);
    else if (name == "prop3.8")
        jobs = tensor_isoclinism_jobs(corpus);
    else if (name == "lemma4.2")
        jobs = extension_witness_jobs(corpus);
    else if (name == "thm4.5")
        jobs = morphism_concordance_jobs(corpus);
    else if (name == "stem-criterion")
        jobs = stem_criterion_jobs(corpus);
    else if (name == "stem-reduce")
        jobs = stem_reduce_jobs(corpus);
    else if (name == "covers")
        jobs = cover_jobs(corpus);
    else
        throw PreconditionError("unknown suite: " + name);
    return assemble(name, jobs, threads);
}

}  // namespace mlat
