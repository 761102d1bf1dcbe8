#include "mlat/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlat/suites.hpp"
#include "mlat/tensor.hpp"

namespace mlat {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << text;
}

void emit(const std::string& outpath, const json& report) {
    if (!outpath.empty()) write_text(outpath, report.dump(2) + "\n");
}

std::string id_list(const std::vector<ElementId>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<ElementId> parse_id_list(const std::string& text) {
    std::vector<ElementId> ids;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            ids.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw ParseError("bad id '" + cur + "' in list");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    flush();
    return ids;
}

// A map argument is an inline comma list of target ids, or a path to a JSON
// file carrying an "image" array.
std::vector<ElementId> parse_map_arg(const std::string& arg) {
    if (arg.find_first_not_of("0123456789, ") == std::string::npos && !arg.empty())
        return parse_id_list(arg);
    json j;
    try {
        j = json::parse(slurp(arg));
    } catch (const json::exception& ex) {
        throw ParseError(arg + ": " + ex.what());
    }
    if (!j.is_object() || !j.contains("image") || !j["image"].is_array())
        throw ParseError(arg + ": expected an object with an \"image\" array");
    std::vector<ElementId> image;
    for (const auto& v : j["image"]) {
        if (!v.is_number_integer()) throw ParseError(arg + ": image entries must be ids");
        image.push_back(v.get<int>());
    }
    return image;
}

json algebra_json(const FiniteMla& g) { return json::parse(store_algebra(g)); }

// Loads an algebra file for commands that need a valid star; naming the
// violated identity beats a bare refusal.
FiniteMla load_valid_algebra(const std::string& path) {
    FiniteMla g = load_algebra_file(path);
    if (g.star_known_invalid()) {
        ValidationReport r = validate_axioms(g);
        std::string axioms;
        for (const auto& v : r.violations) {
            if (!axioms.empty()) axioms += ",";
            axioms += v.axiom;
        }
        throw PreconditionError(path + ": star violates identity " + axioms);
    }
    return g;
}

int do_validate(const std::string& file, int threads, const std::string& outpath,
                std::ostream& out) {
    FiniteMla g = load_algebra_file(file);
    ValidationReport r = validate_axioms(g, threads);
    json rep;
    rep["command"] = "validate";
    rep["algebra"] = g.name();
    rep["order"] = g.order();
    rep["valid"] = r.valid;
    rep["violations"] = json::array();
    for (const auto& v : r.violations)
        rep["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    emit(outpath, rep);
    if (r.valid) {
        out << "valid\n";
        return 0;
    }
    for (const auto& v : r.violations)
        out << "violated axiom " << v.axiom << " at " << id_list(v.witness) << "\n";
    return 1;
}

int do_invariants(const std::string& file, const std::string& outpath, std::ostream& out) {
    FiniteMla g = load_valid_algebra(file);
    SubSet z = group_center(g), lz = lie_center(g), jz = joint_center(g);
    SubSet sd = star_derived(g), cd = commutator_derived(g), md = m_derived(g);
    Fingerprint fp = fingerprint(g);
    json rep;
    rep["command"] = "invariants";
    rep["algebra"] = g.name();
    rep["order"] = g.order();
    rep["abelian"] = g.is_abelian();
    rep["trivial_star"] = g.has_trivial_star();
    rep["center"] = z.members();
    rep["lie_center"] = lz.members();
    rep["joint_center"] = jz.members();
    rep["star_derived"] = sd.members();
    rep["commutator_derived"] = cd.members();
    rep["m_derived"] = md.members();
    json fpj;
    fpj["elements"] = json::array();
    for (const auto& e : fp.elements) fpj["elements"].push_back({e[0], e[1], e[2]});
    fpj["center_size"] = fp.center_size;
    fpj["lie_center_size"] = fp.lie_center_size;
    fpj["star_derived_size"] = fp.star_derived_size;
    fpj["commutator_derived_size"] = fp.commutator_derived_size;
    rep["fingerprint"] = fpj;
    emit(outpath, rep);
    out << "name " << g.name() << "\n"
        << "order " << g.order() << "\n"
        << "abelian " << (g.is_abelian() ? "true" : "false") << "\n"
        << "trivial_star " << (g.has_trivial_star() ? "true" : "false") << "\n"
        << "center " << id_list(z.members()) << "\n"
        << "lie_center " << id_list(lz.members()) << "\n"
        << "joint_center " << id_list(jz.members()) << "\n"
        << "star_derived " << id_list(sd.members()) << "\n"
        << "commutator_derived " << id_list(cd.members()) << "\n"
        << "m_derived " << id_list(md.members()) << "\n";
    return 0;
}

int do_quotient(const std::string& file, const std::string& ideal_arg,
                const std::string& outpath, std::ostream& out) {
    FiniteMla g = load_valid_algebra(file);
    SubSet ideal(g, parse_id_list(ideal_arg));
    if (!ideal.is_ideal())
        throw NotAnIdeal(id_list(ideal.members()) + " is not an ideal of " + g.name());
    Quotient q = quotient(g, ideal);
    json rep;
    rep["command"] = "quotient";
    rep["algebra"] = g.name();
    rep["ideal"] = ideal.members();
    rep["order"] = q.algebra.order();
    rep["projection"] = q.projection;
    rep["result"] = algebra_json(q.algebra);
    emit(outpath, rep);
    out << "order " << q.algebra.order() << "\n";
    return 0;
}

TensorMethod parse_method(const std::string& name) {
    if (name == "auto") return TensorMethod::automatic;
    if (name == "snf") return TensorMethod::snf;
    return TensorMethod::enumeration;
}

int do_tensor(const std::string& file, const std::string& method, int budget,
              const std::string& outpath, std::ostream& out) {
    FiniteMla g = load_valid_algebra(file);
    TensorSquare t = tensor_square(g, parse_method(method), budget);
    json rep;
    rep["command"] = "tensor";
    rep["base"] = g.name();
    rep["method"] = t.method;
    rep["order"] = t.algebra->order();
    rep["gen_map"] = t.gen_map;
    rep["result"] = algebra_json(*t.algebra);
    emit(outpath, rep);
    out << "order " << t.algebra->order() << " method " << t.method << "\n";
    return 0;
}

int do_isoclinic(const std::string& file1, const std::string& file2,
                 const std::string& outpath, std::ostream& out) {
    FiniteMla a = load_valid_algebra(file1);
    FiniteMla b = load_valid_algebra(file2);
    auto w = find_isoclinism(a, b);
    json rep;
    rep["command"] = "isoclinic";
    rep["algebras"] = {a.name(), b.name()};
    rep["isoclinic"] = w.has_value();
    if (w) {
        rep["witness"] = {{"lambda", w->lambda},
                          {"mu", w->mu},
                          {"top_order", w->top1->order()},
                          {"derived_order", w->der1->order()}};
    }
    emit(outpath, rep);
    out << (w ? "isoclinic\n" : "not isoclinic\n");
    return w ? 0 : 1;
}

int do_ext_isoclinic(const std::string& file1, const std::string& file2,
                     const std::string& corpus_dir, const std::string& outpath,
                     std::ostream& out) {
    CorpusExtension a = load_extension_file(file1, corpus_dir);
    CorpusExtension b = load_extension_file(file2, corpus_dir);
    auto w = find_extension_isoclinism(a.extension, b.extension);
    json rep;
    rep["command"] = "ext-isoclinic";
    rep["extensions"] = {a.name, b.name};
    rep["isoclinic"] = w.has_value();
    if (!w) {
        emit(outpath, rep);
        out << "not isoclinic\n";
        return 1;
    }
    auto pr = verify_witness_properties(a.extension, b.extension, *w);
    rep["lambda"] = w->lambda;
    rep["mu"] = w->mu;
    rep["checks"] = {{"beta_square", pr.beta_square},
                     {"mixed_pairing", pr.mixed_pairing},
                     {"kernel_slice", pr.kernel_slice},
                     {"induced_algebra_witness", pr.induced_algebra_witness},
                     {"center_biconditional", pr.center_biconditional},
                     {"all", pr.all()}};
    rep["findings"] = pr.findings;
    emit(outpath, rep);
    out << "isoclinic\n"
        << "witness checks " << (pr.all() ? "passed" : "FAILED") << "\n";
    return pr.all() ? 0 : 1;
}

int do_stem_reduce(const std::string& file, const std::string& corpus_dir,
                   const std::string& outpath, std::ostream& out) {
    CorpusExtension ce = load_extension_file(file, corpus_dir);
    StemReduceResult r = stem_reduce(ce.extension);
    json rep;
    rep["command"] = "stem-reduce";
    rep["extension"] = ce.name;
    rep["reducing_ideal"] = r.reducing_ideal;
    rep["reduced_kernel"] = r.reduced.kernel();
    rep["reduced_total_order"] = r.reduced.total().order();
    rep["is_stem"] = r.reduced_is_stem;
    rep["witness_found"] = r.witness.has_value();
    rep["findings"] = r.findings;
    emit(outpath, rep);
    out << "reducing ideal " << id_list(r.reducing_ideal) << "\n"
        << "reduced kernel " << id_list(r.reduced.kernel()) << "\n"
        << "reduced total order " << r.reduced.total().order() << "\n"
        << "stem " << (r.reduced_is_stem ? "true" : "false") << "\n"
        << "witness " << (r.witness ? "found" : "missing") << "\n";
    for (const auto& f : r.findings) out << "finding: " << f << "\n";
    bool ok = r.reduced_is_stem && r.witness.has_value() && r.findings.empty();
    return ok ? 0 : 1;
}

int do_pullback(const std::string& file1, const std::string& file2, const std::string& nu_arg,
                const std::string& corpus_dir, const std::string& outpath, std::ostream& out) {
    CorpusExtension a = load_extension_file(file1, corpus_dir);
    CorpusExtension b = load_extension_file(file2, corpus_dir);
    std::vector<ElementId> nu = parse_map_arg(nu_arg);
    CentralExtension pb = pullback_extension(a.extension, b.extension, nu);
    json rep;
    rep["command"] = "pullback";
    rep["extensions"] = {a.name, b.name};
    rep["order"] = pb.total().order();
    rep["kernel"] = pb.kernel();
    rep["quotient_order"] = pb.quot().order();
    rep["result"] = algebra_json(pb.total());
    emit(outpath, rep);
    out << "order " << pb.total().order() << "\n"
        << "kernel " << id_list(pb.kernel()) << "\n";
    return 0;
}

int do_check(const std::string& suite, const std::string& corpus_dir, int threads,
             const std::string& outpath, std::ostream& out) {
    if (corpus_dir.empty())
        throw ParseError("no corpus directory given (use --corpus or MLAT_CORPUS)");
    Corpus corpus = load_corpus(corpus_dir);
    SuiteReport rep = run_suite(suite, corpus, threads);
    json j;
    j["command"] = "check";
    j["suite"] = rep.suite;
    j["passed"] = rep.passed();
    j["cases"] = json::array();
    int npass = 0;
    for (const auto& c : rep.cases) {
        j["cases"].push_back({{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
        if (c.status == "pass") ++npass;
    }
    j["warnings"] = rep.warnings;
    emit(outpath, j);
    for (const auto& c : rep.cases) {
        out << "[" << c.status << "] " << c.id;
        if (!c.detail.empty()) out << " : " << c.detail;
        out << "\n";
    }
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    out << (rep.passed() ? "PASS" : "FAIL") << " " << rep.suite << " (" << npass << "/"
        << rep.cases.size() << " cases pass)\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for finite multiplicative Lie algebras"};
    app.require_subcommand(1);

    std::string file1, file2, outpath, ideal_arg, nu_arg;
    std::string method = "auto";
    std::string corpus_dir, suite, init_dir;
    int threads = 1;
    int budget = kDefaultBudget;

    auto* validate = app.add_subcommand("validate", "check the defining identities");
    validate->add_option("file", file1, "algebra file")->required();
    validate->add_option("--threads", threads, "worker threads");
    validate->add_option("--out", outpath, "structured report file");

    auto* invariants = app.add_subcommand("invariants", "centers, derived ideals, fingerprint");
    invariants->add_option("file", file1, "algebra file")->required();
    invariants->add_option("--out", outpath, "structured report file");

    auto* quot = app.add_subcommand("quotient", "quotient by an ideal");
    quot->add_option("file", file1, "algebra file")->required();
    quot->add_option("--ideal", ideal_arg, "comma-separated ideal ids")->required();
    quot->add_option("--out", outpath, "structured report file");

    auto* tensor = app.add_subcommand("tensor", "tensor square");
    tensor->add_option("file", file1, "algebra file")->required();
    tensor->add_option("--method", method, "auto|snf|enumeration")
        ->check(CLI::IsMember({"auto", "snf", "enumeration"}));
    tensor->add_option("--budget", budget, "coset row budget");
    tensor->add_option("--out", outpath, "structured report file");

    auto* iso = app.add_subcommand("isoclinic", "decide isoclinism of two algebras");
    iso->add_option("a", file1, "first algebra file")->required();
    iso->add_option("b", file2, "second algebra file")->required();
    iso->add_option("--out", outpath, "structured report file");

    auto* extiso = app.add_subcommand("ext-isoclinic", "decide isoclinism of two extensions");
    extiso->add_option("a", file1, "first extension file")->required();
    extiso->add_option("b", file2, "second extension file")->required();
    extiso->add_option("--corpus", corpus_dir, "corpus directory for named algebras")
        ->envname("MLAT_CORPUS");
    extiso->add_option("--out", outpath, "structured report file");

    auto* stem = app.add_subcommand("stem-reduce", "reduce an extension to a stem one");
    stem->add_option("file", file1, "extension file")->required();
    stem->add_option("--corpus", corpus_dir, "corpus directory for named algebras")
        ->envname("MLAT_CORPUS");
    stem->add_option("--out", outpath, "structured report file");

    auto* pull = app.add_subcommand("pullback", "fibered product of two extensions");
    pull->add_option("a", file1, "first extension file")->required();
    pull->add_option("b", file2, "second extension file")->required();
    pull->add_option("--nu", nu_arg, "quotient map: comma list or JSON file with \"image\"")
        ->required();
    pull->add_option("--corpus", corpus_dir, "corpus directory for named algebras")
        ->envname("MLAT_CORPUS");
    pull->add_option("--out", outpath, "structured report file");

    auto* check = app.add_subcommand("check", "run a verification suite over a corpus");
    check->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    check->add_option("--corpus", corpus_dir, "corpus directory")->envname("MLAT_CORPUS");
    check->add_option("--threads", threads, "worker threads");
    check->add_option("--out", outpath, "structured report file");

    auto* init = app.add_subcommand("corpus-init", "write the default corpus");
    init->add_option("--dir", init_dir, "target directory")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mlat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (validate->parsed())
            code = do_validate(file1, threads, outpath, out);
        else if (invariants->parsed())
            code = do_invariants(file1, outpath, out);
        else if (quot->parsed())
            code = do_quotient(file1, ideal_arg, outpath, out);
        else if (tensor->parsed())
            code = do_tensor(file1, method, budget, outpath, out);
        else if (iso->parsed())
            code = do_isoclinic(file1, file2, outpath, out);
        else if (extiso->parsed())
            code = do_ext_isoclinic(file1, file2, corpus_dir, outpath, out);
        else if (stem->parsed())
            code = do_stem_reduce(file1, corpus_dir, outpath, out);
        else if (pull->parsed())
            code = do_pullback(file1, file2, nu_arg, corpus_dir, outpath, out);
        else if (check->parsed())
            code = do_check(suite, corpus_dir, threads, outpath, out);
        else if (init->parsed()) {
            int n = write_default_corpus(init_dir);
            out << "wrote " << n << " files to " << init_dir << "\n";
        }
    } catch (const BudgetExceeded& ex) {
        err << "budget: " << ex.what() << "\n";
        code = 3;
    } catch (const AxiomFailure& ex) {
        err << "axiom failure: " << ex.what() << "\n";
        code = 1;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        code = 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    err << "elapsed_ms=" << ms << "\n";
    return code;
}

}  // namespace mlat
