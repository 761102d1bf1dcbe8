#include "mlat/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mlat {

std::vector<std::vector<ElementId>> cyclic_table(int n) {
    std::vector<std::vector<ElementId>> t(n, std::vector<ElementId>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<ElementId>> klein_table() {
    std::vector<std::vector<ElementId>> t(4, std::vector<ElementId>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

std::vector<std::vector<ElementId>> dihedral8_table() {
    std::vector<std::vector<ElementId>> t(8, std::vector<ElementId>(8));
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 4; ++m)
                for (int l = 0; l < 2; ++l) {
                    int rot = ((k + (j ? 4 - m : m)) % 4);
                    t[k + 4 * j][m + 4 * l] = rot + 4 * ((j + l) % 2);
                }
    return t;
}

std::vector<std::vector<ElementId>> quaternion8_table() {
    std::vector<std::vector<ElementId>> t(8, std::vector<ElementId>(8));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d) {
                    int e = (a + (b ? 4 - c : c)) % 4;
                    int f = b + d;
                    if (f == 2) {
                        e = (e + 2) % 4;  // j^2 = i^2
                        f = 0;
                    }
                    t[a + 4 * b][c + 4 * d] = e + 4 * f;
                }
    return t;
}

std::vector<std::vector<ElementId>> symmetric3_table() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
                return i;
        return -1;
    };
    std::vector<std::vector<ElementId>> t(6, std::vector<ElementId>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int comp[3];
            for (int i = 0; i < 3; ++i) comp[i] = perms[x][perms[y][i]];
            t[x][y] = find(comp);
        }
    return t;
}

std::vector<std::vector<ElementId>> modular16_table() {
    std::vector<std::vector<ElementId>> t(16, std::vector<ElementId>(16));
    for (int k = 0; k < 8; ++k)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 8; ++m)
                for (int l = 0; l < 2; ++l) {
                    int rot = (k + m * (j ? 5 : 1)) % 8;
                    t[k + 8 * j][m + 8 * l] = rot + 8 * ((j + l) % 2);
                }
    return t;
}

const FiniteMla* Corpus::find_algebra(const std::string& name) const {
    for (const auto& a : algebras)
        if (a.name == name) return &a.algebra;
    return nullptr;
}

namespace {

FiniteMla comm_variant(std::vector<std::vector<ElementId>> mul, const std::string& name) {
    auto [alg, report] = commutator_star_of_group(std::move(mul), name);
    if (!report.valid)
        throw StructureError("commutator star failed validation for " + name);
    return std::move(alg);
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) throw ParseError("cannot write " + p.string());
    f << text;
}

json extension_json(const std::string& algebra, const std::vector<int>& kernel,
                    const std::string& cover_of) {
    json j;
    j["algebra"] = algebra;
    j["kernel"] = kernel;
    if (!cover_of.empty()) j["cover_of"] = cover_of;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int write_default_corpus(const std::string& dir) {
    fs::create_directories(dir);
    int count = 0;
    auto put = [&](const std::string& stem, const FiniteMla& g) {
        write_file(fs::path(dir) / (stem + ".mla"), store_algebra(g));
        ++count;
    };

    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16})
        put("c" + std::to_string(n),
            trivial_star_of_group(cyclic_table(n), "c" + std::to_string(n)));
    put("v4", trivial_star_of_group(klein_table(), "v4"));
    {
        FiniteMla c2 = trivial_star_of_group(cyclic_table(2), "c2");
        FiniteMla c4 = trivial_star_of_group(cyclic_table(4), "c4");
        FiniteMla p = direct_product(c2, c4);
        p.set_name("c2xc4");
        put("c2xc4", p);
    }
    FiniteMla d4 = trivial_star_of_group(dihedral8_table(), "d4");
    put("d4", d4);
    put("q8", trivial_star_of_group(quaternion8_table(), "q8"));
    put("s3", trivial_star_of_group(symmetric3_table(), "s3"));
    {
        FiniteMla c2 = trivial_star_of_group(cyclic_table(2), "c2");
        FiniteMla p = direct_product(d4, c2);
        p.set_name("d4xc2");
        put("d4xc2", p);
    }
    put("d4_comm", comm_variant(dihedral8_table(), "d4_comm"));
    put("q8_comm", comm_variant(quaternion8_table(), "q8_comm"));
    put("s3_comm", comm_variant(symmetric3_table(), "s3_comm"));
    {
        FiniteMla base = comm_variant(dihedral8_table(), "d4");
        FiniteMla c2 = trivial_star_of_group(cyclic_table(2), "c2");
        FiniteMla p = direct_product(base, c2);
        p.set_name("d4xc2_comm");
        put("d4xc2_comm", p);
    }

    auto put_ext = [&](const std::string& stem, const json& j) {
        write_file(fs::path(dir) / (stem + ".ext"), j.dump(2) + "\n");
        ++count;
    };
    put_ext("c2_trivial", extension_json("c2", {0}, ""));
    put_ext("c4_mod2", extension_json("c4", {0, 2}, ""));
    put_ext("c4_cover", extension_json("c4", {0}, "c4"));
    put_ext("s3_cover", extension_json("s3", {0}, "s3"));
    put_ext("d4_center", extension_json("d4", {0, 2}, "v4"));
    put_ext("q8_center", extension_json("q8", {0, 2}, "v4"));
    put_ext("d4_comm_center", extension_json("d4_comm", {0, 2}, ""));
    put_ext("q8_comm_center", extension_json("q8_comm", {0, 2}, ""));
    put_ext("d4xc2_center", extension_json("d4xc2", {0, 1, 4, 5}, ""));
    return count;
}

FiniteMla load_algebra_file(const std::string& path) {
    const std::string text = read_file(path);  // already names the path
    try {
        FiniteMla g = load_algebra(text);
        validate_axioms(g);
        return g;
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const StructureError& e) {
        throw StructureError(path + ": " + e.what());
    }
}

CorpusExtension load_extension_file(const std::string& path,
                                    const std::string& corpus_dir) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("algebra") || !j.contains("kernel"))
        throw ParseError(path + ": extension file needs \"algebra\" and \"kernel\"");

    std::string algebra_name;
    FiniteMla g = [&]() -> FiniteMla {
        const json& a = j["algebra"];
        if (a.is_object()) {
            FiniteMla inl = load_algebra(a.dump());
            validate_axioms(inl);
            return inl;
        }
        if (!a.is_string())
            throw ParseError(path + ": \"algebra\" must be a name or an inline object");
        algebra_name = a.get<std::string>();
        const fs::path sibling =
            fs::path(path).parent_path() / (algebra_name + ".mla");
        if (fs::exists(sibling)) return load_algebra_file(sibling.string());
        if (!corpus_dir.empty()) {
            const fs::path in_corpus = fs::path(corpus_dir) / (algebra_name + ".mla");
            if (fs::exists(in_corpus)) return load_algebra_file(in_corpus.string());
        }
        throw ParseError(path + ": cannot resolve algebra \"" + algebra_name + "\"");
    }();
    if (!g.star_validated())
        throw ParseError(path + ": algebra star table violates the axioms");

    if (!j["kernel"].is_array())
        throw ParseError(path + ": \"kernel\" must be an array of element ids");
    std::vector<ElementId> kernel;
    for (const auto& v : j["kernel"]) {
        if (!v.is_number_integer())
            throw ParseError(path + ": \"kernel\" must be an array of element ids");
        const int id = v.get<int>();
        if (id < 0 || id >= g.order())
            throw ParseError(path + ": kernel id " + std::to_string(id) +
                             " out of range");
        kernel.push_back(id);
    }
    return CorpusExtension{fs::path(path).stem().string(), CentralExtension(g, kernel),
                           algebra_name, j.value("cover_of", std::string())};
}

Corpus load_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ParseError("corpus directory not found: " + dir);
    std::vector<std::string> mla_files, ext_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".mla") mla_files.push_back(entry.path().string());
        if (ext == ".ext") ext_files.push_back(entry.path().string());
    }
    std::sort(mla_files.begin(), mla_files.end());
    std::sort(ext_files.begin(), ext_files.end());

    Corpus corpus;
    for (const auto& p : mla_files) {
        try {
            FiniteMla g = load_algebra_file(p);
            if (!g.star_validated())
                throw ParseError("star table violates the axioms");
            corpus.algebras.push_back(CorpusAlgebra{fs::path(p).stem().string(),
                                                    std::move(g)});
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.find(p) == std::string::npos) msg = p + ": " + msg;
            throw ParseError(msg);
        } catch (const Error& e) {
            throw ParseError(p + ": " + e.what());
        }
    }
    for (const auto& p : ext_files) {
        try {
            corpus.extensions.push_back(load_extension_file(p, dir));
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.find(p) == std::string::npos) msg = p + ": " + msg;
            throw ParseError(msg);
        } catch (const Error& e) {
            throw ParseError(p + ": " + e.what());
        }
    }
    return corpus;
}

}  // namespace mlat
