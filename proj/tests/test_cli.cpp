#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mlat/cli.hpp"
#include "mlat/suites.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = mlat::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

struct TempTree {
    fs::path root;
    TempTree() {
        static int counter = 0;
        root = fs::temp_directory_path() / ("mlat-cli-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter++));
        fs::create_directories(root);
    }
    ~TempTree() {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
    std::string file(const std::string& name, const std::string& text) const {
        fs::path p = root / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string sub(const std::string& name) const {
        fs::path p = root / name;
        fs::create_directories(p);
        return p.string();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// one shared corpus for the whole suite, written on first use
const std::string& corpus() {
    static TempTree tree;
    static std::string dir;
    if (dir.empty()) {
        dir = tree.sub("corpus");
        std::string out;
        REQUIRE(run_cli({"corpus-init", "--dir", dir}, &out) == 0);
        REQUIRE(out.find("wrote 32 files") != std::string::npos);
    }
    return dir;
}

std::string corpus_file(const std::string& name) { return corpus() + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors and help") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"validate"}) == 2);
    CHECK(run_cli({"no-such-command"}) == 2);
    std::string out;
    CHECK(run_cli({"--help"}, &out) == 0);
    CHECK(out.find("multiplicative Lie algebras") != std::string::npos);
}

TEST_CASE("corpus init writes the documented file set") {
    int files = 0;
    for (const auto& entry : fs::directory_iterator(corpus())) {
        (void)entry;
        ++files;
    }
    CHECK(files == 32);
    CHECK(fs::exists(corpus_file("d4.mla")));
    CHECK(fs::exists(corpus_file("c11.mla")));
    CHECK(fs::exists(corpus_file("q8_center.ext")));
}

TEST_CASE("validate") {
    std::string out, err;
    CHECK(run_cli({"validate", corpus_file("d4.mla")}, &out, &err) == 0);
    CHECK(out == "valid\n");
    CHECK(err.find("elapsed_ms=") != std::string::npos);

    CHECK(run_cli({"validate", corpus_file("d4_comm.mla"), "--threads", "4"}, &out) == 0);
    CHECK(out == "valid\n");

    TempTree t;
    std::string broken = t.file("broken.mla",
                                "{\"name\":\"broken\",\"order\":2,\"mul\":[[0,1],[1,0]],"
                                "\"star\":[[0,0],[0,1]]}");
    CHECK(run_cli({"validate", broken}, &out) == 1);
    CHECK(out.find("violated axiom 1 at {1}") != std::string::npos);

    CHECK(run_cli({"validate", t.file("bad.mla", "not json")}, &out, &err) == 2);
    CHECK(err.find("bad.mla") != std::string::npos);
    CHECK(run_cli({"validate", t.root.string() + "/missing.mla"}) == 2);
}

TEST_CASE("invariants") {
    std::string out;
    CHECK(run_cli({"invariants", corpus_file("d4.mla")}, &out) == 0);
    CHECK(out.find("order 8") != std::string::npos);
    CHECK(out.find("center {0,2}") != std::string::npos);
    CHECK(out.find("m_derived {0,2}") != std::string::npos);
    CHECK(out.find("trivial_star true") != std::string::npos);
}

TEST_CASE("quotient") {
    std::string out, err;
    CHECK(run_cli({"quotient", corpus_file("d4.mla"), "--ideal", "0,2"}, &out) == 0);
    CHECK(out == "order 4\n");
    CHECK(run_cli({"quotient", corpus_file("d4.mla"), "--ideal", "0,4"}, &out, &err) == 2);
    CHECK(err.find("not an ideal") != std::string::npos);
    CHECK(run_cli({"quotient", corpus_file("d4.mla"), "--ideal", "0,x"}) == 2);
}

TEST_CASE("tensor") {
    std::string out;
    CHECK(run_cli({"tensor", corpus_file("c4.mla"), "--method", "snf"}, &out) == 0);
    CHECK(out == "order 4 method snf\n");
    CHECK(run_cli({"tensor", corpus_file("d4.mla")}, &out) == 0);
    CHECK(out == "order 32 method enumeration\n");
    CHECK(run_cli({"tensor", corpus_file("d4.mla"), "--method", "snf"}) == 2);
    CHECK(run_cli({"tensor", corpus_file("d4.mla"), "--budget", "5"}) == 3);
    CHECK(run_cli({"tensor", corpus_file("c4.mla"), "--method", "fft"}) == 2);
}

TEST_CASE("isoclinic") {
    std::string out;
    CHECK(run_cli({"isoclinic", corpus_file("c4.mla"), corpus_file("v4.mla")}, &out) == 0);
    CHECK(out.find("isoclinic") == 0);
    CHECK(run_cli({"isoclinic", corpus_file("d4.mla"), corpus_file("q8.mla")}) == 0);
    CHECK(run_cli({"isoclinic", corpus_file("d4.mla"), corpus_file("c8.mla")}, &out) == 1);
    CHECK(out == "not isoclinic\n");
}

TEST_CASE("ext-isoclinic") {
    std::string out;
    CHECK(run_cli({"ext-isoclinic", corpus_file("d4_center.ext"),
                   corpus_file("q8_center.ext")},
                  &out) == 0);
    CHECK(out.find("isoclinic") == 0);
    CHECK(run_cli({"ext-isoclinic", corpus_file("d4_center.ext"),
                   corpus_file("d4_comm_center.ext")},
                  &out) == 1);
    CHECK(out == "not isoclinic\n");
}

TEST_CASE("stem-reduce") {
    std::string out;
    CHECK(run_cli({"stem-reduce", corpus_file("d4xc2_center.ext")}, &out) == 0);
    CHECK(out.find("reducing ideal {0,1}") != std::string::npos);
    CHECK(run_cli({"stem-reduce", corpus_file("d4_center.ext")}, &out) == 0);
    CHECK(out.find("reducing ideal {0}") != std::string::npos);
}

TEST_CASE("pullback") {
    std::string out;
    CHECK(run_cli({"pullback", corpus_file("d4_center.ext"), corpus_file("q8_center.ext"),
                   "--nu", "0,1,2,3"},
                  &out) == 0);
    CHECK(out.find("order 16") != std::string::npos);
    CHECK(run_cli({"pullback", corpus_file("d4_center.ext"), corpus_file("q8_center.ext"),
                   "--nu", "1,0,2,3"}) == 2);

    TempTree t;
    std::string nu_file = t.file("nu.json", "{\"image\":[0,1,2,3]}");
    CHECK(run_cli({"pullback", corpus_file("d4_center.ext"), corpus_file("d4_center.ext"),
                   "--nu", nu_file},
                  &out) == 0);
    CHECK(out.find("order 16") != std::string::npos);
}

TEST_CASE("check runs suites against a corpus") {
    std::string out;
    CHECK(run_cli({"check", "covers", "--corpus", corpus()}, &out) == 0);
    CHECK(out.find("PASS covers") != std::string::npos);
    CHECK(out.find("[pass]") != std::string::npos);

    CHECK(run_cli({"check", "no-such-suite", "--corpus", corpus()}) == 2);
}

TEST_CASE("every suite passes on the default corpus") {
    for (const std::string& name : mlat::suite_names()) {
        CAPTURE(name);
        std::string out;
        CHECK(run_cli({"check", name, "--corpus", corpus(), "--threads", "2"}, &out) == 0);
        CHECK(out.find("PASS " + name) != std::string::npos);
        CHECK(out.find("[fail]") == std::string::npos);
    }
}

TEST_CASE("check with an empty corpus passes vacuously") {
    TempTree t;
    std::string out;
    CHECK(run_cli({"check", "lemma3.1", "--corpus", t.sub("empty")}, &out) == 0);
    CHECK(out.find("vacuous") != std::string::npos);
    CHECK(out.find("PASS lemma3.1") != std::string::npos);
}

TEST_CASE("check rejects a corrupt corpus naming the file") {
    TempTree t;
    std::string dir = t.sub("corrupt");
    std::ofstream(fs::path(dir) / "bad.mla") << "not json";
    std::string err;
    CHECK(run_cli({"check", "lemma3.1", "--corpus", dir}, nullptr, &err) == 2);
    CHECK(err.find("bad.mla") != std::string::npos);
}

TEST_CASE("corpus directory comes from the environment when not given") {
    ::unsetenv("MLAT_CORPUS");
    std::string err;
    CHECK(run_cli({"check", "covers"}, nullptr, &err) == 2);
    CHECK(err.find("MLAT_CORPUS") != std::string::npos);

    ::setenv("MLAT_CORPUS", corpus().c_str(), 1);
    std::string out;
    CHECK(run_cli({"check", "covers"}, &out) == 0);
    CHECK(out.find("PASS covers") != std::string::npos);
    ::unsetenv("MLAT_CORPUS");
}

TEST_CASE("structured reports are byte-identical across runs and threads") {
    TempTree t;
    std::string p1 = t.root.string() + "/a.json";
    std::string p2 = t.root.string() + "/b.json";

    CHECK(run_cli({"validate", corpus_file("q8.mla"), "--out", p1}) == 0);
    CHECK(run_cli({"validate", corpus_file("q8.mla"), "--out", p2, "--threads", "4"}) == 0);
    std::string r1 = read_file(p1), r2 = read_file(p2);
    CHECK_FALSE(r1.empty());
    CHECK(r1 == r2);
    CHECK(r1.find("elapsed") == std::string::npos);  // timing never lands in reports

    CHECK(run_cli({"check", "lemma3.1", "--corpus", corpus(), "--out", p1}) == 0);
    CHECK(run_cli({"check", "lemma3.1", "--corpus", corpus(), "--out", p2, "--threads",
                   "4"}) == 0);
    std::string c1 = read_file(p1), c2 = read_file(p2);
    CHECK_FALSE(c1.empty());
    CHECK(c1 == c2);

    std::string out1, out2;
    CHECK(run_cli({"tensor", corpus_file("s3.mla"), "--out", p1}, &out1) == 0);
    CHECK(run_cli({"tensor", corpus_file("s3.mla"), "--out", p2}, &out2) == 0);
    CHECK(out1 == out2);
    CHECK(read_file(p1) == read_file(p2));
}

}  // TEST_SUITE
