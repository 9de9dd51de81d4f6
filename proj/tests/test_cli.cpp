#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eil/cli.hpp"
#include "eil/report.hpp"

using namespace eil;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "eil_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    const auto path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string wk3_edges = "x1 x2\nx1 x3\nx2 x3\nx1 z1\nx2 z2\nx3 z3\n";

}  // namespace

TEST_CASE("alpha2") {
    const auto file = write_file("wk3.txt", wk3_edges);
    auto r = run({"alpha2", "--edge-list", file.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "alpha2=3 centers={z1,z2,z3}\n");

    r = run({"alpha2", "--graph6", "C?"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("alpha2=4", 0) == 0);

    r = run({"alpha2", "--graph6", "A_", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"alpha2\": 1") != std::string::npos);

    r = run({"alpha2", "--graph6", "!!"});
    CHECK(r.code == 2);
    CHECK(r.err.find("graph6") != std::string::npos);

    CHECK(run({"alpha2"}).code == 2);
    CHECK(run({"alpha2", "--graph6", "A_", "--input", "-"}).code == 2);
}

TEST_CASE("depth") {
    auto r = run({"depth", "--graph6", "Ch", "--power", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("depth=2 bound=2 slack=0", 0) == 0);

    r = run({"depth", "--graph6", "A_", "--power", "1"});
    CHECK(r.out.rfind("depth=2 bound=2", 0) == 0);

    r = run({"depth", "--graph6", "Bw", "--symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out.find(" bound=1 ") != std::string::npos);

    r = run({"depth", "--graph6", "Ch", "--field", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("field_char=2") != std::string::npos);
    CHECK(r.out.find("field_char=0") != std::string::npos);

    CHECK(run({"depth", "--graph6", "Ch", "--power", "3"}).code == 2);
    CHECK(run({"depth", "--graph6", "Ch", "--power", "1", "--symbolic"}).code == 2);
    CHECK(run({"depth", "--graph6", "B?"}).code == 2);
    CHECK(run({"depth", "--graph6", "Ch", "--field", "7"}).code == 2);
    r = run({"depth", "--graph6", "Ch", "--ambient-cap", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("warning") != std::string::npos);

    const auto betti = scratch_dir() / "betti.csv";
    r = run({"depth", "--graph6", "A_", "--power", "1", "--betti", betti.string()});
    CHECK(r.code == 0);
    CHECK(read_file(betti) == "i,size,mask,rank\n0,0,0,1\n1,2,3,1\n");
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "examples"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("holds=9 fails=0", 0) == 0);

    r = run({"verify", "--suite", "main", "--max-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fails=0") != std::string::npos);

    r = run({"verify", "--suite", "main", "--input", "-"}, "A_\nBw\n!!!\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    CHECK(run({"verify", "--suite", "nope", "--max-n", "3"}).code == 2);
    CHECK(run({"verify", "--suite", "main"}).code == 2);

    const auto corpus = write_file("corpus.g6", "A_\nBw\nCh\n");
    const auto report = scratch_dir() / "report.json";
    r = run({"verify", "--suite", "spn,main", "--input", corpus.string(), "--output", report.string(), "--format",
             "json", "--field", "both"});
    CHECK(r.code == 0);
    const std::string json = read_file(report);
    CHECK(validate_report_json(json).empty());
    CHECK(json.find("\"field_char\": [\n    2,\n    0\n  ]") != std::string::npos);

    const auto csv = scratch_dir() / "report.csv";
    r = run({"verify", "--suite", "int", "--input", corpus.string(), "--output", csv.string(), "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(read_file(csv).rfind("check_id,", 0) == 0);

    // identical inputs give byte-identical reports
    const auto again = scratch_dir() / "again.json";
    run({"verify", "--suite", "spn,main", "--input", corpus.string(), "--output", again.string(), "--format", "json",
         "--field", "both"});
    CHECK(read_file(again) == json);
}

TEST_CASE("hunt") {
    auto r = run({"hunt", "--check", "main1", "--n", "7", "--random", "100", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("holds=100 fails=0", 0) == 0);

    r = run({"hunt", "--check", "main1", "--n", "40", "--seed", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cap") != std::string::npos);

    r = run({"hunt", "--check", "main1", "--n", "7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("seed") != std::string::npos);

    CHECK(run({"hunt", "--check", "nope", "--n", "5", "--seed", "1"}).code == 2);
    CHECK(run({"hunt", "--check", "all", "--n", "5", "--seed", "1"}).code == 2);

    ::setenv("EIL_JOBS", "2", 1);
    r = run({"hunt", "--check", "spn", "--n", "6", "--random", "10", "--seed", "3"});
    ::unsetenv("EIL_JOBS");
    CHECK(r.code == 0);
}

TEST_CASE("catalog and examples") {
    auto r = run({"catalog", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    CHECK(run({"catalog", "--max-n", "6"}).out.size() > 0);
    CHECK(run({"catalog"}).code == 2);
    CHECK(run({"catalog", "--n", "9"}).code == 2);

    r = run({"examples"});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph=\"P4\" graph6=Ch alpha2=2 depth=2 bound=2 slack=0") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
