#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "gasketlab/cli.hpp"

namespace fs = std::filesystem;
using namespace gasketlab::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::map<std::string, std::string>& env = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(std::move(args), out, err, env);
    return {code, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;

    Scratch() : dir(fs::temp_directory_path() / ("gasketlab_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

} // namespace

TEST_CASE("build counts") {
    Scratch s;
    const auto k3 = s.write("k3.json", R"({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]})");
    auto r = call({"build", "--base", k3, "--t", "2", "--kind", "gasket", "--out", "counts"});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices=6 edges=9 components=1\n");

    r = call({"build", "--edges", "1-2,3-4", "--t", "2"});
    CHECK(r.out == "vertices=14 edges=8 components=6\n");

    r = call({"build", "--graph6", "Bw", "--t", "2", "--kind", "sierpinski"});
    CHECK(r.out == "vertices=9 edges=12 components=1\n");

    const auto g6 = s.write("k3.g6", "Bw\n");
    CHECK(call({"build", "--base", g6, "--t", "3"}).out == "vertices=15 edges=27 components=1\n");
}

TEST_CASE("check exits 0 when every suite passes") {
    Scratch s;
    const auto k3 = s.write("k3.json", R"({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]})");
    const auto r = call({"check", "--base", k3, "--t", "3", "--suite", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("BUG") == std::string::npos);
    CHECK(line_count(r.out) >= 10);
    CHECK(call({"check", "--edges", "1-2,2-3", "--t", "2", "--suite", "counts"}).code == 0);
}

TEST_CASE("sweep prints CSV and exits 0 without counterexamples") {
    Scratch s;
    const auto corpus = s.write("conn4.g6", "Bw\nA_\nnot-graph6\nCF\n");
    const auto r = call({"sweep", "--corpus", corpus, "--t", "2,3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "graph6,n,edges,chi_base,t,order,size,chi_gasket,omega_base,omega_gasket,counterexample,elapsed_ms,status");
    CHECK(line_count(r.out) == 7);
    CHECK(r.err.find(":3: skipped") != std::string::npos);

    const auto jsonl = call({"sweep", "--corpus", corpus, "--t", "3", "--out", "jsonl", "--jobs", "2"});
    CHECK(jsonl.code == 0);
    std::istringstream records(jsonl.out);
    std::string first;
    std::getline(records, first);
    CHECK(nlohmann::json::parse(first)["chi_gasket"] == 3);
}

TEST_CASE("neighbors accepts labels and words") {
    auto r = call({"neighbors", "--graph6", "Bw", "--t", "3", "--vertex", "{1,2}@3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.{1,2}@2\n1.{2,3}@2\n2.{1,2}@2\n2.{1,3}@2\n");
    r = call({"neighbors", "--graph6", "Bw", "--t", "3", "--vertex", "2.1.1"});
    CHECK(r.out == "1.{1,2}@2\n1.{2,3}@2\n2.{1,2}@2\n2.{1,3}@2\n");
    r = call({"neighbors", "--graph6", "Bw", "--t", "3", "--vertex", "1.{4,5}@2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("color emits verified JSON") {
    for (const std::string method : {"level2", "recursive", "bipartite", "exact"}) {
        const auto r = call({"color", "--edges", "1-2,2-3,3-4,4-1", "--t", "2", "--method", method, "--out", "json"});
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["colors"].size() == 12);
        CHECK(doc["k"].get<int>() >= 2);
    }
    CHECK(call({"color", "--graph6", "Bw", "--t", "3", "--method", "level2"}).code == 1);
    CHECK(call({"color", "--graph6", "Bw", "--t", "2", "--method", "bipartite"}).code == 1);
}

TEST_CASE("export writes files") {
    Scratch s;
    const auto path = (s.dir / "k3.dot").string();
    CHECK(call({"export", "--graph6", "Bw", "--t", "2", "--format", "dot", "--output", path}).code == 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("graph gasket {", 0) == 0);
    const auto json = call({"export", "--graph6", "Bw", "--t", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(json.out)["edges"].size() == 9);
}

TEST_CASE("usage errors exit 1 with a message") {
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"build", "--graph6", "Bw"}).code == 1);
    CHECK(call({"build", "--graph6", "Bw", "--t", "2", "--bogus"}).code == 1);
    auto r = call({"build", "--base", "/nonexistent/k3.json", "--t", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("/nonexistent/k3.json") != std::string::npos);
    r = call({"build", "--graph6", "Bw", "--t", "30"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--vertex-cap") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("config precedence: flags over environment over file") {
    Scratch s;
    const auto config = s.write("config.json", R"({"vertex_cap": 5, "time_budget_s": 30})");
    const std::vector<std::string> base{"build", "--graph6", "Bw", "--t", "2", "--config", config};
    CHECK(call(base).code == 1); // file cap 5 < 9 words
    CHECK(call(base, {{"GASKETLAB_VERTEX_CAP", "100"}}).code == 0);
    auto with_flag = base;
    with_flag.insert(with_flag.end(), {"--vertex-cap", "4"});
    CHECK(call(with_flag, {{"GASKETLAB_VERTEX_CAP", "100"}}).code == 1);
    with_flag.back() = "9";
    CHECK(call(with_flag, {{"GASKETLAB_VERTEX_CAP", "2"}}).code == 0);

    CHECK(call(base, {{"GASKETLAB_VERTEX_CAP", "lots"}}).code == 1);
    const auto bad = s.write("bad.json", R"({"vertex_cap": 5, "colour": 1})");
    CHECK(call({"build", "--graph6", "Bw", "--t", "2", "--config", bad}).code == 1);

    const auto layers = resolve({}, {}, ConfigLayer{.jobs = 4u});
    CHECK(layers.jobs == 4);
    CHECK(layers.vertex_cap == 10'000'000);
    CHECK(layers.time_budget_s == 60);
    CHECK_THROWS(resolve(ConfigLayer{.jobs = 0u}, {}, {}));
}
