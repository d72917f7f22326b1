#include "oracles.hpp"

#include "commands.hpp"
#include "qdomain/examples.hpp"
#include "qdomain/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qdomain;
namespace fs = std::filesystem;

namespace {

const std::string corpus = QDOMAIN_CORPUS_DIR;

std::string message_of(const std::string& text) {
    try {
        io::parse(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Input);
        return e.what();
    }
    return {};
}

struct Ran {
    int code;
    std::string out, err;
};

Ran run_cmd(const std::string& cmd, const std::vector<std::string>& args, cli::Options opt = {}) {
    std::ostringstream out, err;
    const int code = cli::run(cmd, args, opt, out, err);
    return {code, out.str(), err.str()};
}

Ran cli_argv(std::vector<std::string> argv) {
    argv.insert(argv.begin(), "qdomain");
    std::vector<char*> ptrs;
    for (auto& a : argv) ptrs.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(ptrs.size()), ptrs.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("qdomain_test_" + name); }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("syntax errors carry line and column") {
    const std::string m = message_of("{\n  \"qsets\": {\n    \"H\": [1,,]\n  }\n}\n");
    CHECK(m.find("line 3") != std::string::npos);
    CHECK(m.find("column") != std::string::npos);
}

TEST_CASE("semantic errors name the object") {
    const std::string m = message_of(R"({"qsets": {"H": {"atoms": [{"id": "H", "dim": 0}]}}})");
    CHECK(m.find("qsets.H") != std::string::npos);
    const std::string r = message_of(R"({"qsets": {"H": {"atoms": [{"id": "H", "dim": 2}]}},
        "relations": {"R": {"dom": "H", "cod": "missing", "components": []}}})");
    CHECK(r.find("relations.R") != std::string::npos);
    const std::string b = message_of(R"({"qsets": {"H": {"atoms": [{"id": "H", "dim": 2}]}},
        "relations": {"R": {"dom": "H", "cod": "H", "components": [{"from": "H", "to": "H", "basis": [[[1, 0]]]}]}}})");
    CHECK(b.find("relations.R") != std::string::npos);
}

TEST_CASE("matrices accept complex entries") {
    const Matrix m = io::matrix_from_json(io::Json::parse("[[1, [0, 1]], [[2, -1], 0]]"), "m");
    CHECK(m(0, 1) == std::complex<double>(0, 1));
    CHECK(m(1, 0) == std::complex<double>(2, -1));
    CHECK((io::matrix_from_json(io::to_json(m), "m") - m).norm() < 1e-15);
}

TEST_CASE("save and load round trip") {
    for (const auto& entry : fs::directory_iterator(corpus)) {
        if (entry.path().extension() != ".json") continue;
        const io::Document d = io::load(entry.path().string());
        const fs::path p = temp_file(entry.path().filename().string());
        io::save(d, p.string());
        const io::Document e = io::load(p.string());
        // bases are re-canonicalized on load, so compare spans rather than text
        CHECK(d.qsets == e.qsets);
        for (const auto& [name, r] : d.relations) CHECK(equals(r, e.relations.at(name)));
        for (const auto& [name, p] : d.posets) CHECK(equals(p->poset.order(), e.posets.at(name)->poset.order()));
        for (const auto& [name, c] : d.chains) {
            const auto& other = e.chains.at(name).chain.entries;
            REQUIRE(c.chain.entries.size() == other.size());
            for (std::size_t i = 0; i < other.size(); ++i) CHECK(equals(c.chain.entries[i], other[i]));
        }
        CHECK(d.checks == e.checks);
        fs::remove(p);
    }
    CHECK_THROWS_AS(io::load((fs::path(corpus) / "no_such_file.json").string()), Error);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("commands exist") {
    const auto names = cli::command_names();
    for (const char* c : {"check-order", "limit", "scott", "factor", "lift", "kleisli-compose", "corpus"})
        CHECK(std::find(names.begin(), names.end(), c) != names.end());
}

TEST_CASE("exit codes") {
    const std::string v = corpus + "/v_order.json";
    const std::string f = corpus + "/functions.json";
    CHECK(run_cmd("check-order", {v, "V"}).code == cli::Pass);
    CHECK(run_cmd("check-function", {f, "F1"}).code == cli::Pass);
    CHECK(run_cmd("check-function", {f, "N"}).code == cli::CheckFailed);
    CHECK(run_cmd("check-order", {v, "nothing"}).code == cli::InputError);
    CHECK(run_cmd("check-order", {corpus + "/missing.json", "V"}).code == cli::InputError);
    CHECK(run_cmd("no-such-command", {}).code == cli::InputError);
    const Ran r = run_cmd("check-order", {v, "nothing"});
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("the sup example reports its witness") {
    const Ran r = run_cmd("limit", {corpus + "/sup.json", "sup_R"});
    CHECK(r.code == cli::CheckFailed);
    CHECK(r.out.find("no limit: R∘K_∞ ≠ ⋀ R∘K_n at (H, X_∞): dim 1 vs 2") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
    const Ran s = run_cmd("limit", {corpus + "/sup.json", "sup_S"});
    CHECK(s.code == cli::Pass);
}

TEST_CASE("json reports") {
    cli::Options opt;
    opt.json = true;
    const Ran r = run_cmd("limit", {corpus + "/sup.json", "sup_R"}, opt);
    const io::Json j = io::Json::parse(r.out);
    CHECK(j["status"] == "fail");
    CHECK(j["exit"] == 1);
    CHECK(j["lines"].is_array());
    const Ran e = run_cmd("check-order", {corpus + "/v_order.json", "nothing"}, opt);
    const io::Json je = io::Json::parse(e.out);
    CHECK(je["status"] == "error");
    CHECK(je.contains("error"));
}

TEST_CASE("the corpus passes deterministically") {
    cli::Options opt;
    opt.seed = 7;
    const Ran a = run_cmd("corpus", {}, opt);
    const Ran b = run_cmd("corpus", {}, opt);
    CHECK(a.code == cli::Pass);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
}

TEST_CASE("global flags") {
    const std::string v = corpus + "/v_order.json";
    CHECK(cli_argv({"--tol", "1e-10", "check-order", v, "V"}).code == cli::Pass);
    CHECK(cli_argv({"--tol", "2", "check-order", v, "V"}).code == cli::InputError);
    CHECK(cli_argv({"--json", "check-order", v, "V"}).out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(cli_argv({"--bogus"}).code == cli::InputError);
    ::setenv("QDOMAIN_TOL", "not-a-number", 1);
    CHECK(cli_argv({"check-order", v, "V"}).code == cli::InputError);
    ::setenv("QDOMAIN_TOL", "1e-10", 1);
    CHECK(cli_argv({"check-order", v, "V"}).code == cli::Pass);
    ::unsetenv("QDOMAIN_TOL");
}

}  // TEST_SUITE
