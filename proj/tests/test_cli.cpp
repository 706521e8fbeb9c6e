#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mall/cli.hpp"
#include "testgen.hpp"

using namespace mall;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    const auto path = std::filesystem::temp_directory_path() / ("mallequiv_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const std::string kExample = "(ite x2 (ite x1 0 1) 1)";
const std::string kExampleObdd = "(ite x2 (ite x1 0 1) (dc x1 1))";
const std::string kLineBack =
    R"({"vertices":["b","s","f","e"],"edges":[["b","s"],["s","f"],["f","e"]],"begin":"b","exit":"e","f":"f","s":"s"})";
const std::string kLineFwd =
    R"({"vertices":["b","f","s","e"],"edges":[["b","f"],["f","s"],["s","e"]],"begin":"b","exit":"e","f":"f","s":"s"})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("proof-equiv on identical files") {
    const std::string path = write_temp("p1.proof", print_proof(testgen::plus_blowup_proof(3)));
    const Result r = call({"proof-equiv", path, path});
    CHECK(r.code == 0);
    CHECK(r.json() == nlohmann::json::parse(R"({"equivalent": true})"));
    CHECK(call({"--oracle", "proof-equiv", path, path}).code == 0);
    const std::string other = write_temp("p2.proof", print_proof(testgen::plus_blowup_proof(3, 1)));
    CHECK(call({"proof-equiv", path, other}).code == 1);
    CHECK(call({"proof-equiv", "--oracle", path, other}).code == 1);
    CHECK(call({"proof-equiv", "--local", path, other}).code == 1);
}

TEST_CASE("bdd-equiv on the worked example") {
    const Result r = call({"bdd-equiv", kExample, kExampleObdd});
    CHECK(r.code == 0);
    CHECK(r.json() == nlohmann::json::parse(R"({"equivalent": true})"));
    CHECK(call({"bdd-equiv", "--oracle", kExample, kExampleObdd}).code == 0);
    CHECK(call({"bdd-equiv", "(ite x 1 0)", "(ite x 0 1)"}).code == 1);
    CHECK(call({"bdd-equiv", "--no-exit-status", "(ite x 1 0)", "(ite x 0 1)"}).code == 0);
}

TEST_CASE("reduce-ord") {
    const std::string back = write_temp("back.json", kLineBack);
    Result r = call({"reduce-ord", back});
    CHECK(r.code == 1);
    CHECK(r.json() == nlohmann::json::parse(R"({"equivalent": false, "f_before_s": false})"));
    CHECK(call({"reduce-ord", "--oracle", back}).code == 1);
    r = call({"reduce-ord", kLineFwd});
    CHECK(r.code == 0);
    CHECK(r.json()["f_before_s"] == true);
    CHECK(call({"ord-oracle", kLineFwd}).code == 0);
    CHECK(call({"ord-oracle", back}).code == 1);
}

TEST_CASE("bdd commands") {
    Result r = call({"bdd-dnf", kExample});
    CHECK(r.code == 0);
    CHECK(r.json()["dnf"] == "~x1.x2 + ~x2");
    r = call({"bdd-eval", kExample, "x1=1", "x2=0"});
    CHECK(r.code == 0);
    CHECK(r.json()["value"] == 1);
    CHECK(call({"bdd-eval", kExample, "x1=1,x2=1"}).code == 1);
    CHECK(call({"bdd-eval", kExample, "x1=1"}).code == 2);
    CHECK(call({"bdd-eval", kExample, "x1=2", "x2=0"}).code == 2);
    r = call({"bdd-negate", "(ite x 1 0)"});
    CHECK(r.json()["bdd"] == "(ite x 0 1)");
    r = call({"bdd-negate", "--format", "dot", "(ite x 1 0)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("dashed") != std::string::npos);
    r = call({"bdd-negate", "--format", "text", "(ite x 1 0)"});
    CHECK(r.out == "(ite x 0 1)\n");
}

TEST_CASE("proof commands") {
    const std::string example = print_proof(testgen::worked_example_proof());
    Result r = call({"check-proof", example});
    CHECK(r.code == 0);
    CHECK(r.json()["valid"] == true);
    CHECK(r.json()["conclusion"] == "(plus a b), (tensor (with x ~a ~b) d), ~d");
    r = call({"check-proof", "(with x (ax a) (ax b))"});
    CHECK(r.code == 1);
    CHECK(r.json()["violations"].size() == 1);

    r = call({"slice", print_proof(testgen::blowup_proof(3))});
    CHECK(r.code == 0);
    CHECK(r.json()["linkings"] == 8);
    CHECK(call({"slice", "--max-withs", "2", print_proof(testgen::blowup_proof(3))}).code == 2);

    r = call({"bdd-slice", example});
    CHECK(r.code == 0);
    bool found = false;
    const auto doc = r.json();
    for(const auto &e : doc["entries"])
        if(e["pair"] == nlohmann::json::parse(R"([{"formula":0,"path":"l"},{"formula":1,"path":"ll"}])")) {
            CHECK(e["bdd"] == "(ite x 1 0)");
            found = true;
        }
    CHECK(found);
    CHECK(call({"bdd-slice", "--local", example}).code == 0);
}

TEST_CASE("encode-obdd") {
    Result r = call({"encode-obdd", kExampleObdd});
    CHECK(r.code == 0);
    CHECK(r.json()["order"] == nlohmann::json::parse(R"(["x2","x1"])"));
    CHECK(r.json()["conclusion"] == "(plus b b), (tensor (tensor ~b ~a1) ~a2), (with x1 a1 a1), (with x2 a2 a2)");
    const Proof p = parse_proof(r.json()["proof"].get<std::string>());
    CHECK(is_valid(p));
    CHECK(call({"encode-obdd", "--order", "x1,x2", kExampleObdd}).code == 2);
    CHECK(call({"encode-obdd", kExample}).code == 2);
}

TEST_CASE("errors exit 2 with a structured document") {
    Result r = call({"bdd-negate", "(ite x 1"});
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["kind"] == "parse");
    CHECK(r.json()["error"]["offset"] == 9);
    CHECK(!r.err.empty());
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"bdd-equiv", "1"}).code == 2);
    CHECK(call({"--format", "xml", "bdd-negate", "1"}).code == 2);
    CHECK(call({"--format", "dot", "bdd-equiv", "1", "1"}).code == 2);
    r = call({"ord-oracle", "{\"vertices\": []}"});
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["kind"] == "precondition");
    CHECK(call({"proof-equiv", "(ax a)", "(ax b)"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("oracle flag agrees on random inputs") {
    testgen::Rng r(61);
    for(int i = 0; i < 100; ++i) {
        const auto [a, b] = testgen::random_bdd_pair(r, 6);
        CHECK(call({"bdd-equiv", print_bdd(a), print_bdd(b)}).code ==
              call({"bdd-equiv", "--oracle", print_bdd(a), print_bdd(b)}).code);
    }
    for(int i = 0; i < 50; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 2, 10));
        const Proof q = testgen::alternative(r, p);
        CHECK(call({"proof-equiv", print_proof(p), print_proof(q)}).code ==
              call({"proof-equiv", "--oracle", print_proof(p), print_proof(q)}).code);
    }
}

TEST_CASE("output is deterministic") {
    const std::string example = print_proof(testgen::worked_example_proof());
    CHECK(call({"bdd-slice", example}).out == call({"bdd-slice", example}).out);
    CHECK(call({"slice", example}).out == call({"slice", example}).out);
}

}
