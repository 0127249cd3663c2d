#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qcryst/cli.hpp"

using namespace qcryst;

namespace {
struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli build") {
    auto r = run({"build", "standard", "--n", "2", "--cat", "qplus"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4 vertices") != std::string::npos);

    auto dot = run({"build", "shtab", "--shape", "2,1", "--n", "3", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    // identical invocations are byte-identical
    auto dot2 = run({"build", "shtab", "--shape", "2,1", "--n", "3", "--format", "dot"});
    CHECK(dot.out == dot2.out);

    auto js = run({"build", "incr", "--z", "(1,3)(2,4)", "--n", "3", "--format", "json"});
    CHECK(js.code == 0);
    CHECK(js.out.find("\"vertices\"") != std::string::npos);

    auto bad = run({"build", "nonsense"});
    CHECK(bad.code == cli::kParseError);
    auto empty = run({"build", "incr", "--z", "(1,3)(2,4)", "--n", "1"});
    CHECK(empty.code == cli::kEmpty);
    auto badshape = run({"build", "shtab", "--shape", "1,2", "--n", "3"});
    CHECK(badshape.code == cli::kParseError);
}

TEST_CASE("cli character and expand") {
    auto ch = run({"character", "--shtab", "2,1", "--n", "2"});
    CHECK(ch.code == 0);
    CHECK(ch.out == schur_q(StrictPartition({2, 1}), 2).str() + "\n");

    auto ex = run({"expand", "--z", "(1,5)(2,3)", "--n", "5"});
    CHECK(ex.code == 0);
    CHECK(ex.out == "(4,1): 1\n");

    auto exd = run({"expand", "--z", "(1,5)(2,3)"});  // default n = involution length
    CHECK(exd.out == "(4,1): 1\n");
}

TEST_CASE("cli insert") {
    auto r = run({"insert", "--a", "4 | 1' 3 5 | | 4' | | 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "P_EG: 1 2 4 5 / 3 5'\nQ_EG: 1 2' 2 6' / 2' 4\n");

    auto w = run({"insert", "--w", "41'354'2"});
    CHECK(w.out == "P_EG: 1 2 4 5 / 3 5'\nQ_EG: 1 2' 4 6' / 3' 5\n");

    auto mx = run({"insert", "--mixed", "--w", "3'311'3", "--n", "3"});
    CHECK(mx.out == "P_HM: 1 1 3' 3 / 3'\nQ_HM: 1 2 4' 5 / 3\n");
}

TEST_CASE("cli verify") {
    auto braid = run({"verify", "braid", "--n", "2", "--m", "2"});
    CHECK(braid.code == 0);
    CHECK(braid.out.find("PASS") != std::string::npos);
    CHECK(braid.out.find("FAIL") == std::string::npos);

    auto hw = run({"verify", "highest-weight", "--shape", "2,1", "--n", "2"});
    CHECK(hw.code == 0);

    auto st = run({"verify", "stanley", "--N", "3"});
    CHECK(st.code == 0);

    auto unknown = run({"verify", "bogus"});
    CHECK(unknown.code == cli::kParseError);
}

TEST_CASE("cli verify suites smoke") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"verify", "axioms", "--n", "2", "--m", "2"},
             {"verify", "tensor-assoc", "--n", "2"},
             {"verify", "characters", "--shape", "2,1", "--n", "2"},
             {"verify", "insertion-commute", "--N", "3", "--n", "2"}}) {
        auto r = run(args);
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
}

TEST_CASE("cli tensor build and json character") {
    auto r = run({"build", "tensor", "--n", "2", "--power", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16 vertices") != std::string::npos);

    auto j = run({"character", "--shtab", "2,1", "--n", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"coefficient\": \"4\"") != std::string::npos);
}
