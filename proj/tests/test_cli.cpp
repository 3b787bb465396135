#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "looph/cli.hpp"

namespace {
struct RunResult {
    int status;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = looph::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}
}  // namespace

TEST_CASE("normalize") {
    auto r = run({"normalize", "-n", "3", "U1 D1"});
    CHECK(r.status == 0);
    CHECK(r.out == "U1 + D1 - 1\n");
}

TEST_CASE("normalize with numeric scalar and json") {
    auto r = run({"normalize", "-n", "3", "D2 U1", "--format", "json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(looph::Element::from_json(j) ==
          looph::normal_form_of_word(3, looph::parse_word("D2 U1")));
}

TEST_CASE("mul") {
    auto r = run({"mul", "-n", "2", "D1", "U1"});
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("dim") {
    auto r = run({"dim", "-n", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "35\n");
}

TEST_CASE("basis and dyck listings") {
    auto r = run({"basis", "-n", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("D1") != std::string::npos);
    CHECK(r.out.find("U1") != std::string::npos);
    auto d = run({"dyck", "-n", "2"});
    CHECK(d.out == "urur\nuurr\n");
}

TEST_CASE("mdd golden output") {
    auto r = run({"mdd", "uuurrruruuruuururrrr"});
    CHECK(r.status == 0);
    CHECK(r.out == "(s1)(s2)(s7 s6 s5)(s8 s7)(s9 s8)\n");
    auto j = run({"mdd", "uurr", "--format", "json"});
    CHECK(j.out == "[[1]]\n");
}

TEST_CASE("counts") {
    auto r = run({"counts", "-n", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "catalan=14 tilde=35 reduced=35 binom=35\n");
}

TEST_CASE("rep-matrix") {
    auto r = run({"rep-matrix", "--op", "scheck", "-n", "2", "-i", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("-1") != std::string::npos);
    auto bad = run({"rep-matrix", "--op", "nope", "-n", "2"});
    CHECK(bad.status == 2);
}

TEST_CASE("verify small targets") {
    auto r = run({"verify", "hecke-hopf"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS hecke-hopf") != std::string::npos);
    auto q = run({"verify", "quotient"});
    CHECK(q.status == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({"normalize"}).status == 2);
    CHECK(run({"normalize", "-n", "3", "X9"}).status == 2);
    CHECK(run({"verify", "bogus"}).status == 2);
    CHECK(run({"dim", "-n", "99"}).status == 2);
}

TEST_CASE("deterministic output") {
    auto a = run({"verify", "quotient", "--seed", "5"});
    auto b = run({"verify", "quotient", "--seed", "5"});
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
}

TEST_CASE("export multiplication table") {
    auto r = run({"export", "multable", "-n", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("U1 + D1 - 1") != std::string::npos);
}

TEST_CASE("export structure tables") {
    auto p = run({"export", "peirce", "-n", "3"});
    CHECK(p.status == 0);
    CHECK(p.out == "1,0,0\n2,4,0\n0,2,1\n");
    auto c = run({"export", "cartan", "-n", "3"});
    CHECK(c.out == "1,0,0\n1,1,0\n0,1,1\n");
    auto s = run({"export", "structure", "-n", "2"});
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["dim"] == 3);
    CHECK(j["rad_dim"] == 1);
    CHECK(j["checks"]["passed"] == true);
}

TEST_CASE("cache file round trip") {
    std::string path = "cli_cache_test.jsonl";
    std::remove(path.c_str());
    auto a = run({"normalize", "-n", "3", "U1 D1 U2 D2", "--cache", path});
    CHECK(a.status == 0);
    std::ifstream in(path);
    CHECK(in.good());
    auto b = run({"normalize", "-n", "3", "U1 D1 U2 D2", "--cache", path});
    CHECK(b.out == a.out);
    std::remove(path.c_str());
}
