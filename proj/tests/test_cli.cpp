#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lh_cli.hpp"
#include "lht/paths.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result lh(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lhcli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("product check passes") {
    const auto r = lh({"verify", "product", "--type", "ge-gt", "--shape", "2,1", "--n", "3", "--cap", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("cap 0 has only the zero filling") {
    const auto r = lh({"tableaux", "--shape", "1", "--n", "2", "--cap", "0", "--count"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 1);
    CHECK(lh({"tableaux", "--shape", "1", "--n", "2", "--cap", "0", "--count", "--tsv"}).out == "count\n1\n");
}

TEST_CASE("skew shape through --inner") {
    const auto a = lh({"tableaux", "--shape", "6,6,4,3", "--inner", "3,1", "--n", "5", "--type", "ge-gt", "--cap", "14", "--series"});
    const auto b = lh({"tableaux", "--shape", "6,6,4,3/3,1", "--n", "5", "--type", "ge-gt", "--cap", "14"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto jt = lh({"tableaux", "--shape", "6,6,4,3", "--inner", "3,1", "--n", "5", "--cap", "14", "--method", "jt-e"});
    CHECK(nlohmann::json::parse(jt.out)["series"] == nlohmann::json::parse(a.out)["series"]);
    CHECK(lh({"tableaux", "--shape", "2/1", "--inner", "1", "--n", "2"}).code == 2);
}

TEST_CASE("paths output matches the northwest fixture and round trips") {
    const auto r = lh({"paths", "--from-alhc", "5,4,5,5,3,3", "--n", "8", "--k", "6", "--json"});
    REQUIRE(r.code == 0);
    const auto j = lht::Json::parse(r.out);
    const lht::LatticePath p = lht::path_from_json(j["paths"][0]);
    CHECK(p.start_column == 8);
    CHECK(p.end_column == 2);
    CHECK(p.steps == std::vector<lht::PathStep>{{8, 3}, {7, 3}, {6, 5}, {5, 5}, {4, 4}, {3, 5}});
    CHECK(j["round_trip"] == true);
    const auto svg = lh({"paths", "--from-alhc", "5,4,5,5,3,3", "--n", "8", "--k", "6", "--svg", "-"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out == lh({"paths", "--from-alhc", "5,4,5,5,3,3", "--n", "8", "--k", "6", "--svg", "-"}).out);
}

TEST_CASE("enum and genfun formats") {
    const auto tsv = lh({"enum", "--variant", "AL", "--n", "2", "--k", "1", "--cap", "4", "--tsv"});
    CHECK(tsv.out == "entries\tweight\tu\tv\n0\t0\t0\t0\n1\t1\t0\t0\n2\t2\t1\t1\n3\t3\t1\t1\n4\t4\t2\t0\n");
    CHECK(lh({"--format", "tsv", "enum", "--variant", "AL", "--n", "2", "--k", "1", "--cap", "4"}).out == tsv.out);
    const auto j = nlohmann::json::parse(lh({"enum", "--variant", "L", "--n", "3", "--k", "2", "--cap", "6"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["count"] == j["sequences"].size());
    const auto closed = lh({"genfun", "--variant", "ALbar", "--n", "4", "--k", "3", "--cap", "10", "--closed"});
    const auto enumerated = lh({"genfun", "--variant", "ALbar", "--n", "4", "--k", "3", "--cap", "10", "--enum"});
    CHECK(nlohmann::json::parse(closed.out)["series"] == nlohmann::json::parse(enumerated.out)["series"]);
    CHECK(lh({"genfun", "--variant", "L", "--n", "2", "--k", "1", "--closed", "--enum"}).code == 2);
}

TEST_CASE("qjacobi verbs") {
    const auto r = lh({"qjacobi", "poly", "--n", "4", "--q", "1/3", "--a", "-1/10", "--b", "-1/7"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"].size() == 5);
    CHECK(j["coefficients"][4] == "1");
    const auto mu = nlohmann::json::parse(lh({"qjacobi", "mu", "--n", "3", "--k", "3", "--q", "1/2"}).out);
    CHECK(mu["mu"] == "1");
    CHECK(lh({"qjacobi", "poly", "--n", "2", "--q", "3/2"}).code == 2);
}

TEST_CASE("verify examples") {
    CHECK(lh({"verify", "expansion", "--shape", "2,1", "--n", "3", "--q", "1/3", "--u", "1/5", "--v", "2/7"}).code == 0);
    const auto sel = lh({"verify", "selberg", "--shape", "1", "--n", "2", "--q", "1/3", "--terms", "50", "--tol", "1e-15"});
    CHECK(sel.code == 0);
    CHECK(sel.out.rfind("PASS selberg", 0) == 0);
    // Too few terms cannot certify the tolerance.
    const auto coarse = lh({"verify", "selberg", "--shape", "1", "--n", "1", "--q", "1/3", "--terms", "2", "--tol", "1e-15"});
    CHECK(coarse.code == 1);
    CHECK(coarse.out.rfind("FAIL selberg", 0) == 0);
    CHECK(lh({"verify", "jt", "--shape", "2,1", "--n", "3", "--cap", "8"}).code == 0);
    CHECK(lh({"verify", "example-tableau"}).code == 0);
    CHECK(lh({"verify", "bijection"}).code == 0);
}

TEST_CASE("every identity passes on a small shape") {
    for (const auto& id : lhcli::identities()) {
        const auto r = lh({"verify", id.name, "--shape", "2,1", "--n", "2", "--cap", "8"});
        CHECK_MESSAGE(r.code == 0, id.name, "\n", r.out, r.err);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("exit codes") {
    CHECK(lh({}).code == 2);
    CHECK(lh({"nonsense"}).code == 2);
    CHECK(lh({"enum", "--n", "3"}).code == 2);
    CHECK(lh({"enum", "--n", "2", "--k", "3"}).code == 2);
    CHECK(lh({"enum", "--variant", "X", "--n", "2", "--k", "1"}).code == 2);
    CHECK(lh({"tableaux", "--shape", "1,2", "--n", "3"}).code == 2);
    CHECK(lh({"tableaux", "--shape", "1", "--n", "2", "--type", "ge-ge"}).code == 2);
    CHECK(lh({"verify", "no-such-identity"}).code == 2);
    CHECK(lh({"--help"}).code == 0);
}

TEST_CASE("selftest list names every identity once") {
    const auto r = lh({"selftest", "--list"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        CHECK(line.substr(0, tab) == lhcli::identities()[count].name);
        CHECK(tab + 1 < line.size());
        ++count;
    }
    CHECK(count == lhcli::identities().size());
}

TEST_CASE("selftest output does not depend on the thread count") {
    setenv("LH_THREADS", "1", 1);
    const auto one = lh({"selftest", "--quick"});
    setenv("LH_THREADS", "4", 1);
    const auto four = lh({"selftest", "--quick"});
    unsetenv("LH_THREADS");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.find("FAIL") == std::string::npos);
}

TEST_CASE("full selftest") {
    const auto r = lh({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

}  // TEST_SUITE
