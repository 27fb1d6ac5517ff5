#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/cli.hpp"

#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result bip_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = bip::run(args, out, err);
    return {code, out.str(), err.str()};
}

json parse(const Result& r) { return json::parse(r.out); }

} // namespace

TEST_CASE("smooth")
{
    const auto r = bip_run({"smooth", "231"});
    CHECK(r.code == 0);
    CHECK(parse(r)["smooth"] == true);
    CHECK(parse(bip_run({"smooth", "3412"}))["smooth"] == false);
}

TEST_CASE("check lattice")
{
    const auto r = bip_run({"check", "lattice", "--n", "4"});
    CHECK(r.code == 0);
    const auto j = parse(r);
    CHECK(j["theorem"] == "lattice");
    CHECK(j["pass"] == true);
    CHECK(j["failures"].empty());
    CHECK_FALSE(j.contains("wall_ms"));
    CHECK(parse(bip_run({"check", "lattice", "--n", "3", "--timing"})).contains("wall_ms"));
}

TEST_CASE("gamma as DOT")
{
    const auto r = bip_run({"gamma", "231", "132", "--reduced", "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 -> 2;") != std::string::npos);
    CHECK(r.out.find("3 -> 2;") != std::string::npos);
    CHECK(r.out.find("2 -> ") == std::string::npos);
}

TEST_CASE("gamma as JSON")
{
    const auto j = parse(bip_run({"gamma", "231", "123"}));
    CHECK(j["edges"] == json::parse("[[1,2],[2,3]]"));
    CHECK(j["reduced"] == false);
}

TEST_CASE("queries")
{
    CHECK(parse(bip_run({"class", "231", "312"}))["members"] == json::parse(R"(["1,3,2","3,1,2"])"));
    CHECK(parse(bip_run({"join", "231", "213", "132"}))["join"] == "2,3,1");
    CHECK(parse(bip_run({"meet", "231", "213", "132"}))["meet"] == "1,2,3");
    CHECK(parse(bip_run({"mwi", "231", "1"}))["m"] == "2,1,3");
    CHECK(parse(bip_run({"mwi", "231", "1,2"}))["m"] == "2,3,1");
    CHECK(parse(bip_run({"mixed-meet", "312", "231"}))["mixed_meet"] == "1,3,2");
    CHECK(parse(bip_run({"chains", "4321"}))["chains"] == "16");

    const auto h = parse(bip_run({"hvector", "231"}));
    CHECK(h["h"] == json::parse("[1,2,1]"));
    CHECK(h["f"] == json::parse("[4,4,1]"));
    CHECK(h["dim"] == 2);
    CHECK(h["simple"] == true);
    CHECK(h["smooth"]["tree"] == true);

    const auto sk = parse(bip_run({"skeleton", "231"}));
    CHECK(sk["order_kind"] == "skeleton");
    CHECK(sk["covers"].size() == 4);
    CHECK(sk["degrees"]["1,2,3"] == 2);

    const auto iv = parse(bip_run({"interval", "321"}));
    CHECK(iv["order_kind"] == "bruhat");
    CHECK(iv["elements"].size() == 6);
    CHECK(bip_run({"interval", "231", "--dot"}).out.find("\"1,2,3\" -> \"1,3,2\";") != std::string::npos);
}

TEST_CASE("oracle")
{
    CHECK(parse(bip_run({"oracle", "edges", "231"}))["edges"].size() == 4);
    const auto f = parse(bip_run({"oracle", "faces", "231"}));
    CHECK(f["f"] == json::parse("[4,4,1]"));
    CHECK(f["faces"].size() == 10);
}

TEST_CASE("exit codes")
{
    CHECK(bip_run({}).code == 2);
    CHECK(bip_run({"frobnicate"}).code == 2);
    CHECK(bip_run({"smooth", "221"}).code == 2);
    CHECK(bip_run({"gamma", "231", "312"}).code == 2);
    CHECK(bip_run({"check", "unknown"}).code == 2);
    CHECK(bip_run({"check", "faces", "--n", "9"}).code == 2);
    CHECK(bip_run({"class", "231", "312", "--dot"}).code == 2);
    CHECK(bip_run({"oracle", "volume", "231"}).code == 2);
    CHECK(bip_run({"mwi", "231", "5"}).code == 2);
    CHECK(bip_run({"--help"}).code == 0);
    // A sweep with counterexamples reports them and exits 1.
    const auto r = bip_run({"check", "two-faces"});
    CHECK(r.code == 1);
    CHECK(parse(r)["pass"] == false);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"check", "mixed-meet", "--n", "5", "--sample", "200", "--seed", "9"};
    CHECK(bip_run(args).out == bip_run(args).out);
    auto parallel = args;
    parallel.insert(parallel.end(), {"--workers", "4"});
    auto a = parse(bip_run(args));
    auto b = parse(bip_run(parallel));
    a.erase("workers");
    b.erase("workers");
    CHECK(a == b);
}
