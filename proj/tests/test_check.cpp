#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/check.hpp"
#include "bip/error.hpp"

#include <algorithm>
#include <set>

using namespace bip;

TEST_CASE("registry lookups")
{
    CHECK_THROWS_AS(check("unknown"), UnknownTheorem);
    CHECK_THROWS_AS(theorem_info("unknown"), UnknownTheorem);
    CHECK(theorem_info("lattice").exhaustive_through == 5);
    CheckOptions too_big;
    too_big.n_max = theorem_info("faces").max_rank + 1;
    CHECK_THROWS_AS(check("faces", too_big), RankTooLarge);
}

TEST_CASE("sampling is seeded, distinct and stable")
{
    const auto a = sample_indices(720, 50, 7);
    CHECK(a == sample_indices(720, 50, 7));
    CHECK(a != sample_indices(720, 50, 8));
    CHECK(std::set<std::size_t>(a.begin(), a.end()).size() == 50);
    CHECK(std::all_of(a.begin(), a.end(), [](std::size_t i) { return i < 720; }));
    CHECK(sample_indices(5, 10, 1).size() == 5);
    // Frozen so that reports stay comparable across builds.
    CHECK(sample_indices(10, 3, 42) == std::vector<std::size_t>{6, 0, 4});
}

TEST_CASE("small sweeps pass")
{
    for (const auto& t : theorems()) {
        if (t.id == "two-faces")
            continue;
        CheckOptions o;
        o.n_max = std::min(4, t.max_rank);
        const auto r = check(t.id, o);
        INFO(t.id);
        CHECK(r.pass());
        CHECK(r.instances > 0);
    }
}

TEST_CASE("lattice through rank 4, degree monotonicity through rank 5 on four workers")
{
    CheckOptions o;
    o.n_max = 4;
    CHECK(check("lattice", o).pass());
    o.n_max = 5;
    o.workers = 4;
    CHECK(check("degree-monotone", o).pass());
}

TEST_CASE("sampled ranks are recorded")
{
    CheckOptions o;
    o.n_max = 5;
    o.sample = 7;
    o.seed = 3;
    const auto r = check("edges", o);
    CHECK(r.sampled.at(4) == 0);
    CHECK(r.sampled.at(5) == 7);
    CHECK(r.instances == 1 + 2 + 6 + 24 + 7);
}

TEST_CASE("squares with unordered labels")
{
    // These squares have disjoint position labels that cross or nest, which
    // the ordered square pattern does not allow.
    const auto r = check("two-faces");
    std::set<std::string> ws;
    for (const auto& f : r.failures)
        ws.insert(f.w.to_string());
    CHECK(ws == std::set<std::string>{"2,4,1,3", "2,4,3,1", "4,2,1,3", "4,2,3,1"});
    CHECK(r.failures.size() == 4);
}

TEST_CASE("verdicts do not depend on the number of workers")
{
    for (const std::string id : {"two-faces", "mixed-meet", "smooth", "non-revisiting"}) {
        CheckOptions one;
        one.seed = 11;
        one.sample = 300;
        one.n_max = std::min(5, theorem_info(id).max_rank);
        auto many = one;
        many.workers = 4;
        const auto a = check(id, one);
        const auto b = check(id, many);
        CHECK(a.pass() == b.pass());
        CHECK(a.failures == b.failures);
        CHECK(a.observations == b.observations);
        CHECK(a.instances == b.instances);
    }
}
