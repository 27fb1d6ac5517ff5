#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/error.hpp"
#include "bip/faces.hpp"
#include "bip/skeleton.hpp"

using namespace bip;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
using Edges = std::vector<std::pair<int, int>>;
}

TEST_CASE("polytope edges examples")
{
    auto e = polytope_edges(Permutation::identity(3));
    CHECK(e.vertices.size() == 1);
    CHECK(e.edges.empty());

    auto d = polytope_edges(P("231"));
    CHECK(d.vertices == std::vector<Permutation>{P("123"), P("132"), P("213"), P("231")});
    CHECK(d.edges == Edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(d.degrees == std::vector<int>{2, 2, 2, 2});

    auto h = polytope_edges(Permutation::longest(3));
    CHECK(h.vertices.size() == 6);
    CHECK(h.edges.size() == 6);
    CHECK(h.degrees == std::vector<int>(6, 2));
}

TEST_CASE("skeleton posets")
{
    CHECK(skeleton_poset(P("231")).covers == Edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(skeleton_poset(P("213")).covers == Edges{{0, 1}});

    // P_{w_0} is the right weak order.
    for (int n = 2; n <= 4; ++n) {
        const Skeleton sk(Permutation::longest(n));
        const auto& wo = WeakOrder::of(n);
        for (std::size_t u = 0; u < sk.size(); ++u)
            for (std::size_t v = 0; v < sk.size(); ++v)
                CHECK(sk.leq(u, v) == wo.leq(wo.index_of(sk[u]), wo.index_of(sk[v])));
    }
}

TEST_CASE("degree")
{
    CHECK(degree(Permutation::identity(3), Permutation::identity(3)) == 0);
    CHECK(degree(P("231"), Permutation::identity(3)) == 2);
    for (const auto& w : all_permutations(5))
        CHECK(degree(w, Permutation::identity(5)) == static_cast<int>(support(w).size()));
    CHECK_THROWS_AS(degree(P("231"), P("312")), NotInInterval);
}

TEST_CASE("maximal chains")
{
    CHECK(maximal_chain_count(Permutation::identity(3)) == 1);
    CHECK(maximal_chain_count(P("231")) == 2);
    CHECK(maximal_chain_count(Permutation::longest(3)) == 2);
    // Reduced words of w_0 in S_4: 16.
    CHECK(maximal_chain_count(Permutation::longest(4)) == 16);
}

TEST_CASE("skeleton invariants on S_4")
{
    for (const auto& w : all_permutations(4)) {
        const Skeleton sk(w);
        // e is the unique source and w the unique sink.
        CHECK(sk.up_set(0).count() == sk.size());
        CHECK(sk.down_set(sk.size() - 1).count() == sk.size());
        for (std::size_t u = 0; u < sk.size(); ++u) {
            CHECK(sk.neighbours(u).size() == static_cast<std::size_t>(sk.degree(u)));
            CHECK(sk.up_covers(u).size() + sk.down_covers(u).size() == static_cast<std::size_t>(sk.degree(u)));
            for (auto v : sk.up_covers(u)) {
                // Covers are Bruhat relations differing by one transposition.
                CHECK(bruhat_leq(sk[u], sk[v]));
                CHECK(length(sk[u]) < length(sk[v]));
            }
        }
        // Gamma edges are exactly polytope edges (both endpoints agree by construction).
        for (auto [a, b] : sk.edges())
            CHECK(a < b);
    }
}
