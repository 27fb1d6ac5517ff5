#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/error.hpp"
#include "bip/gamma.hpp"
#include "bip/order.hpp"

using namespace bip;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
using Edges = std::vector<std::pair<int, int>>;
}

TEST_CASE("gamma_tilde examples")
{
    CHECK(gamma_tilde(P("231"), P("123")).edges() == Edges{{1, 2}, {2, 3}});
    CHECK(gamma_tilde(P("231"), P("132")).edges() == Edges{{1, 2}, {3, 2}});
    CHECK(gamma_tilde(P("231"), P("231")).edges() == Edges{{2, 1}, {3, 1}});
    CHECK(gamma_tilde(Permutation::identity(3), Permutation::identity(3)).edges().empty());
    CHECK_THROWS_AS(gamma_tilde(P("231"), P("312")), NotInInterval);
}

TEST_CASE("transitive reduction")
{
    CHECK(transitive_reduction(LabeledDag(3, {{1, 2}, {2, 3}, {1, 3}})).edges() == Edges{{1, 2}, {2, 3}});
    CHECK(transitive_reduction(LabeledDag(3, {{1, 2}, {2, 3}})).edges() == Edges{{1, 2}, {2, 3}});
    CHECK(transitive_reduction(LabeledDag(3)).edges().empty());
    CHECK_THROWS_AS(transitive_reduction(LabeledDag(2, {{1, 2}, {2, 1}})), CyclicInput);
}

TEST_CASE("reaches")
{
    const LabeledDag g(3, {{1, 2}, {2, 3}});
    CHECK(reaches(g, 1, 3));
    CHECK_FALSE(reaches(g, 3, 1));
    CHECK_FALSE(reaches(g, 2, 2));
}

TEST_CASE("linear extensions")
{
    CHECK(linear_extensions(LabeledDag(3, {{1, 2}, {2, 3}})) == std::vector<Permutation>{P("123")});
    CHECK(linear_extensions(LabeledDag(3, {{1, 2}, {3, 2}})) == std::vector<Permutation>{P("132"), P("312")});
    CHECK(linear_extensions(LabeledDag(3)).size() == 6);
}

TEST_CASE("is_tree")
{
    CHECK(is_tree(gamma(P("231"), P("231"))));
    CHECK_FALSE(is_tree(LabeledDag(4, {{1, 2}, {3, 4}})));
    CHECK(is_tree(LabeledDag(1)));
    CHECK_FALSE(is_tree(LabeledDag(3, {{1, 2}, {2, 3}, {1, 3}})));
}

TEST_CASE("induced subgraph relabels")
{
    const LabeledDag g(4, {{1, 3}, {3, 4}, {2, 4}});
    const std::vector<int> labels{1, 3, 4};
    CHECK(induced_subgraph(g, labels).edges() == Edges{{1, 2}, {2, 3}});
}

TEST_CASE("dot output")
{
    const auto dot = to_dot(gamma(P("231"), P("132")), "g");
    CHECK(dot.find("1 -> 2;") != std::string::npos);
    CHECK(dot.find("3 -> 2;") != std::string::npos);
}

TEST_CASE("gamma properties on S_4")
{
    for (const auto& w : all_permutations(4)) {
        const BruhatInterval iv(w);
        for (const auto& u : iv.elements()) {
            const auto gt = gamma_tilde(w, u);
            const auto g = gamma(w, u);
            CHECK(reachability(gt) == reachability(g));
            CHECK(transitive_reduction(g) == g);
            // u itself always extends its own graph.
            CHECK(is_linear_extension(reachability(gt), u));
            // Edges of Gamma~ go between values adjacent in the Bruhat sense.
            for (auto [a, b] : gt.edges()) {
                const auto v = left_mult(Transposition::of(a, b), u);
                CHECK(bruhat_leq(v, w));
                CHECK(std::abs(length(v) - length(u)) == 1);
            }
        }
    }
}
