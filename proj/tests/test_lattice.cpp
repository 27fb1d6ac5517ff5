#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/error.hpp"
#include "bip/lattice.hpp"

using namespace bip;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
const Permutation s1 = Permutation::simple(3, 1);
const Permutation s2 = Permutation::simple(3, 2);
}

TEST_CASE("bot")
{
    const BruhatInterval iv(P("231"));
    for (const auto& x : iv.elements())
        CHECK(bot(P("231"), x) == x);
    CHECK(bot(P("231"), P("312")) == P("132"));
    CHECK(bot(P("231"), Permutation::longest(3)) == P("231"));
}

TEST_CASE("top")
{
    for (const auto& x : all_permutations(4))
        CHECK(top(Permutation::longest(4), x) == x);
    CHECK(top(P("231"), P("132")) == P("312"));
    CHECK(top(P("231"), P("231")) == P("321"));
}

TEST_CASE("theta classes")
{
    CHECK(theta_class(P("231"), Permutation::identity(3)).members == std::vector<Permutation>{P("123")});
    const auto c = theta_class(P("231"), P("312"));
    CHECK(c.members == std::vector<Permutation>{P("132"), P("312")});
    CHECK(c.bot == P("132"));
    CHECK(c.top == P("312"));
    CHECK(theta_class(Permutation::longest(3), P("213")).members == std::vector<Permutation>{P("213")});
}

TEST_CASE("join and meet")
{
    const BruhatInterval iv(P("231"));
    for (const auto& u : iv.elements())
        CHECK(join_w(P("231"), u, Permutation::identity(3)) == u);
    CHECK(join_w(P("231"), s1, s2) == P("231"));
    CHECK(meet_w(P("231"), s1, s2) == Permutation::identity(3));
    CHECK_THROWS_AS(join_w(P("231"), P("312"), s1), NotInInterval);
}

TEST_CASE("join is the least upper bound in P_w on S_4")
{
    for (const auto& w : all_permutations(4)) {
        const ThetaStructure ts(w);
        const auto& sk = ts.skeleton();
        for (std::size_t u = 0; u < sk.size(); ++u)
            for (std::size_t v = 0; v < sk.size(); ++v) {
                const auto j = ts.join(u, v);
                const auto m = ts.meet(u, v);
                for (std::size_t x = 0; x < sk.size(); ++x) {
                    CHECK((sk.leq(u, x) && sk.leq(v, x)) == sk.leq(j, x));
                    CHECK((sk.leq(x, u) && sk.leq(x, v)) == sk.leq(x, m));
                }
            }
    }
}

TEST_CASE("parabolic maximum")
{
    CHECK(parabolic_max(P("231"), std::vector<int>{}) == Permutation::identity(3));
    CHECK(parabolic_max(P("231"), std::vector<int>{1, 2}) == P("231"));
    CHECK(parabolic_max(P("231"), std::vector<int>{1}) == s1);
    for (const auto& w : all_permutations(4))
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::vector<int> gens;
            for (int i = 1; i <= 3; ++i)
                if (mask & (1U << (i - 1)))
                    gens.push_back(i);
            CHECK(parabolic_max(w, gens) == parabolic_max_brute(w, gens));
        }
}

TEST_CASE("mixed meet")
{
    for (const auto& u : all_permutations(3)) {
        CHECK(mixed_meet(u, Permutation::longest(3)) == u);
        CHECK(mixed_meet(Permutation::identity(3), u) == Permutation::identity(3));
    }
    CHECK(mixed_meet(P("312"), P("231")) == P("132"));
    CHECK(mixed_meet_brute(P("312"), P("231")) == P("132"));
    CHECK_THROWS_AS(mixed_meet(P("21"), P("231")), RankMismatch);
}
