#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/error.hpp"
#include "bip/order.hpp"

using namespace bip;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
const Permutation s1 = Permutation::simple(3, 1);
const Permutation s2 = Permutation::simple(3, 2);
}

TEST_CASE("bruhat_leq examples")
{
    for (const auto& v : all_permutations(4))
        CHECK(bruhat_leq(Permutation::identity(4), v));
    CHECK_FALSE(bruhat_leq(P("312"), P("231")));
    CHECK(bruhat_leq(P("213"), P("231")));
}

TEST_CASE("tableau criterion agrees with subword property")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& u : all_permutations(n))
            for (const auto& v : all_permutations(n))
                CHECK(bruhat_leq(u, v) == bruhat_leq_subword(u, v));
}

TEST_CASE("lower intervals")
{
    auto e = bruhat_lower_interval(Permutation::identity(3));
    CHECK(e.elements.size() == 1);
    CHECK(e.covers.empty());

    auto d = bruhat_lower_interval(P("231"));
    CHECK(d.elements == std::vector<Permutation>{P("123"), P("132"), P("213"), P("231")});
    CHECK(d.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    CHECK(bruhat_lower_interval(Permutation::longest(3)).elements.size() == 6);
}

TEST_CASE("weak order examples")
{
    for (const auto& v : all_permutations(3))
        CHECK(weak_leq(Permutation::identity(3), v, Side::right));
    CHECK(weak_leq(P("213"), P("231"), Side::right));
    CHECK_FALSE(weak_leq(P("132"), P("231"), Side::right));
    CHECK(weak_leq(P("132"), P("231"), Side::left));
}

TEST_CASE("weak order covers are right multiplication by simple generators")
{
    const auto& wo = WeakOrder::of(4);
    for (std::size_t i = 0; i < wo.size(); ++i)
        for (auto j : wo.up_covers(i)) {
            const auto& u = wo[i];
            const auto& v = wo[j];
            CHECK(length(v) == length(u) + 1);
            bool found = false;
            for (int k = 1; k < 4; ++k)
                found = found || right_mult(u, Transposition::of(k, k + 1)) == v;
            CHECK(found);
        }
}

TEST_CASE("weak joins and meets")
{
    CHECK(weak_join(s1, s2, Side::right) == Permutation::longest(3));
    CHECK(weak_meet(s1, s2, Side::right) == Permutation::identity(3));
    for (const auto& u : all_permutations(3))
        CHECK(weak_join(u, Permutation::identity(3), Side::right) == u);

    // Exhaustive lattice check against brute-force bounds on S_4.
    const auto s4 = all_permutations(4);
    for (auto side : {Side::right, Side::left})
        for (const auto& u : s4)
            for (const auto& v : s4) {
                const auto j = weak_join(u, v, side);
                const auto m = weak_meet(u, v, side);
                for (const auto& x : s4) {
                    const bool upper = weak_leq(u, x, side) && weak_leq(v, x, side);
                    const bool lower = weak_leq(x, u, side) && weak_leq(x, v, side);
                    CHECK(upper == weak_leq(j, x, side));
                    CHECK(lower == weak_leq(x, m, side));
                }
            }
}

TEST_CASE("weak order cache bounds")
{
    CHECK_THROWS_AS(WeakOrder::of(WeakOrder::kMaxCachedRank + 1), RankTooLarge);
}

TEST_CASE("biclosed sets")
{
    CHECK(is_biclosed(TranspositionSet(3)));
    CHECK(perm_from_inversions(TranspositionSet(3)) == Permutation::identity(3));
    const TranspositionSet r(3, {{1, 3}, {2, 3}});
    CHECK(is_biclosed(r));
    CHECK(perm_from_inversions(r) == P("312"));
    const TranspositionSet bad(3, {{1, 3}});
    CHECK(is_closed(bad));
    CHECK_FALSE(is_coclosed(bad));
    CHECK_FALSE(is_biclosed(bad));
    CHECK_THROWS_AS(perm_from_inversions(bad), NotBiclosed);
}

TEST_CASE("biclosed sets are exactly inversion sets")
{
    for (int n = 1; n <= 4; ++n) {
        int biclosed = 0;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            const TranspositionSet r(n, mask);
            if (!is_biclosed(r))
                continue;
            ++biclosed;
            CHECK(left_inversions(perm_from_inversions(r)) == r);
        }
        CHECK(biclosed == static_cast<int>(factorial(n)));
    }
}

TEST_CASE("bruhat_max_of")
{
    const std::vector<Permutation> e{Permutation::identity(3)};
    CHECK(bruhat_max_of(e) == Permutation::identity(3));
    const std::vector<Permutation> diamond{P("123"), s1, s2, P("231")};
    CHECK(bruhat_max_of(diamond) == P("231"));
    const std::vector<Permutation> atoms{s1, s2};
    CHECK_THROWS_AS(bruhat_max_of(atoms), NoUniqueMax);
    CHECK_THROWS_AS(bruhat_max_of(std::span<const Permutation>{}), NoUniqueMax);
}

TEST_CASE("lifting property")
{
    CHECK(lifting_check(Permutation::identity(2), Permutation::simple(2, 1), 1));
    CHECK_THROWS_AS(lifting_check(s2, P("231"), 2), PreconditionViolated);
    CHECK(lifting_check(s1, P("231"), 2));
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            for (const auto& v : all_permutations(n))
                for (int i = 1; i < n; ++i) {
                    if (bruhat_leq(v, w) && has_right_descent(w, i) && !has_right_descent(v, i))
                        CHECK(lifting_check(v, w, i));
                    const bool left_ok = bruhat_leq(v, w) && has_right_descent(inverse(w), i) &&
                                         !has_right_descent(inverse(v), i);
                    if (left_ok)
                        CHECK(lifting_check_left(v, w, i));
                }
}
