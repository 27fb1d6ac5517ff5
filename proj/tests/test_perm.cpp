#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bip/error.hpp"
#include "bip/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace bip;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
}

TEST_CASE("from_one_line validates")
{
    CHECK(Permutation::from_one_line({1, 2, 3}) == Permutation::identity(3));
    CHECK(length(Permutation::from_one_line({2, 3, 1})) == 2);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 2, 2}), NotAPermutation);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), NotAPermutation);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 4, 2}), NotAPermutation);
}

TEST_CASE("parse accepts both spellings")
{
    CHECK(P("231") == P("2,3,1"));
    CHECK(P("231").to_string() == "2,3,1");
    CHECK(P("10,9,8,7,6,5,4,3,2,1") == Permutation::longest(10));
    CHECK_THROWS_AS(P("2x1"), NotAPermutation);
    CHECK_THROWS_AS(P(""), NotAPermutation);
}

TEST_CASE("length")
{
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(Permutation::longest(4)) == 6);
    CHECK(length(P("231")) == 2);
}

TEST_CASE("inverse and compose")
{
    CHECK(inverse(P("231")) == P("312"));
    CHECK(compose(Permutation::simple(3, 1), Permutation::simple(3, 2)) == P("231"));
    for (const auto& u : all_permutations(4))
        CHECK(compose(u, inverse(u)).is_identity());
    CHECK_THROWS_AS(compose(P("21"), P("213")), RankMismatch);
}

TEST_CASE("left and right multiplication")
{
    CHECK(left_mult(Transposition::of(1, 2), Permutation::identity(3)) == P("213"));
    CHECK(right_mult(P("231"), Transposition::of(1, 3)) == P("132"));
    CHECK(left_mult(Transposition::of(1, 3), P("231")) == P("213"));
    for (const auto& u : all_permutations(4))
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) {
                const auto t = Transposition::of(a, b);
                const auto tp = Permutation::from_one_line(
                    std::vector<int>{t.apply(1), t.apply(2), t.apply(3), t.apply(4)});
                CHECK(left_mult(t, u) == compose(tp, u));
                CHECK(right_mult(u, t) == compose(u, tp));
            }
}

TEST_CASE("inversion sets")
{
    CHECK(left_inversions(Permutation::identity(3)).empty());
    CHECK(left_inversions(P("231")) == TranspositionSet(3, {{1, 2}, {1, 3}}));
    CHECK(left_inversions(Permutation::longest(4)) == TranspositionSet::all(4));
    for (const auto& u : all_permutations(5)) {
        CHECK(left_inversions(u).size() == length(u));
        CHECK(right_inversions(u) == left_inversions(inverse(u)));
    }
}

TEST_CASE("descents and ascents")
{
    CHECK(ascent_count(Permutation::identity(5)) == 4);
    CHECK(ascent_count(Permutation::longest(5)) == 0);
    CHECK(ascent_count(P("231")) == 1);
    CHECK(right_descents(P("231")) == std::vector<int>{2});
    CHECK(left_descents(P("231")) == std::vector<int>{1});
    for (const auto& u : all_permutations(4))
        CHECK(left_descents(u) == right_descents(inverse(u)));
}

TEST_CASE("reduced words and support")
{
    CHECK(reduced_word(Permutation::identity(3)).empty());
    CHECK(reduced_word(P("231")) == std::vector<int>{1, 2});
    CHECK(support(P("231")) == std::vector<int>{1, 2});
    CHECK(support(P("2143")) == std::vector<int>{1, 3});
    for (const auto& u : all_permutations(5)) {
        const auto r = reduced_word(u);
        CHECK(static_cast<int>(r.size()) == length(u));
        CHECK(from_word(5, r) == u);
        std::set<int> letters(r.begin(), r.end());
        CHECK(std::vector<int>(letters.begin(), letters.end()) == support(u));
    }
}

TEST_CASE("flatten")
{
    CHECK(flatten(std::vector<int>{5, 2, 9}) == P("213"));
    CHECK(flatten(std::vector<int>{3, 1, 2}) == P("312"));
    CHECK(flatten(std::vector<int>{7}) == Permutation::identity(1));
    CHECK_THROWS_AS(flatten(std::vector<int>{4, 4}), DuplicateValue);
}

TEST_CASE("vertex vectors")
{
    CHECK(vertex_vector(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(vertex_vector(P("231")) == std::vector<int>{3, 1, 2});
    CHECK(vertex_vector(P("213")) == std::vector<int>{2, 1, 3});
}

TEST_CASE("lexicographic enumeration")
{
    const auto s4 = all_permutations(4);
    CHECK(s4.size() == 24);
    CHECK(std::is_sorted(s4.begin(), s4.end()));
    for (std::size_t i = 0; i < s4.size(); ++i)
        CHECK(lex_rank(s4[i]) == i);
}

TEST_CASE("multiplying by a simple generator changes length by one")
{
    for (const auto& u : all_permutations(5))
        for (int i = 1; i < 5; ++i) {
            const auto us = right_mult(u, Transposition::of(i, i + 1));
            CHECK(length(us) == length(u) + (has_right_descent(u, i) ? -1 : 1));
        }
}

TEST_CASE("flatten is idempotent on permutations")
{
    for (const auto& u : all_permutations(4)) {
        const auto w = u.word();
        CHECK(flatten(w) == u);
    }
}

TEST_CASE("vertex vectors are injective with constant coordinate sum")
{
    std::set<std::vector<int>> seen;
    for (const auto& u : all_permutations(5)) {
        const auto v = vertex_vector(u);
        CHECK(std::accumulate(v.begin(), v.end(), 0) == 15);
        CHECK(seen.insert(v).second);
    }
}
