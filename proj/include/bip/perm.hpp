#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#ifndef BIP_MAX_RANK
#define BIP_MAX_RANK 10
#endif

namespace bip {

/// Largest rank n a Permutation can hold. Exhaustive sweeps only go to n = 6.
inline constexpr int kMaxRank = BIP_MAX_RANK;
static_assert(kMaxRank >= 1 && kMaxRank <= 11, "transposition masks are 64 bits wide");

/// A transposition (a b) with 1 <= a < b <= n. It also stands for the
/// positive root e_a - e_b.
struct Transposition
{
    int a = 1;
    int b = 2;

    /// Canonical form of (x y) regardless of argument order.
    static Transposition of(int x, int y);

    bool is_simple() const { return b == a + 1; }
    /// Image of a label under the transposition.
    int apply(int value) const { return value == a ? b : value == b ? a : value; }

    auto operator<=>(const Transposition&) const = default;
};

/// Index of the pair (a, b), a < b, in a dense enumeration of all pairs of [n].
int pair_index(int a, int b, int n);

/// A set of transpositions of [n], stored as a bitmask over pair_index.
class TranspositionSet
{
public:
    TranspositionSet() = default;
    explicit TranspositionSet(int n, std::uint64_t mask = 0) : n_(n), mask_(mask) {}
    TranspositionSet(int n, std::initializer_list<Transposition> ts);

    static TranspositionSet all(int n);

    int rank() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(Transposition t) const;
    bool contains(int a, int b) const { return contains(Transposition::of(a, b)); }
    void insert(Transposition t);
    void erase(Transposition t);
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool subset_of(const TranspositionSet& other) const { return (mask_ & ~other.mask_) == 0; }
    TranspositionSet complement() const;
    std::vector<Transposition> items() const;

    bool operator==(const TranspositionSet&) const = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

struct PermAccess;

/// A permutation of [n] in one-line notation: w(i) = word[i-1].
class Permutation
{
public:
    Permutation() = default;

    static Permutation identity(int n);
    /// The longest element w_0 = n ... 2 1.
    static Permutation longest(int n);
    /// The simple generator s_i = (i i+1).
    static Permutation simple(int n, int i);
    /// Throws NotAPermutation unless values is a bijection of {1..n}.
    static Permutation from_one_line(std::span<const int> values);
    static Permutation from_one_line(std::initializer_list<int> values);
    /// Accepts "231" (n <= 9) or "2,3,1".
    static Permutation parse(std::string_view text);

    int rank() const { return n_; }
    /// w(i) for 1 <= i <= n.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    /// w^{-1}(value).
    int position_of(int value) const;
    std::vector<int> word() const;
    bool is_identity() const;

    /// Canonical comma-separated form.
    std::string to_string() const;

    std::size_t hash() const;

    bool operator==(const Permutation& other) const;
    /// Rank first, then lexicographic on the word.
    std::strong_ordering operator<=>(const Permutation& other) const;

private:
    friend struct PermAccess;
    std::array<std::uint8_t, kMaxRank> word_{};
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Permutation& u);

int length(const Permutation& u);
Permutation inverse(const Permutation& u);
/// (u o v)(i) = u(v(i)). Throws RankMismatch.
Permutation compose(const Permutation& u, const Permutation& v);
/// t * u: swaps the values a and b in u's word.
Permutation left_mult(Transposition t, const Permutation& u);
/// u * t: swaps the positions a and b in u's word.
Permutation right_mult(const Permutation& u, Transposition t);

/// T_L(u): pairs of values a < b with b before a in the word.
TranspositionSet left_inversions(const Permutation& u);
/// T_R(u) = T_L(u^{-1}): pairs of positions i < j with u(i) > u(j).
TranspositionSet right_inversions(const Permutation& u);

/// Indices i with s_i in D_L(u), ascending.
std::vector<int> left_descents(const Permutation& u);
/// Indices i with s_i in D_R(u), ascending.
std::vector<int> right_descents(const Permutation& u);
bool has_right_descent(const Permutation& u, int i);
/// n - 1 - |D_R(u)|.
int ascent_count(const Permutation& u);

/// Some reduced word, as generator indices: u = s_{r[0]} s_{r[1]} ...
std::vector<int> reduced_word(const Permutation& u);
/// Product s_{i_1} ... s_{i_k} in S_n.
Permutation from_word(int n, std::span<const int> generators);
/// Generator indices occurring in any reduced word, ascending.
std::vector<int> support(const Permutation& u);
/// Bit i-1 set for each s_i in the support.
std::uint32_t support_mask(const Permutation& u);

/// Standardization of distinct values to a permutation of [k]. Throws DuplicateValue.
Permutation flatten(std::span<const int> values);

/// (u^{-1}(1), ..., u^{-1}(n)).
std::vector<int> vertex_vector(const Permutation& u);

/// Position of u in the lexicographic listing of S_n.
std::size_t lex_rank(const Permutation& u);
std::size_t factorial(int n);
/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace bip

template <>
struct std::hash<bip::Permutation>
{
    std::size_t operator()(const bip::Permutation& u) const noexcept { return u.hash(); }
};
