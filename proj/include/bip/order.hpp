#pragma once

#include "bip/bitset.hpp"
#include "bip/perm.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bip {

enum class OrderKind { bruhat, right_weak, left_weak, skeleton };
enum class Side { left, right };

std::string to_string(OrderKind kind);

/// Positive roots e_a - e_b, each represented by its transposition (a b).
using RootSet = TranspositionSet;

/// A finite poset on permutations given by explicit cover relations.
struct IntervalPoset
{
    OrderKind order_kind = OrderKind::bruhat;
    Permutation top;
    Permutation bottom;
    /// Sorted by (length, lexicographic word).
    std::vector<Permutation> elements;
    /// (lower, upper) indices into elements, sorted.
    std::vector<std::pair<int, int>> covers;
};

/// Bruhat order via the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Bruhat order via the subword property: some subword of a reduced word of v
/// is a reduced word of u. Exponential; used to cross-check bruhat_leq.
bool bruhat_leq_subword(const Permutation& u, const Permutation& v);

/// Ordering used for every materialized list of permutations.
bool length_lex_less(const Permutation& a, const Permutation& b);

/// The lower Bruhat interval [e, w] with an index for membership queries.
class BruhatInterval
{
public:
    explicit BruhatInterval(Permutation w);

    const Permutation& top() const { return top_; }
    int rank() const { return top_.rank(); }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<int>& lengths() const { return lengths_; }

    std::optional<std::size_t> index_of(const Permutation& u) const;
    bool contains(const Permutation& u) const { return index_.contains(u); }
    /// Throws NotInInterval.
    std::size_t require_index(const Permutation& u) const;

private:
    Permutation top_;
    std::vector<Permutation> elements_;
    std::vector<int> lengths_;
    std::unordered_map<Permutation, std::size_t> index_;
};

IntervalPoset bruhat_lower_interval(const Permutation& w);

/// Right weak order compares T_L, left weak order compares T_R.
bool weak_leq(const Permutation& u, const Permutation& v, Side side);

/// Right weak order on S_n, materialized once per rank and shared read-only.
class WeakOrder
{
public:
    static constexpr int kMaxCachedRank = 7;

    /// Thread-safe; builds on first use. Throws RankTooLarge above kMaxCachedRank.
    static const WeakOrder& of(int n);

    int rank() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    /// Sorted by (length, lexicographic word).
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& operator[](std::size_t i) const { return elements_[i]; }
    std::size_t index_of(const Permutation& u) const;

    /// Elements >=_R elements_[i].
    const Bitset& up(std::size_t i) const { return up_[i]; }
    /// Elements <=_R elements_[i].
    const Bitset& down(std::size_t i) const { return down_[i]; }
    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
    /// Upper covers x s, ascending index.
    const std::vector<std::size_t>& up_covers(std::size_t i) const { return up_covers_[i]; }

    std::size_t join(std::size_t i, std::size_t j) const;
    std::size_t meet(std::size_t i, std::size_t j) const;

private:
    explicit WeakOrder(int n);

    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> by_lex_rank_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::vector<std::size_t>> up_covers_;
};

Permutation weak_join(const Permutation& u, const Permutation& v, Side side);
Permutation weak_meet(const Permutation& u, const Permutation& v, Side side);

/// alpha + beta in A whenever alpha, beta in A and alpha + beta is a positive root.
bool is_closed(const RootSet& r);
bool is_coclosed(const RootSet& r);
bool is_biclosed(const RootSet& r);
/// The unique y with T_L(y) = r. Throws NotBiclosed.
Permutation perm_from_inversions(const RootSet& r);

/// The element dominating every other one in Bruhat order. Throws NoUniqueMax
/// (including for an empty subset).
Permutation bruhat_max_of(std::span<const Permutation> subset);

/// Checks the conclusions v s <= w and v <= w s of the right lifting property
/// for the simple generator s_i. Throws PreconditionViolated unless v <= w and
/// s_i is in D_R(w) \ D_R(v).
bool lifting_check(const Permutation& v, const Permutation& w, int i);
/// Left-handed version: s v <= w and v <= s w when s_i in D_L(w) \ D_L(v).
bool lifting_check_left(const Permutation& v, const Permutation& w, int i);

} // namespace bip
