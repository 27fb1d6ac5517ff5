#pragma once

#include "bip/order.hpp"
#include "bip/perm.hpp"
#include "bip/skeleton.hpp"

#include <memory>
#include <span>
#include <vector>

namespace bip {

/// An equivalence class [x]_w: the permutations whose braid cones lie in one
/// maximal cone of the normal fan of Q_w.
struct ThetaClass
{
    Permutation w;
    /// The unique member lying in [e, w]; minimal in right weak order.
    Permutation bot;
    /// Maximal member in right weak order.
    Permutation top;
    /// Lexicographic.
    std::vector<Permutation> members;
};

/// Index into sk of the unique u in [e, w] such that x extends Gamma~_w(u).
/// Throws InternalDisagreement when no such u or more than one exists.
std::size_t bot_index(const Skeleton& sk, const Permutation& x);

/// Top_w of the class whose bottom is sk[u]: the permutation whose left
/// inversions are the pairs c < d with no path c -> d in Gamma~_w(u).
Permutation top_of(const Skeleton& sk, std::size_t u);

/// Class tables of Theta_w over all of S_n plus the lattice operations of P_w.
/// Needs the cached weak order, so rank <= WeakOrder::kMaxCachedRank.
class ThetaStructure
{
public:
    explicit ThetaStructure(Permutation w);
    explicit ThetaStructure(std::shared_ptr<const Skeleton> sk);

    const Skeleton& skeleton() const { return *sk_; }
    const WeakOrder& weak() const { return *weak_; }

    /// Interval index of Bot_w(x), x given by weak-order index.
    std::size_t bot_of(std::size_t x) const { return bot_[x]; }
    /// Number of u in [e, w] whose graph x extends; 1 when classes partition S_n.
    int extension_count(std::size_t x) const { return hits_[x]; }
    /// Weak-order index of Top_w(u), u given by interval index.
    std::size_t top_of(std::size_t u) const { return top_[u]; }
    /// Weak-order indices of the members of the class with bottom sk[u].
    const Bitset& members(std::size_t u) const { return members_[u]; }

    Permutation bot(const Permutation& x) const;
    Permutation top(const Permutation& x) const;
    ThetaClass theta_class(const Permutation& x) const;

    /// Bot_w(Top_w(u) v_R Top_w(v)), on interval indices.
    std::size_t join(std::size_t u, std::size_t v) const;
    /// Join of all common lower bounds in P_w, on interval indices.
    std::size_t meet(std::size_t u, std::size_t v) const;
    Permutation join(const Permutation& u, const Permutation& v) const;
    Permutation meet(const Permutation& u, const Permutation& v) const;

    /// Iterated join of {s_i : i in generators, s_i <= w}, ascending; e when empty.
    Permutation parabolic_max(std::span<const int> generators) const;

private:
    std::shared_ptr<const Skeleton> sk_;
    const WeakOrder* weak_;
    std::vector<std::size_t> bot_;
    std::vector<int> hits_;
    std::vector<std::size_t> top_;
    std::vector<Bitset> members_;
};

Permutation bot(const Permutation& w, const Permutation& x);
Permutation top(const Permutation& w, const Permutation& x);
ThetaClass theta_class(const Permutation& w, const Permutation& x);
/// Throws NotInInterval.
Permutation join_w(const Permutation& w, const Permutation& u, const Permutation& v);
Permutation meet_w(const Permutation& w, const Permutation& u, const Permutation& v);
/// m(w, I) as the P_w-join of the generators in I below w.
Permutation parabolic_max(const Permutation& w, std::span<const int> generators);
/// Bruhat maximum of S_n(I) intersected with [e, w], by direct search.
Permutation parabolic_max_brute(const Permutation& w, std::span<const int> generators);
/// Bot_v(u). Throws RankMismatch.
Permutation mixed_meet(const Permutation& u, const Permutation& v);
/// Bruhat maximum of [e, u]_R intersected with [e, v], by direct search.
Permutation mixed_meet_brute(const Permutation& u, const Permutation& v);

} // namespace bip
