#pragma once

#include "bip/bitset.hpp"
#include "bip/gamma.hpp"
#include "bip/order.hpp"
#include "bip/perm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace bip {

using BigInt = boost::multiprecision::cpp_int;

/// The 1-skeleton of Q_w: vertices [e, w], edges as (lower, upper) index pairs.
struct SkeletonGraph
{
    Permutation w;
    std::vector<Permutation> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degrees;
};

/// Everything about Q_w that the combinatorial routines need, computed once:
/// the graphs Gamma~_w(u) and Gamma_w(u) for every vertex, the polytope edges,
/// the cover relations of P_w and its up-sets. Immutable after construction.
class Skeleton
{
public:
    /// Throws InternalDisagreement if some edge is found from only one endpoint.
    explicit Skeleton(Permutation w);

    const Permutation& w() const { return interval_.top(); }
    int rank() const { return interval_.rank(); }
    const BruhatInterval& interval() const { return interval_; }
    std::size_t size() const { return interval_.size(); }
    const Permutation& operator[](std::size_t i) const { return interval_[i]; }
    std::size_t require_index(const Permutation& u) const { return interval_.require_index(u); }

    const LabeledDag& gamma_tilde(std::size_t u) const { return gamma_tilde_[u]; }
    const Reachability& reach(std::size_t u) const { return reach_[u]; }
    const LabeledDag& gamma(std::size_t u) const { return gamma_[u]; }

    /// |E_w(u)|.
    int degree(std::size_t u) const { return gamma_[u].edge_count(); }
    /// Upper covers in P_w, ascending index.
    const std::vector<std::size_t>& up_covers(std::size_t u) const { return up_covers_[u]; }
    const std::vector<std::size_t>& down_covers(std::size_t u) const { return down_covers_[u]; }
    /// (lower, upper) index pairs, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Neighbours of u in the skeleton, ascending.
    std::vector<std::size_t> neighbours(std::size_t u) const;

    /// Elements v with u <=_w v.
    const Bitset& up_set(std::size_t u) const { return up_set_[u]; }
    const Bitset& down_set(std::size_t u) const { return down_set_[u]; }
    bool leq(std::size_t u, std::size_t v) const { return up_set_[u].test(v); }

    SkeletonGraph graph() const;
    IntervalPoset poset() const;

private:
    BruhatInterval interval_;
    std::vector<LabeledDag> gamma_tilde_;
    std::vector<Reachability> reach_;
    std::vector<LabeledDag> gamma_;
    std::vector<std::vector<std::size_t>> up_covers_;
    std::vector<std::vector<std::size_t>> down_covers_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> up_set_;
    std::vector<Bitset> down_set_;
};

SkeletonGraph polytope_edges(const Permutation& w);
/// P_w with covers oriented towards greater length.
IntervalPoset skeleton_poset(const Permutation& w);
/// deg_w(u) = |E_w(u)|. Throws NotInInterval.
int degree(const Permutation& w, const Permutation& u);
/// Upper covers of u in P_w. Throws NotInInterval.
std::vector<Permutation> up_covers(const Permutation& w, const Permutation& u);
/// Number of maximal chains e = x_0 < ... < x_k = w in P_w.
BigInt maximal_chain_count(const Permutation& w);
BigInt maximal_chain_count(const Skeleton& sk);

} // namespace bip
