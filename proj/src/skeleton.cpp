#include "bip/skeleton.hpp"

#include "bip/error.hpp"

#include <algorithm>
#include <map>

namespace bip {

Skeleton::Skeleton(Permutation w) : interval_(std::move(w))
{
    const auto size = interval_.size();
    const auto& top = interval_.top();
    gamma_tilde_.reserve(size);
    reach_.reserve(size);
    gamma_.reserve(size);
    for (const auto& u : interval_.elements()) {
        gamma_tilde_.push_back(bip::gamma_tilde(top, u));
        reach_.push_back(reachability(gamma_tilde_.back()));
        gamma_.push_back(transitive_reduction(gamma_tilde_.back()));
    }

    // Each polytope edge must be produced once from each endpoint.
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 0; i < size; ++i) {
        const auto& u = interval_[i];
        for (auto [a, b] : gamma_[i].edges()) {
            const auto v = left_mult(Transposition::of(a, b), u);
            const auto j = interval_.index_of(v);
            if (!j)
                throw InternalDisagreement("edge of Gamma leaves the interval at " + u.to_string());
            const int lo = static_cast<int>(std::min(i, *j));
            const int hi = static_cast<int>(std::max(i, *j));
            ++seen[{lo, hi}];
        }
    }
    up_covers_.resize(size);
    down_covers_.resize(size);
    for (auto [key, count] : seen) {
        if (count != 2)
            throw InternalDisagreement("skeleton edge " + interval_[static_cast<std::size_t>(key.first)].to_string() +
                                       " -- " + interval_[static_cast<std::size_t>(key.second)].to_string() +
                                       " found from one endpoint only");
        edges_.push_back(key);
        auto lo = static_cast<std::size_t>(key.first);
        auto hi = static_cast<std::size_t>(key.second);
        if (interval_.lengths()[lo] >= interval_.lengths()[hi])
            throw InternalDisagreement("skeleton edge joins elements of equal length");
        up_covers_[lo].push_back(hi);
        down_covers_[hi].push_back(lo);
    }
    for (auto& c : up_covers_)
        std::sort(c.begin(), c.end());
    for (auto& c : down_covers_)
        std::sort(c.begin(), c.end());

    // Indices follow length, so covers always point to larger indices.
    up_set_.assign(size, Bitset(size));
    for (std::size_t i = size; i-- > 0;) {
        up_set_[i].set(i);
        for (auto j : up_covers_[i])
            up_set_[i] |= up_set_[j];
    }
    down_set_.assign(size, Bitset(size));
    for (std::size_t i = 0; i < size; ++i)
        up_set_[i].for_each([&](std::size_t j) { down_set_[j].set(i); });
}

std::vector<std::size_t> Skeleton::neighbours(std::size_t u) const
{
    std::vector<std::size_t> out(down_covers_[u]);
    out.insert(out.end(), up_covers_[u].begin(), up_covers_[u].end());
    std::sort(out.begin(), out.end());
    return out;
}

SkeletonGraph Skeleton::graph() const
{
    SkeletonGraph g;
    g.w = w();
    g.vertices = interval_.elements();
    g.edges = edges_;
    for (std::size_t i = 0; i < size(); ++i)
        g.degrees.push_back(degree(i));
    return g;
}

IntervalPoset Skeleton::poset() const
{
    IntervalPoset p;
    p.order_kind = OrderKind::skeleton;
    p.top = w();
    p.bottom = Permutation::identity(rank());
    p.elements = interval_.elements();
    p.covers = edges_;
    return p;
}

SkeletonGraph polytope_edges(const Permutation& w)
{
    return Skeleton(w).graph();
}

IntervalPoset skeleton_poset(const Permutation& w)
{
    return Skeleton(w).poset();
}

int degree(const Permutation& w, const Permutation& u)
{
    if (!bruhat_leq(u, w))
        throw NotInInterval(u.to_string() + " is not below " + w.to_string() + " in Bruhat order");
    return gamma(w, u).edge_count();
}

std::vector<Permutation> up_covers(const Permutation& w, const Permutation& u)
{
    Skeleton sk(w);
    std::vector<Permutation> out;
    for (auto j : sk.up_covers(sk.require_index(u)))
        out.push_back(sk[j]);
    return out;
}

BigInt maximal_chain_count(const Skeleton& sk)
{
    std::vector<BigInt> chains(sk.size());
    chains[0] = 1;
    for (std::size_t i = 1; i < sk.size(); ++i)
        for (auto j : sk.down_covers(i))
            chains[i] += chains[j];
    return chains.back();
}

BigInt maximal_chain_count(const Permutation& w)
{
    return maximal_chain_count(Skeleton(w));
}

} // namespace bip
