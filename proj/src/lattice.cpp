#include "bip/lattice.hpp"

#include "bip/error.hpp"

#include <algorithm>

namespace bip {

std::size_t bot_index(const Skeleton& sk, const Permutation& x)
{
    if (x.rank() != sk.rank())
        throw RankMismatch("rank mismatch between permutation and interval");
    std::size_t found = sk.size();
    for (std::size_t u = 0; u < sk.size(); ++u) {
        if (!is_linear_extension(sk.reach(u), x))
            continue;
        if (found != sk.size())
            throw InternalDisagreement(x.to_string() + " extends the graphs of two interval elements");
        found = u;
    }
    if (found == sk.size())
        throw InternalDisagreement(x.to_string() + " extends no graph of the interval");
    return found;
}

Permutation top_of(const Skeleton& sk, std::size_t u)
{
    const int n = sk.rank();
    const auto& reach = sk.reach(u);
    RootSet r(n);
    for (int c = 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
            if (!((reach[static_cast<std::size_t>(c - 1)] >> (d - 1)) & 1U))
                r.insert(Transposition{c, d});
    return perm_from_inversions(r);
}

ThetaStructure::ThetaStructure(Permutation w) : ThetaStructure(std::make_shared<const Skeleton>(std::move(w))) {}

ThetaStructure::ThetaStructure(std::shared_ptr<const Skeleton> sk)
    : sk_(std::move(sk)), weak_(&WeakOrder::of(sk_->rank()))
{
    const auto nx = weak_->size();
    bot_.assign(nx, sk_->size());
    hits_.assign(nx, 0);
    members_.assign(sk_->size(), Bitset(nx));
    for (std::size_t x = 0; x < nx; ++x) {
        const auto& px = (*weak_)[x];
        for (std::size_t u = 0; u < sk_->size(); ++u) {
            if (!is_linear_extension(sk_->reach(u), px))
                continue;
            if (hits_[x]++ == 0) {
                bot_[x] = u;
                members_[u].set(x);
            }
        }
        if (hits_[x] == 0)
            throw InternalDisagreement(px.to_string() + " extends no graph of the interval below " +
                                       sk_->w().to_string());
    }
    top_.reserve(sk_->size());
    for (std::size_t u = 0; u < sk_->size(); ++u)
        top_.push_back(weak_->index_of(bip::top_of(*sk_, u)));
}

Permutation ThetaStructure::bot(const Permutation& x) const
{
    return (*sk_)[bot_[weak_->index_of(x)]];
}

Permutation ThetaStructure::top(const Permutation& x) const
{
    return (*weak_)[top_[bot_[weak_->index_of(x)]]];
}

ThetaClass ThetaStructure::theta_class(const Permutation& x) const
{
    const auto u = bot_[weak_->index_of(x)];
    ThetaClass c;
    c.w = sk_->w();
    c.bot = (*sk_)[u];
    c.top = (*weak_)[top_[u]];
    members_[u].for_each([&](std::size_t y) { c.members.push_back((*weak_)[y]); });
    std::sort(c.members.begin(), c.members.end());
    return c;
}

std::size_t ThetaStructure::join(std::size_t u, std::size_t v) const
{
    return bot_[weak_->join(top_[u], top_[v])];
}

std::size_t ThetaStructure::meet(std::size_t u, std::size_t v) const
{
    const auto common = sk_->down_set(u) & sk_->down_set(v);
    std::size_t acc = 0;
    common.for_each([&](std::size_t z) { acc = join(acc, z); });
    return acc;
}

Permutation ThetaStructure::join(const Permutation& u, const Permutation& v) const
{
    return (*sk_)[join(sk_->require_index(u), sk_->require_index(v))];
}

Permutation ThetaStructure::meet(const Permutation& u, const Permutation& v) const
{
    return (*sk_)[meet(sk_->require_index(u), sk_->require_index(v))];
}

Permutation ThetaStructure::parabolic_max(std::span<const int> generators) const
{
    std::vector<int> sorted(generators.begin(), generators.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int n = sk_->rank();
    std::size_t acc = 0;
    for (int i : sorted) {
        if (i < 1 || i >= n)
            throw PreconditionViolated("s_" + std::to_string(i) + " is not a generator of S_" + std::to_string(n));
        if (auto idx = sk_->interval().index_of(Permutation::simple(n, i)))
            acc = join(acc, *idx);
    }
    return (*sk_)[acc];
}

Permutation bot(const Permutation& w, const Permutation& x)
{
    Skeleton sk(w);
    return sk[bot_index(sk, x)];
}

Permutation top(const Permutation& w, const Permutation& x)
{
    Skeleton sk(w);
    return top_of(sk, bot_index(sk, x));
}

ThetaClass theta_class(const Permutation& w, const Permutation& x)
{
    return ThetaStructure(w).theta_class(x);
}

Permutation join_w(const Permutation& w, const Permutation& u, const Permutation& v)
{
    return ThetaStructure(w).join(u, v);
}

Permutation meet_w(const Permutation& w, const Permutation& u, const Permutation& v)
{
    return ThetaStructure(w).meet(u, v);
}

Permutation parabolic_max(const Permutation& w, std::span<const int> generators)
{
    return ThetaStructure(w).parabolic_max(generators);
}

Permutation parabolic_max_brute(const Permutation& w, std::span<const int> generators)
{
    std::uint32_t allowed = 0;
    for (int i : generators)
        allowed |= 1U << (i - 1);
    std::vector<Permutation> candidates;
    for (const auto& u : all_permutations(w.rank()))
        if ((support_mask(u) & ~allowed) == 0 && bruhat_leq(u, w))
            candidates.push_back(u);
    return bruhat_max_of(candidates);
}

Permutation mixed_meet(const Permutation& u, const Permutation& v)
{
    if (u.rank() != v.rank())
        throw RankMismatch("mixed meet needs equal ranks");
    Skeleton sk(v);
    return sk[bot_index(sk, u)];
}

Permutation mixed_meet_brute(const Permutation& u, const Permutation& v)
{
    if (u.rank() != v.rank())
        throw RankMismatch("mixed meet needs equal ranks");
    std::vector<Permutation> candidates;
    for (const auto& y : all_permutations(u.rank()))
        if (weak_leq(y, u, Side::right) && bruhat_leq(y, v))
            candidates.push_back(y);
    return bruhat_max_of(candidates);
}

} // namespace bip
