#include "bip/order.hpp"

#include "bip/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>

namespace bip {

namespace {

void require_same_rank(const Permutation& u, const Permutation& v)
{
    if (u.rank() != v.rank())
        throw RankMismatch("rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
}

} // namespace

std::string to_string(OrderKind kind)
{
    switch (kind) {
    case OrderKind::bruhat:
        return "bruhat";
    case OrderKind::right_weak:
        return "right-weak";
    case OrderKind::left_weak:
        return "left-weak";
    case OrderKind::skeleton:
        return "skeleton";
    }
    return "unknown";
}

bool length_lex_less(const Permutation& a, const Permutation& b)
{
    const int la = length(a);
    const int lb = length(b);
    if (la != lb)
        return la < lb;
    return a < b;
}

bool bruhat_leq(const Permutation& u, const Permutation& v)
{
    require_same_rank(u, v);
    const int n = u.rank();
    // For every prefix length i and threshold k: #{j <= i : u(j) >= k} <= same count for v.
    std::array<int, kMaxRank + 2> cu{};
    std::array<int, kMaxRank + 2> cv{};
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= u(i); ++k)
            ++cu[static_cast<std::size_t>(k)];
        for (int k = 1; k <= v(i); ++k)
            ++cv[static_cast<std::size_t>(k)];
        for (int k = 1; k <= n; ++k)
            if (cu[static_cast<std::size_t>(k)] > cv[static_cast<std::size_t>(k)])
                return false;
    }
    return true;
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& v)
{
    require_same_rank(u, v);
    const auto word = reduced_word(v);
    const int target = length(u);
    const int len = static_cast<int>(word.size());
    if (target > len)
        return false;
    std::vector<int> sub;
    for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        if (std::popcount(mask) != target)
            continue;
        sub.clear();
        for (int k = 0; k < len; ++k)
            if (mask & (1U << k))
                sub.push_back(word[static_cast<std::size_t>(k)]);
        // A word of length l(u) whose product is u is reduced.
        if (from_word(u.rank(), sub) == u)
            return true;
    }
    return false;
}

BruhatInterval::BruhatInterval(Permutation w) : top_(std::move(w))
{
    for (const auto& u : all_permutations(top_.rank()))
        if (bruhat_leq(u, top_))
            elements_.push_back(u);
    std::sort(elements_.begin(), elements_.end(), length_lex_less);
    lengths_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], i);
        lengths_.push_back(length(elements_[i]));
    }
}

std::optional<std::size_t> BruhatInterval::index_of(const Permutation& u) const
{
    auto it = index_.find(u);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t BruhatInterval::require_index(const Permutation& u) const
{
    auto idx = index_of(u);
    if (!idx)
        throw NotInInterval(u.to_string() + " is not below " + top_.to_string() + " in Bruhat order");
    return *idx;
}

IntervalPoset bruhat_lower_interval(const Permutation& w)
{
    BruhatInterval interval(w);
    IntervalPoset poset;
    poset.order_kind = OrderKind::bruhat;
    poset.top = w;
    poset.bottom = Permutation::identity(w.rank());
    poset.elements = interval.elements();
    const int n = w.rank();
    for (std::size_t lo = 0; lo < interval.size(); ++lo) {
        const auto& u = interval[lo];
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (u(i) > u(j))
                    continue;
                auto v = right_mult(u, Transposition{i, j});
                if (length(v) != interval.lengths()[lo] + 1)
                    continue;
                if (auto hi = interval.index_of(v))
                    poset.covers.emplace_back(static_cast<int>(lo), static_cast<int>(*hi));
            }
    }
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

bool weak_leq(const Permutation& u, const Permutation& v, Side side)
{
    require_same_rank(u, v);
    if (side == Side::right)
        return left_inversions(u).subset_of(left_inversions(v));
    return right_inversions(u).subset_of(right_inversions(v));
}

const WeakOrder& WeakOrder::of(int n)
{
    if (n < 0 || n > kMaxCachedRank)
        throw RankTooLarge("weak order is cached only up to rank " + std::to_string(kMaxCachedRank));
    static std::array<std::once_flag, kMaxCachedRank + 1> flags;
    static std::array<std::unique_ptr<WeakOrder>, kMaxCachedRank + 1> cache;
    auto slot = static_cast<std::size_t>(n);
    std::call_once(flags[slot], [&] { cache[slot].reset(new WeakOrder(n)); });
    return *cache[slot];
}

WeakOrder::WeakOrder(int n) : n_(n), elements_(all_permutations(n))
{
    std::sort(elements_.begin(), elements_.end(), length_lex_less);
    const auto size = elements_.size();
    by_lex_rank_.assign(size, 0);
    std::vector<std::uint64_t> inversions(size);
    for (std::size_t i = 0; i < size; ++i) {
        by_lex_rank_[lex_rank(elements_[i])] = i;
        inversions[i] = left_inversions(elements_[i]).mask();
    }
    up_.assign(size, Bitset(size));
    down_.assign(size, Bitset(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if ((inversions[i] & ~inversions[j]) == 0) {
                up_[i].set(j);
                down_[j].set(i);
            }
    up_covers_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (int k = 1; k < n; ++k)
            if (!has_right_descent(elements_[i], k))
                up_covers_[i].push_back(index_of(right_mult(elements_[i], Transposition{k, k + 1})));
        std::sort(up_covers_[i].begin(), up_covers_[i].end());
    }
}

std::size_t WeakOrder::index_of(const Permutation& u) const
{
    if (u.rank() != n_)
        throw RankMismatch("permutation rank differs from weak order rank");
    return by_lex_rank_[lex_rank(u)];
}

std::size_t WeakOrder::join(std::size_t i, std::size_t j) const
{
    const auto common = up_[i] & up_[j];
    // Elements are indexed by length first, so the first common upper bound is
    // the only candidate for the least one.
    const auto z = common.find_first();
    if (z == Bitset::npos || !common.is_subset_of(up_[z]))
        throw InternalDisagreement("weak order join does not exist");
    return z;
}

std::size_t WeakOrder::meet(std::size_t i, std::size_t j) const
{
    const auto common = down_[i] & down_[j];
    const auto z = common.find_last();
    if (z == Bitset::npos || !common.is_subset_of(down_[z]))
        throw InternalDisagreement("weak order meet does not exist");
    return z;
}

Permutation weak_join(const Permutation& u, const Permutation& v, Side side)
{
    require_same_rank(u, v);
    if (side == Side::left)
        return inverse(weak_join(inverse(u), inverse(v), Side::right));
    const auto& weak = WeakOrder::of(u.rank());
    return weak[weak.join(weak.index_of(u), weak.index_of(v))];
}

Permutation weak_meet(const Permutation& u, const Permutation& v, Side side)
{
    require_same_rank(u, v);
    if (side == Side::left)
        return inverse(weak_meet(inverse(u), inverse(v), Side::right));
    const auto& weak = WeakOrder::of(u.rank());
    return weak[weak.meet(weak.index_of(u), weak.index_of(v))];
}

bool is_closed(const RootSet& r)
{
    const int n = r.rank();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if (r.contains(a, b) && r.contains(b, c) && !r.contains(a, c))
                    return false;
    return true;
}

bool is_coclosed(const RootSet& r)
{
    return is_closed(r.complement());
}

bool is_biclosed(const RootSet& r)
{
    return is_closed(r) && is_coclosed(r);
}

Permutation perm_from_inversions(const RootSet& r)
{
    if (!is_biclosed(r))
        throw NotBiclosed("root set is not biclosed");
    const int n = r.rank();
    // The position of value a is one more than the number of values placed before it.
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (int a = 1; a <= n; ++a) {
        int before = 0;
        for (int b = 1; b <= n; ++b) {
            if (b == a)
                continue;
            if (b > a ? r.contains(a, b) : !r.contains(b, a))
                ++before;
        }
        if (word[static_cast<std::size_t>(before)] != 0)
            throw NotBiclosed("root set does not define a total order");
        word[static_cast<std::size_t>(before)] = a;
    }
    auto y = Permutation::from_one_line(word);
    if (left_inversions(y) != r)
        throw NotBiclosed("root set is not an inversion set");
    return y;
}

Permutation bruhat_max_of(std::span<const Permutation> subset)
{
    if (subset.empty())
        throw NoUniqueMax("empty subset has no maximum");
    const Permutation* best = &subset[0];
    for (const auto& x : subset)
        if (length(x) > length(*best))
            best = &x;
    for (const auto& x : subset)
        if (!bruhat_leq(x, *best))
            throw NoUniqueMax("no element dominates " + x.to_string());
    return *best;
}

bool lifting_check(const Permutation& v, const Permutation& w, int i)
{
    if (i < 1 || i >= w.rank() || !bruhat_leq(v, w) || !has_right_descent(w, i) || has_right_descent(v, i))
        throw PreconditionViolated("lifting property needs v <= w and s_i in D_R(w) \\ D_R(v)");
    const Transposition s{i, i + 1};
    return bruhat_leq(right_mult(v, s), w) && bruhat_leq(v, right_mult(w, s));
}

bool lifting_check_left(const Permutation& v, const Permutation& w, int i)
{
    auto in_left_descents = [i](const Permutation& x) { return x.position_of(i + 1) < x.position_of(i); };
    if (i < 1 || i >= w.rank() || !bruhat_leq(v, w) || !in_left_descents(w) || in_left_descents(v))
        throw PreconditionViolated("lifting property needs v <= w and s_i in D_L(w) \\ D_L(v)");
    const Transposition s{i, i + 1};
    return bruhat_leq(left_mult(s, v), w) && bruhat_leq(v, left_mult(s, w));
}

} // namespace bip
