#include "bip/perm.hpp"

#include "bip/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>

namespace bip {

struct PermAccess
{
    static Permutation blank(int n)
    {
        if (n < 0 || n > kMaxRank)
            throw RankTooLarge("rank " + std::to_string(n) + " exceeds the configured maximum " +
                               std::to_string(kMaxRank));
        Permutation p;
        p.n_ = n;
        return p;
    }
    static std::uint8_t& at(Permutation& p, int i) { return p.word_[static_cast<std::size_t>(i - 1)]; }
};

namespace {

void require_same_rank(const Permutation& u, const Permutation& v)
{
    if (u.rank() != v.rank())
        throw RankMismatch("rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
}

} // namespace

Transposition Transposition::of(int x, int y)
{
    if (x == y)
        throw PreconditionViolated("a transposition needs two distinct labels");
    return x < y ? Transposition{x, y} : Transposition{y, x};
}

int pair_index(int a, int b, int n)
{
    // Row a holds the pairs (a, a+1) .. (a, n).
    return (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
}

TranspositionSet::TranspositionSet(int n, std::initializer_list<Transposition> ts) : n_(n)
{
    for (auto t : ts)
        insert(t);
}

TranspositionSet TranspositionSet::all(int n)
{
    const int pairs = n * (n - 1) / 2;
    return TranspositionSet(n, pairs == 64 ? ~0ULL : ((1ULL << pairs) - 1));
}

bool TranspositionSet::contains(Transposition t) const
{
    return (mask_ >> pair_index(t.a, t.b, n_)) & 1ULL;
}

void TranspositionSet::insert(Transposition t)
{
    if (t.b > n_)
        throw PreconditionViolated("transposition outside rank");
    mask_ |= 1ULL << pair_index(t.a, t.b, n_);
}

void TranspositionSet::erase(Transposition t)
{
    mask_ &= ~(1ULL << pair_index(t.a, t.b, n_));
}

int TranspositionSet::size() const
{
    return std::popcount(mask_);
}

TranspositionSet TranspositionSet::complement() const
{
    return TranspositionSet(n_, all(n_).mask_ & ~mask_);
}

std::vector<Transposition> TranspositionSet::items() const
{
    std::vector<Transposition> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            if (contains(Transposition{a, b}))
                out.push_back({a, b});
    return out;
}

Permutation Permutation::identity(int n)
{
    auto p = PermAccess::blank(n);
    for (int i = 1; i <= n; ++i)
        PermAccess::at(p, i) = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::longest(int n)
{
    auto p = PermAccess::blank(n);
    for (int i = 1; i <= n; ++i)
        PermAccess::at(p, i) = static_cast<std::uint8_t>(n + 1 - i);
    return p;
}

Permutation Permutation::simple(int n, int i)
{
    if (i < 1 || i >= n)
        throw PreconditionViolated("s_" + std::to_string(i) + " is not a generator of S_" + std::to_string(n));
    return right_mult(identity(n), Transposition{i, i + 1});
}

Permutation Permutation::from_one_line(std::span<const int> values)
{
    const int n = static_cast<int>(values.size());
    if (n > kMaxRank)
        throw RankTooLarge("rank " + std::to_string(n) + " exceeds the configured maximum " +
                           std::to_string(kMaxRank));
    auto p = PermAccess::blank(n);
    std::uint32_t seen = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = values[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > n)
            throw NotAPermutation("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen & (1U << v))
            throw NotAPermutation("value " + std::to_string(v) + " repeated");
        seen |= 1U << v;
        PermAccess::at(p, i) = static_cast<std::uint8_t>(v);
    }
    return p;
}

Permutation Permutation::from_one_line(std::initializer_list<int> values)
{
    return from_one_line(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::parse(std::string_view text)
{
    if (text.empty())
        throw NotAPermutation("empty permutation");
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw NotAPermutation("unexpected character in permutation: " + std::string(text));
            values.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto token = text.substr(start, end - start);
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw NotAPermutation("malformed permutation: " + std::string(text));
            values.push_back(v);
            start = end + 1;
        }
    }
    return from_one_line(values);
}

int Permutation::position_of(int value) const
{
    for (int i = 0; i < n_; ++i)
        if (word_[static_cast<std::size_t>(i)] == value)
            return i + 1;
    throw PreconditionViolated("value not in permutation");
}

std::vector<int> Permutation::word() const
{
    return {word_.begin(), word_.begin() + n_};
}

bool Permutation::is_identity() const
{
    for (int i = 1; i <= n_; ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::string s;
    for (int i = 1; i <= n_; ++i) {
        if (i > 1)
            s += ',';
        s += std::to_string((*this)(i));
    }
    return s;
}

std::size_t Permutation::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i)
        h = h * 31 + word_[static_cast<std::size_t>(i)];
    return h;
}

bool Permutation::operator==(const Permutation& other) const
{
    return n_ == other.n_ && std::equal(word_.begin(), word_.begin() + n_, other.word_.begin());
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const
{
    if (auto c = n_ <=> other.n_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(word_.begin(), word_.begin() + n_, other.word_.begin(),
                                                  other.word_.begin() + n_);
}

std::ostream& operator<<(std::ostream& os, const Permutation& u)
{
    return os << u.to_string();
}

int length(const Permutation& u)
{
    int inv = 0;
    for (int i = 1; i <= u.rank(); ++i)
        for (int j = i + 1; j <= u.rank(); ++j)
            inv += u(i) > u(j);
    return inv;
}

Permutation inverse(const Permutation& u)
{
    auto p = PermAccess::blank(u.rank());
    for (int i = 1; i <= u.rank(); ++i)
        PermAccess::at(p, u(i)) = static_cast<std::uint8_t>(i);
    return p;
}

Permutation compose(const Permutation& u, const Permutation& v)
{
    require_same_rank(u, v);
    auto p = PermAccess::blank(u.rank());
    for (int i = 1; i <= u.rank(); ++i)
        PermAccess::at(p, i) = static_cast<std::uint8_t>(u(v(i)));
    return p;
}

Permutation left_mult(Transposition t, const Permutation& u)
{
    auto p = u;
    for (int i = 1; i <= u.rank(); ++i)
        PermAccess::at(p, i) = static_cast<std::uint8_t>(t.apply(u(i)));
    return p;
}

Permutation right_mult(const Permutation& u, Transposition t)
{
    if (t.b > u.rank())
        throw PreconditionViolated("transposition outside rank");
    auto p = u;
    std::swap(PermAccess::at(p, t.a), PermAccess::at(p, t.b));
    return p;
}

TranspositionSet left_inversions(const Permutation& u)
{
    TranspositionSet s(u.rank());
    for (int i = 1; i <= u.rank(); ++i)
        for (int j = i + 1; j <= u.rank(); ++j)
            if (u(i) > u(j))
                s.insert(Transposition{u(j), u(i)});
    return s;
}

TranspositionSet right_inversions(const Permutation& u)
{
    TranspositionSet s(u.rank());
    for (int i = 1; i <= u.rank(); ++i)
        for (int j = i + 1; j <= u.rank(); ++j)
            if (u(i) > u(j))
                s.insert(Transposition{i, j});
    return s;
}

std::vector<int> left_descents(const Permutation& u)
{
    std::vector<int> out;
    for (int i = 1; i < u.rank(); ++i)
        if (u.position_of(i + 1) < u.position_of(i))
            out.push_back(i);
    return out;
}

std::vector<int> right_descents(const Permutation& u)
{
    std::vector<int> out;
    for (int i = 1; i < u.rank(); ++i)
        if (u(i) > u(i + 1))
            out.push_back(i);
    return out;
}

bool has_right_descent(const Permutation& u, int i)
{
    return u(i) > u(i + 1);
}

int ascent_count(const Permutation& u)
{
    if (u.rank() == 0)
        return 0;
    return u.rank() - 1 - static_cast<int>(right_descents(u).size());
}

std::vector<int> reduced_word(const Permutation& u)
{
    // Strip right descents until the identity remains; the stripped generators,
    // read backwards, spell u.
    std::vector<int> word;
    auto x = u;
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int i = 1; i < x.rank(); ++i) {
            if (x(i) > x(i + 1)) {
                x = right_mult(x, Transposition{i, i + 1});
                word.push_back(i);
                stripped = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation from_word(int n, std::span<const int> generators)
{
    auto x = Permutation::identity(n);
    for (int i : generators)
        x = right_mult(x, Transposition{i, i + 1});
    return x;
}

std::uint32_t support_mask(const Permutation& u)
{
    std::uint32_t mask = 0;
    int prefix_max = 0;
    for (int i = 1; i < u.rank(); ++i) {
        prefix_max = std::max(prefix_max, u(i));
        if (prefix_max > i)
            mask |= 1U << (i - 1);
    }
    return mask;
}

std::vector<int> support(const Permutation& u)
{
    std::vector<int> out;
    const auto mask = support_mask(u);
    for (int i = 1; i < u.rank(); ++i)
        if (mask & (1U << (i - 1)))
            out.push_back(i);
    return out;
}

Permutation flatten(std::span<const int> values)
{
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateValue("flatten needs distinct values");
    std::vector<int> ranks;
    ranks.reserve(values.size());
    for (int v : values)
        ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return Permutation::from_one_line(ranks);
}

std::vector<int> vertex_vector(const Permutation& u)
{
    return inverse(u).word();
}

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

std::size_t lex_rank(const Permutation& u)
{
    const int n = u.rank();
    std::size_t r = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j <= n; ++j)
            smaller_later += u(j) < u(i);
        r += static_cast<std::size_t>(smaller_later) * factorial(n - i);
    }
    return r;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        word[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Permutation::from_one_line(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

} // namespace bip
