#include "bip/gamma.hpp"

#include "bip/error.hpp"
#include "bip/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace bip {

LabeledDag::LabeledDag(int n) : n_(n)
{
    if (n < 0 || n > kMaxRank)
        throw RankTooLarge("graph rank exceeds the configured maximum");
}

LabeledDag::LabeledDag(int n, std::initializer_list<std::pair<int, int>> edges) : LabeledDag(n)
{
    for (auto [a, b] : edges)
        add_edge(a, b);
}

void LabeledDag::add_edge(int a, int b)
{
    if (a < 1 || b < 1 || a > n_ || b > n_ || a == b)
        throw PreconditionViolated("edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not valid");
    out_[idx(a)] |= static_cast<LabelMask>(1U << (b - 1));
    reduced_ = false;
}

std::vector<std::pair<int, int>> LabeledDag::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (has_edge(a, b))
                out.emplace_back(a, b);
    return out;
}

int LabeledDag::edge_count() const
{
    int c = 0;
    for (int a = 1; a <= n_; ++a)
        c += std::popcount(out_[idx(a)]);
    return c;
}

Reachability reachability(const LabeledDag& g)
{
    const int n = g.rank();
    Reachability r{};
    for (int a = 1; a <= n; ++a)
        r[static_cast<std::size_t>(a - 1)] = g.successors(a);
    // Warshall: after round k, paths may pass through labels 1..k.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if ((r[static_cast<std::size_t>(a)] >> k) & 1U)
                r[static_cast<std::size_t>(a)] |= r[static_cast<std::size_t>(k)];
    for (int a = 0; a < n; ++a)
        if ((r[static_cast<std::size_t>(a)] >> a) & 1U)
            throw CyclicInput("graph has a directed cycle through " + std::to_string(a + 1));
    return r;
}

LabeledDag gamma_tilde(const Permutation& w, const Permutation& u)
{
    if (!bruhat_leq(u, w))
        throw NotInInterval(u.to_string() + " is not below " + w.to_string() + " in Bruhat order");
    const int n = u.rank();
    LabeledDag g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            // |l(u(ij)) - l(u)| = 1 exactly when no value between u(i) and u(j)
            // sits between positions i and j.
            const int lo = std::min(u(i), u(j));
            const int hi = std::max(u(i), u(j));
            bool adjacent = true;
            for (int k = i + 1; k < j && adjacent; ++k)
                adjacent = !(lo < u(k) && u(k) < hi);
            if (!adjacent)
                continue;
            if (bruhat_leq(right_mult(u, Transposition{i, j}), w))
                g.add_edge(u(i), u(j));
        }
    return g;
}

LabeledDag gamma(const Permutation& w, const Permutation& u)
{
    return transitive_reduction(gamma_tilde(w, u));
}

LabeledDag transitive_reduction(const LabeledDag& g)
{
    const auto r = reachability(g);
    const int n = g.rank();
    LabeledDag out(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!g.has_edge(a, b))
                continue;
            // Redundant when some c != b reachable from a reaches b.
            bool implied = false;
            LabelMask via = r[static_cast<std::size_t>(a - 1)] & static_cast<LabelMask>(~(1U << (b - 1)));
            while (via && !implied) {
                const int c = std::countr_zero(static_cast<unsigned>(via));
                via &= static_cast<LabelMask>(via - 1);
                implied = (r[static_cast<std::size_t>(c)] >> (b - 1)) & 1U;
            }
            if (!implied)
                out.add_edge(a, b);
        }
    out.mark_reduced();
    return out;
}

bool reaches(const LabeledDag& g, int a, int b)
{
    if (a == b)
        return false;
    LabelMask seen = 0;
    LabelMask frontier = g.successors(a);
    while (frontier) {
        if ((frontier >> (b - 1)) & 1U)
            return true;
        seen |= frontier;
        LabelMask next = 0;
        for (int c = 1; c <= g.rank(); ++c)
            if ((frontier >> (c - 1)) & 1U)
                next |= g.successors(c);
        frontier = next & static_cast<LabelMask>(~seen);
    }
    return false;
}

bool is_linear_extension(const Reachability& closure, const Permutation& y)
{
    const int n = y.rank();
    std::array<int, kMaxRank + 1> pos{};
    for (int i = 1; i <= n; ++i)
        pos[static_cast<std::size_t>(y(i))] = i;
    for (int a = 1; a <= n; ++a) {
        auto succ = closure[static_cast<std::size_t>(a - 1)];
        while (succ) {
            const int b = std::countr_zero(static_cast<unsigned>(succ)) + 1;
            succ &= static_cast<LabelMask>(succ - 1);
            if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)])
                return false;
        }
    }
    return true;
}

std::vector<Permutation> linear_extensions(const LabeledDag& g)
{
    const auto closure = reachability(g);
    std::vector<Permutation> out;
    for (const auto& y : all_permutations(g.rank()))
        if (is_linear_extension(closure, y))
            out.push_back(y);
    return out;
}

bool is_tree(const LabeledDag& g)
{
    const int n = g.rank();
    if (n == 0)
        return false;
    if (g.edge_count() != n - 1)
        return false;
    // n - 1 edges plus connectivity gives a tree.
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = n;
    for (auto [a, b] : g.edges()) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

LabeledDag induced_subgraph(const LabeledDag& g, std::span<const int> labels)
{
    std::vector<int> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.rank() + 1), 0);
    for (std::size_t k = 0; k < sorted.size(); ++k)
        relabel[static_cast<std::size_t>(sorted[k])] = static_cast<int>(k) + 1;
    LabeledDag out(static_cast<int>(sorted.size()));
    for (auto [a, b] : g.edges()) {
        const int ra = relabel[static_cast<std::size_t>(a)];
        const int rb = relabel[static_cast<std::size_t>(b)];
        if (ra && rb)
            out.add_edge(ra, rb);
    }
    return out;
}

std::string to_dot(const LabeledDag& g, const std::string& name)
{
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (int a = 1; a <= g.rank(); ++a)
        os << "  " << a << ";\n";
    for (auto [a, b] : g.edges())
        os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace bip
