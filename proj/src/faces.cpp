#include "bip/faces.hpp"

#include "bip/error.hpp"
#include "bip/hull_oracle.hpp"
#include "bip/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace bip {

namespace {

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

std::string join_perms(const std::vector<Permutation>& perms)
{
    std::string s = "{";
    for (std::size_t i = 0; i < perms.size(); ++i)
        s += (i ? " " : "") + perms[i].to_string();
    return s + "}";
}

/// Blocks of [n] joined by the generators in the support of w.
std::vector<std::vector<int>> support_blocks(const Permutation& w)
{
    const auto mask = support_mask(w);
    std::vector<std::vector<int>> blocks{{1}};
    for (int i = 2; i <= w.rank(); ++i) {
        if (!(mask & (1U << (i - 2))))
            blocks.emplace_back();
        blocks.back().push_back(i);
    }
    return blocks;
}

} // namespace

int dimension(const Permutation& w)
{
    return std::popcount(support_mask(w));
}

std::vector<long long> h_from_out_degrees(const Skeleton& sk)
{
    const int d = dimension(sk.w());
    std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
    for (std::size_t u = 0; u < sk.size(); ++u) {
        const auto k = sk.up_covers(u).size();
        if (k > static_cast<std::size_t>(d))
            throw InternalDisagreement("out-degree exceeds the dimension at " + sk[u].to_string());
        ++h[k];
    }
    return h;
}

std::vector<long long> h_from_top_ascents(const Skeleton& sk)
{
    const int d = dimension(sk.w());
    std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
    for (std::size_t u = 0; u < sk.size(); ++u) {
        const int k = ascent_count(top_of(sk, u));
        if (k > d)
            throw InternalDisagreement("ascents of Top exceed the dimension at " + sk[u].to_string());
        ++h[static_cast<std::size_t>(k)];
    }
    return h;
}

std::vector<long long> f_from_h(std::span<const long long> h)
{
    const int d = static_cast<int>(h.size()) - 1;
    std::vector<long long> f(h.size(), 0);
    for (int i = 0; i <= d; ++i)
        for (int k = i; k <= d; ++k)
            f[static_cast<std::size_t>(i)] += h[static_cast<std::size_t>(k)] * binomial(k, i);
    return f;
}

std::vector<long long> h_from_f(std::span<const long long> f)
{
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<long long> h(f.size(), 0);
    for (int k = 0; k <= d; ++k)
        for (int i = k; i <= d; ++i) {
            const long long sign = (i - k) % 2 ? -1 : 1;
            h[static_cast<std::size_t>(k)] += sign * f[static_cast<std::size_t>(i)] * binomial(i, k);
        }
    return h;
}

FaceVector face_vector(const Skeleton& sk)
{
    FaceVector fv;
    fv.dim = dimension(sk.w());
    fv.h = h_from_out_degrees(sk);
    if (h_from_top_ascents(sk) != fv.h)
        throw InternalDisagreement("out-degree and Top-ascent h-vectors differ for " + sk.w().to_string());
    fv.f = f_from_h(fv.h);
    return fv;
}

FaceVector h_vector(const Permutation& w)
{
    return face_vector(Skeleton(w));
}

FaceVector f_vector(const Permutation& w)
{
    return face_vector(Skeleton(w));
}

bool is_palindromic(std::span<const long long> h)
{
    return std::equal(h.begin(), h.end(), h.rbegin());
}

bool is_simple_at(const Permutation& w, const Permutation& u)
{
    return degree(w, u) == dimension(w);
}

bool is_simple(const Permutation& w)
{
    return is_simple_at(w, w);
}

bool is_simple_everywhere(const Skeleton& sk)
{
    const int d = dimension(sk.w());
    for (std::size_t u = 0; u < sk.size(); ++u)
        if (sk.degree(u) != d)
            return false;
    return true;
}

bool gamma_top_is_forest_of_blocks(const Skeleton& sk)
{
    const auto& g = sk.gamma(sk.size() - 1);
    for (const auto& block : support_blocks(sk.w()))
        if (!is_tree(induced_subgraph(g, block)))
            return false;
    return true;
}

SmoothnessWitness smoothness_criteria(const Skeleton& sk)
{
    SmoothnessWitness s;
    s.at_w = sk.degree(sk.size() - 1) == dimension(sk.w());
    s.tree = gamma_top_is_forest_of_blocks(sk);
    s.palindromic = is_palindromic(h_from_out_degrees(sk));
    return s;
}

SmoothnessWitness is_smooth_generic_orbit(const Permutation& w)
{
    const auto s = smoothness_criteria(Skeleton(w));
    if (!s.agree())
        throw CriteriaDisagree("smoothness criteria disagree for " + w.to_string());
    return s;
}

DirectionalSimplicityReport directional_simplicity_check(const Permutation& w, int max_n)
{
    if (w.rank() > max_n)
        throw OracleUnavailable("face lattice oracle is limited to rank " + std::to_string(max_n));
    DirectionalSimplicityReport report;
    report.w = w;
    const auto faces = face_lattice(w);
    const auto edges = oracle_edges(w);
    const auto& verts = faces.vertices;
    const auto m = verts.size();
    const int n = w.rank();

    std::vector<long long> cost(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto x = vertex_vector(verts[i]);
        for (int k = 1; k <= n; ++k)
            cost[i] += static_cast<long long>(n + 1 - k) * x[static_cast<std::size_t>(k - 1)];
    }
    std::vector<std::vector<int>> adjacent(m);
    for (auto [a, b] : edges.edges) {
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    }

    for (std::size_t u = 0; u < m; ++u) {
        ++report.vertices;
        std::vector<int> up;
        for (int x : adjacent[u]) {
            if (cost[static_cast<std::size_t>(x)] == cost[u])
                report.failures.push_back("cost vector is orthogonal to an edge at " + verts[u].to_string());
            if (cost[static_cast<std::size_t>(x)] > cost[u])
                up.push_back(x);
        }
        std::sort(up.begin(), up.end());
        for (std::uint32_t mask = 0; mask < (1U << up.size()); ++mask) {
            ++report.subsets;
            std::vector<int> wanted;
            for (std::size_t k = 0; k < up.size(); ++k)
                if (mask & (1U << k))
                    wanted.push_back(up[k]);
            bool found = false;
            for (const auto& face : faces.lattice.faces) {
                if (!std::binary_search(face.vertices.begin(), face.vertices.end(), static_cast<int>(u)))
                    continue;
                std::vector<int> at_u;
                for (int x : adjacent[u])
                    if (std::binary_search(face.vertices.begin(), face.vertices.end(), x))
                        at_u.push_back(x);
                std::sort(at_u.begin(), at_u.end());
                if (at_u == wanted) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                std::vector<Permutation> ends;
                for (int x : wanted)
                    ends.push_back(verts[static_cast<std::size_t>(x)]);
                report.failures.push_back("no face at " + verts[u].to_string() + " spanned by edges to " +
                                          join_perms(ends));
            }
        }
    }
    return report;
}

NonRevisitingReport non_revisiting_check(const Permutation& w, int max_n)
{
    if (w.rank() > max_n)
        throw OracleUnavailable("face lattice oracle is limited to rank " + std::to_string(max_n));
    NonRevisitingReport report;
    report.w = w;
    report.simple = is_simple_everywhere(Skeleton(w));
    const auto faces = face_lattice(w);
    const auto edges = oracle_edges(w);
    const auto& verts = faces.vertices;
    const auto m = verts.size();
    std::vector<std::vector<int>> adjacent(m);
    for (auto [a, b] : edges.edges) {
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<std::vector<bool>> in_face;
    std::vector<std::size_t> face_ids;
    for (std::size_t f = 0; f < faces.lattice.faces.size(); ++f) {
        const auto& face = faces.lattice.faces[f];
        if (face.dim < 0 || face.vertices.size() == m)
            continue;
        std::vector<bool> member(m, false);
        for (int v : face.vertices)
            member[static_cast<std::size_t>(v)] = true;
        in_face.push_back(std::move(member));
        face_ids.push_back(f);
    }

    for (std::size_t s = 0; s < m; ++s) {
        std::vector<int> dist(m, -1);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (int y : adjacent[x])
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[x] + 1;
                    queue.push_back(static_cast<std::size_t>(y));
                }
        }
        // Every geodesic from s, recorded as it reaches each later vertex.
        std::vector<std::size_t> path{s};
        std::function<void()> extend = [&] {
            const auto x = path.back();
            if (path.size() > 1) {
                ++report.geodesics;
                for (std::size_t f = 0; f < in_face.size(); ++f) {
                    int state = 0; // 0 before entering, 1 inside, 2 left
                    bool revisit = false;
                    for (auto v : path) {
                        const bool inside = in_face[f][v];
                        if (inside && state == 2)
                            revisit = true;
                        if (inside)
                            state = 1;
                        else if (state == 1)
                            state = 2;
                    }
                    if (revisit) {
                        std::vector<Permutation> p;
                        for (auto v : path)
                            p.push_back(verts[v]);
                        std::vector<Permutation> fv;
                        for (int v : faces.lattice.faces[face_ids[f]].vertices)
                            fv.push_back(verts[static_cast<std::size_t>(v)]);
                        report.revisits.push_back("path " + join_perms(p) + " revisits face " + join_perms(fv));
                    }
                }
            }
            for (int y : adjacent[x])
                if (dist[static_cast<std::size_t>(y)] == dist[x] + 1) {
                    path.push_back(static_cast<std::size_t>(y));
                    extend();
                    path.pop_back();
                }
        };
        extend();
    }
    return report;
}

std::string to_string(TwoFaceShape shape)
{
    switch (shape) {
    case TwoFaceShape::square:
        return "square";
    case TwoFaceShape::trapezoid:
        return "trapezoid";
    case TwoFaceShape::hexagon:
        return "hexagon";
    case TwoFaceShape::unmatched:
        return "unmatched";
    }
    return "unmatched";
}

Transposition edge_label(const Permutation& x, const Permutation& y)
{
    if (x.rank() != y.rank())
        throw RankMismatch("edge endpoints of different rank");
    std::vector<int> differ;
    for (int i = 1; i <= x.rank(); ++i)
        if (x(i) != y(i))
            differ.push_back(i);
    if (differ.size() != 2 || x(differ[0]) != y(differ[1]))
        throw PreconditionViolated(x.to_string() + " and " + y.to_string() + " do not differ by a transposition");
    return Transposition{differ[0], differ[1]};
}

TwoFaceShape classify_two_face(std::span<const Permutation> cycle)
{
    const auto m = cycle.size();
    if (m != 4 && m != 6)
        return TwoFaceShape::unmatched;
    std::vector<Transposition> labels;
    try {
        for (std::size_t k = 0; k < m; ++k)
            labels.push_back(edge_label(cycle[k], cycle[(k + 1) % m]));
    } catch (const PreconditionViolated&) {
        return TwoFaceShape::unmatched;
    }
    auto shared = [](Transposition p, Transposition q) {
        std::vector<int> s;
        for (int x : {p.a, p.b})
            if (x == q.a || x == q.b)
                s.push_back(x);
        return s;
    };
    auto strictly_between = [](int x, int lo, int hi) { return (lo < x && x < hi) || (hi < x && x < lo); };

    if (m == 6) {
        const auto a = labels[0];
        const auto b = labels[1];
        for (std::size_t k = 0; k < 6; ++k)
            if (labels[k] != (k % 2 ? b : a))
                return TwoFaceShape::unmatched;
        const auto s = shared(a, b);
        if (s.size() != 1)
            return TwoFaceShape::unmatched;
        const int j = s[0];
        const int i = a.a == j ? a.b : a.a;
        const int k = b.a == j ? b.b : b.a;
        return strictly_between(j, i, k) ? TwoFaceShape::hexagon : TwoFaceShape::unmatched;
    }

    if (labels[0] == labels[2] && labels[1] == labels[3] && shared(labels[0], labels[1]).empty()) {
        const auto p = labels[0];
        const auto q = labels[1];
        if (p.b < q.a || q.b < p.a)
            return TwoFaceShape::square;
        return TwoFaceShape::unmatched;
    }
    for (std::size_t r = 0; r < 2; ++r) {
        const auto jk = labels[r];
        if (labels[r + 2] != jk)
            continue;
        const auto x = labels[r + 1];
        const auto y = labels[(r + 3) % 4];
        const auto s = shared(x, y);
        if (x == y || s.size() != 1)
            continue;
        const int i = s[0];
        if (i == jk.a || i == jk.b)
            continue;
        const int xo = x.a == i ? x.b : x.a;
        const int yo = y.a == i ? y.b : y.a;
        if (Transposition::of(xo, yo) != jk)
            continue;
        // j is the endpoint of (jk) lying between i and k.
        if (strictly_between(jk.a, i, jk.b) || strictly_between(jk.b, i, jk.a))
            return TwoFaceShape::trapezoid;
    }
    return TwoFaceShape::unmatched;
}

} // namespace bip
