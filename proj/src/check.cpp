#include "bip/check.hpp"

#include "bip/error.hpp"
#include "bip/faces.hpp"
#include "bip/gamma.hpp"
#include "bip/hull_oracle.hpp"
#include "bip/lattice.hpp"
#include "bip/order.hpp"
#include "bip/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <thread>

namespace bip {

namespace {

struct Instance
{
    Permutation a;
    Permutation b;
};

struct Findings
{
    std::vector<Witness> failures;
    std::vector<Witness> observations;

    void fail(const Permutation& w, std::vector<std::pair<std::string, std::string>> args, std::string message)
    {
        failures.push_back({w, std::move(args), std::move(message)});
    }
};

using Sweep = std::function<void(const Instance&, Findings&)>;

struct Theorem
{
    TheoremInfo info;
    /// 2 when instances are pairs (u, v) rather than single permutations.
    int arity;
    Sweep run;
};

using Args = std::vector<std::pair<std::string, std::string>>;

std::string str(const Permutation& u) { return u.to_string(); }

std::string str(std::span<const int> gens)
{
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? "," : "") + std::to_string(gens[i]);
    return s;
}

/// The values a < b with v = (a b) u.
Transposition moved_values(const Permutation& u, const Permutation& v)
{
    for (int i = 1; i <= u.rank(); ++i)
        if (u(i) != v(i))
            return Transposition::of(u(i), v(i));
    throw PreconditionViolated("equal permutations");
}

bool reach(const Reachability& r, int a, int b) { return (r[static_cast<std::size_t>(a - 1)] >> (b - 1)) & 1U; }

std::vector<std::vector<int>> all_generator_sets(int n)
{
    std::vector<std::vector<int>> sets;
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> gens;
        for (int i = 1; i < n; ++i)
            if (mask & (1U << (i - 1)))
                gens.push_back(i);
        sets.push_back(std::move(gens));
    }
    return sets;
}

void sweep_subword(const Instance& in, Findings& out)
{
    const auto& v = in.a;
    for (const auto& u : all_permutations(v.rank()))
        if (bruhat_leq(u, v) != bruhat_leq_subword(u, v))
            out.fail(v, {{"u", str(u)}}, "tableau criterion and subword property disagree");
}

void sweep_weak_bruhat(const Instance& in, Findings& out)
{
    const auto& v = in.a;
    for (const auto& u : all_permutations(v.rank())) {
        const bool bruhat = bruhat_leq(u, v);
        if ((weak_leq(u, v, Side::right) || weak_leq(u, v, Side::left)) && !bruhat)
            out.fail(v, {{"u", str(u)}}, "weak relation without Bruhat relation");
        if (bruhat && length(u) > length(v))
            out.fail(v, {{"u", str(u)}}, "Bruhat relation decreases length");
    }
}

void sweep_biclosed(const Instance& in, Findings& out)
{
    const auto& u = in.a;
    const auto tl = left_inversions(u);
    if (!is_biclosed(tl))
        out.fail(u, {}, "T_L(u) is not biclosed");
    else if (perm_from_inversions(tl) != u)
        out.fail(u, {}, "perm_from_inversions(T_L(u)) != u");
    if (!is_biclosed(right_inversions(u)))
        out.fail(u, {}, "T_R(u) is not biclosed");
}

void sweep_weak_lattice(const Instance& in, Findings& out)
{
    const auto& wo = WeakOrder::of(in.a.rank());
    const auto u = wo.index_of(in.a);
    if (wo.join(u, u) != u || wo.meet(u, u) != u)
        out.fail(in.a, {}, "join or meet is not idempotent");
    for (std::size_t v = 0; v < wo.size(); ++v) {
        const auto j = wo.join(u, v);
        const auto m = wo.meet(u, v);
        const Args args{{"v", str(wo[v])}};
        if (j != wo.join(v, u) || m != wo.meet(v, u))
            out.fail(in.a, args, "join or meet is not commutative");
        if (wo.join(u, m) != u || wo.meet(u, j) != u)
            out.fail(in.a, args, "absorption fails");
        if ((wo.up(u) & wo.up(v)) != wo.up(j))
            out.fail(in.a, args, "join is not the least upper bound");
        if ((wo.down(u) & wo.down(v)) != wo.down(m))
            out.fail(in.a, args, "meet is not the greatest lower bound");
        for (auto side : {Side::right, Side::left})
            if (weak_join(in.a, wo[v], side) != weak_join(wo[v], in.a, side))
                out.fail(in.a, args, "weak_join is not commutative");
    }
}

void sweep_lifting(const Instance& in, Findings& out)
{
    const auto& w = in.a;
    const int n = w.rank();
    const auto winv = inverse(w);
    const BruhatInterval iv(w);
    for (const auto& v : iv.elements()) {
        const auto vinv = inverse(v);
        for (int i = 1; i < n; ++i) {
            const Args args{{"v", str(v)}, {"s", std::to_string(i)}};
            if (has_right_descent(w, i) && !has_right_descent(v, i) && !lifting_check(v, w, i))
                out.fail(w, args, "right lifting property fails");
            if (has_right_descent(winv, i) && !has_right_descent(vinv, i) && !lifting_check_left(v, w, i))
                out.fail(w, args, "left lifting property fails");
        }
    }
}

void sweep_flattening(const Instance& in, Findings& out)
{
    const auto& w = in.a;
    const int n = w.rank();
    const auto word = w.word();
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<int> positions;
        std::vector<int> values;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) {
                positions.push_back(i);
                values.push_back(word[static_cast<std::size_t>(i)]);
            }
        const auto fw = flatten(values);
        std::sort(values.begin(), values.end());
        do {
            auto vword = word;
            for (std::size_t k = 0; k < positions.size(); ++k)
                vword[static_cast<std::size_t>(positions[k])] = values[k];
            const auto v = Permutation::from_one_line(vword);
            if (bruhat_leq(v, w) != bruhat_leq(flatten(values), fw))
                out.fail(w, {{"v", str(v)}}, "flattening property fails");
        } while (std::next_permutation(values.begin(), values.end()));
    }
}

void sweep_gamma_basic(const Instance& in, Findings& out)
{
    const auto& w = in.a;
    const int n = w.rank();
    const BruhatInterval iv(w);
    for (const auto& u : iv.elements()) {
        const Args args{{"u", str(u)}};
        const auto gt = gamma_tilde(w, u);
        Reachability r;
        try {
            r = reachability(gt);
        } catch (const CyclicInput&) {
            out.fail(w, args, "gamma_tilde has a cycle");
            continue;
        }
        const auto g = transitive_reduction(gt);
        if (reachability(g) != r)
            out.fail(w, args, "reduction changes reachability");
        for (auto [a, b] : g.edges())
            for (int c = 1; c <= n; ++c)
                if (g.has_edge(b, c) && g.has_edge(a, c))
                    out.fail(w, args, "reduced graph has a triangle");
        if (linear_extensions(gt) != linear_extensions(g))
            out.fail(w, args, "reduction changes linear extensions");
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b || u.position_of(a) > u.position_of(b))
                    continue;
                if (bruhat_leq(left_mult(Transposition::of(a, b), u), w) && !reach(r, a, b))
                    out.fail(w, {{"u", str(u)}, {"a", std::to_string(a)}, {"b", std::to_string(b)}},
                             "reflection below w without a path a to b");
            }
    }
}

void sweep_path_transfer(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    const int n = sk.rank();
    for (std::size_t u = 0; u < sk.size(); ++u)
        for (auto v : sk.up_covers(u)) {
            const auto t = moved_values(sk[u], sk[v]);
            const auto& ru = sk.reach(u);
            const auto& rv = sk.reach(v);
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    if (c == d || !reach(rv, c, d) || reach(ru, c, d))
                        continue;
                    const Args args{{"u", str(sk[u])}, {"v", str(sk[v])}, {"c", std::to_string(c)},
                                    {"d", std::to_string(d)}};
                    if (c < d)
                        out.fail(in.a, args, "increasing path in v's graph missing in u's graph");
                    else if (c != t.b && d != t.a)
                        out.fail(in.a, args, "decreasing path in v's graph missing in u's graph");
                }
        }
}

void sweep_injection(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    for (std::size_t u = 0; u < sk.size(); ++u)
        for (auto v : sk.up_covers(u)) {
            const auto t = moved_values(sk[u], sk[v]);
            const auto target = sk.gamma(v).edges();
            std::set<std::pair<int, int>> images;
            for (auto [c, d] : sk.gamma(u).edges()) {
                const auto direct = Transposition::of(c, d);
                const auto moved = Transposition::of(t.apply(c), t.apply(d));
                std::vector<std::pair<int, int>> hits;
                for (auto [i, j] : target) {
                    const auto ij = Transposition::of(i, j);
                    if (ij == direct || ij == moved)
                        hits.emplace_back(i, j);
                }
                const Args args{{"u", str(sk[u])}, {"v", str(sk[v])}, {"edge", std::to_string(c) + "," + std::to_string(d)}};
                if (hits.size() != 1) {
                    out.fail(in.a, args, "edge map has " + std::to_string(hits.size()) + " candidate targets");
                    continue;
                }
                if (!images.insert(hits.front()).second)
                    out.fail(in.a, args, "edge map is not injective");
            }
        }
}

void sweep_edges(const Instance& in, Findings& out)
{
    const auto oracle = oracle_edges(in.a);
    const Skeleton sk(in.a);
    if (oracle.edges != sk.edges())
        out.fail(in.a, {}, "combinatorial edges differ from hull edges (" + std::to_string(sk.edges().size()) +
                               " vs " + std::to_string(oracle.edges.size()) + ")");
}

void sweep_sandwich(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    const int n = sk.rank();
    if (sk.up_set(0).count() != sk.size() || sk.down_set(sk.size() - 1).count() != sk.size())
        out.fail(in.a, {}, "e or w is not extremal in P_w");
    for (std::size_t u = 0; u < sk.size(); ++u) {
        for (auto v : sk.up_covers(u))
            if (length(sk[v]) != length(sk[u]) + 1 || !bruhat_leq(sk[u], sk[v]))
                out.fail(in.a, {{"u", str(sk[u])}, {"v", str(sk[v])}}, "P_w cover is not a Bruhat cover");
        for (int i = 1; i < n; ++i) {
            if (has_right_descent(sk[u], i))
                continue;
            const auto v = right_mult(sk[u], Transposition::of(i, i + 1));
            const auto j = sk.interval().index_of(v);
            if (!j)
                continue;
            const auto& covers = sk.up_covers(u);
            if (!std::binary_search(covers.begin(), covers.end(), *j))
                out.fail(in.a, {{"u", str(sk[u])}, {"v", str(v)}}, "right weak cover is not a P_w cover");
        }
    }
}

void sweep_classes(const Instance& in, Findings& out)
{
    const ThetaStructure ts(in.a);
    const auto& sk = ts.skeleton();
    const auto& wo = ts.weak();
    std::size_t covered = 0;
    for (std::size_t x = 0; x < wo.size(); ++x)
        if (ts.extension_count(static_cast<std::size_t>(x)) != 1)
            out.fail(in.a, {{"x", str(wo[x])}},
                     "x extends " + std::to_string(ts.extension_count(x)) + " graphs");
    for (std::size_t u = 0; u < sk.size(); ++u) {
        const Args args{{"u", str(sk[u])}};
        const auto& members = ts.members(u);
        covered += members.count();
        const auto b = wo.index_of(sk[u]);
        const auto t = ts.top_of(u);
        if ((wo.up(b) & wo.down(t)) != members)
            out.fail(in.a, args, "class is not the weak interval [Bot, Top]");
        if (!members.test(b) || !members.test(t) || !members.is_subset_of(wo.up(b)) ||
            !members.is_subset_of(wo.down(t)))
            out.fail(in.a, args, "Bot or Top is not extremal in its class");
        if (ts.bot_of(t) != u)
            out.fail(in.a, args, "Bot(Top(u)) != u");
        Bitset extensions(wo.size());
        for (const auto& y : linear_extensions(sk.gamma(u)))
            extensions.set(wo.index_of(y));
        if (extensions != members)
            out.fail(in.a, args, "class differs from the linear extensions of Gamma_w(u)");
    }
    if (covered != wo.size())
        out.fail(in.a, {}, "classes do not partition S_n");
}

void sweep_top_order(const Instance& in, Findings& out)
{
    const ThetaStructure ts(in.a);
    const auto& sk = ts.skeleton();
    const auto& wo = ts.weak();
    auto top_x = [&](std::size_t x) { return ts.top_of(ts.bot_of(x)); };
    for (std::size_t x = 0; x < wo.size(); ++x) {
        const auto tx = top_x(x);
        wo.up(x).for_each([&](std::size_t y) {
            if (!wo.leq(tx, top_x(y)))
                out.fail(in.a, {{"x", str(wo[x])}, {"y", str(wo[y])}}, "Top is not order preserving");
        });
    }
    for (std::size_t u = 0; u < sk.size(); ++u)
        for (std::size_t v = 0; v < sk.size(); ++v)
            if (sk.leq(u, v) != wo.leq(ts.top_of(u), ts.top_of(v)))
                out.fail(in.a, {{"u", str(sk[u])}, {"v", str(sk[v])}}, "Top is not an isomorphism onto its image");
}

void sweep_lattice(const Instance& in, Findings& out)
{
    const ThetaStructure ts(in.a);
    const auto& sk = ts.skeleton();
    for (std::size_t u = 0; u < sk.size(); ++u)
        for (std::size_t v = u; v < sk.size(); ++v) {
            const Args args{{"u", str(sk[u])}, {"v", str(sk[v])}};
            const auto upper = sk.up_set(u) & sk.up_set(v);
            const auto lower = sk.down_set(u) & sk.down_set(v);
            const auto lub = upper.find_first();
            const auto glb = lower.find_last();
            if (lub == Bitset::npos || !upper.is_subset_of(sk.up_set(lub)))
                out.fail(in.a, args, "no least upper bound");
            else if (ts.join(u, v) != lub)
                out.fail(in.a, args, "least upper bound is " + str(sk[lub]) + " but the formula gives " +
                                         str(sk[ts.join(u, v)]));
            if (glb == Bitset::npos || !lower.is_subset_of(sk.down_set(glb)))
                out.fail(in.a, args, "no greatest lower bound");
            else if (ts.meet(u, v) != glb)
                out.fail(in.a, args, "meet_w disagrees with the greatest lower bound");
        }
}

void sweep_join_of_atoms(const Instance& in, Findings& out)
{
    const ThetaStructure ts(in.a);
    const auto gens = support(in.a);
    if (ts.parabolic_max(gens) != in.a)
        out.fail(in.a, {}, "join of the support generators is not w");
}

void sweep_parabolic(const Instance& in, Findings& out)
{
    const ThetaStructure ts(in.a);
    const auto& sk = ts.skeleton();
    for (const auto& gens : all_generator_sets(in.a.rank())) {
        const auto m = ts.parabolic_max(gens);
        const Args args{{"I", str(gens)}};
        if (m != parabolic_max_brute(in.a, gens))
            out.fail(in.a, args, "join of generators differs from the Bruhat maximum");
        // The join must not depend on the order the generators are folded in.
        std::size_t desc = 0;
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
            const auto s = Permutation::simple(in.a.rank(), *it);
            if (auto i = sk.interval().index_of(s))
                desc = ts.join(desc, *i);
        }
        if (sk[desc] != m)
            out.fail(in.a, args, "join depends on generator order");
    }
}

void sweep_mixed_meet(const Instance& in, Findings& out)
{
    if (mixed_meet(in.a, in.b) != mixed_meet_brute(in.a, in.b))
        out.fail(in.a, {{"v", str(in.b)}}, "Bot_v(u) differs from the Bruhat maximum of [e,u]_R and [e,v]");
}

void sweep_hvector(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    const auto fv = face_vector(sk);
    long long vertices = 0;
    long long edges = 0;
    for (std::size_t k = 0; k < fv.h.size(); ++k) {
        vertices += fv.h[k];
        edges += static_cast<long long>(k) * fv.h[k];
    }
    if (vertices != static_cast<long long>(sk.size()) || fv.f[0] != vertices)
        out.fail(in.a, {}, "h-vector does not sum to the vertex count");
    if (edges != static_cast<long long>(sk.edges().size()) || (fv.f.size() > 1 && fv.f[1] != edges))
        out.fail(in.a, {}, "weighted h-vector sum is not the edge count");
    if (h_from_f(fv.f) != fv.h)
        out.fail(in.a, {}, "f to h round trip fails");
}

void sweep_faces(const Instance& in, Findings& out)
{
    const auto report = directional_simplicity_check(in.a);
    for (const auto& f : report.failures)
        out.fail(in.a, {}, f);
    const auto oracle = face_lattice(in.a).lattice.f_vector();
    if (oracle != face_vector(Skeleton(in.a)).f)
        out.fail(in.a, {}, "oracle face counts differ from the f-vector");
}

/// Vertices of a polygon in cyclic order, or empty if the edges do not form one cycle.
std::vector<int> polygon_cycle(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges)
{
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges)
        if (std::binary_search(verts.begin(), verts.end(), a) && std::binary_search(verts.begin(), verts.end(), b)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    for (int v : verts)
        if (adj[v].size() != 2)
            return {};
    std::vector<int> cycle{verts.front()};
    int prev = -1;
    while (cycle.size() < verts.size()) {
        const int cur = cycle.back();
        const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        if (next == cycle.front())
            return {};
        prev = cur;
        cycle.push_back(next);
    }
    return cycle;
}

std::string unmatched_reason(const std::vector<Permutation>& polygon)
{
    if (polygon.size() == 4) {
        const auto p = edge_label(polygon[0], polygon[1]);
        const auto q = edge_label(polygon[1], polygon[2]);
        const bool disjoint = p.a != q.a && p.a != q.b && p.b != q.a && p.b != q.b;
        if (disjoint && edge_label(polygon[2], polygon[3]) == p && edge_label(polygon[3], polygon[0]) == q)
            return "square with labels (" + std::to_string(p.a) + std::to_string(p.b) + "), (" +
                   std::to_string(q.a) + std::to_string(q.b) + ") that are disjoint but not ordered i<j<k<l";
    }
    return "2-face matches no allowed shape";
}

void sweep_two_faces(const Instance& in, Findings& out)
{
    const auto faces = face_lattice(in.a);
    const auto edges = oracle_edges(in.a);
    for (const auto& face : faces.lattice.faces) {
        if (face.dim != 2)
            continue;
        std::vector<Permutation> polygon;
        for (int v : polygon_cycle(face.vertices, edges.edges))
            polygon.push_back(faces.vertices[static_cast<std::size_t>(v)]);
        std::string members;
        for (int v : face.vertices)
            members += (members.empty() ? "" : " ") + str(faces.vertices[static_cast<std::size_t>(v)]);
        if (polygon.empty())
            out.fail(in.a, {{"face", members}}, "2-face edges do not form a cycle");
        else if (classify_two_face(polygon) == TwoFaceShape::unmatched)
            out.fail(in.a, {{"face", members}}, unmatched_reason(polygon));
    }
}

void sweep_dimension(const Instance& in, Findings& out)
{
    const BruhatInterval iv(in.a);
    std::vector<RationalPoint> points;
    for (const auto& u : iv.elements())
        points.push_back(to_point(vertex_vector(u)));
    const int rank = affine_rank(points);
    if (rank != dimension(in.a))
        out.fail(in.a, {}, "affine rank " + std::to_string(rank) + " differs from the support size");
}

void sweep_simple(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    if (is_simple(in.a) != is_simple_everywhere(sk))
        out.fail(in.a, {}, "simplicity at w differs from simplicity everywhere");
    if (sk.degree(0) != dimension(in.a))
        out.fail(in.a, {}, "not simple at e");
}

void sweep_palindromic(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    if (is_palindromic(h_from_out_degrees(sk)) != is_simple_everywhere(sk))
        out.fail(in.a, {}, "palindromic h-vector and simplicity disagree");
}

void sweep_smooth(const Instance& in, Findings& out)
{
    const auto s = smoothness_criteria(Skeleton(in.a));
    if (!s.agree())
        out.fail(in.a,
                 {{"at_w", s.at_w ? "true" : "false"},
                  {"tree", s.tree ? "true" : "false"},
                  {"palindromic", s.palindromic ? "true" : "false"}},
                 "smoothness criteria disagree");
}

void sweep_degree_monotone(const Instance& in, Findings& out)
{
    const Skeleton sk(in.a);
    for (std::size_t u = 0; u < sk.size(); ++u)
        sk.up_set(u).for_each([&](std::size_t v) {
            if (sk.degree(u) > sk.degree(v))
                out.fail(in.a, {{"u", str(sk[u])}, {"v", str(sk[v])}}, "degree decreases upward");
        });
}

void sweep_non_revisiting(const Instance& in, Findings& out)
{
    const auto report = non_revisiting_check(in.a);
    for (const auto& r : report.revisits) {
        if (report.simple)
            out.fail(in.a, {}, r);
        else
            out.observations.push_back({in.a, {}, r});
    }
}

const std::vector<Theorem>& registry()
{
    static const std::vector<Theorem> list = {
        {{"subword", "tableau Bruhat criterion agrees with the subword property", 4, 5, 20}, 1, sweep_subword},
        {{"weak-bruhat", "weak order implies Bruhat order implies length order", 5, 7, 50}, 1, sweep_weak_bruhat},
        {{"biclosed", "inversion sets are biclosed and determine the permutation", 6, kMaxRank, 1000}, 1,
         sweep_biclosed},
        {{"weak-lattice", "right weak order is a lattice", 5, 7, 50}, 1, sweep_weak_lattice},
        {{"lifting", "lifting property", 5, 7, 100}, 1, sweep_lifting},
        {{"flattening", "Bruhat order is compatible with flattening", 5, 8, 50}, 1, sweep_flattening},
        {{"gamma-basic", "Gamma graphs are acyclic, reductions triangle free, reflections give paths", 5, 7, 20},
         1, sweep_gamma_basic},
        {{"path-transfer", "paths in the graph at v transfer to the graph at u along covers", 5, 7, 20}, 1,
         sweep_path_transfer},
        {{"injection", "edge map along covers is well defined and injective", 5, 7, 20}, 1, sweep_injection},
        {{"edges", "combinatorial edges equal exact hull edges", 4, 5, 50}, 1, sweep_edges},
        {{"sandwich", "P_w lies between right weak order and Bruhat order", 5, 7, 20}, 1, sweep_sandwich},
        {{"classes", "classes partition S_n into weak intervals [Bot, Top]", 5, 6, 10}, 1, sweep_classes},
        {{"top-order", "Top is order preserving and an isomorphism onto its image", 5, 6, 10}, 1,
         sweep_top_order},
        {{"lattice", "P_w is a lattice with join Bot(Top u v Top v)", 5, 6, 10}, 1, sweep_lattice},
        {{"join-of-atoms", "the join of the support generators is w", 5, 6, 50}, 1, sweep_join_of_atoms},
        {{"parabolic", "join of generators in I is the Bruhat maximum of S_n(I) in [e,w]", 5, 6, 20}, 1,
         sweep_parabolic},
        {{"mixed-meet", "Bot_v(u) is the Bruhat maximum of [e,u]_R and [e,v]", 4, 6, 10000}, 2,
         sweep_mixed_meet},
        {{"hvector", "out-degree and Top-ascent h-vectors agree", 5, 7, 20}, 1, sweep_hvector},
        {{"faces", "directional simplicity and face counts match the oracle", 4, 4, 0}, 1, sweep_faces},
        {{"two-faces", "2-faces are squares, trapezoids or hexagons", 4, 4, 0}, 1, sweep_two_faces},
        {{"dimension", "dimension equals the support size", 5, 7, 50}, 1, sweep_dimension},
        {{"simple", "simple at w iff simple everywhere", 6, 7, 50}, 1, sweep_simple},
        {{"palindromic", "palindromic h-vector iff simple", 6, 7, 50}, 1, sweep_palindromic},
        {{"smooth", "three smoothness criteria agree", 6, 7, 50}, 1, sweep_smooth},
        {{"degree-monotone", "degree is monotone in P_w", 6, 7, 50}, 1, sweep_degree_monotone},
        {{"non-revisiting", "geodesics of simple Q_w never revisit a face", 4, 4, 0}, 1, sweep_non_revisiting},
    };
    return list;
}

const Theorem& find_theorem(const std::string& id)
{
    for (const auto& t : registry())
        if (t.info.id == id)
            return t;
    throw UnknownTheorem("unknown theorem id: " + id);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m)
{
    // Rejection keeps the draw uniform without relying on library distributions.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % m;
}

} // namespace

std::vector<std::size_t> sample_indices(std::size_t total, std::size_t k, std::uint64_t seed)
{
    std::vector<std::size_t> idx(total);
    for (std::size_t i = 0; i < total; ++i)
        idx[i] = i;
    k = std::min(k, total);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(bounded(rng, total - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

const std::vector<TheoremInfo>& theorems()
{
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> v;
        for (const auto& t : registry())
            v.push_back(t.info);
        return v;
    }();
    return infos;
}

const TheoremInfo& theorem_info(const std::string& id)
{
    return find_theorem(id).info;
}

SweepReport check(const std::string& theorem_id, const CheckOptions& options)
{
    const auto& thm = find_theorem(theorem_id);
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.theorem = thm.info.id;
    report.n_max = options.n_max.value_or(thm.info.exhaustive_through);
    report.seed = options.seed;
    report.workers = std::max(1, options.workers);
    if (report.n_max < 1)
        throw RankTooLarge("rank must be at least 1");
    if (report.n_max > thm.info.max_rank)
        throw RankTooLarge(thm.info.id + " runs up to rank " + std::to_string(thm.info.max_rank));
    const auto k = static_cast<std::size_t>(options.sample.value_or(thm.info.default_sample));

    std::vector<Instance> instances;
    for (int n = report.n_min; n <= report.n_max; ++n) {
        const auto perms = all_permutations(n);
        const std::size_t total = thm.arity == 1 ? perms.size() : perms.size() * perms.size();
        std::vector<std::size_t> chosen;
        if (n <= thm.info.exhaustive_through) {
            report.sampled[n] = 0;
            chosen.resize(total);
            for (std::size_t i = 0; i < total; ++i)
                chosen[i] = i;
        } else {
            chosen = sample_indices(total, k, options.seed + static_cast<std::uint64_t>(n));
            std::sort(chosen.begin(), chosen.end());
            report.sampled[n] = static_cast<long long>(chosen.size());
        }
        for (auto i : chosen) {
            if (thm.arity == 1)
                instances.push_back({perms[i], Permutation{}});
            else
                instances.push_back({perms[i / perms.size()], perms[i % perms.size()]});
        }
    }
    report.instances = static_cast<long long>(instances.size());

    std::vector<Findings> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < instances.size(); i = next++) {
            try {
                thm.run(instances[i], results[i]);
            } catch (const std::exception& e) {
                Args args;
                if (thm.arity == 2)
                    args.emplace_back("v", str(instances[i].b));
                results[i].fail(instances[i].a, std::move(args), std::string("exception: ") + e.what());
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < report.workers; ++t)
            pool.emplace_back(work);
        work();
    }
    for (auto& r : results) {
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        report.observations.insert(report.observations.end(), r.observations.begin(), r.observations.end());
    }
    report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace bip
