#include "bip/hull_oracle.hpp"

#include "bip/error.hpp"
#include "bip/order.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bip {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(Matrix& m, int cols)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int c = 0; c < cols && row < m.size(); ++c) {
        auto col = static_cast<std::size_t>(c);
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Rational lead = m[row][col];
        for (auto& x : m[row])
            x /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const Rational f = m[r][col];
            for (std::size_t k = 0; k < m[r].size(); ++k)
                m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

int matrix_rank(Matrix m, int cols)
{
    return static_cast<int>(row_reduce(m, cols).size());
}

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m, int cols)
{
    const auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

void require_dimension(const RationalPoint& p, std::span<const RationalPoint> points)
{
    for (const auto& g : points)
        if (g.size() != p.size())
            throw DimensionMismatch("points of different dimensions");
}

std::vector<RationalPoint> vertex_points(const std::vector<Permutation>& vertices)
{
    std::vector<RationalPoint> pts;
    pts.reserve(vertices.size());
    for (const auto& u : vertices)
        pts.push_back(to_point(vertex_vector(u)));
    return pts;
}

} // namespace

RationalPoint to_point(std::span<const int> coords)
{
    return {coords.begin(), coords.end()};
}

bool feasible(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& b)
{
    const std::size_t r = rows.size();
    if (b.size() != r)
        throw DimensionMismatch("right-hand side size differs from row count");
    const std::size_t m = r == 0 ? 0 : rows[0].size();
    const std::size_t width = m + r + 1;
    const std::size_t rhs = width - 1;

    // Artificial variable i occupies column m + i and starts in the basis.
    Matrix t(r, std::vector<Rational>(width, Rational(0)));
    std::vector<std::size_t> basis(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != m)
            throw DimensionMismatch("ragged constraint matrix");
        const bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < m; ++j)
            t[i][j] = flip ? -rows[i][j] : rows[i][j];
        t[i][m + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
        basis[i] = m + i;
    }
    // Reduced costs of minimizing the sum of artificials.
    std::vector<Rational> cost(width, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cost[j] -= t[i][j];
    for (std::size_t i = 0; i < r; ++i)
        cost[rhs] -= t[i][rhs];

    while (true) {
        // Bland: lowest-index improving column, lowest-index leaving variable on ties.
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = r;
        Rational best;
        for (std::size_t i = 0; i < r; ++i) {
            if (t[i][enter].sign() <= 0)
                continue;
            const Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == r || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == r)
            throw InternalDisagreement("phase-one simplex reported an unbounded direction");
        const Rational pivot = t[leave][enter];
        for (auto& x : t[leave])
            x /= pivot;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == leave || t[i][enter].is_zero())
                continue;
            const Rational f = t[i][enter];
            for (std::size_t k = 0; k < width; ++k)
                if (!t[leave][k].is_zero())
                    t[i][k] -= f * t[leave][k];
        }
        if (!cost[enter].is_zero()) {
            const Rational f = cost[enter];
            for (std::size_t k = 0; k < width; ++k)
                if (!t[leave][k].is_zero())
                    cost[k] -= f * t[leave][k];
        }
        basis[leave] = enter;
    }
    return cost[rhs].is_zero();
}

bool in_hull(const RationalPoint& p, std::span<const RationalPoint> generators)
{
    if (generators.empty())
        throw PreconditionViolated("in_hull needs at least one generator");
    require_dimension(p, generators);
    const std::size_t dim = p.size();
    Matrix rows(dim + 1, std::vector<Rational>(generators.size(), Rational(0)));
    std::vector<Rational> b(dim + 1, Rational(0));
    for (std::size_t k = 0; k < generators.size(); ++k) {
        for (std::size_t c = 0; c < dim; ++c)
            rows[c][k] = generators[k][c];
        rows[dim][k] = 1;
    }
    for (std::size_t c = 0; c < dim; ++c)
        b[c] = p[c];
    b[dim] = 1;
    return feasible(rows, b);
}

bool segment_meets_hull(const RationalPoint& p, const RationalPoint& q, std::span<const RationalPoint> others)
{
    if (others.empty())
        return false;
    require_dimension(p, others);
    if (q.size() != p.size())
        throw DimensionMismatch("points of different dimensions");
    const std::size_t dim = p.size();
    const std::size_t cols = others.size() + 2;
    // sum_k lambda_k x_k - t p - s q = 0, sum lambda = 1, t + s = 1.
    Matrix rows(dim + 2, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(dim + 2, Rational(0));
    for (std::size_t k = 0; k < others.size(); ++k) {
        for (std::size_t c = 0; c < dim; ++c)
            rows[c][k] = others[k][c];
        rows[dim][k] = 1;
    }
    for (std::size_t c = 0; c < dim; ++c) {
        rows[c][cols - 2] = -p[c];
        rows[c][cols - 1] = -q[c];
    }
    rows[dim + 1][cols - 2] = 1;
    rows[dim + 1][cols - 1] = 1;
    b[dim] = 1;
    b[dim + 1] = 1;
    return feasible(rows, b);
}

int affine_rank(std::span<const RationalPoint> points)
{
    if (points.empty())
        return -1;
    const auto& p0 = points[0];
    require_dimension(p0, points);
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> d(p0.size());
        for (std::size_t c = 0; c < p0.size(); ++c)
            d[c] = points[i][c] - p0[c];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs), static_cast<int>(p0.size()));
}

std::vector<std::pair<int, int>> hull_edges(std::span<const RationalPoint> points)
{
    const std::size_t m = points.size();
    std::map<RationalPoint, int> sum_count;
    auto sum = [&](std::size_t i, std::size_t j) {
        RationalPoint s(points[i].size());
        for (std::size_t c = 0; c < s.size(); ++c)
            s[c] = points[i][c] + points[j][c];
        return s;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            ++sum_count[sum(i, j)];

    std::vector<std::pair<int, int>> edges;
    std::vector<RationalPoint> others;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            // Another pair with the same midpoint already puts it in the hull of the rest.
            if (sum_count[sum(i, j)] > 1)
                continue;
            others.clear();
            for (std::size_t k = 0; k < m; ++k)
                if (k != i && k != j)
                    others.push_back(points[k]);
            if (!segment_meets_hull(points[i], points[j], others))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return edges;
}

OracleEdges oracle_edges(const Permutation& w)
{
    OracleEdges out;
    out.vertices = BruhatInterval(w).elements();
    const auto pts = vertex_points(out.vertices);
    out.edges = hull_edges(pts);
    return out;
}

std::vector<long long> FaceLattice::f_vector() const
{
    std::vector<long long> f(static_cast<std::size_t>(std::max(dim + 1, 0)), 0);
    for (const auto& face : faces)
        if (face.dim >= 0)
            ++f[static_cast<std::size_t>(face.dim)];
    return f;
}

FaceLattice face_lattice(std::span<const RationalPoint> points)
{
    FaceLattice lattice;
    const int d = affine_rank(points);
    lattice.dim = d;
    if (d > 3)
        throw DimensionTooLarge("face enumeration is limited to dimension 3, got " + std::to_string(d));
    const std::size_t m = points.size();
    if (m == 0) {
        lattice.faces.push_back(Face{});
        return lattice;
    }

    // Coordinates on which the affine hull projects isomorphically to R^d.
    const std::size_t ambient = points[0].size();
    std::vector<std::size_t> chart;
    {
        Matrix diffs;
        for (std::size_t i = 1; i < m; ++i) {
            std::vector<Rational> row(ambient);
            for (std::size_t c = 0; c < ambient; ++c)
                row[c] = points[i][c] - points[0][c];
            diffs.push_back(std::move(row));
        }
        int current = 0;
        for (std::size_t c = 0; c < ambient && current < d; ++c) {
            Matrix sub;
            for (const auto& row : diffs) {
                std::vector<Rational> r;
                for (auto k : chart)
                    r.push_back(row[k]);
                r.push_back(row[c]);
                sub.push_back(std::move(r));
            }
            const int rank = matrix_rank(std::move(sub), static_cast<int>(chart.size() + 1));
            if (rank > current) {
                chart.push_back(c);
                current = rank;
            }
        }
    }
    std::vector<std::vector<Rational>> local(m);
    for (std::size_t i = 0; i < m; ++i)
        for (auto c : chart)
            local[i].push_back(points[i][c]);

    std::set<std::vector<int>> facets;
    if (d >= 1) {
        // Every facet hyperplane passes through d affinely independent points.
        std::vector<int> pick(static_cast<std::size_t>(d));
        auto consider = [&] {
            Matrix diffs;
            for (std::size_t k = 1; k < pick.size(); ++k) {
                std::vector<Rational> row(static_cast<std::size_t>(d));
                for (std::size_t c = 0; c < row.size(); ++c)
                    row[c] = local[static_cast<std::size_t>(pick[k])][c] - local[static_cast<std::size_t>(pick[0])][c];
                diffs.push_back(std::move(row));
            }
            auto normals = nullspace(std::move(diffs), d);
            if (normals.size() != 1)
                return;
            const auto& normal = normals[0];
            const Rational level = dot(normal, local[static_cast<std::size_t>(pick[0])]);
            bool below = true;
            bool above = true;
            std::vector<int> on;
            for (std::size_t i = 0; i < m; ++i) {
                const auto side = dot(normal, local[i]) <=> level;
                if (side == 0)
                    on.push_back(static_cast<int>(i));
                else if (side < 0)
                    above = false;
                else
                    below = false;
            }
            if (below || above)
                facets.insert(on);
        };
        // Enumerate d-subsets in lexicographic order.
        for (int k = 0; k < d; ++k)
            pick[static_cast<std::size_t>(k)] = k;
        while (true) {
            consider();
            int k = d - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == static_cast<int>(m) - d + k)
                --k;
            if (k < 0)
                break;
            ++pick[static_cast<std::size_t>(k)];
            for (int l = k + 1; l < d; ++l)
                pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
    }

    // Proper faces are the intersections of facets.
    std::set<std::vector<int>> all(facets.begin(), facets.end());
    std::vector<int> whole(m);
    for (std::size_t i = 0; i < m; ++i)
        whole[i] = static_cast<int>(i);
    all.insert(whole);
    all.insert(std::vector<int>{});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> fresh;
        for (const auto& f : all)
            for (const auto& g : facets) {
                std::vector<int> meet;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
                if (!all.contains(meet))
                    fresh.push_back(std::move(meet));
            }
        for (auto& f : fresh)
            grew |= all.insert(std::move(f)).second;
    }

    for (const auto& vs : all) {
        std::vector<RationalPoint> sub;
        for (int i : vs)
            sub.push_back(points[static_cast<std::size_t>(i)]);
        lattice.faces.push_back(Face{affine_rank(sub), vs});
    }
    std::sort(lattice.faces.begin(), lattice.faces.end(),
              [](const Face& a, const Face& b) { return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices); });
    for (std::size_t i = 0; i < lattice.faces.size(); ++i)
        for (std::size_t j = 0; j < lattice.faces.size(); ++j) {
            const auto& lo = lattice.faces[i];
            const auto& hi = lattice.faces[j];
            if (lo.dim + 1 == hi.dim && std::includes(hi.vertices.begin(), hi.vertices.end(), lo.vertices.begin(),
                                                      lo.vertices.end()))
                lattice.incidences.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return lattice;
}

OracleFaces face_lattice(const Permutation& w)
{
    OracleFaces out;
    out.vertices = BruhatInterval(w).elements();
    const auto pts = vertex_points(out.vertices);
    out.lattice = face_lattice(pts);
    return out;
}

} // namespace bip
