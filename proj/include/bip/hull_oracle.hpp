#pragma once

#include "bip/perm.hpp"
#include "bip/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace bip {

using RationalPoint = std::vector<Rational>;

RationalPoint to_point(std::span<const int> coords);

/// Exact feasibility of A x = b, x >= 0 by phase-one simplex with Bland's rule.
/// A is row-major with rows.size() == b.size().
bool feasible(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& b);

/// p lies in conv(generators). Throws DimensionMismatch; generators nonempty.
bool in_hull(const RationalPoint& p, std::span<const RationalPoint> generators);

/// conv{p, q} meets conv(others). Throws DimensionMismatch.
bool segment_meets_hull(const RationalPoint& p, const RationalPoint& q, std::span<const RationalPoint> others);

/// Dimension of the affine hull; -1 for no points.
int affine_rank(std::span<const RationalPoint> points);

/// Vertex pairs of conv(points) joined by an edge, as ascending (i, j), assuming
/// every point is a vertex.
std::vector<std::pair<int, int>> hull_edges(std::span<const RationalPoint> points);

struct OracleEdges
{
    /// [e, w] ordered by (length, lexicographic word).
    std::vector<Permutation> vertices;
    /// Sorted (lower, upper) indices.
    std::vector<std::pair<int, int>> edges;
};

/// Edges of Q_w from exact geometry on the vertex vectors.
OracleEdges oracle_edges(const Permutation& w);

struct Face
{
    /// -1 for the empty face.
    int dim = -1;
    /// Ascending vertex indices.
    std::vector<int> vertices;

    bool operator==(const Face&) const = default;
};

struct FaceLattice
{
    int dim = -1;
    /// Sorted by (dim, vertices); includes the empty face and the whole polytope.
    std::vector<Face> faces;
    /// (i, j): faces[i] is a facet of faces[j].
    std::vector<std::pair<int, int>> incidences;

    /// f_0 .. f_dim.
    std::vector<long long> f_vector() const;
};

/// Brute-force supporting-hyperplane face enumeration. Throws DimensionTooLarge
/// above dimension 3.
FaceLattice face_lattice(std::span<const RationalPoint> points);

struct OracleFaces
{
    std::vector<Permutation> vertices;
    FaceLattice lattice;
};

OracleFaces face_lattice(const Permutation& w);

} // namespace bip
