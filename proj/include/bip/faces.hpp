#pragma once

#include "bip/gamma.hpp"
#include "bip/perm.hpp"
#include "bip/skeleton.hpp"

#include <span>
#include <string>
#include <vector>

namespace bip {

/// f- and h-vectors of Q_w, related by sum_i f_i (x-1)^i = sum_k h_k x^k.
struct FaceVector
{
    int dim = 0;
    std::vector<long long> f;
    std::vector<long long> h;
};

/// dim Q_w = |support(w)|, the degree of the vertex e.
int dimension(const Permutation& w);

/// h_k = number of vertices with k upper covers in P_w.
std::vector<long long> h_from_out_degrees(const Skeleton& sk);
/// h_k = number of u in [e, w] with asc(Top_w(u)) = k.
std::vector<long long> h_from_top_ascents(const Skeleton& sk);

/// f_i = sum_k h_k C(k, i).
std::vector<long long> f_from_h(std::span<const long long> h);
/// Inverse transform: expand sum_i f_i (x-1)^i.
std::vector<long long> h_from_f(std::span<const long long> f);

/// Both h formulas, which must agree (InternalDisagreement otherwise), plus f.
FaceVector face_vector(const Skeleton& sk);
FaceVector h_vector(const Permutation& w);
FaceVector f_vector(const Permutation& w);

bool is_palindromic(std::span<const long long> h);

/// degree(w, u) == dimension(w). Throws NotInInterval.
bool is_simple_at(const Permutation& w, const Permutation& u);
/// Simplicity decided at the vertex w alone.
bool is_simple(const Permutation& w);
/// Simplicity checked at every vertex.
bool is_simple_everywhere(const Skeleton& sk);

/// Gamma_w(w) restricted to each block of the support of w is a tree; for
/// full support this is is_tree(Gamma_w(w)).
bool gamma_top_is_forest_of_blocks(const Skeleton& sk);

struct SmoothnessWitness
{
    bool at_w = false;
    bool tree = false;
    bool palindromic = false;

    bool agree() const { return at_w == tree && tree == palindromic; }
};

SmoothnessWitness smoothness_criteria(const Skeleton& sk);
/// Common verdict of the three criteria. Throws CriteriaDisagree.
SmoothnessWitness is_smooth_generic_orbit(const Permutation& w);

/// Rank n up to which the exact face lattice is affordable.
inline constexpr int kDefaultOracleMaxRank = 4;

struct DirectionalSimplicityReport
{
    Permutation w;
    int vertices = 0;
    int subsets = 0;
    /// Vertex and edge subset lacking a spanning face.
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// For every vertex u and every set E of edges leaving u in the direction of
/// c = (n, ..., 1), looks for a face whose edges at u are exactly E.
/// Throws OracleUnavailable above max_n.
DirectionalSimplicityReport directional_simplicity_check(const Permutation& w, int max_n = kDefaultOracleMaxRank);

struct NonRevisitingReport
{
    Permutation w;
    bool simple = false;
    long long geodesics = 0;
    /// Geodesics that leave a face and come back, with the face.
    std::vector<std::string> revisits;
};

/// Evidence gathering for the non-revisiting path property. Throws OracleUnavailable.
NonRevisitingReport non_revisiting_check(const Permutation& w, int max_n = kDefaultOracleMaxRank);

enum class TwoFaceShape { square, trapezoid, hexagon, unmatched };

std::string to_string(TwoFaceShape shape);

/// Positions at which two permutations differing by one transposition differ.
/// Throws PreconditionViolated otherwise.
Transposition edge_label(const Permutation& x, const Permutation& y);

/// Classifies a polygon given its vertices in cyclic order by the position
/// transpositions labelling its edges.
TwoFaceShape classify_two_face(std::span<const Permutation> cycle);

} // namespace bip
