#pragma once

#include "bip/perm.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bip {

/// Bit (label - 1) set for each label in a set of vertices of [n].
using LabelMask = std::uint16_t;

/// Directed graph on the labels 1..n. Edges are value pairs, never positions.
class LabeledDag
{
public:
    LabeledDag() = default;
    explicit LabeledDag(int n);
    LabeledDag(int n, std::initializer_list<std::pair<int, int>> edges);

    int rank() const { return n_; }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const { return (out_[idx(a)] >> (b - 1)) & 1U; }
    LabelMask successors(int a) const { return out_[idx(a)]; }
    /// Sorted (a, b) pairs.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    /// Set when the graph is known to be transitively reduced.
    bool reduced() const { return reduced_; }
    void mark_reduced() { reduced_ = true; }

    bool operator==(const LabeledDag& other) const { return n_ == other.n_ && out_ == other.out_; }

private:
    static std::size_t idx(int a) { return static_cast<std::size_t>(a - 1); }

    int n_ = 0;
    std::array<LabelMask, kMaxRank> out_{};
    bool reduced_ = false;
};

/// Transitive closure: bit (b-1) of row a-1 is set iff a nonempty path a -> b exists.
using Reachability = std::array<LabelMask, kMaxRank>;

/// Throws CyclicInput.
Reachability reachability(const LabeledDag& g);

/// The graph with an edge (u(i), u(j)) for each i < j with u(ij) <= w and
/// |l(u(ij)) - l(u)| = 1. Throws NotInInterval unless u <= w.
LabeledDag gamma_tilde(const Permutation& w, const Permutation& u);
/// Transitive reduction of gamma_tilde(w, u).
LabeledDag gamma(const Permutation& w, const Permutation& u);

/// Unique minimal edge set with the same reachability. Throws CyclicInput.
LabeledDag transitive_reduction(const LabeledDag& g);

/// Existence of a nonempty directed path; reaches(g, a, a) is false.
bool reaches(const LabeledDag& g, int a, int b);

/// y^{-1}(a) < y^{-1}(b) for every path a -> b.
bool is_linear_extension(const Reachability& closure, const Permutation& y);
/// All y in S_n extending g, lexicographic. Throws CyclicInput.
std::vector<Permutation> linear_extensions(const LabeledDag& g);

/// Underlying undirected graph is connected and acyclic. One vertex is a tree.
bool is_tree(const LabeledDag& g);

/// Subgraph induced on the given labels, relabeled 1..k in increasing order.
LabeledDag induced_subgraph(const LabeledDag& g, std::span<const int> labels);

/// DOT rendering with vertices 1..n.
std::string to_dot(const LabeledDag& g, const std::string& name);

} // namespace bip
