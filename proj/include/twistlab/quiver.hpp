#pragma once

#include <string>
#include <vector>

#include "twistlab/error.hpp"

namespace twistlab {

struct Arrow {
    int s = 0;
    int t = 0;
    bool is_loop() const { return s == t; }
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Finite quiver on vertices 0..n-1. Arrows are kept sorted by (s, t);
/// repeated pairs are allowed here and rejected by the admissible check.
class Quiver {
public:
    Quiver() = default;
    Quiver(int n, std::vector<Arrow> arrows);

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t k) const { return arrows_[k]; }

    int rank(int i) const;
    int rrank(int i) const;
    /// Maxima over all vertices.
    int rank() const;
    int rrank() const;

    bool has_arrow(int s, int t) const;
    /// Index of the first arrow s -> t, or -1.
    int arrow_index(int s, int t) const;
    bool has_loop(int i) const { return has_arrow(i, i); }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    void check_vertex(int i) const;
    int n_ = 0;
    std::vector<Arrow> arrows_;
};

class MultipleArrows : public InvalidInput {
public:
    MultipleArrows(int s, int t);
    int s, t;
};

class MissingLoop : public InvalidInput {
public:
    explicit MissingLoop(int i);
    int vertex;
};

class RrankTooLarge : public MathError {
public:
    explicit RrankTooLarge(int i);
    int vertex;
};

/// A quiver with no multiple arrows and a loop at every vertex.
class AdmissibleShape {
public:
    const Quiver& quiver() const { return q_; }
    int n() const { return q_.n(); }
    friend bool operator==(const AdmissibleShape&, const AdmissibleShape&) = default;

private:
    explicit AdmissibleShape(Quiver q) : q_(std::move(q)) {}
    Quiver q_;
    friend AdmissibleShape validate_admissible_shape(const Quiver& q);
};

AdmissibleShape validate_admissible_shape(const Quiver& q);

/// Vertex sets of the connected components of the underlying undirected
/// graph, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Quiver& q);

struct RootedTree {
    int root = 0;
    std::vector<int> vertices;  // sorted
    std::vector<Arrow> arrows;  // non-loop arrows, oriented away from root
};

struct CycleTreeDecomposition {
    std::vector<int> vertices;       // the component
    std::vector<int> cycle;          // starts at the smallest vertex, follows arrows
    std::vector<RootedTree> trees;   // one per cycle vertex, or a single tree
};

/// Requires rrank <= 1.
std::vector<CycleTreeDecomposition> unique_cycle_decomposition(const AdmissibleShape& shape);

/// Sequence of arrow indices.
using Path = std::vector<std::size_t>;

/// All paths of length k from i to j. For k = 0 the empty path at i == j.
std::vector<Path> paths(const Quiver& q, int k, int i, int j);

std::string export_dot(const Quiver& q);

/// Every admissible shape on n vertices whose rrank is at most max_rrank,
/// in a fixed order.
std::vector<AdmissibleShape> admissible_shapes(int n, int max_rrank);

/// Non-loop arrows i -> j and j -> i both present.
bool on_two_cycle(const Quiver& q, int i, int j);

} // namespace twistlab
