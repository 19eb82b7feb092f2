#pragma once

#include <string>
#include <vector>

#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

// The loop-free digraph G_X whose adjacency matrix is a poset matrix:
// edge (i,j) iff entry (i,j) = 1, i.e. iff NOT x_i <= x_j.
class Digraph {
public:
    Digraph(int n, std::vector<std::uint8_t> adj) : n_(n), adj_(std::move(adj)) {}

    int size() const { return n_; }
    bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }

private:
    int n_;
    std::vector<std::uint8_t> adj_;
};

Digraph to_digraph(const ZeroOneMatrix& m);

struct SccResult {
    int count = 0;
    std::vector<int> component;  // id per vertex, ids in first-seen vertex order
};

// Tarjan, iterative. Component ids are renumbered so that the component of
// the lowest-index vertex comes first.
SccResult scc(const Digraph& g);

// All k-subsets that are bidirectionally complete (every ordered pair an
// edge); these are exactly the k-antichains of the source poset. Each set is
// sorted ascending and the list is in lexicographic order.
std::vector<std::vector<int>> antichain_cliques(const Digraph& g, int k);

// GraphViz text. Byte-deterministic: nodes in index order, edges sorted.
std::string export_dot(const Digraph& g, const std::vector<std::string>& labels);

// Hasse view of a poset: cover edges drawn bottom-up, one rank group per
// height level.
std::string export_dot_hasse(const Poset& p);

}  // namespace fspace
