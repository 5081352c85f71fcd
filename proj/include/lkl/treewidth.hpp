#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lkl/graph.hpp"

namespace lkl {

// Rooted tree decomposition. Node ids are dense 0..size-1; bags are vertex
// masks of the decomposed graph.
struct TreeDecomposition {
	std::vector<int> parent; // parent[root] = -1
	std::vector<mask_t> bags;
	int root = 0;

	int size() const { return int(parent.size()); }
	int width() const;
	std::vector<std::vector<int>> children() const;
	std::vector<int> depths() const;
};

struct RootedTree {
	std::vector<int> parent;
	int root = 0;
	int size() const { return int(parent.size()); }
};

// Exact solver over elimination orderings (memoized fill-graph search with
// simplicial reductions). Returns a decomposition of width <= width_cap if
// one exists, otherwise nullopt. Result always passes
// verify_tree_decomposition.
std::optional<TreeDecomposition> exact_tree_decomposition(const Graph &g, int width_cap, int solver_cap = 25);

// Minimum width; -1 for the empty/edgeless-free convention (max bag - 1).
int treewidth(const Graph &g, int solver_cap = 25);

bool verify_tree_decomposition(const Graph &g, const TreeDecomposition &td);

TreeDecomposition make_binary_rooted(const TreeDecomposition &td);

// Nice normal form: empty root and leaf bags, unit introduce/forget steps,
// join children duplicate the join bag. Width unchanged.
TreeDecomposition make_nice(const TreeDecomposition &td);
bool is_nice(const TreeDecomposition &td);

// {LCA(u,v) : u,v in s}; single application is already closed.
std::set<int> lca_closure(const RootedTree &t, const std::set<int> &s);
RootedTree tree_of(const TreeDecomposition &td);

// All distinct non-empty cliques (each lies inside some bag).
std::vector<mask_t> enumerate_cliques(const Graph &g, const TreeDecomposition &td);

// Text format: "s td <#nodes> <width+1> <n>", bag lines "b <id> <v...>"
// (node ids 1-based, vertex ids 0-based), tree edges "<id1> <id2>", and a
// root extension "r <root-id>".
std::string td_to_text(const TreeDecomposition &td, int n_vertices);
TreeDecomposition td_from_text(const std::string &text);

} // namespace lkl
