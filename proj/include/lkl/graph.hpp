#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lkl/common.hpp"

namespace lkl {

// Undirected simple graph on dense vertex ids 0..n-1, adjacency kept as
// bitmask rows (the whole artifact works below 64 vertices). Every vertex
// carries a stable external label so solutions lifted through the pipeline
// reference original input vertices.
struct Graph {
	int n = 0;
	std::vector<mask_t> adj;
	std::vector<long long> label;

	Graph() = default;
	explicit Graph(int n_);

	int edge_count() const;
	void add_edge(int u, int v);
	void remove_edge(int u, int v);
	bool has_edge(int u, int v) const { return has_bit(adj[u], v); }
	int degree(int v) const { return popcount(adj[v]); }
	mask_t vertices() const { return full_mask(n); }

	// neighbors of the set, excluding the set itself
	mask_t neighborhood(mask_t s) const;

	bool connected_within(mask_t s) const;
	std::vector<mask_t> components(mask_t within) const;
	std::vector<mask_t> components() const { return components(vertices()); }
	bool has_cycle_within(mask_t s) const;

	int index_of_label(long long lab) const; // -1 if absent
	mask_t mask_of_labels(const std::vector<long long> &labs) const;
	std::vector<long long> labels_of_mask(mask_t m) const;
};

// Induced subgraph; keeps labels. orig[i] is the old id of new vertex i.
struct Subgraph {
	Graph g;
	std::vector<int> orig;
};
Subgraph induced_subgraph(const Graph &g, mask_t keep);

// Graph with an ordered, labeled boundary: boundary[i] hosts boundary label
// i+1. Gluing identifies equal-label boundary vertices.
struct BoundariedGraph {
	Graph g;
	std::vector<int> boundary;

	int t() const { return int(boundary.size()); }
	mask_t boundary_mask() const { return vec_to_mask(boundary); }
	void check() const; // boundary distinct, in range
};

// H1 ⊕ H2. Boundary vertex labels (external ids) of the first argument win;
// parallel edges collapse. Throws on boundary-length mismatch.
Graph glue(const BoundariedGraph &h1, const BoundariedGraph &h2);

using CanonicalCode = std::string;

// Deterministic isomorphism-invariant code via exhaustive permutation within
// refinement classes. For boundaried graphs, maps fix each boundary label.
CanonicalCode canonical_form(const Graph &g, int cap = 10);
CanonicalCode canonical_form(const BoundariedGraph &bg, int cap = 10);

bool are_isomorphic(const Graph &a, const Graph &b, int cap = 10);

// Erdos-Renyi sample, reproducible from seed.
Graph random_graph(int n, double p, uint64_t seed);

// Text format: "p <n> <m>", m lines "e <u> <v>", boundaried graphs add
// "b <v1> ... <vt>" (boundary in label order). "c ..." lines are comments.
std::string graph_to_text(const Graph &g);
std::string graph_to_text(const BoundariedGraph &bg);
Graph graph_from_text(const std::string &text);
BoundariedGraph boundaried_from_text(const std::string &text);

// Family file: graph blocks separated by "---" lines.
std::vector<Graph> family_from_text(const std::string &text);
std::string family_to_text(const std::vector<Graph> &family);

// Exact (non-isomorphism) encoding for hashing / memo keys at any size.
std::string exact_code(const Graph &g);
std::string exact_code(const BoundariedGraph &bg);

// Small handmade graphs used all over the tests and the tw-obstruction map.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace lkl
