#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "lkl/graph.hpp"

using namespace lkl;

// ---- independent oracles ---------------------------------------------------

// brute-force isomorphism by trying every vertex bijection
static bool iso_brute(const Graph &a, const Graph &b) {
	if (a.n != b.n) return false;
	std::vector<int> perm(a.n);
	for (int i = 0; i < a.n; ++i) perm[i] = i;
	do {
		bool ok = true;
		for (int u = 0; u < a.n && ok; ++u)
			for (int v = u + 1; v < a.n && ok; ++v)
				if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
		if (ok) return true;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return false;
}

// all graphs on n vertices up to isomorphism, via edge masks + brute dedup
static std::vector<Graph> all_graphs_brute(int n) {
	std::vector<std::pair<int, int>> pairs;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
	std::vector<Graph> reps;
	for (uint64_t m = 0; m < (uint64_t(1) << pairs.size()); ++m) {
		Graph g(n);
		for (size_t e = 0; e < pairs.size(); ++e)
			if ((m >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
		bool fresh = true;
		for (const Graph &r : reps)
			if (iso_brute(g, r)) { fresh = false; break; }
		if (fresh) reps.push_back(g);
	}
	return reps;
}

// ---- glue -------------------------------------------------------------------

TEST_CASE("glue identity-like: boundary vertex onto an edge") {
	BoundariedGraph h1;
	h1.g = Graph(1);
	h1.boundary = {0};
	BoundariedGraph h2;
	h2.g = Graph(2);
	h2.g.add_edge(0, 1);
	h2.boundary = {0};
	Graph out = glue(h1, h2);
	CHECK(out.n == 2);
	CHECK(out.edge_count() == 1);
}

TEST_CASE("glue with empty boundary is disjoint union") {
	BoundariedGraph t1, t2;
	t1.g = complete_graph(3);
	t2.g = complete_graph(3);
	Graph out = glue(t1, t2);
	CHECK(out.n == 6);
	CHECK(out.edge_count() == 6);
	CHECK(out.components().size() == 2);
}

TEST_CASE("glue P3 with an edge across its endpoints gives C3") {
	// hand expansion: edges {ab, bc} + {ac} -> triangle
	BoundariedGraph h1;
	h1.g = path_graph(3); // a=0, b=1, c=2
	h1.boundary = {0, 2};
	BoundariedGraph h2;
	h2.g = Graph(2);
	h2.g.add_edge(0, 1);
	h2.boundary = {0, 1};
	Graph out = glue(h1, h2);
	CHECK(out.n == 3);
	CHECK(out.edge_count() == 3);
	CHECK(iso_brute(out, complete_graph(3)));
}

TEST_CASE("glue rejects boundary-length mismatch") {
	BoundariedGraph h1, h2;
	h1.g = Graph(2);
	h1.boundary = {0};
	h2.g = Graph(2);
	h2.boundary = {0, 1};
	CHECK_THROWS(glue(h1, h2));
}

TEST_CASE("glue vertex count |V1|+|V2|-t and commutativity up to isomorphism") {
	rng_t rng(99);
	for (int it = 0; it < 60; ++it) {
		int t = rng.range(0, 3);
		int n1 = rng.range(std::max(t, 1), t + 3), n2 = rng.range(std::max(t, 1), t + 3);
		if (n1 + n2 - t > 10) continue;
		if (n1 == 0 || n2 == 0) continue;
		BoundariedGraph a, b;
		a.g = random_graph(n1, 0.5, rng.next());
		b.g = random_graph(n2, 0.5, rng.next());
		a.boundary.clear();
		b.boundary.clear();
		for (int i = 0; i < t; ++i) {
			a.boundary.push_back(i);
			b.boundary.push_back(i);
		}
		Graph ab = glue(a, b), ba = glue(b, a);
		CHECK(ab.n == n1 + n2 - t);
		CHECK(canonical_form(ab) == canonical_form(ba));
	}
}

// ---- isomorphism / canonical form -------------------------------------------

TEST_CASE("C4 relabeled is isomorphic") {
	Graph c4 = cycle_graph(4);
	Graph r(4);
	r.add_edge(2, 0);
	r.add_edge(0, 3);
	r.add_edge(3, 1);
	r.add_edge(1, 2);
	CHECK(are_isomorphic(c4, r));
}

TEST_CASE("P4 vs star K1,3 are not isomorphic") {
	CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
}

TEST_CASE("K4 minus an edge equals C4 plus a chord") {
	Graph a = complete_graph(4);
	a.remove_edge(0, 1);
	Graph b = cycle_graph(4);
	b.add_edge(0, 2);
	CHECK(iso_brute(a, b)); // oracle
	CHECK(are_isomorphic(a, b));
}

TEST_CASE("canonical form of empty graph is a fixed sentinel") {
	CHECK(canonical_form(Graph(0)) == canonical_form(Graph(0)));
	CHECK(canonical_form(Graph(0)) != canonical_form(Graph(1)));
}

TEST_CASE("K3 canonical code is relabeling-invariant") {
	Graph k3 = complete_graph(3);
	CanonicalCode base = canonical_form(k3);
	std::vector<int> perm = {0, 1, 2};
	do {
		Graph g(3);
		g.add_edge(perm[0], perm[1]);
		g.add_edge(perm[1], perm[2]);
		g.add_edge(perm[0], perm[2]);
		CHECK(canonical_form(g) == base);
	} while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("all 11 graphs on 4 vertices get 11 distinct codes") {
	auto reps = all_graphs_brute(4); // oracle enumeration
	CHECK(reps.size() == 11);
	std::set<CanonicalCode> codes;
	for (const Graph &g : reps) codes.insert(canonical_form(g));
	CHECK(codes.size() == 11);
}

TEST_CASE("canonical_form is a congruence for isomorphism on <=5 vertices") {
	for (int n = 1; n <= 5; ++n) {
		auto reps = all_graphs_brute(n);
		for (size_t i = 0; i < reps.size(); ++i)
			for (size_t j = i; j < reps.size(); ++j) {
				bool iso = iso_brute(reps[i], reps[j]);
				bool same = canonical_form(reps[i]) == canonical_form(reps[j]);
				CHECK(iso == same);
			}
	}
}

TEST_CASE("canonical form respects cap") {
	CHECK_THROWS_AS(canonical_form(Graph(12)), cap_error);
}

TEST_CASE("boundaried canonical form fixes boundary labels pointwise") {
	// path a-b with boundary (a) vs boundary (b): structurally a pendant from
	// the boundary in both, so codes match; a triangle pendant differs.
	BoundariedGraph x, y;
	x.g = path_graph(2);
	x.boundary = {0};
	y.g = path_graph(2);
	y.boundary = {1};
	CHECK(canonical_form(x) == canonical_form(y));

	// boundary distinguishes endpoints from middles
	BoundariedGraph p_end, p_mid;
	p_end.g = path_graph(3);
	p_end.boundary = {0};
	p_mid.g = path_graph(3);
	p_mid.boundary = {1};
	CHECK(canonical_form(p_end) != canonical_form(p_mid));
}

// ---- random graphs -----------------------------------------------------------

TEST_CASE("random_graph extremes and determinism") {
	Graph empty5 = random_graph(5, 0.0, 7);
	CHECK(empty5.edge_count() == 0);
	Graph k5 = random_graph(5, 1.0, 7);
	CHECK(k5.edge_count() == 10);
	Graph a = random_graph(8, 0.5, 42), b = random_graph(8, 0.5, 42);
	CHECK(a.adj == b.adj);
	Graph c = random_graph(8, 0.5, 43);
	CHECK(a.adj != c.adj);
}

// ---- text format ---------------------------------------------------------------

TEST_CASE("graph text round-trip") {
	rng_t rng(5);
	for (int it = 0; it < 20; ++it) {
		Graph g = random_graph(rng.range(0, 9), 0.4, rng.next());
		Graph back = graph_from_text(graph_to_text(g));
		CHECK(g.adj == back.adj);
	}
	BoundariedGraph bg;
	bg.g = cycle_graph(4);
	bg.boundary = {2, 0};
	BoundariedGraph back = boundaried_from_text(graph_to_text(bg));
	CHECK(back.boundary == bg.boundary);
	CHECK(back.g.adj == bg.g.adj);
}

TEST_CASE("malformed text is rejected") {
	CHECK_THROWS_AS(graph_from_text("e 0 1\n"), parse_error);
	CHECK_THROWS_AS(graph_from_text("p 3 1\n"), parse_error);
	CHECK_THROWS_AS(graph_from_text("p 2 1\ne 0 5\n"), parse_error);
	CHECK_THROWS_AS(graph_from_text("p 2 1\nz 0 1\n"), parse_error);
}

TEST_CASE("family file parsing") {
	std::vector<Graph> fam = {complete_graph(3), path_graph(2)};
	auto back = family_from_text(family_to_text(fam));
	REQUIRE(back.size() == 2);
	CHECK(back[0].edge_count() == 3);
	CHECK(back[1].edge_count() == 1);
	CHECK_THROWS_AS(family_from_text("  \n"), parse_error);
}

TEST_CASE("induced subgraph keeps labels") {
	Graph g = cycle_graph(5);
	Subgraph s = induced_subgraph(g, bit(1) | bit(2) | bit(4));
	CHECK(s.g.n == 3);
	CHECK(s.g.edge_count() == 1); // only 1-2 survives
	CHECK(s.g.label == std::vector<long long>{1, 2, 4});
}
