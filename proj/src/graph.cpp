#include "lkl/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lkl {

Graph::Graph(int n_) : n(n_), adj(n_, 0), label(n_) {
	if (n_ < 0 || n_ > 64) throw cap_error("graph size must be in [0, 64], got " + std::to_string(n_));
	for (int i = 0; i < n_; ++i) label[i] = i;
}

int Graph::edge_count() const {
	int total = 0;
	for (int v = 0; v < n; ++v) total += popcount(adj[v]);
	return total / 2;
}

void Graph::add_edge(int u, int v) {
	if (u == v) return; // no self-loops
	adj[u] |= bit(v);
	adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
	adj[u] &= ~bit(v);
	adj[v] &= ~bit(u);
}

mask_t Graph::neighborhood(mask_t s) const {
	mask_t nb = 0;
	for (mask_t m = s; m;) {
		int v = lowest_bit(m);
		m &= m - 1;
		nb |= adj[v];
	}
	return nb & ~s;
}

bool Graph::connected_within(mask_t s) const {
	if (!s) return true;
	mask_t seen = bit(lowest_bit(s));
	for (;;) {
		mask_t grow = (neighborhood(seen) | seen) & s;
		if (grow == seen) break;
		seen = grow;
	}
	return seen == s;
}

std::vector<mask_t> Graph::components(mask_t within) const {
	std::vector<mask_t> out;
	mask_t left = within;
	while (left) {
		mask_t comp = bit(lowest_bit(left));
		for (;;) {
			mask_t grow = (neighborhood(comp) | comp) & within;
			if (grow == comp) break;
			comp = grow;
		}
		out.push_back(comp);
		left &= ~comp;
	}
	return out;
}

bool Graph::has_cycle_within(mask_t s) const {
	// edge count >= vertex count within some component
	for (mask_t comp : components(s)) {
		int edges = 0;
		for (mask_t m = comp; m;) {
			int v = lowest_bit(m);
			m &= m - 1;
			edges += popcount(adj[v] & comp);
		}
		edges /= 2;
		if (edges >= popcount(comp)) return true;
	}
	return false;
}

int Graph::index_of_label(long long lab) const {
	for (int v = 0; v < n; ++v)
		if (label[v] == lab) return v;
	return -1;
}

mask_t Graph::mask_of_labels(const std::vector<long long> &labs) const {
	mask_t m = 0;
	for (long long lab : labs) {
		int v = index_of_label(lab);
		if (v < 0) throw std::invalid_argument("label not in graph: " + std::to_string(lab));
		m |= bit(v);
	}
	return m;
}

std::vector<long long> Graph::labels_of_mask(mask_t m) const {
	std::vector<long long> out;
	for (int v : mask_to_vec(m)) out.push_back(label[v]);
	return out;
}

Subgraph induced_subgraph(const Graph &g, mask_t keep) {
	Subgraph s;
	std::vector<int> newid(g.n, -1);
	for (int v : mask_to_vec(keep)) {
		newid[v] = int(s.orig.size());
		s.orig.push_back(v);
	}
	s.g = Graph(int(s.orig.size()));
	for (int i = 0; i < s.g.n; ++i) {
		s.g.label[i] = g.label[s.orig[i]];
		for (int w : mask_to_vec(g.adj[s.orig[i]] & keep)) {
			if (newid[w] > i) s.g.add_edge(i, newid[w]);
		}
	}
	return s;
}

void BoundariedGraph::check() const {
	mask_t seen = 0;
	for (int v : boundary) {
		if (v < 0 || v >= g.n) throw std::invalid_argument("boundary vertex out of range");
		if (has_bit(seen, v)) throw std::invalid_argument("boundary vertices must be distinct");
		seen |= bit(v);
	}
}

Graph glue(const BoundariedGraph &h1, const BoundariedGraph &h2) {
	h1.check();
	h2.check();
	if (h1.t() != h2.t()) throw std::invalid_argument("glue: boundary-length mismatch");
	int t = h1.t();
	int n = h1.g.n + h2.g.n - t;
	Graph out(n);
	// h1 keeps its ids 0..n1-1; h2's non-boundary vertices append.
	std::vector<int> map2(h2.g.n, -1);
	for (int i = 0; i < t; ++i) map2[h2.boundary[i]] = h1.boundary[i];
	int next = h1.g.n;
	for (int v = 0; v < h2.g.n; ++v)
		if (map2[v] < 0) map2[v] = next++;
	for (int v = 0; v < h1.g.n; ++v) out.label[v] = h1.g.label[v];
	for (int v = 0; v < h2.g.n; ++v)
		if (map2[v] >= h1.g.n) out.label[map2[v]] = h2.g.label[v];
	for (int v = 0; v < h1.g.n; ++v)
		for (int w : mask_to_vec(h1.g.adj[v]))
			if (w > v) out.add_edge(v, w);
	for (int v = 0; v < h2.g.n; ++v)
		for (int w : mask_to_vec(h2.g.adj[v]))
			if (w > v) out.add_edge(map2[v], map2[w]);
	return out;
}

namespace {

// Iterated neighborhood-signature refinement; class ids are
// isomorphism-invariant (boundary positions get their own singleton class).
std::vector<int> refine_classes(const Graph &g, const std::vector<int> &boundary_pos) {
	std::vector<long long> sig(g.n);
	std::vector<int> cls(g.n, 0);
	for (size_t i = 0; i < boundary_pos.size(); ++i) cls[boundary_pos[i]] = -int(i) - 1;
	// initial split by (fixed-position, degree); ids assigned by sorted key so
	// the class numbering is an isomorphism invariant
	{
		std::vector<std::pair<int, int>> keys(g.n);
		for (int v = 0; v < g.n; ++v) keys[v] = {cls[v], g.degree(v)};
		std::map<std::pair<int, int>, int> ids;
		for (auto &k : keys) ids[k] = 0;
		int next = 0;
		for (auto &kv : ids) kv.second = next++;
		for (int v = 0; v < g.n; ++v) cls[v] = ids[keys[v]];
	}
	for (int round = 0; round < g.n; ++round) {
		std::vector<std::pair<int, std::vector<int>>> keys(g.n);
		for (int v = 0; v < g.n; ++v) {
			std::vector<int> nb;
			for (int w : mask_to_vec(g.adj[v])) nb.push_back(cls[w]);
			std::sort(nb.begin(), nb.end());
			keys[v] = {cls[v], nb};
		}
		std::map<std::pair<int, std::vector<int>>, int> ids;
		for (auto &k : keys) ids[k] = 0;
		int next = 0;
		for (auto &kv : ids) kv.second = next++;
		std::vector<int> fresh(g.n);
		for (int v = 0; v < g.n; ++v) fresh[v] = ids[keys[v]];
		if (fresh == cls) break;
		cls = fresh;
	}
	(void)sig;
	return cls;
}

struct canon_state {
	const Graph *g;
	std::vector<int> order;    // order[pos] = vertex
	std::vector<mask_t> best;  // best adjacency rows seen (in new ids)
	std::vector<mask_t> cur;
	bool have_best = false;

	// compare row prefix of cur against best; <0 better, 0 equal, >0 worse
	int cmp_prefix(int upto) const {
		for (int i = 0; i < upto; ++i) {
			if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
		}
		return 0;
	}
};

void canon_rec(canon_state &st, std::vector<std::vector<int>> &classes, size_t ci, size_t pos_in_class,
               std::vector<int> &newid, int placed) {
	const Graph &g = *st.g;
	if (ci == classes.size()) {
		if (!st.have_best || st.cmp_prefix(g.n) < 0) {
			st.best = st.cur;
			st.have_best = true;
		}
		return;
	}
	auto &cl = classes[ci];
	if (pos_in_class == cl.size()) {
		canon_rec(st, classes, ci + 1, 0, newid, placed);
		return;
	}
	for (size_t i = pos_in_class; i < cl.size(); ++i) {
		std::swap(cl[pos_in_class], cl[i]);
		int v = cl[pos_in_class];
		newid[v] = placed;
		// row of this position: edges to already-placed vertices
		mask_t row = 0;
		for (int w : mask_to_vec(g.adj[v]))
			if (newid[w] >= 0 && newid[w] < placed) row |= bit(newid[w]);
		st.cur[placed] = row;
		bool go = true;
		if (st.have_best) {
			int c = st.cmp_prefix(placed + 1);
			if (c > 0) go = false;
		}
		if (go) canon_rec(st, classes, ci, pos_in_class + 1, newid, placed + 1);
		newid[v] = -1;
		std::swap(cl[pos_in_class], cl[i]);
	}
}

CanonicalCode canon_impl(const Graph &g, const std::vector<int> &boundary, int cap) {
	if (g.n > cap) throw cap_error("canonical_form: " + std::to_string(g.n) + " vertices exceeds cap " + std::to_string(cap));
	if (g.n == 0) return std::string("G0|") + std::to_string(boundary.size());

	std::vector<int> cls = refine_classes(g, boundary);
	// boundary vertices occupy fixed leading positions in label order
	std::vector<std::vector<int>> classes;
	std::vector<int> newid(g.n, -1);
	canon_state st;
	st.g = &g;
	st.cur.assign(g.n, 0);

	for (int v : boundary) classes.push_back({v});
	// remaining vertices grouped by class id; class order by (id) is invariant
	// because refine ids are assigned from invariant keys in sorted map order
	std::map<int, std::vector<int>> rest;
	mask_t bmask = vec_to_mask(boundary);
	for (int v = 0; v < g.n; ++v)
		if (!has_bit(bmask, v)) rest[cls[v]].push_back(v);
	for (auto &kv : rest) classes.push_back(kv.second);

	canon_rec(st, classes, 0, 0, newid, 0);

	std::string code = "G" + std::to_string(g.n) + "|" + std::to_string(boundary.size()) + "|";
	for (int i = 0; i < g.n; ++i) {
		code += std::to_string((unsigned long long)st.best[i]);
		code += ',';
	}
	return code;
}

} // namespace

CanonicalCode canonical_form(const Graph &g, int cap) { return canon_impl(g, {}, cap); }

CanonicalCode canonical_form(const BoundariedGraph &bg, int cap) {
	bg.check();
	return canon_impl(bg.g, bg.boundary, cap);
}

bool are_isomorphic(const Graph &a, const Graph &b, int cap) {
	if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
	return canonical_form(a, cap) == canonical_form(b, cap);
}

Graph random_graph(int n, double p, uint64_t seed) {
	if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
	Graph g(n);
	rng_t rng(seed);
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (rng.chance(p)) g.add_edge(u, v);
	return g;
}

std::string graph_to_text(const Graph &g) {
	std::ostringstream os;
	os << "p " << g.n << " " << g.edge_count() << "\n";
	for (int u = 0; u < g.n; ++u)
		for (int v : mask_to_vec(g.adj[u]))
			if (v > u) os << "e " << u << " " << v << "\n";
	return os.str();
}

std::string graph_to_text(const BoundariedGraph &bg) {
	std::string out = graph_to_text(bg.g);
	out += "b";
	for (int v : bg.boundary) out += " " + std::to_string(v);
	out += "\n";
	return out;
}

namespace {

BoundariedGraph parse_impl(const std::string &text, bool *saw_boundary) {
	std::istringstream is(text);
	std::string line;
	BoundariedGraph bg;
	bool have_p = false;
	int m_declared = 0, m_seen = 0;
	while (std::getline(is, line)) {
		std::istringstream ls(line);
		std::string tag;
		if (!(ls >> tag) || tag == "c") continue;
		if (tag == "p") {
			int n;
			if (!(ls >> n >> m_declared) || n < 0) throw parse_error("bad p line: " + line);
			if (n > 64) throw cap_error("graph too large: " + std::to_string(n));
			bg.g = Graph(n);
			have_p = true;
		} else if (tag == "e") {
			if (!have_p) throw parse_error("e line before p line");
			int u, v;
			if (!(ls >> u >> v) || u < 0 || v < 0 || u >= bg.g.n || v >= bg.g.n || u == v)
				throw parse_error("bad e line: " + line);
			bg.g.add_edge(u, v);
			++m_seen;
		} else if (tag == "b") {
			if (!have_p) throw parse_error("b line before p line");
			int v;
			while (ls >> v) bg.boundary.push_back(v);
			if (saw_boundary) *saw_boundary = true;
		} else {
			throw parse_error("unknown line tag: " + line);
		}
	}
	if (!have_p) throw parse_error("missing p line");
	if (m_seen != m_declared) throw parse_error("edge count mismatch: declared " + std::to_string(m_declared) + ", saw " + std::to_string(m_seen));
	bg.check();
	return bg;
}

} // namespace

Graph graph_from_text(const std::string &text) {
	bool b = false;
	BoundariedGraph bg = parse_impl(text, &b);
	if (b) throw parse_error("unexpected boundary line in plain graph");
	return bg.g;
}

BoundariedGraph boundaried_from_text(const std::string &text) { return parse_impl(text, nullptr); }

std::vector<Graph> family_from_text(const std::string &text) {
	std::vector<Graph> out;
	std::istringstream is(text);
	std::string line, block;
	auto flush = [&]() {
		if (block.find_first_not_of(" \t\r\n") == std::string::npos) return;
		out.push_back(graph_from_text(block));
		block.clear();
	};
	while (std::getline(is, line)) {
		if (line.rfind("---", 0) == 0) flush();
		else block += line + "\n";
	}
	flush();
	if (out.empty()) throw parse_error("empty family file");
	return out;
}

std::string family_to_text(const std::vector<Graph> &family) {
	std::string out;
	for (size_t i = 0; i < family.size(); ++i) {
		if (i) out += "---\n";
		out += graph_to_text(family[i]);
	}
	return out;
}

std::string exact_code(const Graph &g) {
	std::string s = "n" + std::to_string(g.n) + ";";
	for (int v = 0; v < g.n; ++v) s += std::to_string((unsigned long long)g.adj[v]) + ",";
	return s;
}

std::string exact_code(const BoundariedGraph &bg) {
	std::string s = exact_code(bg.g) + "b";
	for (int v : bg.boundary) s += std::to_string(v) + ",";
	return s;
}

Graph path_graph(int n) {
	Graph g(n);
	for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
	return g;
}

Graph cycle_graph(int n) {
	Graph g = path_graph(n);
	if (n >= 3) g.add_edge(0, n - 1);
	return g;
}

Graph complete_graph(int n) {
	Graph g(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
	return g;
}

Graph star_graph(int leaves) {
	Graph g(leaves + 1);
	for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
	return g;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
	Graph g(a.n + b.n);
	for (int v = 0; v < a.n; ++v) {
		g.label[v] = a.label[v];
		for (int w : mask_to_vec(a.adj[v]))
			if (w > v) g.add_edge(v, w);
	}
	for (int v = 0; v < b.n; ++v) {
		g.label[a.n + v] = b.label[v] + (a.n ? *std::max_element(a.label.begin(), a.label.end()) + 1 : 0);
		for (int w : mask_to_vec(b.adj[v]))
			if (w > v) g.add_edge(a.n + v, a.n + w);
	}
	return g;
}

} // namespace lkl
