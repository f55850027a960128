#include "seqfold/graph.hpp"

#include <stdexcept>

namespace seqfold {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self loop");
  adj[u][v] = adj[v][u] = 1;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n; u++)
    if (adj[v][u]) out.push_back(u);
  return out;
}

long long Graph::edge_count() const {
  long long m = 0;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (adj[u][v]) m++;
  return m;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph permuted_graph(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++)
      if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

bool is_clique(const Graph& g, const Clique& c) {
  for (size_t i = 0; i < c.size(); i++)
    for (size_t j = i + 1; j < c.size(); j++)
      if (!g.has_edge(c[i], c[j])) return false;
  return true;
}

namespace {

void extend_clique(const Graph& g, int k, Clique& cur, std::vector<Clique>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int v = start; v < g.n; v++) {
    bool ok = true;
    for (int u : cur)
      if (!g.has_edge(u, v)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(v);
    extend_clique(g, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_k_cliques: k must be positive");
  std::vector<Clique> out;
  if (k > g.n) return out;
  Clique cur;
  extend_clique(g, k, cur, out);
  return out;
}

bool has_3k_clique_bruteforce(const Graph& g, int k) {
  int target = 3 * k;
  if (target > g.n) return false;
  // iterate all (target)-subsets in lexicographic order
  std::vector<int> pick(target);
  for (int i = 0; i < target; i++) pick[i] = i;
  while (true) {
    bool ok = true;
    for (int i = 0; i < target && ok; i++)
      for (int j = i + 1; j < target; j++)
        if (!g.has_edge(pick[i], pick[j])) { ok = false; break; }
    if (ok) return true;
    // next combination
    int i = target - 1;
    while (i >= 0 && pick[i] == g.n - target + i) i--;
    if (i < 0) return false;
    pick[i]++;
    for (int j = i + 1; j < target; j++) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace seqfold
