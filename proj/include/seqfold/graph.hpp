#pragma once

// Undirected simple graphs and exhaustive clique search. The clique
// enumerators here are the ground-truth side of every reduction test.

#include <vector>

#include "seqfold/rng.hpp"

namespace seqfold {

struct Graph {
  int n = 0;
  std::vector<std::vector<char>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_, std::vector<char>(n_, 0)) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj[u][v] != 0; }
  std::vector<int> neighbors(int v) const;  // ascending
  long long edge_count() const;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph random_graph(int n, double p, Rng& rng);

// relabel vertices by perm (perm[v] = new id); used for isomorphism tests
Graph permuted_graph(const Graph& g, const std::vector<int>& perm);

// vertex ids ascending
using Clique = std::vector<int>;

bool is_clique(const Graph& g, const Clique& c);

// all k-cliques in lexicographic order of the sorted vertex list;
// k = 1 yields all vertices, k > n yields the empty list
std::vector<Clique> enumerate_k_cliques(const Graph& g, int k);

// exhaustive scan over all 3k-subsets; independent of enumerate_k_cliques
bool has_3k_clique_bruteforce(const Graph& g, int k);

}  // namespace seqfold
