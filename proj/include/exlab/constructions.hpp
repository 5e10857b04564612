#ifndef EXLAB_CONSTRUCTIONS_HPP
#define EXLAB_CONSTRUCTIONS_HPP

#include <vector>

#include "exlab/graph.hpp"
#include "exlab/star_forest.hpp"

namespace exlab {

// K_{1,k} with the center labeled 0.
Graph star(int k);

// Disjoint union of the stars in spec.ks (p is not used by the host pattern
// itself; blow it up with edge_blowup to get the forbidden graph).
Graph star_forest(const StarForestSpec& spec);

Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph turan_graph(int r, int n);
Graph cycle(int n);
Graph path(int n);

// Replace each edge (in lexicographic order) by a clique of order p+1; the
// p-1 fresh vertices per edge are appended after the original labels.
Graph edge_blowup(const Graph& g, int p);

// A maximizer of e(G) subject to nu(G) <= nu and Delta(G) <= delta, built
// from cliques/stars (even delta) or near-complete components (odd delta),
// isolated vertices stripped. Self-verified against matching_number,
// max_degree and f_formula; a violation throws VerificationError.
Graph chvatal_hanson_graph(int nu, int delta);

// K_{q-1} joined with T_p(n-q+1), plus a Chvatal-Hanson graph for
// (k_q-1, k_q-1) embedded on the lowest labels of a largest class.
struct ExtremalFamilyMember {
    Graph graph;
    VertexSet clique;                // the q-1 dominating vertices (labels 0..q-2)
    std::vector<VertexSet> classes;  // Turan classes, larger first
    VertexSet embedded;              // vertices carrying the embedded graph
};

ExtremalFamilyMember extremal_family_layout(int n, const StarForestSpec& spec);
Graph extremal_family_member(int n, const StarForestSpec& spec);
bool extremal_family_feasible(int n, const StarForestSpec& spec);

} // namespace exlab

#endif
