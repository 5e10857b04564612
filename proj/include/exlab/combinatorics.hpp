#ifndef EXLAB_COMBINATORICS_HPP
#define EXLAB_COMBINATORICS_HPP

#include <vector>

#include "exlab/graph.hpp"
#include "exlab/star_forest.hpp"

namespace exlab {

// Maximum edge count under matching-number cap nu and degree cap delta
// (Chvatal-Hanson): delta*nu + floor(delta/2) * floor(nu / ceil(delta/2)).
// By convention 0 when nu or delta is 0.
long long f_formula(int nu, int delta);

// Independent oracle for f_formula: pruned DFS over edge subsets on up to
// max_vertices vertices. Budget: nu, delta <= 3 and max_vertices <= 9.
long long f_bruteforce(int nu, int delta, int max_vertices);

// Exact matching number via bitmask DP over the non-isolated vertices
// (at most 22 of them, else BudgetError).
int matching_number(const Graph& g);

// Part sizes of the r-partite Turan graph on n vertices, larger parts first.
std::vector<int> turan_part_sizes(int r, int n);
long long turan_edge_count(int r, long long n);

// e(K_{q-1} v T_p(n-q+1)) = C(q-1,2) + (q-1)(n-q+1) + e(T_p(n-q+1)).
long long h_edges(long long n, int p, int q);

// h(n,p,q) + f(k_q-1, k_q-1). Equality with the true extremal number is only
// guaranteed for large n; the verification pipeline records both values.
long long ex_formula(long long n, const StarForestSpec& spec);

// Assignment of every vertex to one of `classes` classes.
struct PartitionLabeling {
    int classes = 1;
    std::vector<int> assign;

    PartitionLabeling() = default;
    PartitionLabeling(int classes_, std::vector<int> assign_);
    std::vector<VertexSet> class_sets() const;
};

long long crossing_edges(const Graph& g, const PartitionLabeling& l);

// sum_i e(G[V_i]) - (sum_{i<j} |V_i||V_j| - crossing): internal edges minus
// missing cross pairs. Bounded by f(k-1,k-1) when the per-class matching and
// degree hypotheses below hold.
long long chen_gap(const Graph& g, const PartitionLabeling& l);

struct ChenHypotheses {
    bool hold = false;
    int max_internal_degree = 0;    // max over i of Delta(G[V_i])
    int max_other_matching_sum = 0; // max over i of sum_{j != i} nu(G[V_j])
    int max_pointwise = 0;          // max over v of d_in(v) + sum_j nu(G[N(v) cap V_j])
};

// Checks the hypotheses under which the crossing-edge inequality
// chen_gap <= f(k-1,k-1) applies.
ChenHypotheses chen_hypotheses(const Graph& g, const PartitionLabeling& l, int k);

struct CrossingPartitionResult {
    PartitionLabeling labeling;
    long long crossing = 0;
    bool certified = true; // false when found by local search instead of full scan
};

// Labeling into p classes maximizing the number of crossing edges. Exhaustive
// (ties: lexicographically least assignment) while p^n stays within budget;
// beyond that a seeded local search is used and flagged non-certified.
CrossingPartitionResult max_crossing_partition(const Graph& g, int p,
                                               long long budget = 1LL << 24);

struct IntersectionBound {
    long long lhs = 0; // |V_1 cap ... cap V_m|
    long long rhs = 0; // sum |V_i| - (m-1) |union V_i|
    bool holds = true;
};

// Both sides of |V1 cap ... cap Vm| >= sum|Vi| - (m-1)|union Vi|.
IntersectionBound intersection_bound(const std::vector<VertexSet>& sets);
bool intersection_bound_holds(const std::vector<VertexSet>& sets);

} // namespace exlab

#endif
