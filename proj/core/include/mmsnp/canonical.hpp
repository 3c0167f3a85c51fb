#ifndef MMSNP_CANONICAL_HPP
#define MMSNP_CANONICAL_HPP

#include <string>
#include <vector>

#include "mmsnp/types.hpp"

namespace mmsnp {

// Node-labelled incidence structure fed to the canonical-labelling engine.
// Nodes 0..n-1 carry integer labels; edges are typed ordered tuples.
struct IncidenceGraph {
    struct Edge {
        int type = 0;
        std::vector<int> nodes;
    };
    int n = 0;
    std::vector<int> labels;
    std::vector<Edge> edges;
};

// Exact canonical order via iterative colour refinement with backtracking on
// ties. Returns perm with perm[new_index] = old_index. Two isomorphic inputs
// (same labels and edges up to a node bijection) yield identical canonical
// encodings.
std::vector<int> canonical_order(const IncidenceGraph& g);

// Variables renamed to a canonical sequence v1,v2,...; atoms and literals
// sorted. Equal results iff the clauses are identical up to variable renaming.
Clause canonical_clause_form(const Clause& c);

// Stable dedup key for a clause (canonicalization then flat encoding).
std::string clause_key(const Clause& c);

// Canonical relabeling of a structure; root >= 0 pins a distinguished element
// (pointed canonization). Element names become e1,e2,...
FinStructure canonical_structure(const FinStructure& a, int root = -1);

std::string structure_key(const FinStructure& a, int root = -1);

bool iso_equal(const FinStructure& a, const FinStructure& b);

}  // namespace mmsnp

#endif
