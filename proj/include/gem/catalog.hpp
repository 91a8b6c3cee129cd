#pragma once

#include "gem/graph.hpp"
#include "gem/groups.hpp"

#include <string>
#include <vector>

namespace gem {

struct LabeledGraph {
    ColoredGraph graph;
    // labels[v] names vertex v, e.g. "a3" or "z10"; ids follow (family, index) order.
    std::vector<std::string> labels;

    // "label <id> <name>" lines for CGF comments.
    std::vector<std::string> label_comments() const;
};

LabeledGraph build_J_labeled(int n);
LabeledGraph build_K_labeled(int p, int q);
LabeledGraph build_M_labeled(int k, int q);
LabeledGraph build_N_labeled(int k, int q);

ColoredGraph build_J(int n);
ColoredGraph build_K(int p, int q);
ColoredGraph build_M(int k, int q);
ColoredGraph build_N(int k, int q);

// The 2-vertex crystallization of the 3-sphere.
ColoredGraph sphere_graph();

struct CatalogEntry {
    std::string name;
    std::vector<int> parameters;
    int expected_vertex_count = 0;
    GroupId expected_group;
    bool expected_orientable = true;
    LabeledGraph built;
};

// Accepts J1..J4, K:p,q, M:k,q, N:k,q.
CatalogEntry catalog_entry(const std::string& name);

// J1-J4, K_{p,q} for 2 <= p <= 8 and 1 <= q < p coprime to p,
// M_{k,q} for 2 <= k <= 5, 3 <= q <= 6, N_{k,q} for 1 <= k <= 5, 4 <= q <= 7.
std::vector<std::string> standard_catalog_names();

}  // namespace gem
