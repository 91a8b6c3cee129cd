#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gem {

// Bitmask over colors 1..h (bit c set for color c).
struct ColorSet {
    std::uint32_t bits = 0;

    ColorSet() = default;
    ColorSet(std::initializer_list<int> colors);
    static ColorSet all(int h);

    bool contains(int c) const { return (bits >> c) & 1u; }
    ColorSet without(int c) const;
    ColorSet complement(int h) const;
    int size() const;
    std::vector<int> colors() const;

    friend bool operator==(ColorSet, ColorSet) = default;
};

// Finite h-regular properly edge-colored multigraph stored as the involution
// table (vertex, color) -> vertex. Colors are 1..h.
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(int vertices, int colors);

    int vertex_count() const { return n_; }
    int color_count() const { return h_; }

    // -1 when unset.
    int neighbor(int v, int c) const { return adj_[static_cast<std::size_t>(v * h_ + c - 1)]; }

    // Sets both directions of the c-colored edge uv.
    void set_edge(int u, int v, int c);
    // Sets a single slot; used to build deliberately broken graphs.
    void set_slot(int v, int c, int w) { adj_[static_cast<std::size_t>(v * h_ + c - 1)] = w; }

    const std::vector<int>& table() const { return adj_; }

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    int n_ = 0;
    int h_ = 0;
    std::vector<int> adj_;
};

struct Edge {
    int u, v, color;
};

// Empty iff the graph is a total, symmetric, loop-free involution table.
std::vector<std::string> validate(const ColoredGraph& g);

// Edges with u < v, sorted by (u, v, color).
std::vector<Edge> edges(const ColoredGraph& g);

// Restriction Gamma_B: same vertices, only the edges colored in B.
struct GraphView {
    const ColoredGraph* graph;
    ColorSet colors;

    int vertex_count() const { return graph->vertex_count(); }
    std::vector<Edge> edges() const;
};

GraphView restrict(const ColoredGraph& g, ColorSet b);

// Component id per vertex; ids ordered by least vertex.
std::vector<int> component_labels(const ColoredGraph& g, ColorSet b);
std::vector<std::vector<int>> components(const ColoredGraph& g, ColorSet b);
std::vector<std::vector<int>> components(const GraphView& view);
int component_count(const ColoredGraph& g, ColorSet b);
bool is_connected(const ColoredGraph& g);

int g_pair(const ColoredGraph& g, int i, int j);
bool is_contracted(const ColoredGraph& g);
// 0/1 side per vertex when a bipartition exists.
std::optional<std::vector<int>> is_bipartite(const ColoredGraph& g);
// No two vertices joined by two or more edges.
bool is_simple(const ColoredGraph& g);

// Vertex order: vertices of g1 other than v1, then vertices of g2 other than v2.
ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2);

// perm[old] = new.
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);
// color_perm[c-1] = new color of old color c.
ColoredGraph recolor(const ColoredGraph& g, const std::vector<int>& color_perm);

enum class IsoMode { ColorFixed, ColorPermuting };

std::string canonical_form(const ColoredGraph& g, IsoMode mode);
bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b, IsoMode mode);
// The canonically labelled graph encoded by a certificate.
ColoredGraph graph_from_certificate(const std::string& cert);
std::string to_hex(const std::string& bytes);

}  // namespace gem
