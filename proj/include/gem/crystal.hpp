#pragma once

#include "gem/graph.hpp"
#include "gem/words.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gem {

using GMatrix = std::array<std::array<int, 5>, 5>;

GMatrix g_matrix(const ColoredGraph& g);

// A 4-colored graph that passed check_gagliardi.
struct Crystallization {
    ColoredGraph graph;
    GMatrix g{};
    std::optional<std::vector<int>> bipartition;

    int vertex_count() const { return graph.vertex_count(); }
};

struct GagliardiReport {
    std::optional<Crystallization> crystal;
    // Empty when accepted; otherwise one of: colors, valid, connected,
    // contracted, parity, (i), (ii).
    std::string condition;
    std::string detail;

    bool ok() const { return crystal.has_value(); }
};

GagliardiReport check_gagliardi(const ColoredGraph& g);
// Throws std::invalid_argument with the report detail on rejection.
Crystallization as_crystallization(const ColoredGraph& g);

struct FaceVector {
    long f0 = 0, f1 = 0, f2 = 0, f3 = 0;
    long h1 = 0, g2 = 0, h2 = 0;
};

// Counts j-cells of K(Gamma) as components of restrictions to 3-j colors.
FaceVector face_vector(const Crystallization& c);

bool orientable(const Crystallization& c);

struct ExtractedRelator {
    std::vector<int> cycle;  // vertices of the Gamma_ij cycle in walk order
    Word raw;                // r-tilde over s+1 generators
    Word word;               // after deleting x_{s+1} and reducing
    bool redundant = false;
};

struct Extraction {
    int i = 3, j = 4;
    // Components of Gamma_{C\{i,j}} ordered by least vertex.
    std::vector<std::vector<int>> components;
    int deleted_component = 0;
    // generator_component[k-1] is the component presenting x_k.
    std::vector<int> generator_component;
    std::vector<ExtractedRelator> relators;

    int generators() const { return static_cast<int>(generator_component.size()); }
    // All nonempty relators.
    Presentation presentation() const;
    // Nonempty relators other than the redundant one.
    Presentation minimal() const;
};

// deleted < 0 picks the largest component, ties by least vertex.
Extraction extract_presentation(const Crystallization& c, int i = 3, int j = 4, int deleted = -1);

int smallest_component(const Crystallization& c, int i, int j);

struct WeightBound {
    bool ok = true;
    std::optional<int> psi_margin;
    std::vector<int> phi_margins;
};

WeightBound check_weight_bound(const Crystallization& c, std::optional<int> psi, const std::vector<int>& phis);

struct Dipole {
    int x = 0, y = 0;
    int type = 0;
    ColorSet shared;
    // Component ids of x and y in Gamma_B, B the complementary colors.
    int x_component = 0, y_component = 0;

    bool degenerate(int colors) const { return type == 1 || type == colors - 1; }
};

std::vector<Dipole> find_dipoles(const ColoredGraph& g);
ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d);
// Inverse of cancellation: two new vertices x, y sharing `shared`, with x
// attached to u along every other color. New vertices get ids m, m+1.
ColoredGraph insert_dipole(const ColoredGraph& g, int u, ColorSet shared);

}  // namespace gem
