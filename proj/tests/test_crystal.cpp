#include "gem/catalog.hpp"
#include "gem/crystal.hpp"
#include "gem/groups.hpp"
#include "gem/weight.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace gem;

namespace {

// Components of the restriction to `colors`, by depth-first search.
int count_components(const ColoredGraph& g, const std::vector<int>& colors) {
    int n = g.vertex_count(), count = 0;
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c : colors) {
                int u = g.neighbor(v, c);
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return count;
}

bool gagliardi_oracle(const ColoredGraph& g) {
    if (count_components(g, {1, 2, 3, 4}) != 1) return false;
    for (int c = 1; c <= 4; ++c) {
        std::vector<int> rest;
        for (int d = 1; d <= 4; ++d)
            if (d != c) rest.push_back(d);
        if (count_components(g, rest) != 1) return false;
    }
    int g12 = count_components(g, {1, 2}), g13 = count_components(g, {1, 3}), g14 = count_components(g, {1, 4});
    return g12 == count_components(g, {3, 4}) && g13 == count_components(g, {2, 4}) &&
           g14 == count_components(g, {2, 3}) && g12 + g13 + g14 == 2 + g.vertex_count() / 2;
}

ColoredGraph random_graph(std::mt19937& rng, int n) {
    ColoredGraph g(n, 4);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int c = 1; c <= 4; ++c) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; i += 2) g.set_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)], c);
    }
    return g;
}

Crystallization crystal(const std::string& name) { return as_crystallization(catalog_entry(name).built.graph); }

}  // namespace

TEST(Gagliardi, AcceptsCatalogGraphs) {
    for (const std::string& name : {"J1", "J2", "J3", "J4", "K:3,1", "M:2,3", "N:1,4"}) {
        GagliardiReport r = check_gagliardi(catalog_entry(name).built.graph);
        EXPECT_TRUE(r.ok()) << name << " " << r.condition << " " << r.detail;
    }
    EXPECT_TRUE(check_gagliardi(sphere_graph()).ok());
}

TEST(Gagliardi, NamesTheFailingCondition) {
    EXPECT_EQ(check_gagliardi(ColoredGraph(2, 3)).condition, "colors");
    ColoredGraph broken = build_J(1);
    broken.set_slot(0, 1, 0);
    EXPECT_EQ(check_gagliardi(broken).condition, "valid");
    ColoredGraph two(4, 4);
    for (int c = 1; c <= 3; ++c) {
        two.set_edge(0, 1, c);
        two.set_edge(2, 3, c);
    }
    two.set_edge(0, 2, 4);
    two.set_edge(1, 3, 4);
    EXPECT_EQ(check_gagliardi(two).condition, "contracted");
    ColoredGraph apart(4, 4);
    for (int c = 1; c <= 4; ++c) {
        apart.set_edge(0, 1, c);
        apart.set_edge(2, 3, c);
    }
    EXPECT_EQ(check_gagliardi(apart).condition, "connected");
    EXPECT_THROW(as_crystallization(two), std::invalid_argument);
}

TEST(Gagliardi, SwitchedJ1IsRejected) {
    // Exchange the endpoints of two color-1 edges of J1; every contracted result
    // that loses a crystallization condition must be reported as (i) or (ii).
    ColoredGraph j1 = build_J(1);
    int rejected = 0;
    for (const Edge& a : edges(j1))
        for (const Edge& b : edges(j1)) {
            if (a.color != 1 || b.color != 1 || a.u >= b.u) continue;
            ColoredGraph g = j1;
            g.set_edge(a.u, b.v, 1);
            g.set_edge(b.u, a.v, 1);
            GagliardiReport r = check_gagliardi(g);
            EXPECT_EQ(r.ok(), gagliardi_oracle(g));
            if (!r.ok() && r.condition != "contracted" && r.condition != "connected") {
                EXPECT_TRUE(r.condition == "(i)" || r.condition == "(ii)") << r.condition;
                ++rejected;
            }
        }
    EXPECT_GT(rejected, 0);
}

TEST(Gagliardi, AgreesWithDirectCountOnRandomGraphs) {
    std::mt19937 rng(13);
    int accepted = 0;
    for (int t = 0; t < 3000; ++t) {
        ColoredGraph g = random_graph(rng, 2 * (1 + t % 5));
        bool ok = check_gagliardi(g).ok();
        EXPECT_EQ(ok, gagliardi_oracle(g));
        accepted += ok;
    }
    EXPECT_GT(accepted, 10);
}

TEST(FaceVector, WorkedValues) {
    FaceVector f = face_vector(crystal("J1"));
    EXPECT_EQ(f.f0, 4);
    EXPECT_EQ(f.f1, 12);
    EXPECT_EQ(f.f2, 16);
    EXPECT_EQ(f.f3, 8);
    EXPECT_EQ(f.g2, 6);
    FaceVector s = face_vector(as_crystallization(sphere_graph()));
    EXPECT_EQ(s.f1, 6);
    EXPECT_EQ(s.f3, 2);
    EXPECT_EQ(s.g2, 0);
    FaceVector m = face_vector(crystal("M:2,3"));
    EXPECT_EQ(m.f3, 16);
    EXPECT_EQ(m.h2, 14);
}

TEST(FaceVector, CountsAgreeWithRestrictions) {
    for (const std::string& name : {"J2", "J3", "J4", "K:7,3", "N:3,5"}) {
        Crystallization c = crystal(name);
        FaceVector f = face_vector(c);
        long f1 = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) f1 += count_components(c.graph, {i, j});
        EXPECT_EQ(f.f0, 4);
        EXPECT_EQ(f.f1, f1);
        EXPECT_EQ(f.f2, 2L * c.vertex_count());
        EXPECT_EQ(f.f3, c.vertex_count());
        EXPECT_EQ(f.f0 - f.f1 + f.f2 - f.f3, 0);
        EXPECT_EQ(f.h2, f.f3 - 2);
        EXPECT_EQ(f.g2, f.h2 - f.h1);
    }
}

TEST(Orientability, FollowsBipartiteness) {
    EXPECT_TRUE(orientable(crystal("J1")));
    EXPECT_FALSE(orientable(crystal("J2")));
    EXPECT_TRUE(orientable(crystal("J3")));
    EXPECT_TRUE(orientable(crystal("J4")));
}

TEST(Extraction, LensSpaceRelator) {
    Extraction e = extract_presentation(crystal("K:3,1"));
    Presentation p = e.minimal();
    EXPECT_EQ(p.generators, 1);
    ASSERT_EQ(p.relators.size(), 1u);
    EXPECT_EQ(canonical_class(p.relators[0]), canonical_class(power(1, 3)));
}

TEST(Extraction, GroupIndependentOfChoices) {
    for (const std::string& name : {"J1", "J2", "J3", "J4", "K:5,2", "M:2,4", "N:2,4"}) {
        CatalogEntry entry = catalog_entry(name);
        Crystallization c = as_crystallization(entry.built.graph);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                Extraction e0 = extract_presentation(c, i, j);
                for (int d = 0; d < static_cast<int>(e0.components.size()); ++d) {
                    Extraction e = extract_presentation(c, i, j, d);
                    EXPECT_EQ(e.generators(), static_cast<int>(e.components.size()) - 1);
                    EXPECT_EQ(static_cast<int>(e.relators.size()), c.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    EXPECT_EQ(identify(e.minimal()), entry.expected_group) << name << " " << i << j << " " << d;
                    EXPECT_EQ(identify(e.presentation()), entry.expected_group) << name;
                    int redundant = 0;
                    for (const ExtractedRelator& r : e.relators) {
                        if (r.word.empty()) EXPECT_TRUE(r.redundant);
                        redundant += r.redundant;
                        if (!r.word.empty()) EXPECT_GE(static_cast<int>(r.cycle.size()), weight_lambda(r.word));
                    }
                    EXPECT_GE(redundant, 1);
                }
            }
    }
}

TEST(Extraction, WeightBoundHolds) {
    for (const std::string& name : {"J1", "J3", "K:3,1", "M:2,3"}) {
        Crystallization c = crystal(name);
        Presentation p = extract_presentation(c).minimal();
        PhiResult phi = phi_search(p);
        WeightBound b = check_weight_bound(c, std::nullopt, {phi.upper_bound});
        EXPECT_TRUE(b.ok) << name;
        EXPECT_LE(phi.upper_bound, c.vertex_count()) << name;
    }
    WeightBound bad = check_weight_bound(crystal("K:3,1"), 14, {});
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.psi_margin, -2);
}

TEST(Dipoles, FoundDipolesMeetTheDefinition) {
    std::mt19937 rng(19);
    int seen = 0;
    for (int t = 0; t < 400; ++t) {
        ColoredGraph g = random_graph(rng, 8);
        for (const Dipole& d : find_dipoles(g)) {
            ++seen;
            std::vector<int> shared = d.shared.colors(), rest = d.shared.complement(4).colors();
            EXPECT_EQ(static_cast<int>(shared.size()), d.type);
            for (int c : shared) EXPECT_EQ(g.neighbor(d.x, c), d.y);
            for (int c : rest) EXPECT_NE(g.neighbor(d.x, c), d.y);
            auto labels = component_labels(g, d.shared.complement(4));
            EXPECT_NE(labels[static_cast<std::size_t>(d.x)], labels[static_cast<std::size_t>(d.y)]);
            ColoredGraph h = cancel_dipole(g, d);
            EXPECT_EQ(h.vertex_count(), 6);
            EXPECT_TRUE(validate(h).empty());
        }
    }
    EXPECT_GT(seen, 0);
    EXPECT_TRUE(find_dipoles(sphere_graph()).empty());
}

TEST(Dipoles, InsertThenCancelRecoversGraph) {
    for (const std::string& name : {"J1", "J2", "K:5,2", "N:1,4"}) {
        ColoredGraph g = catalog_entry(name).built.graph;
        for (ColorSet shared : {ColorSet{1}, ColorSet{2, 4}, ColorSet{1, 2, 3}, ColorSet{2, 3, 4}}) {
            ColoredGraph big = insert_dipole(g, 1, shared);
            ASSERT_TRUE(validate(big).empty()) << name;
            EXPECT_TRUE(is_connected(big));
            int m = g.vertex_count();
            bool found = false;
            for (const Dipole& d : find_dipoles(big))
                if (std::min(d.x, d.y) == m && std::max(d.x, d.y) == m + 1) {
                    EXPECT_EQ(d.shared, shared);
                    EXPECT_TRUE(is_isomorphic(cancel_dipole(big, d), g, IsoMode::ColorFixed)) << name;
                    found = true;
                }
            EXPECT_TRUE(found) << name;
        }
    }
    Dipole fake{0, 1, 1, ColorSet{1}, 0, 0};
    EXPECT_THROW(cancel_dipole(build_J(1), fake), std::invalid_argument);
}
