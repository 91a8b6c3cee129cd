#include "gem/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace gem {

GMatrix g_matrix(const ColoredGraph& g) {
    GMatrix m{};
    int h = g.color_count();
    for (int a = 1; a <= h && a <= 4; ++a)
        for (int b = a + 1; b <= h && b <= 4; ++b) m[a][b] = m[b][a] = g_pair(g, a, b);
    return m;
}

GagliardiReport check_gagliardi(const ColoredGraph& g) {
    GagliardiReport r;
    auto reject = [&](std::string cond, std::string detail) {
        r.condition = std::move(cond);
        r.detail = std::move(detail);
        return r;
    };
    if (g.color_count() != 4) return reject("colors", "expected 4 colors, found " + std::to_string(g.color_count()));
    auto bad = validate(g);
    if (!bad.empty()) return reject("valid", bad.front());
    int m = g.vertex_count();
    if (m == 0 || m % 2 != 0) return reject("parity", "vertex count " + std::to_string(m) + " is not positive and even");
    if (!is_connected(g)) return reject("connected", "graph is disconnected");
    if (!is_contracted(g)) return reject("contracted", "removing one color disconnects the graph");
    GMatrix gm = g_matrix(g);
    const int pairs[3][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};
    for (const auto& p : pairs)
        if (gm[p[0]][p[1]] != gm[p[2]][p[3]])
            return reject("(i)", "g" + std::to_string(p[0]) + std::to_string(p[1]) + "=" +
                                     std::to_string(gm[p[0]][p[1]]) + " but g" + std::to_string(p[2]) +
                                     std::to_string(p[3]) + "=" + std::to_string(gm[p[2]][p[3]]));
    int sum = gm[1][2] + gm[1][3] + gm[1][4];
    if (sum != 2 + m / 2)
        return reject("(ii)", "g12+g13+g14=" + std::to_string(sum) + " but 2+m/2=" + std::to_string(2 + m / 2));
    r.crystal = Crystallization{g, gm, is_bipartite(g)};
    return r;
}

Crystallization as_crystallization(const ColoredGraph& g) {
    GagliardiReport r = check_gagliardi(g);
    if (!r.ok()) throw std::invalid_argument("not a crystallization: condition " + r.condition + ": " + r.detail);
    return *r.crystal;
}

FaceVector face_vector(const Crystallization& c) {
    const ColoredGraph& g = c.graph;
    FaceVector f;
    for (int a = 1; a <= 4; ++a) {
        f.f0 += component_count(g, ColorSet::all(4).without(a));
        f.f2 += component_count(g, ColorSet{a});
        for (int b = a + 1; b <= 4; ++b) f.f1 += component_count(g, ColorSet::all(4).without(a).without(b));
    }
    f.f3 = component_count(g, ColorSet{});
    f.h1 = f.f0 - 4;
    f.h2 = f.f1 - 3 * f.f0 + 6;
    f.g2 = f.h2 - f.h1;
    return f;
}

bool orientable(const Crystallization& c) { return c.bipartition.has_value(); }

Presentation Extraction::presentation() const {
    Presentation p{generators(), {}};
    for (const ExtractedRelator& r : relators)
        if (!r.word.empty()) p.relators.push_back(r.word);
    return p;
}

Presentation Extraction::minimal() const {
    Presentation p{generators(), {}};
    for (const ExtractedRelator& r : relators)
        if (!r.word.empty() && !r.redundant) p.relators.push_back(r.word);
    return p;
}

int smallest_component(const Crystallization& c, int i, int j) {
    auto comps = components(c.graph, ColorSet::all(4).without(i).without(j));
    std::size_t best = 0;
    for (std::size_t k = 1; k < comps.size(); ++k)
        if (comps[k].size() < comps[best].size()) best = k;
    return static_cast<int>(best);
}

Extraction extract_presentation(const Crystallization& c, int i, int j, int deleted) {
    if (i == j) throw std::invalid_argument("extraction needs two distinct colors");
    if (i < 1 || i > 4 || j < 1 || j > 4) throw std::invalid_argument("color out of range");
    const ColoredGraph& g = c.graph;
    Extraction ex;
    ex.i = i;
    ex.j = j;
    ColorSet rest = ColorSet::all(4).without(i).without(j);
    ex.components = components(g, rest);
    std::vector<int> label = component_labels(g, rest);
    int count = static_cast<int>(ex.components.size());
    if (deleted < 0) {
        deleted = 0;
        for (int k = 1; k < count; ++k)
            if (ex.components[k].size() > ex.components[deleted].size()) deleted = k;
    }
    if (deleted >= count) throw std::invalid_argument("deleted component out of range");
    ex.deleted_component = deleted;
    // Generator index per component; the deleted one maps to s+1.
    std::vector<int> gen(count);
    int s = count - 1;
    for (int k = 0, next = 1; k < count; ++k) {
        if (k == deleted) {
            gen[k] = s + 1;
        } else {
            gen[k] = next++;
            ex.generator_component.push_back(k);
        }
    }
    for (const auto& cyc : components(g, ColorSet{i, j})) {
        ExtractedRelator r;
        int v = cyc.front();
        int u = v;
        int color = i;
        do {
            r.cycle.push_back(u);
            u = g.neighbor(u, color);
            color = color == i ? j : i;
        } while (u != v);
        std::size_t len = r.cycle.size();
        std::vector<Letter> raw;
        // x_{k2}^{+1} x_{k3}^{-1} ... x_{k_{2l}}^{+1} x_{k1}^{-1}
        for (std::size_t h = 1; h <= len; ++h) {
            int vertex = r.cycle[h % len];
            int x = gen[static_cast<std::size_t>(label[static_cast<std::size_t>(vertex)])];
            raw.push_back(h % 2 == 1 ? x : -x);
        }
        r.raw.letters = raw;
        std::vector<Letter> kept;
        for (Letter l : raw)
            if (generator_of(l) != s + 1) kept.push_back(l);
        r.word = cyclic_reduce(free_reduce(kept));
        ex.relators.push_back(std::move(r));
    }
    bool any_empty = false;
    for (ExtractedRelator& r : ex.relators)
        if (r.word.empty()) {
            r.redundant = true;
            any_empty = true;
        }
    if (!any_empty && !ex.relators.empty()) {
        std::size_t pick = 0;
        for (std::size_t k = 1; k < ex.relators.size(); ++k) {
            int a = weight_lambda(ex.relators[k].word), b = weight_lambda(ex.relators[pick].word);
            if (a > b || (a == b && serial_compare(ex.relators[k].word, ex.relators[pick].word) < 0)) pick = k;
        }
        ex.relators[pick].redundant = true;
    }
    return ex;
}

WeightBound check_weight_bound(const Crystallization& c, std::optional<int> psi, const std::vector<int>& phis) {
    WeightBound wb;
    int m = c.vertex_count();
    if (psi) {
        wb.psi_margin = m - *psi;
        wb.ok = wb.ok && *wb.psi_margin >= 0;
    }
    for (int p : phis) {
        wb.phi_margins.push_back(m - p);
        wb.ok = wb.ok && m >= p;
    }
    return wb;
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
    std::vector<Dipole> out;
    int n = g.vertex_count(), h = g.color_count();
    for (int x = 0; x < n; ++x) {
        std::vector<int> partners;
        for (int c = 1; c <= h; ++c) {
            int y = g.neighbor(x, c);
            if (y > x && std::find(partners.begin(), partners.end(), y) == partners.end()) partners.push_back(y);
        }
        std::sort(partners.begin(), partners.end());
        for (int y : partners) {
            Dipole d;
            d.x = x;
            d.y = y;
            for (int c = 1; c <= h; ++c)
                if (g.neighbor(x, c) == y) d.shared.bits |= 1u << c;
            d.type = d.shared.size();
            if (d.type >= h) continue;
            auto label = component_labels(g, d.shared.complement(h));
            d.x_component = label[static_cast<std::size_t>(x)];
            d.y_component = label[static_cast<std::size_t>(y)];
            if (d.x_component != d.y_component) out.push_back(d);
        }
    }
    return out;
}

ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d) {
    int n = g.vertex_count(), h = g.color_count();
    if (d.x < 0 || d.y < 0 || d.x >= n || d.y >= n || d.x == d.y) throw std::invalid_argument("dipole vertices out of range");
    ColorSet shared;
    for (int c = 1; c <= h; ++c)
        if (g.neighbor(d.x, c) == d.y) shared.bits |= 1u << c;
    if (shared.size() == 0 || shared.size() >= h) throw std::invalid_argument("vertices do not form a dipole");
    ColorSet b = shared.complement(h);
    auto label = component_labels(g, b);
    if (label[static_cast<std::size_t>(d.x)] == label[static_cast<std::size_t>(d.y)])
        throw std::invalid_argument("vertices do not form a dipole: same complementary component");
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (int v = 0, k = 0; v < n; ++v)
        if (v != d.x && v != d.y) index[static_cast<std::size_t>(v)] = k++;
    ColoredGraph out(n - 2, h);
    for (int v = 0; v < n; ++v) {
        if (v == d.x || v == d.y) continue;
        for (int c = 1; c <= h; ++c) {
            int w = g.neighbor(v, c);
            if (w == d.x || w == d.y) {
                int other = w == d.x ? d.y : d.x;
                w = g.neighbor(other, c);
            }
            out.set_slot(index[static_cast<std::size_t>(v)], c, index[static_cast<std::size_t>(w)]);
        }
    }
    return out;
}

ColoredGraph insert_dipole(const ColoredGraph& g, int u, ColorSet shared) {
    int n = g.vertex_count(), h = g.color_count();
    if (u < 0 || u >= n) throw std::invalid_argument("vertex out of range");
    if (shared.size() == 0 || shared.size() >= h) throw std::invalid_argument("dipole type out of range");
    ColoredGraph out(n + 2, h);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= h; ++c) out.set_slot(v, c, g.neighbor(v, c));
    int x = n, y = n + 1;
    for (int c = 1; c <= h; ++c) {
        if (shared.contains(c)) {
            out.set_edge(x, y, c);
        } else {
            int w = g.neighbor(u, c);
            out.set_edge(u, x, c);
            out.set_edge(y, w, c);
        }
    }
    return out;
}

}  // namespace gem
