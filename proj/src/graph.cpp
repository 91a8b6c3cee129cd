#include "gem/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gem {

ColorSet::ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) bits |= 1u << c;
}

ColorSet ColorSet::all(int h) {
    ColorSet s;
    for (int c = 1; c <= h; ++c) s.bits |= 1u << c;
    return s;
}

ColorSet ColorSet::without(int c) const {
    ColorSet s = *this;
    s.bits &= ~(1u << c);
    return s;
}

ColorSet ColorSet::complement(int h) const {
    ColorSet s = all(h);
    s.bits &= ~bits;
    return s;
}

int ColorSet::size() const { return __builtin_popcount(bits); }

std::vector<int> ColorSet::colors() const {
    std::vector<int> out;
    for (int c = 1; c < 32; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

ColoredGraph::ColoredGraph(int vertices, int colors)
    : n_(vertices), h_(colors), adj_(static_cast<std::size_t>(vertices * colors), -1) {
    if (vertices < 0 || colors < 1 || colors > 30) throw std::invalid_argument("bad graph dimensions");
}

void ColoredGraph::set_edge(int u, int v, int c) {
    if (c < 1 || c > h_) throw std::invalid_argument("invalid color " + std::to_string(c));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    set_slot(u, c, v);
    set_slot(v, c, u);
}

std::vector<std::string> validate(const ColoredGraph& g) {
    std::vector<std::string> out;
    int n = g.vertex_count(), h = g.color_count();
    for (int v = 0; v < n; ++v) {
        for (int c = 1; c <= h; ++c) {
            int w = g.neighbor(v, c);
            std::string at = "vertex " + std::to_string(v) + " color " + std::to_string(c);
            if (w < 0 || w >= n) {
                out.push_back(at + ": no neighbor");
                continue;
            }
            if (w == v) {
                out.push_back(at + ": loop");
                continue;
            }
            if (g.neighbor(w, c) != v)
                out.push_back(at + ": neighbor " + std::to_string(w) + " does not point back (points to " +
                              std::to_string(g.neighbor(w, c)) + ")");
        }
    }
    return out;
}

std::vector<Edge> edges(const ColoredGraph& g) {
    return restrict(g, ColorSet::all(g.color_count())).edges();
}

std::vector<Edge> GraphView::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < graph->vertex_count(); ++v)
        for (int c = 1; c <= graph->color_count(); ++c) {
            if (!colors.contains(c)) continue;
            int w = graph->neighbor(v, c);
            if (w > v) out.push_back({v, w, c});
        }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.color) < std::tie(b.u, b.v, b.color);
    });
    return out;
}

GraphView restrict(const ColoredGraph& g, ColorSet b) {
    for (int c = 0; c < 32; ++c)
        if (b.contains(c) && (c < 1 || c > g.color_count()))
            throw std::invalid_argument("invalid color " + std::to_string(c));
    return GraphView{&g, b};
}

std::vector<int> component_labels(const ColoredGraph& g, ColorSet b) {
    int n = g.vertex_count(), h = g.color_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c = 1; c <= h; ++c) {
                if (!b.contains(c)) continue;
                int w = g.neighbor(v, c);
                if (w >= 0 && label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<int>> components(const ColoredGraph& g, ColorSet b) {
    std::vector<int> label = component_labels(g, b);
    int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
    for (int v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
    return out;
}

std::vector<std::vector<int>> components(const GraphView& view) { return components(*view.graph, view.colors); }

int component_count(const ColoredGraph& g, ColorSet b) {
    std::vector<int> label = component_labels(g, b);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const ColoredGraph& g) {
    return component_count(g, ColorSet::all(g.color_count())) <= 1;
}

int g_pair(const ColoredGraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("g_pair needs two distinct colors");
    ColorSet b{i, j};
    restrict(g, b);
    auto comps = components(g, b);
    for (const auto& comp : comps) {
        // Each component of a two-color restriction is an even cycle.
        if (comp.size() % 2 != 0) throw std::logic_error("odd bicolored component");
        for (int v : comp)
            if (g.neighbor(v, i) < 0 || g.neighbor(v, j) < 0) throw std::logic_error("incomplete graph");
    }
    return static_cast<int>(comps.size());
}

bool is_contracted(const ColoredGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    int h = g.color_count();
    for (int c = 1; c <= h; ++c)
        if (component_count(g, ColorSet::all(h).without(c)) != 1) return false;
    return true;
}

std::optional<std::vector<int>> is_bipartite(const ColoredGraph& g) {
    int n = g.vertex_count(), h = g.color_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c = 1; c <= h; ++c) {
                int w = g.neighbor(v, c);
                if (w < 0) continue;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_simple(const ColoredGraph& g) {
    int h = g.color_count();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int a = 1; a <= h; ++a)
            for (int b = a + 1; b <= h; ++b)
                if (g.neighbor(v, a) == g.neighbor(v, b)) return false;
    return true;
}

ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2) {
    if (g1.color_count() != g2.color_count()) throw std::invalid_argument("color counts differ");
    int h = g1.color_count();
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= n2) throw std::invalid_argument("vertex out of range");
    std::vector<int> m1(static_cast<std::size_t>(n1), -1), m2(static_cast<std::size_t>(n2), -1);
    int next = 0;
    for (int v = 0; v < n1; ++v)
        if (v != v1) m1[v] = next++;
    for (int v = 0; v < n2; ++v)
        if (v != v2) m2[v] = next++;
    ColoredGraph out(next, h);
    for (int c = 1; c <= h; ++c) {
        for (int v = 0; v < n1; ++v) {
            int w = g1.neighbor(v, c);
            if (v != v1 && w != v1) out.set_slot(m1[v], c, m1[w]);
        }
        for (int v = 0; v < n2; ++v) {
            int w = g2.neighbor(v, c);
            if (v != v2 && w != v2) out.set_slot(m2[v], c, m2[w]);
        }
        out.set_edge(m1[g1.neighbor(v1, c)], m2[g2.neighbor(v2, c)], c);
    }
    return out;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
    int n = g.vertex_count(), h = g.color_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    ColoredGraph out(n, h);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= h; ++c) {
            int w = g.neighbor(v, c);
            out.set_slot(perm[v], c, w < 0 ? -1 : perm[w]);
        }
    return out;
}

ColoredGraph recolor(const ColoredGraph& g, const std::vector<int>& color_perm) {
    int n = g.vertex_count(), h = g.color_count();
    if (static_cast<int>(color_perm.size()) != h) throw std::invalid_argument("color permutation size mismatch");
    ColoredGraph out(n, h);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= h; ++c) out.set_slot(v, color_perm[c - 1], g.neighbor(v, c));
    return out;
}

namespace {

using Code = std::vector<std::uint16_t>;

// Least breadth-first code of one component: columns follow `cols`.
Code component_code(const ColoredGraph& g, const std::vector<int>& comp, const std::vector<int>& cols,
                    std::vector<int>& label) {
    int h = g.color_count();
    std::size_t k = comp.size();
    Code best;
    Code cur;
    std::vector<int> order;
    order.reserve(k);
    cur.reserve(k * static_cast<std::size_t>(h));
    for (int root : comp) {
        for (int v : comp) label[v] = -1;
        order.clear();
        cur.clear();
        label[root] = 0;
        order.push_back(root);
        bool smaller = best.empty();
        bool abort = false;
        for (std::size_t idx = 0; idx < order.size() && !abort; ++idx) {
            int v = order[idx];
            for (int col = 0; col < h; ++col) {
                int w = g.neighbor(v, cols[col]);
                if (label[w] < 0) {
                    label[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
                auto e = static_cast<std::uint16_t>(label[w]);
                if (!smaller) {
                    std::uint16_t b = best[cur.size()];
                    if (e > b) {
                        abort = true;
                        break;
                    }
                    if (e < b) smaller = true;
                }
                cur.push_back(e);
            }
        }
        if (!abort && smaller) best = cur;
    }
    return best;
}

void put16(std::string& s, unsigned x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
}

unsigned get16(const std::string& s, std::size_t& pos) {
    if (pos + 2 > s.size()) throw std::invalid_argument("truncated certificate");
    unsigned x = static_cast<unsigned char>(s[pos]) | (static_cast<unsigned>(static_cast<unsigned char>(s[pos + 1])) << 8);
    pos += 2;
    return x;
}

std::string certificate_with_columns(const ColoredGraph& g, const std::vector<int>& cols, char mode,
                                     const std::vector<std::vector<int>>& comps) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Code> codes;
    codes.reserve(comps.size());
    for (const auto& comp : comps) codes.push_back(component_code(g, comp, cols, label));
    std::sort(codes.begin(), codes.end(), [](const Code& a, const Code& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::string s;
    s.push_back('G');
    s.push_back(mode);
    put16(s, static_cast<unsigned>(g.vertex_count()));
    s.push_back(static_cast<char>(g.color_count()));
    put16(s, static_cast<unsigned>(codes.size()));
    for (const Code& c : codes) {
        put16(s, static_cast<unsigned>(c.size()));
        for (std::uint16_t x : c) put16(s, x);
    }
    return s;
}

}  // namespace

std::string canonical_form(const ColoredGraph& g, IsoMode mode) {
    int h = g.color_count();
    if (!validate(g).empty()) throw std::invalid_argument("canonical_form needs a valid graph");
    if (g.vertex_count() > 65535) throw std::invalid_argument("graph too large for a certificate");
    auto comps = components(g, ColorSet::all(h));
    std::vector<int> cols(static_cast<std::size_t>(h));
    std::iota(cols.begin(), cols.end(), 1);
    if (mode == IsoMode::ColorFixed) return certificate_with_columns(g, cols, 'F', comps);
    std::string best;
    do {
        std::string c = certificate_with_columns(g, cols, 'P', comps);
        if (best.empty() || c < best) best = std::move(c);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b, IsoMode mode) {
    if (a.vertex_count() != b.vertex_count() || a.color_count() != b.color_count()) return false;
    return canonical_form(a, mode) == canonical_form(b, mode);
}

ColoredGraph graph_from_certificate(const std::string& cert) {
    if (cert.size() < 7 || cert[0] != 'G') throw std::invalid_argument("not a certificate");
    std::size_t pos = 2;
    int n = static_cast<int>(get16(cert, pos));
    int h = static_cast<unsigned char>(cert[pos++]);
    unsigned ncomp = get16(cert, pos);
    ColoredGraph g(n, h);
    int offset = 0;
    for (unsigned k = 0; k < ncomp; ++k) {
        unsigned len = get16(cert, pos);
        int size = static_cast<int>(len) / h;
        for (int v = 0; v < size; ++v)
            for (int c = 1; c <= h; ++c) g.set_slot(offset + v, c, offset + static_cast<int>(get16(cert, pos)));
        offset += size;
    }
    if (offset != n) throw std::invalid_argument("certificate size mismatch");
    return g;
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

}  // namespace gem
