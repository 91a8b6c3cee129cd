#include "gem/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gem {

namespace {

struct Label {
    char family;
    int index;

    std::string text() const { return std::string(1, family) + std::to_string(index); }
    friend auto operator<=>(const Label&, const Label&) = default;
};

using EdgeKey = std::tuple<Label, Label, int>;

class EdgeList {
public:
    void add(Label a, Label b, int c) {
        if (!edges_.insert(key(a, b, c)).second)
            throw std::logic_error("duplicate edge " + a.text() + b.text() + " color " + std::to_string(c));
    }
    void remove(Label a, Label b, int c) {
        if (edges_.erase(key(a, b, c)) == 0)
            throw std::logic_error("missing edge " + a.text() + b.text() + " color " + std::to_string(c));
    }

    LabeledGraph build() const {
        std::set<Label> names;
        for (const auto& [a, b, c] : edges_) {
            names.insert(a);
            names.insert(b);
        }
        std::map<Label, int> id;
        LabeledGraph out;
        for (const Label& l : names) {
            id[l] = static_cast<int>(out.labels.size());
            out.labels.push_back(l.text());
        }
        out.graph = ColoredGraph(static_cast<int>(names.size()), 4);
        for (const auto& [a, b, c] : edges_) {
            if (out.graph.neighbor(id[a], c) >= 0 || out.graph.neighbor(id[b], c) >= 0)
                throw std::logic_error("color " + std::to_string(c) + " used twice at " + a.text() + " or " + b.text());
            out.graph.set_edge(id[a], id[b], c);
        }
        if (!validate(out.graph).empty()) throw std::logic_error("catalog graph is not 4-regular: " + validate(out.graph).front());
        return out;
    }

private:
    std::set<EdgeKey> edges_;

    static EdgeKey key(Label a, Label b, int c) { return a < b ? EdgeKey{a, b, c} : EdgeKey{b, a, c}; }
};

Label v(int i) { return {'v', i}; }
Label x(int i) { return {'x', i}; }
Label y(int i) { return {'y', i}; }
Label z(int i) { return {'z', i}; }

// Three-letter cycle families of J3 and J4: color 1 on (1,2),(3,4),(5,6),
// color 2 on (2,3),(4,5),(6,1).
void hexagon(EdgeList& e, char f) {
    for (int i = 1; i <= 5; i += 2) e.add({f, i}, {f, i + 1}, 1);
    for (int i = 2; i <= 6; i += 2) e.add({f, i}, {f, i % 6 + 1}, 2);
}

void add_pairs(EdgeList& e, const std::string& pairs, int color) {
    // "a1b4 b5c2 ..." with single-digit indices.
    for (std::size_t p = 0; p + 4 <= pairs.size(); p += 5)
        e.add({pairs[p], pairs[p + 1] - '0'}, {pairs[p + 2], pairs[p + 3] - '0'}, color);
}

EdgeList j1_edges() {
    EdgeList e;
    int c1[4][2] = {{1, 2}, {5, 6}, {3, 4}, {8, 7}};
    int c2[4][2] = {{1, 8}, {2, 5}, {6, 7}, {3, 4}};
    int c4[4][2] = {{1, 6}, {2, 3}, {4, 5}, {7, 8}};
    for (auto& p : c1) e.add(v(p[0]), v(p[1]), 1);
    for (auto& p : c2) e.add(v(p[0]), v(p[1]), 2);
    for (auto& p : c4) e.add(v(p[0]), v(p[1]), 4);
    return e;
}

EdgeList m_base(int q) {
    EdgeList e;
    int n = 2 * q;
    for (int i = 1; i <= q; ++i) {
        e.add(x(2 * i - 1), x(2 * i), 1);
        e.add(z(2 * i - 1), z(2 * i), 1);
        e.add(x(2 * i), x(2 * i % n + 1), 2);
        e.add(z(2 * i), z(2 * i % n + 1), 2);
    }
    e.add(y(1), y(2), 1);
    e.add(y(3), y(4), 1);
    e.add(y(2), y(3), 2);
    e.add(y(4), y(1), 2);
    for (int i = 1; i <= n - 2; ++i) e.add(x(i), z(i), 4);
    e.add(x(n - 1), y(2), 4);
    e.add(x(n), y(1), 4);
    e.add(y(3), z(n - 1), 4);
    e.add(y(4), z(n), 4);
    for (int i = 1; i <= n - 3; ++i) e.add(x(i), z(i + 2), 3);
    e.add(x(n), z(2), 3);
    e.add(y(3), z(1), 3);
    e.add(y(2), z(n), 3);
    e.add(y(1), x(n - 2), 3);
    e.add(y(4), x(n - 1), 3);
    return e;
}

void m_step(EdgeList& e, int k, int q) {
    int n = 2 * q;
    if (k == 3) {
        e.remove(y(2), z(n), 3);
        e.remove(y(3), z(1), 3);
        e.remove(y(3), y(4), 1);
        e.remove(z(n - 1), z(n), 1);
        e.add(y(3), y(5), 1);
        e.add(y(6), y(4), 1);
        e.add(z(n - 1), z(n + 1), 1);
        e.add(z(n + 2), z(n), 1);
        e.add(y(5), y(6), 2);
        e.add(z(n + 1), z(n + 2), 2);
        e.add(y(2), z(n + 1), 3);
        e.add(y(3), z(n + 2), 3);
        e.add(y(5), z(n), 3);
        e.add(y(6), z(1), 3);
        e.add(y(5), z(n + 1), 4);
        e.add(y(6), z(n + 2), 4);
        return;
    }
    int a = 2 * k;
    int b = n + 2 * k;
    e.remove(y(a - 3), z(n), 3);
    e.remove(y(a - 2), z(1), 3);
    e.remove(y(a - 2), y(4), 1);
    e.remove(z(b - 6), z(n), 1);
    e.add(y(a - 2), y(a - 1), 1);
    e.add(y(a), y(4), 1);
    e.add(z(b - 6), z(b - 5), 1);
    e.add(z(b - 4), z(n), 1);
    e.add(y(a - 1), y(a), 2);
    e.add(z(b - 5), z(b - 4), 2);
    e.add(y(a - 3), z(b - 5), 3);
    e.add(y(a - 2), z(b - 4), 3);
    e.add(y(a - 1), z(n), 3);
    e.add(y(a), z(1), 3);
    e.add(y(a - 1), z(b - 5), 4);
    e.add(y(a), z(b - 4), 4);
}

EdgeList n_base(int q) {
    EdgeList e;
    int n = 2 * q;
    for (int i = 1; i <= q; ++i) {
        e.add(x(2 * i - 1), x(2 * i), 2);
        e.add(z(2 * i - 1), z(2 * i), 2);
        e.add(x(2 * i), x(2 * i % n + 1), 1);
        e.add(z(2 * i), z(2 * i % n + 1), 1);
    }
    e.add(y(4), y(3), 2);
    e.add(y(1), y(2), 2);
    e.add(y(1), y(4), 1);
    e.add(y(3), y(2), 1);
    for (int i = 1; i <= n - 2; ++i) e.add(x(i), z(i), 3);
    e.add(x(n - 1), y(4), 3);
    e.add(x(n), y(3), 3);
    e.add(y(1), z(n - 1), 3);
    e.add(y(2), z(n), 3);
    for (int i = 2; i <= n - 2; ++i) e.add(z(i), x(i + 2), 4);
    e.add(z(n - 1), x(1), 4);
    e.add(y(2), x(3), 4);
    e.add(y(3), x(2), 4);
    e.add(y(1), z(1), 4);
    e.add(y(4), z(n), 4);
    return e;
}

void n_step(EdgeList& e, int k, int q) {
    int n = 2 * q;
    if (k == 2) {
        e.remove(y(2), z(n), 3);
        e.remove(y(1), z(n - 1), 3);
        e.remove(y(1), y(4), 1);
        e.remove(z(1), z(n), 1);
        e.add(y(1), y(6), 1);
        e.add(y(4), y(5), 1);
        e.add(z(1), z(n + 2), 1);
        e.add(z(n), z(n + 1), 1);
        e.add(y(5), y(6), 2);
        e.add(z(n + 1), z(n + 2), 2);
        e.add(y(2), z(n + 2), 3);
        e.add(y(1), z(n + 1), 3);
        e.add(y(6), z(n), 3);
        e.add(y(5), z(n - 1), 3);
        e.add(y(5), z(n + 1), 4);
        e.add(y(6), z(n + 2), 4);
        return;
    }
    int a = 2 * k;
    int b = n + 2 * k;
    e.remove(y(a), z(n), 3);
    e.remove(y(a - 1), z(n - 1), 3);
    e.remove(y(a - 1), y(4), 1);
    e.remove(z(b - 5), z(n), 1);
    e.add(y(a - 1), y(a + 2), 1);
    e.add(y(4), y(a + 1), 1);
    e.add(z(b - 5), z(b - 2), 1);
    e.add(z(n), z(b - 3), 1);
    e.add(y(a + 1), y(a + 2), 2);
    e.add(z(b - 3), z(b - 2), 2);
    e.add(y(a), z(b - 2), 3);
    e.add(y(a - 1), z(b - 3), 3);
    e.add(y(a + 2), z(n), 3);
    e.add(y(a + 1), z(n - 1), 3);
    e.add(y(a + 1), z(b - 3), 4);
    e.add(y(a + 2), z(b - 2), 4);
}

std::vector<int> parse_params(const std::string& text, const std::string& name) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad parameters for " + name + ": " + text);
        out.push_back(std::stoi(part));
        pos = end + 1;
    }
    if (out.size() != 2) throw std::invalid_argument(name + " needs two parameters");
    return out;
}

}  // namespace

std::vector<std::string> LabeledGraph::label_comments() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i) out.push_back("label " + std::to_string(i) + " " + labels[i]);
    return out;
}

LabeledGraph build_J_labeled(int n) {
    EdgeList e;
    switch (n) {
        case 1:
            e = j1_edges();
            for (auto [a, b] : {std::pair{2, 5}, {1, 6}, {4, 7}, {3, 8}}) e.add(v(a), v(b), 3);
            break;
        case 2:
            e = j1_edges();
            for (auto [a, b] : {std::pair{2, 5}, {1, 6}, {7, 3}, {8, 4}}) e.add(v(a), v(b), 3);
            break;
        case 3:
            for (char f : {'a', 'b', 'c'}) hexagon(e, f);
            add_pairs(e, "a1b4 b5c2 a6c3 a5c4 b6c1 a2b3 c6b1 a4c5 a3b2", 4);
            add_pairs(e, "a6c1 a2c5 a1c6 c4b1 c3b2 c2b3 b4a5 a3b6 a4b5", 3);
            break;
        case 4:
            for (char f : {'a', 'b', 'c', 'd'}) hexagon(e, f);
            add_pairs(e, "a1b6 a2b5 a3d2 a4d1 b4d3 a5c2 a6c1 b2c5 b1c6 b3d4 c4d5 c3d6", 4);
            add_pairs(e, "a2c5 b6d1 b5c2 c6d3 c1d2 a6d5 a1d4 b1d6 a3c4 b4c3 a4b3 a5b2", 3);
            break;
        default: throw std::invalid_argument("J index must be 1..4");
    }
    return e.build();
}

LabeledGraph build_K_labeled(int p, int q) {
    if (p < 2) throw std::invalid_argument("K_{p,q} needs p >= 2");
    if (q < 1) throw std::invalid_argument("K_{p,q} needs q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("K_{p,q} needs gcd(p,q) = 1");
    EdgeList e;
    auto at = [p](int i) { return (i - 1) % p + 1; };
    for (int i = 1; i <= p; ++i) {
        e.add({'b', i}, {'a', at(i + 1)}, 1);
        e.add({'d', i}, {'c', at(i + 1)}, 1);
        e.add({'a', i}, {'b', i}, 2);
        e.add({'c', i}, {'d', i}, 2);
        e.add({'a', i}, {'c', at(i + q)}, 3);
        e.add({'b', i}, {'d', at(i + q)}, 3);
        e.add({'a', i}, {'c', i}, 4);
        e.add({'b', i}, {'d', i}, 4);
    }
    return e.build();
}

LabeledGraph build_M_labeled(int k, int q) {
    if (k < 2 || q < 3) throw std::invalid_argument("M_{k,q} needs k >= 2 and q >= 3");
    EdgeList e = m_base(q);
    for (int step = 3; step <= k; ++step) m_step(e, step, q);
    return e.build();
}

LabeledGraph build_N_labeled(int k, int q) {
    if (k < 1 || q < 4) throw std::invalid_argument("N_{k,q} needs k >= 1 and q >= 4");
    EdgeList e = n_base(q);
    for (int step = 2; step <= k; ++step) n_step(e, step, q);
    return e.build();
}

ColoredGraph build_J(int n) { return build_J_labeled(n).graph; }
ColoredGraph build_K(int p, int q) { return build_K_labeled(p, q).graph; }
ColoredGraph build_M(int k, int q) { return build_M_labeled(k, q).graph; }
ColoredGraph build_N(int k, int q) { return build_N_labeled(k, q).graph; }

ColoredGraph sphere_graph() {
    ColoredGraph g(2, 4);
    for (int c = 1; c <= 4; ++c) g.set_edge(0, 1, c);
    return g;
}

CatalogEntry catalog_entry(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    if (name.size() == 2 && name[0] == 'J' && name[1] >= '1' && name[1] <= '4') {
        int n = name[1] - '0';
        e.parameters = {n};
        e.built = build_J_labeled(n);
        const int counts[] = {0, 8, 8, 18, 24};
        e.expected_vertex_count = counts[n];
        e.expected_group = n <= 2 ? GroupId::z() : n == 3 ? GroupId::q8() : GroupId::zk(3);
        e.expected_orientable = n != 2;
        return e;
    }
    if (name.size() > 2 && name[1] == ':') {
        e.parameters = parse_params(name.substr(2), name.substr(0, 1));
        int a = e.parameters[0], b = e.parameters[1];
        e.expected_orientable = true;
        switch (name[0]) {
            case 'K':
                e.built = build_K_labeled(a, b);
                e.expected_vertex_count = 4 * a;
                e.expected_group = GroupId::zn(a);
                return e;
            case 'M':
                e.built = build_M_labeled(a, b);
                e.expected_vertex_count = 4 * (a + b - 1);
                e.expected_group = GroupId::zn(a * b - 1);
                return e;
            case 'N':
                e.built = build_N_labeled(a, b);
                e.expected_vertex_count = 4 * (a + b);
                e.expected_group = GroupId::zn(a * b + 1);
                return e;
            default: break;
        }
    }
    throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> standard_catalog_names() {
    std::vector<std::string> out = {"J1", "J2", "J3", "J4"};
    for (int p = 2; p <= 8; ++p)
        for (int q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) out.push_back("K:" + std::to_string(p) + "," + std::to_string(q));
    for (int k = 2; k <= 5; ++k)
        for (int q = 3; q <= 6; ++q) out.push_back("M:" + std::to_string(k) + "," + std::to_string(q));
    for (int k = 1; k <= 5; ++k)
        for (int q = 4; q <= 7; ++q) out.push_back("N:" + std::to_string(k) + "," + std::to_string(q));
    return out;
}

}  // namespace gem
