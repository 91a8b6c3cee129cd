#include "gem/cgf.hpp"

#include "gem/error.hpp"

#include <charconv>
#include <set>
#include <tuple>

namespace gem {

std::string write_cgf(const ColoredGraph& g, const std::vector<std::string>& comments) {
    std::string s = "cgf 1\ncolors " + std::to_string(g.color_count()) + "\nvertices " +
                    std::to_string(g.vertex_count()) + "\n";
    for (const std::string& c : comments) s += "# " + c + "\n";
    for (const Edge& e : edges(g))
        s += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.color) + "\n";
    return s;
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int lineno) {
    int x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
    return x;
}

}  // namespace

ColoredGraph parse_cgf(std::string_view text) {
    int lineno = 0;
    int stage = 0;
    int h = 0, n = 0;
    ColoredGraph g;
    std::set<std::tuple<int, int, int>> seen;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line[0] == '#') continue;
        auto tok = split(line);
        if (tok.empty()) {
            if (stage < 3) throw ParseError(lineno, "unexpected blank line in header");
            continue;
        }
        if (stage == 0) {
            if (tok.size() != 2 || tok[0] != "cgf" || tok[1] != "1") throw ParseError(lineno, "expected 'cgf 1'");
            stage = 1;
        } else if (stage == 1) {
            if (tok.size() != 2 || tok[0] != "colors") throw ParseError(lineno, "expected 'colors <h>'");
            h = to_int(tok[1], lineno);
            if (h < 1 || h > 30) throw ParseError(lineno, "color count out of range");
            stage = 2;
        } else if (stage == 2) {
            if (tok.size() != 2 || tok[0] != "vertices") throw ParseError(lineno, "expected 'vertices <n>'");
            n = to_int(tok[1], lineno);
            if (n < 0 || n > 65535) throw ParseError(lineno, "vertex count out of range");
            g = ColoredGraph(n, h);
            stage = 3;
        } else {
            if (tok.size() != 4 || tok[0] != "e") throw ParseError(lineno, "expected 'e <u> <v> <c>'");
            int u = to_int(tok[1], lineno), v = to_int(tok[2], lineno), c = to_int(tok[3], lineno);
            if (u == v) throw ParseError(lineno, "loop edge");
            if (!(0 <= u && u < v && v < n)) throw ParseError(lineno, "edge endpoints must satisfy 0 <= u < v < n");
            if (c < 1 || c > h) throw ParseError(lineno, "color out of range");
            if (!seen.insert({u, v, c}).second) throw ParseError(lineno, "duplicate edge");
            if (g.neighbor(u, c) >= 0) throw ParseError(lineno, "vertex " + std::to_string(u) + " already has a color-" + std::to_string(c) + " edge");
            if (g.neighbor(v, c) >= 0) throw ParseError(lineno, "vertex " + std::to_string(v) + " already has a color-" + std::to_string(c) + " edge");
            g.set_edge(u, v, c);
        }
    }
    if (stage < 3) throw ParseError(lineno, "truncated header");
    if (static_cast<long>(seen.size()) * 2 != static_cast<long>(n) * h)
        throw ParseError(lineno, "expected " + std::to_string(static_cast<long>(n) * h / 2) + " edge lines, found " +
                                     std::to_string(seen.size()));
    return g;
}

std::string export_dot(const ColoredGraph& g, const std::string& name) {
    static const char* styles[] = {"solid", "bold", "solid", "dotted", "dashed"};
    std::string s = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) s += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : edges(g)) {
        const char* style = e.color <= 4 ? styles[e.color] : "solid";
        s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" + std::to_string(e.color) +
             "\", style=" + style + "];\n";
    }
    s += "}\n";
    return s;
}

}  // namespace gem
