#include "gem/catalog.hpp"
#include "gem/census.hpp"
#include "gem/cgf.hpp"
#include "gem/crystal.hpp"
#include "gem/error.hpp"
#include "gem/groups.hpp"
#include "gem/weight.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gem;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Crystallization load_crystal(const std::string& path) {
    ColoredGraph g = parse_cgf(read_input(path));
    GagliardiReport r = check_gagliardi(g);
    if (!r.ok()) throw std::runtime_error("not a crystallization: condition " + r.condition + ": " + r.detail);
    return *r.crystal;
}

int cmd_validate(const std::string& file) {
    ColoredGraph g = parse_cgf(read_input(file));
    auto bad = validate(g);
    if (!bad.empty()) {
        for (const auto& b : bad) std::cerr << b << "\n";
        std::cout << "valid=no\n";
        return kFailure;
    }
    GagliardiReport r = check_gagliardi(g);
    std::cout << "valid=yes\n";
    std::cout << "crystallization=" << yes_no(r.ok()) << "\n";
    std::cout << "m=" << g.vertex_count() << "\n";
    if (!r.ok()) {
        std::cout << "condition=" << r.condition << "\n";
        std::cerr << "condition " << r.condition << ": " << r.detail << "\n";
        return kFailure;
    }
    return kOk;
}

int cmd_invariants(const std::string& file) {
    Crystallization c = load_crystal(file);
    FaceVector f = face_vector(c);
    std::ostringstream out;
    out << "m=" << c.vertex_count() << "\n";
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) out << "g" << a << b << "=" << c.g[a][b] << "\n";
    out << "f0=" << f.f0 << "\nf1=" << f.f1 << "\nf2=" << f.f2 << "\nf3=" << f.f3 << "\n";
    out << "g2=" << f.g2 << "\nh2=" << f.h2 << "\n";
    out << "orientable=" << yes_no(orientable(c)) << "\n";
    out << "---\n";
    out << c.vertex_count() << "-vertex crystallization, face vector (" << f.f0 << "," << f.f1 << "," << f.f2 << ","
        << f.f3 << "), " << (orientable(c) ? "orientable" : "non-orientable") << "\n";
    std::cout << out.str();
    return kOk;
}

int cmd_pi1(const std::string& file, const std::vector<int>& colors, const std::string& policy) {
    Crystallization c = load_crystal(file);
    int i = colors.size() == 2 ? colors[0] : 3, j = colors.size() == 2 ? colors[1] : 4;
    if (i == j || i < 1 || j < 1 || i > 4 || j > 4) throw UsageError("--colors needs two distinct colors in 1..4");
    int deleted = -1;
    if (policy == "smallest") {
        deleted = smallest_component(c, i, j);
    } else if (policy != "largest") {
        try {
            deleted = std::stoi(policy);
        } catch (const std::exception&) {
            throw UsageError("--delete takes largest, smallest or a component index");
        }
    }
    Extraction ex = extract_presentation(c, i, j, deleted);
    Presentation p = ex.minimal();
    GroupId id = identify(ex.presentation());
    std::ostringstream out;
    out << "colors=" << i << "," << j << "\n";
    out << "generators=" << p.generators << "\n";
    out << "relators=" << p.relators.size() << "\n";
    out << "deleted_component=" << ex.deleted_component << "\n";
    out << "group=" << to_string(id) << "\n";
    out << "---\n";
    out << to_pretty(p) << " ; " << to_string(id) << "\n";
    for (int k = 1; k <= ex.generators(); ++k) {
        const auto& comp = ex.components[static_cast<std::size_t>(ex.generator_component[static_cast<std::size_t>(k - 1)])];
        out << "# x" << k << " <- component of " << comp.size() << " vertices at " << comp.front() << "\n";
    }
    for (std::size_t k = 0; k < ex.relators.size(); ++k) {
        const ExtractedRelator& r = ex.relators[k];
        out << "# cycle at " << r.cycle.front() << " of length " << r.cycle.size() << " -> "
            << (r.word.empty() ? std::string("1") : to_string(r.word)) << (r.redundant ? " (redundant)" : "") << "\n";
    }
    std::cout << out.str();
    return kOk;
}

int cmd_weight(const std::string& file, int max_weight) {
    Presentation p = parse_presentation(read_input(file));
    PhiResult r = phi_search(p, max_weight);
    std::ostringstream out;
    for (std::size_t k = 0; k < p.relators.size(); ++k)
        out << "lambda." << k + 1 << "=" << weight_lambda(p.relators[k]) << "\n";
    out << "phi=" << (r.value ? std::to_string(*r.value) : std::string("none")) << "\n";
    out << "phi_upper=" << r.upper_bound << "\n";
    out << "next_weight=" << (r.next.word ? std::to_string(r.next.weight) : std::string("none")) << "\n";
    out << "exact=" << yes_no(r.value.has_value()) << "\n";
    out << "---\n";
    out << to_pretty(p) << "\n";
    if (r.next.word) out << "r_next " << (r.next.word->empty() ? std::string("1") : to_string(*r.next.word)) << "\n";
    if (!r.next.note.empty()) out << r.next.note << "\n";
    std::cout << out.str();
    return r.value ? kOk : kBudget;
}

int cmd_psi(const std::string& group, const std::string& range, int max_weight) {
    PsiOptions opt;
    opt.max_weight = max_weight;
    if (!range.empty()) {
        auto dots = range.find("..");
        if (dots == std::string::npos) throw UsageError("--q-range takes a..b");
        try {
            opt.q_min = std::stoi(range.substr(0, dots));
            opt.q_max = std::stoi(range.substr(dots + 2));
        } catch (const std::exception&) {
            throw UsageError("--q-range takes a..b");
        }
    }
    GroupId g;
    try {
        g = parse_group(group);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    PsiReport rep = psi_of_group(g, opt);
    std::cout << to_text(rep);
    return rep.closed ? kOk : kBudget;
}

int cmd_build(const std::string& name, const std::string& out) {
    CatalogEntry e;
    try {
        e = catalog_entry(name);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    std::vector<std::string> comments{"name " + name};
    for (auto& l : e.built.label_comments()) comments.push_back(l);
    emit(write_cgf(e.built.graph, comments), out);
    return kOk;
}

int cmd_dipole(const std::string& file, int cancel, const std::string& out) {
    ColoredGraph g = parse_cgf(read_input(file));
    if (!validate(g).empty()) throw std::runtime_error("invalid graph: " + validate(g).front());
    auto ds = find_dipoles(g);
    if (cancel >= 0) {
        if (cancel >= static_cast<int>(ds.size())) throw UsageError("no dipole with index " + std::to_string(cancel));
        emit(write_cgf(cancel_dipole(g, ds[static_cast<std::size_t>(cancel)])), out);
        return kOk;
    }
    std::ostringstream s;
    s << "dipoles=" << ds.size() << "\n";
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const Dipole& d = ds[k];
        std::string shared;
        for (int c : d.shared.colors()) shared += (shared.empty() ? "" : ",") + std::to_string(c);
        s << "dipole." << k << "=" << d.x << " " << d.y << " type=" << d.type << " shared=" << shared
          << " degenerate=" << yes_no(d.degenerate(g.color_count())) << "\n";
    }
    emit(s.str(), out);
    return kOk;
}

CensusFilters parse_filters(const std::vector<std::string>& items) {
    CensusFilters f;
    for (const std::string& it : items) {
        if (it == "simple") {
            f.simple = true;
        } else if (it == "bipartite") {
            f.bipartite = true;
        } else if (it == "nontrivial") {
            f.nontrivial_pi1 = true;
        } else if (it.rfind("g=", 0) == 0) {
            std::array<int, 3> g{};
            if (std::sscanf(it.c_str() + 2, "%d,%d,%d", &g[0], &g[1], &g[2]) != 3) throw UsageError("bad filter " + it);
            std::sort(g.begin(), g.end());
            f.g_vector = g;
        } else if (it.rfind("group=", 0) == 0) {
            try {
                f.group = parse_group(it.substr(6));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else {
            throw UsageError("unknown filter " + it);
        }
    }
    return f;
}

int cmd_census(int m, const std::vector<std::string>& filters, const std::string& lemma, const CensusBudget& budget,
               const std::string& out) {
    if (!lemma.empty()) {
        LemmaReport rep = verify_uniqueness_lemma(lemma, budget);
        std::cout << "lemma=" << rep.lemma << "\n";
        std::cout << "status=" << to_string(rep.status) << "\n";
        std::cout << summary_text(rep.census);
        std::cout << "---\n" << rep.detail << "\n";
        for (std::size_t k = 0; k < rep.matched.size(); ++k)
            std::cout << "class " << k << " matches " << (rep.matched[k].empty() ? "nothing" : rep.matched[k]) << "\n";
        if (!out.empty()) write_census(rep.census, out);
        if (rep.status == LemmaStatus::Certified) return kOk;
        return rep.status == LemmaStatus::BudgetExhausted ? kBudget : kFailure;
    }
    if (m < 2 || m % 2) throw UsageError("--vertices must be even and at least 2");
    CensusResult r = enumerate_crystallizations(m, parse_filters(filters), budget);
    std::cout << summary_text(r);
    std::cout << "---\n" << index_text(r);
    if (!out.empty()) write_census(r, out);
    return r.complete ? kOk : kBudget;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
    ColoredGraph g = parse_cgf(read_input(file));
    emit(export_dot(g), out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored-graph crystallizations of 3-manifolds"};
    app.require_subcommand(1);

    std::string file = "-", out, policy = "largest", group, range, lemma;
    std::vector<int> colors;
    std::vector<std::string> filters;
    int max_weight = 0, cancel = -1, vertices = 0;
    CensusBudget budget;

    auto* validate_cmd = app.add_subcommand("validate", "Check graph validity and the Gagliardi criterion");
    validate_cmd->add_option("file", file, "CGF file, - for stdin");

    auto* invariants_cmd = app.add_subcommand("invariants", "Print g-matrix, face vector and orientability");
    invariants_cmd->add_option("file", file, "CGF file, - for stdin");

    auto* pi1_cmd = app.add_subcommand("pi1", "Extract and identify the fundamental group");
    pi1_cmd->add_option("file", file, "CGF file, - for stdin");
    pi1_cmd->add_option("--colors", colors, "Colors i j of the relator cycles")->expected(2);
    pi1_cmd->add_option("--delete", policy, "largest, smallest or a component index");

    auto* weight_cmd = app.add_subcommand("weight", "Relator weights and phi of a presentation");
    weight_cmd->add_option("file", file, "Presentation file, - for stdin");
    weight_cmd->add_option("--max-weight", max_weight, "Weight cap for the replacement search");

    auto* psi_cmd = app.add_subcommand("psi", "Weight of a group");
    psi_cmd->add_option("--group", group, "zn:N, z, z3, q8")->required();
    psi_cmd->add_option("--q-range", range, "Generator counts a..b");
    psi_cmd->add_option("--max-weight", max_weight, "Per-relator weight cap");

    std::string name;
    auto* build_cmd = app.add_subcommand("build", "Emit a catalog crystallization");
    build_cmd->add_option("name", name, "J1..J4, K:p,q, M:k,q, N:k,q")->required();
    build_cmd->add_option("-o,--output", out, "Output CGF file");

    auto* dipole_cmd = app.add_subcommand("dipole", "List or cancel dipoles");
    dipole_cmd->add_option("file", file, "CGF file, - for stdin");
    dipole_cmd->add_option("--cancel", cancel, "Index of the dipole to cancel");
    dipole_cmd->add_option("-o,--output", out, "Output file");

    auto* census_cmd = app.add_subcommand("census", "Enumerate crystallizations");
    census_cmd->add_option("--vertices", vertices, "Vertex count m");
    census_cmd->add_option("--filter", filters, "simple, bipartite, nontrivial, g=a,b,c, group=G")->delimiter(';');
    census_cmd->add_option("--lemma", lemma, "Run a uniqueness check: 4.2 .. 4.6");
    census_cmd->add_option("--jobs", budget.jobs, "Worker threads");
    census_cmd->add_option("--max-nodes", budget.max_nodes, "Node budget, 0 for none");
    census_cmd->add_option("--max-seconds", budget.max_seconds, "Wall-clock budget, 0 for none");
    census_cmd->add_option("--out", out, "Results directory");

    auto* dot_cmd = app.add_subcommand("export-dot", "Render as Graphviz DOT");
    dot_cmd->add_option("file", file, "CGF file, - for stdin");
    dot_cmd->add_option("-o,--output", out, "Output DOT file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*invariants_cmd) return cmd_invariants(file);
        if (*pi1_cmd) return cmd_pi1(file, colors, policy);
        if (*weight_cmd) return cmd_weight(file, max_weight);
        if (*psi_cmd) return cmd_psi(group, range, max_weight);
        if (*build_cmd) return cmd_build(name, out);
        if (*dipole_cmd) return cmd_dipole(file, cancel, out);
        if (*census_cmd) {
            if (lemma.empty() && vertices == 0) throw UsageError("census needs --vertices or --lemma");
            return cmd_census(vertices, filters, lemma, budget, out);
        }
        if (*dot_cmd) return cmd_export_dot(file, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
