// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gem/catalog.hpp"
#include "gem/census.hpp"
#include "gem/crystal.hpp"
#include "gem/groups.hpp"
#include "gem/weight.hpp"
#include "gem/words.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace gem;

namespace {

// Wall-clock limits in seconds.
constexpr double kWeightLimit = 1.0;
constexpr double kPhiLimit = 60.0;
constexpr double kPsiLimit = 1800.0;
constexpr double kCatalogLimit = 300.0;
constexpr double kLemma42Limit = 600.0;
constexpr double kLemma43Limit = 3600.0;
// Budget handed to the m=24 search; exhaustion is reported, not failed.
constexpr double kLemma46Seconds = 1500.0;
constexpr int kRelabelings = 100;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, Check& c, double seconds, const std::string& extra = "") {
    std::printf("%s criterion %d: %s (%.2fs)", c.ok ? "PASS" : "FAIL", id, title.c_str(), seconds);
    if (!extra.empty()) std::printf(" %s", extra.c_str());
    if (!c.ok) std::printf(" -- %s", c.why.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

void info(const std::string& line) {
    std::printf("  %s\n", line.c_str());
    std::fflush(stdout);
}

Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
Word comm(Letter a, Letter b) { return w({a, b, -a, -b}); }

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<std::string> catalog() { return standard_catalog_names(); }

void criterion1() {
    auto t = Clock::now();
    Check c;
    for (int p = 1; p <= 10; ++p) c.expect(weight_lambda(power(1, p)) == 2 * p, "lambda(x^" + std::to_string(p) + ")");
    std::vector<Word> a = {w({1, 2}), w({1, 1}), w({2, 2}), w({1, 1, -2}), w({2, 2, -1}), w({1, -2, 1, -2})};
    std::vector<Word> b_minus_a = {w({2, 2, 1}),        w({1, 1, 1, -2}),       w({2, 2, -1, 2, -1}),
                                   w({1, 1, 2}),        w({2, 2, 2, -1}),       w({1, 1, 1}),
                                   w({2, 2, 2}),        w({1, 1, -2, 1, -2}),   w({1, 2, 1, -2}),
                                   w({2, 1, 2, -1}),    w({1, -2, 1, -2, 1, -2}), w({1, 2, -1, -2}),
                                   w({2, 2, -1, -1})};
    for (const Word& x : a) c.expect(weight_lambda(x) == 4, "lambda(" + to_string(x) + ") != 4");
    for (const Word& x : b_minus_a) c.expect(weight_lambda(x) == 6, "lambda(" + to_string(x) + ") != 6");
    double s = since(t);
    c.expect(s < kWeightLimit, "over time limit");
    report(1, "weight calculus", c, s);
}

void criterion2() {
    auto t = Clock::now();
    Check c;
    auto expect_phi = [&](const std::string& name, const Presentation& p, int want) {
        auto v = phi(p);
        c.expect(v && *v == want, name + " phi=" + (v ? std::to_string(*v) : "none") + " want " + std::to_string(want));
    };
    expect_phi("<x|>", {1, {}}, 4);
    for (int p : {2, 3, 5}) expect_phi("<x|x^" + std::to_string(p) + ">", {1, {power(1, p)}}, 4 * p);
    expect_phi("Z5", {2, {w({1, 1, -2}), w({2, 2, 2, -1})}}, 16);
    expect_phi("Q8", {2, {w({2, 1, 2, -1}), w({1, 2, 1, -2})}}, 18);
    expect_phi("Z^3", {3, {comm(1, 2), comm(1, 3), comm(2, 3)}}, 24);
    double s = since(t);
    c.expect(s < kPhiLimit, "over time limit");
    report(2, "phi fixtures", c, s);
}

void criterion3() {
    auto t = Clock::now();
    Check c;
    struct Case {
        GroupId g;
        int psi;
    };
    for (const Case& k : {Case{GroupId::z(), 8}, Case{GroupId::zn(2), 8}, Case{GroupId::zn(3), 12},
                          Case{GroupId::zn(5), 16}, Case{GroupId::q8(), 18}, Case{GroupId::zk(3), 24}}) {
        auto t0 = Clock::now();
        PsiReport r = psi_of_group(k.g);
        std::string got = r.psi ? std::to_string(*r.psi) : "none";
        info("psi(" + to_string(k.g) + ")=" + got + " closed=" + (r.closed ? "yes" : "no") + " rho=" +
             std::to_string(r.rho) + " (" + std::to_string(since(t0)) + "s)");
        c.expect(r.closed, "psi(" + to_string(k.g) + ") search not closed");
        c.expect(r.psi && *r.psi == k.psi, "psi(" + to_string(k.g) + ")=" + got);
    }
    double s = since(t);
    c.expect(s < kPsiLimit, "over time limit");
    // Stretch values; reported only.
    for (const Case& k : {Case{GroupId::zn(4), 14}, Case{GroupId::zn(6), 18}, Case{GroupId::zn(7), 18}}) {
        PsiReport r = psi_of_group(k.g);
        std::string state = r.psi && r.closed && *r.psi == k.psi ? "confirmed"
                            : r.psi && *r.psi <= k.psi         ? "upper-bound-only"
                                                               : "not reproduced";
        info("stretch psi(" + to_string(k.g) + ")=" + (r.psi ? std::to_string(*r.psi) : "none") + " expected " +
             std::to_string(k.psi) + ": " + state);
    }
    report(3, "psi reproduction", c, s);
}

void criterion4() {
    auto t = Clock::now();
    Check c;
    int count = 0;
    for (const std::string& name : catalog()) {
        CatalogEntry e = catalog_entry(name);
        GagliardiReport g = check_gagliardi(e.built.graph);
        c.expect(g.ok(), name + " rejected: " + g.condition);
        if (!g.ok()) continue;
        int m = e.built.graph.vertex_count();
        const auto& p = e.parameters;
        int want = e.expected_vertex_count;
        if (name[0] == 'K') want = 4 * p[0];
        if (name[0] == 'M') want = 4 * (p[0] + p[1] - 1);
        if (name[0] == 'N') want = 4 * (p[0] + p[1]);
        c.expect(m == want, name + " has " + std::to_string(m) + " vertices");
        c.expect(is_bipartite(e.built.graph).has_value() == e.expected_orientable, name + " bipartiteness");
        GroupId id = identify(extract_presentation(*g.crystal).minimal());
        c.expect(id == e.expected_group, name + " identified as " + to_string(id));
        if (name[0] == 'K') c.expect(id == GroupId::zn(p[0]), name + " group");
        if (name[0] == 'M') c.expect(id == GroupId::zn(p[0] * p[1] - 1), name + " group");
        if (name[0] == 'N') c.expect(id == GroupId::zn(p[0] * p[1] + 1), name + " group");
        ++count;
    }
    double s = since(t);
    c.expect(s < kCatalogLimit, "over time limit");
    report(4, "catalog validation", c, s, std::to_string(count) + " entries");
}

void criterion5() {
    auto t = Clock::now();
    Check c;
    FaceVector j1 = face_vector(as_crystallization(build_J(1)));
    c.expect(j1.f0 == 4 && j1.f1 == 12 && j1.f2 == 16 && j1.f3 == 8, "J1 face vector");
    c.expect(j1.g2 == 6, "J1 g2=" + std::to_string(j1.g2));
    for (const std::string& name : catalog()) {
        FaceVector f = face_vector(as_crystallization(catalog_entry(name).built.graph));
        c.expect(f.f0 - f.f1 + f.f2 - f.f3 == 0, name + " Euler characteristic");
        c.expect(f.f1 == f.f3 + 4, name + " f1 != f3+4");
    }
    report(5, "face vectors", c, since(t));
}

std::string lemma_line(const LemmaReport& r) {
    const CensusStats& st = r.census.stats;
    std::ostringstream o;
    o << "lemma " << r.lemma << " m=" << r.m << " status=" << to_string(r.status) << " classes=" << r.census.classes.size()
      << " undecided=" << r.census.undecided.size() << " nodes=" << st.nodes << " tasks=" << st.tasks_done << "/"
      << st.tasks_total << " workers=" << st.workers << " seconds=" << st.seconds << " (" << r.detail << ")";
    return o.str();
}

void criterion6() {
    auto t = Clock::now();
    Check c;
    CensusBudget b;
    b.jobs = jobs();
    LemmaReport r = verify_uniqueness_lemma("4.2", b);
    info(lemma_line(r));
    c.expect(r.status == LemmaStatus::Certified, "status " + to_string(r.status));
    std::set<std::string> found, want;
    for (const CensusClass& k : r.census.classes) found.insert(k.certificate);
    for (const char* name : {"J1", "J2", "K:2,1"})
        want.insert(canonical_form(catalog_entry(name).built.graph, IsoMode::ColorPermuting));
    c.expect(found == want, "classes differ from J1, J2, K_{2,1}");
    double s = since(t);
    c.expect(s < kLemma42Limit, "over time limit");
    report(6, "census m=8 non-simply-connected", c, s);
}

void criterion7() {
    auto t = Clock::now();
    Check c;
    CensusBudget b;
    b.jobs = jobs();
    b.max_seconds = kLemma43Limit;
    LemmaReport r = verify_uniqueness_lemma("4.3", b);
    info(lemma_line(r));
    c.expect(r.status == LemmaStatus::Certified, "status " + to_string(r.status));
    c.expect(r.census.classes.size() == 1 &&
                 is_isomorphic(r.census.classes[0].graph, build_K(3, 1), IsoMode::ColorPermuting),
             "class is not K_{3,1}");
    double s = since(t);
    c.expect(s < kLemma43Limit, "over time limit");
    report(7, "census m=12 lens space L(3,1)", c, s);
}

void criterion8() {
    auto t = Clock::now();
    Check c;
    std::string summary;
    for (const std::string& lemma : {"4.4", "4.5", "4.6"}) {
        CensusBudget b;
        b.jobs = jobs();
        if (lemma == "4.6") b.max_seconds = kLemma46Seconds;
        LemmaReport r = verify_uniqueness_lemma(lemma, b);
        info(lemma_line(r));
        for (std::size_t i = 0; i < r.matched.size(); ++i)
            c.expect(!r.matched[i].empty(), "lemma " + lemma + " found a class outside the catalog");
        c.expect(r.census.classes.size() <= 1, "lemma " + lemma + " found a second class");
        c.expect(r.status == LemmaStatus::Certified || r.status == LemmaStatus::BudgetExhausted,
                 "lemma " + lemma + " status " + to_string(r.status));
        summary += lemma + ":" + to_string(r.status) + " ";
    }
    report(8, "censuses m=16, 18, 24", c, since(t), summary);
}

void criterion9() {
    auto t = Clock::now();
    Check c;
    int count = 0;
    for (const std::string& name : catalog()) {
        ColoredGraph g = catalog_entry(name).built.graph;
        int m = g.vertex_count();
        ColoredGraph big = insert_dipole(g, 0, ColorSet{1, 2, 3});
        bool recovered = false;
        for (const Dipole& d : find_dipoles(big))
            if (d.type == 3 && std::min(d.x, d.y) == m && std::max(d.x, d.y) == m + 1)
                recovered = is_isomorphic(cancel_dipole(big, d), g, IsoMode::ColorPermuting);
        c.expect(recovered, name + " not recovered");
        ++count;
    }
    report(9, "dipole round trip", c, since(t), std::to_string(count) + " graphs");
}

void criterion10() {
    auto t = Clock::now();
    Check c;
    // Exact psi where the search closes quickly; other groups use the extraction certificate.
    std::map<std::string, int> exact;
    for (const GroupId& g : {GroupId::z(), GroupId::zn(2), GroupId::zn(3), GroupId::zn(4), GroupId::zn(5),
                             GroupId::zn(6), GroupId::zn(7), GroupId::q8(), GroupId::zk(3)}) {
        PsiReport r = psi_of_group(g);
        if (r.closed && r.psi) exact[to_string(g)] = *r.psi;
    }
    int by_exact = 0, by_certificate = 0;
    for (const std::string& name : catalog()) {
        CatalogEntry e = catalog_entry(name);
        Crystallization cr = as_crystallization(e.built.graph);
        int m = cr.vertex_count();
        // phi of the default extraction, capped at what the bound allows.
        Presentation p = extract_presentation(cr).minimal();
        int sum = 0;
        for (const Word& r : p.relators) sum += weight_lambda(r);
        int cap = m - sum - 2 * (p.generators - static_cast<int>(p.relators.size()));
        PhiResult phi = phi_search(p, std::max(cap, 2));
        c.expect(phi.upper_bound <= m, name + " phi=" + std::to_string(phi.upper_bound) + " > m");
        auto it = exact.find(to_string(e.expected_group));
        if (it != exact.end()) {
            c.expect(m >= it->second, name + " m < psi=" + std::to_string(it->second));
            ++by_exact;
            continue;
        }
        // Certificate: the pair with fewest cycles yields a presentation with
        // q = gmin - 1 generators and phi <= m, so psi(G; rho) <= m, and
        // 6 mu + 2 <= 6 gmin - 4 <= m.
        int gmin = 1 << 30, bi = 3, bj = 4;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (cr.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < gmin) {
                    gmin = cr.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    bi = i;
                    bj = j;
                }
        Presentation q = extract_presentation(cr, bi, bj).minimal();
        int qsum = 0;
        for (const Word& r : q.relators) qsum += weight_lambda(r);
        int qcap = m - qsum - 2 * (q.generators - static_cast<int>(q.relators.size()));
        PhiResult qphi = phi_search(q, std::max(qcap, 2));
        c.expect(q.generators == gmin - 1, name + " certificate generator count");
        c.expect(identify(q) == e.expected_group, name + " certificate group");
        c.expect(qphi.upper_bound <= m, name + " certificate phi > m");
        c.expect(6 * gmin - 4 <= m, name + " 6 gmin - 4 > m");
        ++by_certificate;
    }
    report(10, "vertex count bounds", c, since(t),
           std::to_string(by_exact) + " by exact psi, " + std::to_string(by_certificate) + " by certificate");
}

std::vector<Letter> naive_reduce(std::vector<Letter> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == -v[i + 1]) {
                v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
    }
    return v;
}

void criterion11() {
    auto t = Clock::now();
    Check c;
    for (int m : {2, 4, 6}) {
        CensusResult r = enumerate_crystallizations(m);
        std::set<std::string> pruned;
        for (const CensusClass& k : r.classes) pruned.insert(k.certificate);
        auto naive = naive_census(m);
        c.expect(r.complete && pruned == std::set<std::string>(naive.begin(), naive.end()),
                 "census m=" + std::to_string(m) + " differs from naive");
    }
    std::mt19937 rng(2024);
    for (const std::string& name : catalog()) {
        ColoredGraph g = catalog_entry(name).built.graph;
        std::string fixed = canonical_form(g, IsoMode::ColorFixed);
        std::string perm = canonical_form(g, IsoMode::ColorPermuting);
        std::vector<int> vp(static_cast<std::size_t>(g.vertex_count()));
        std::vector<int> cp{1, 2, 3, 4};
        bool stable = true;
        for (int k = 0; k < kRelabelings && stable; ++k) {
            std::iota(vp.begin(), vp.end(), 0);
            std::shuffle(vp.begin(), vp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            ColoredGraph r = relabel(g, vp);
            stable = canonical_form(r, IsoMode::ColorFixed) == fixed &&
                     canonical_form(recolor(r, cp), IsoMode::ColorPermuting) == perm;
        }
        c.expect(stable, name + " canonical form unstable");
    }
    long words = 0;
    bool agree = true;
    std::vector<Letter> cur;
    std::function<void()> walk = [&]() {
        ++words;
        if (free_reduce(cur).letters != naive_reduce(cur)) agree = false;
        if (cur.size() == 8) return;
        for (Letter l : {1, -1, 2, -2}) {
            cur.push_back(l);
            walk();
            cur.pop_back();
        }
    };
    walk();
    c.expect(agree, "word reduction differs from rewriting");
    c.expect(words == 87381, "word count " + std::to_string(words));
    report(11, "oracle equivalence", c, since(t));
}

}  // namespace

// With arguments, runs only the listed criteria.
int main(int argc, char** argv) {
    const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
    std::vector<int> chosen;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > 11) {
            std::fprintf(stderr, "usage: acceptance [criterion 1..11]...\n");
            return 2;
        }
        chosen.push_back(k);
    }
    if (chosen.empty())
        for (int k = 1; k <= 11; ++k) chosen.push_back(k);
    for (int k : chosen) all[static_cast<std::size_t>(k - 1)]();
    std::printf("%d of %zu criteria failed\n", failures, chosen.size());
    return failures == 0 ? 0 : 1;
}
