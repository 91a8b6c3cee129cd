#include "gem/census.hpp"

#include "gem/catalog.hpp"
#include "gem/cgf.hpp"
#include "gem/crystal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <fstream>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gem {

namespace {

using Clock = std::chrono::steady_clock;

// Paths of a 2-colored subgraph whose first color is a complete matching,
// while the second color is added edge by edge.
class PathTracker {
public:
    void reset(const std::vector<int>& base) {
        end_ = base;
        closed_ = 0;
        open_ = static_cast<int>(base.size()) / 2;
        log_.clear();
    }

    void add(int u, int v) {
        if (end_[static_cast<std::size_t>(u)] == v) {
            log_.push_back({-1, 0, -1, 0});
            ++closed_;
        } else {
            int a = end_[static_cast<std::size_t>(u)], b = end_[static_cast<std::size_t>(v)];
            log_.push_back({a, end_[static_cast<std::size_t>(a)], b, end_[static_cast<std::size_t>(b)]});
            end_[static_cast<std::size_t>(a)] = b;
            end_[static_cast<std::size_t>(b)] = a;
        }
        --open_;
    }

    void undo() {
        Entry e = log_.back();
        log_.pop_back();
        ++open_;
        if (e.a < 0) {
            --closed_;
        } else {
            end_[static_cast<std::size_t>(e.a)] = e.end_a;
            end_[static_cast<std::size_t>(e.b)] = e.end_b;
        }
    }

    // Whether completing the second color can still give exactly `target` cycles.
    bool feasible(int target) const {
        if (closed_ > target) return false;
        if (open_ == 0) return closed_ == target;
        return closed_ + 1 <= target && closed_ + open_ >= target;
    }

    int closed() const { return closed_; }

private:
    struct Entry {
        int a, end_a, b, end_b;
    };
    std::vector<int> end_;
    int closed_ = 0;
    int open_ = 0;
    std::vector<Entry> log_;
};

// Union-find with parity and undo, over the cycles of Gamma_12.
class ParityUnionFind {
public:
    void reset(int n) {
        parent_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
        rank_.assign(static_cast<std::size_t>(n), 0);
        parity_.assign(static_cast<std::size_t>(n), 0);
        log_.clear();
    }

    // Requires flip(a) ^ flip(b) == rel; always logs one entry.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            log_.push_back({-1, -1, false});
            return (pa ^ pb) == rel;
        }
        if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<std::size_t>(rb)] = ra;
        parity_[static_cast<std::size_t>(rb)] = pa ^ pb ^ rel;
        bool bump = rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)];
        if (bump) ++rank_[static_cast<std::size_t>(ra)];
        log_.push_back({rb, ra, bump});
        return true;
    }

    void undo() {
        Entry e = log_.back();
        log_.pop_back();
        if (e.child < 0) return;
        parent_[static_cast<std::size_t>(e.child)] = e.child;
        parity_[static_cast<std::size_t>(e.child)] = 0;
        if (e.bumped) --rank_[static_cast<std::size_t>(e.root)];
    }

private:
    struct Entry {
        int child, root;
        bool bumped;
    };
    std::vector<int> parent_, rank_, parity_;
    std::vector<Entry> log_;

    std::pair<int, int> find(int x) const {
        int p = 0;
        while (parent_[static_cast<std::size_t>(x)] != x) {
            p ^= parity_[static_cast<std::size_t>(x)];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return {x, p};
    }
};

struct Task {
    std::array<int, 3> g;
    std::vector<int> cycle_lengths;
    int partner;  // color-3 neighbor of vertex 0
};

void partitions(int remaining, int parts, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int len = min_part; len * parts <= remaining; len += 2) {
        cur.push_back(len);
        partitions(remaining - len, parts - 1, len, cur, out);
        cur.pop_back();
    }
}

std::vector<Task> make_tasks(int m, const CensusFilters& f) {
    std::vector<Task> tasks;
    int min_len = f.simple ? 4 : 2;
    int max_g = m / min_len;
    int total = 2 + m / 2;
    for (int a = 1; a <= max_g; ++a)
        for (int b = a; b <= max_g; ++b) {
            int c = total - a - b;
            if (c < b || c > max_g) continue;
            std::array<int, 3> g{a, b, c};
            if (f.g_vector && *f.g_vector != g) continue;
            std::vector<std::vector<int>> types;
            std::vector<int> cur;
            partitions(m, a, min_len, cur, types);
            for (const auto& type : types) {
                // Orbit representatives for the partner of vertex 0 under the
                // automorphisms of Gamma_12 fixing vertex 0.
                std::vector<int> reps;
                for (int v = 1; v < type[0]; ++v) reps.push_back(v);
                int start = type[0];
                for (std::size_t k = 1; k < type.size(); ++k) {
                    if (type[k] != type[k - 1] || k == 1) reps.push_back(start);
                    start += type[k];
                }
                for (int v : reps) tasks.push_back({g, type, v});
            }
        }
    return tasks;
}

struct Shared {
    std::atomic<long> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next_task{0};
    std::atomic<long> tasks_done{0};
    Clock::time_point start;
};

class Worker {
public:
    Worker(int m, const CensusFilters& f, const CensusBudget& b, const CensusHooks& hooks, Shared& shared,
           std::string spill_prefix)
        : m_(m), f_(f), budget_(b), hooks_(hooks), shared_(shared), spill_prefix_(std::move(spill_prefix)) {}

    void run(const std::vector<Task>& tasks) {
        while (!shared_.stop) {
            std::size_t i = shared_.next_task.fetch_add(1);
            if (i >= tasks.size()) break;
            run_task(tasks[i]);
            if (!shared_.stop) shared_.tasks_done.fetch_add(1);
        }
        flush_nodes();
    }

    std::set<std::string>& certificates() { return certs_; }
    const std::vector<std::string>& runs() const { return runs_; }
    long leaves() const { return leaves_; }
    long candidates() const { return candidates_; }

private:
    int m_;
    const CensusFilters& f_;
    const CensusBudget& budget_;
    const CensusHooks& hooks_;
    Shared& shared_;
    std::string spill_prefix_;

    std::array<std::vector<int>, 5> col_;
    std::vector<int> cycle_of_, parity_of_;
    int cycles_ = 0;
    std::array<int, 3> g_{};
    PathTracker t13_, t23_, t14_, t24_, t34_;
    ParityUnionFind uf_;
    std::set<std::string> certs_;
    std::vector<std::string> runs_;
    long pending_nodes_ = 0;
    long leaves_ = 0;
    long candidates_ = 0;

    void flush_nodes() {
        long total = shared_.nodes.fetch_add(pending_nodes_) + pending_nodes_;
        pending_nodes_ = 0;
        if (budget_.max_nodes > 0 && total >= budget_.max_nodes) shared_.stop = true;
        if (budget_.max_seconds > 0 &&
            std::chrono::duration<double>(Clock::now() - shared_.start).count() >= budget_.max_seconds)
            shared_.stop = true;
    }

    bool tick() {
        if (++pending_nodes_ >= 4096) flush_nodes();
        return !shared_.stop;
    }

    void run_task(const Task& t) {
        g_ = t.g;
        for (auto& c : col_) c.assign(static_cast<std::size_t>(m_), -1);
        cycle_of_.assign(static_cast<std::size_t>(m_), 0);
        parity_of_.assign(static_cast<std::size_t>(m_), 0);
        cycles_ = static_cast<int>(t.cycle_lengths.size());
        int s = 0;
        for (int k = 0; k < cycles_; ++k) {
            int len = t.cycle_lengths[static_cast<std::size_t>(k)];
            for (int i = 0; i < len; ++i) {
                cycle_of_[static_cast<std::size_t>(s + i)] = k;
                parity_of_[static_cast<std::size_t>(s + i)] = i & 1;
            }
            for (int i = 0; i < len; i += 2) {
                set(1, s + i, s + i + 1);
                set(2, s + i + 1, s + (i + 2) % len);
            }
            s += len;
        }
        t13_.reset(col_[1]);
        t23_.reset(col_[2]);
        uf_.reset(cycles_);
        try_edge3(0, t.partner);
    }

    void set(int c, int u, int v) {
        col_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)] = v;
        col_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = u;
    }
    void unset(int c, int u, int v) {
        col_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)] = -1;
        col_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = -1;
    }
    int nb(int c, int v) const { return col_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]; }

    bool simple_ok(int c, int u, int v) const {
        if (!f_.simple) return true;
        for (int d = 1; d < c; ++d)
            if (nb(d, u) == v) return false;
        return true;
    }

    bool parity_rel(int u, int v) const {
        return 1 ^ parity_of_[static_cast<std::size_t>(u)] ^ parity_of_[static_cast<std::size_t>(v)];
    }

    int first_free(int c) const {
        for (int v = 0; v < m_; ++v)
            if (nb(c, v) < 0) return v;
        return -1;
    }

    void try_edge3(int u, int v) {
        if (v == u || nb(3, v) >= 0 || !simple_ok(3, u, v)) return;
        if (!tick()) return;
        bool par = true;
        if (f_.bipartite) par = uf_.unite(cycle_of_[static_cast<std::size_t>(u)], cycle_of_[static_cast<std::size_t>(v)], parity_rel(u, v));
        if (par) {
            t13_.add(u, v);
            t23_.add(u, v);
            set(3, u, v);
            if (t13_.feasible(g_[1]) && t23_.feasible(g_[2])) {
                extend3();
            } else if (hooks_.on_pruned) {
                report_pruned();
            }
            unset(3, u, v);
            t23_.undo();
            t13_.undo();
        }
        if (f_.bipartite) uf_.undo();
    }

    void extend3() {
        int u = first_free(3);
        if (u < 0) {
            finish3();
            return;
        }
        for (int v = u + 1; v < m_ && !shared_.stop; ++v) try_edge3(u, v);
    }

    void finish3() {
        // Gamma_123 must be connected: join Gamma_12 cycles along color 3.
        std::vector<int> comp(static_cast<std::size_t>(cycles_));
        for (int i = 0; i < cycles_; ++i) comp[static_cast<std::size_t>(i)] = i;
        auto root = [&](int x) {
            while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
            return x;
        };
        int parts = cycles_;
        for (int v = 0; v < m_; ++v) {
            int a = root(cycle_of_[static_cast<std::size_t>(v)]), b = root(cycle_of_[static_cast<std::size_t>(nb(3, v))]);
            if (a != b) {
                comp[static_cast<std::size_t>(a)] = b;
                --parts;
            }
        }
        if (parts != 1) return;
        t14_.reset(col_[1]);
        t24_.reset(col_[2]);
        t34_.reset(col_[3]);
        extend4();
    }

    void try_edge4(int u, int v) {
        if (v == u || nb(4, v) >= 0 || !simple_ok(4, u, v)) return;
        if (!tick()) return;
        bool par = true;
        if (f_.bipartite) par = uf_.unite(cycle_of_[static_cast<std::size_t>(u)], cycle_of_[static_cast<std::size_t>(v)], parity_rel(u, v));
        if (par) {
            t14_.add(u, v);
            t24_.add(u, v);
            t34_.add(u, v);
            set(4, u, v);
            if (t14_.feasible(g_[2]) && t24_.feasible(g_[1]) && t34_.feasible(g_[0])) extend4();
            unset(4, u, v);
            t34_.undo();
            t24_.undo();
            t14_.undo();
        }
        if (f_.bipartite) uf_.undo();
    }

    void extend4() {
        int u = first_free(4);
        if (u < 0) {
            leaf();
            return;
        }
        for (int v = u + 1; v < m_ && !shared_.stop; ++v) try_edge4(u, v);
    }

    ColoredGraph current() const {
        ColoredGraph g(m_, 4);
        for (int c = 1; c <= 4; ++c)
            for (int v = 0; v < m_; ++v)
                if (nb(c, v) >= 0) g.set_slot(v, c, nb(c, v));
        return g;
    }

    void leaf() {
        ++leaves_;
        ColoredGraph g = current();
        if (!is_contracted(g)) return;
        ++candidates_;
        certs_.insert(canonical_form(g, IsoMode::ColorPermuting));
        if (certs_.size() >= budget_.max_memory_certificates) spill();
    }

    void spill() {
        std::string path = spill_prefix_ + "." + std::to_string(runs_.size());
        std::ofstream out(path);
        for (const std::string& c : certs_) out << to_hex(c) << '\n';
        if (!out) throw std::runtime_error("cannot write spill file " + path);
        runs_.push_back(path);
        certs_.clear();
    }

    void report_pruned() {
        PrunedNode node{current(), g_};
        hooks_.on_pruned(node);
    }
};

std::string from_hex(const std::string& hex) {
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i + 1 < hex.size(); i += 2) out.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
    return out;
}

std::array<int, 3> sorted_g(const ColoredGraph& g) {
    std::array<int, 3> v{g_pair(g, 1, 2), g_pair(g, 1, 3), g_pair(g, 1, 4)};
    std::sort(v.begin(), v.end());
    return v;
}

// Whether the class passes the group filters; nullopt when undecided.
std::optional<bool> group_filter(CensusClass& cls, const CensusFilters& f, const GroupBudget& budget) {
    if (!f.nontrivial_pi1 && !f.group) return true;
    Crystallization c = as_crystallization(cls.graph);
    Presentation p = extract_presentation(c).presentation();
    GroupId id = identify(p, budget);
    cls.group = to_string(id);
    if (f.nontrivial_pi1) {
        if (id.kind == GroupId::Kind::Trivial) return false;
        if (!id.known()) return std::nullopt;
    }
    if (f.group) {
        if (id.known()) return id == *f.group;
        Tri t = matches(p, target_info(*f.group), budget);
        if (t == Tri::Unknown) return std::nullopt;
        if (t == Tri::Yes) cls.group = to_string(*f.group);
        return t == Tri::Yes;
    }
    return true;
}

std::vector<std::vector<int>> perfect_matchings(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> mate(static_cast<std::size_t>(m), -1);
    std::function<void()> rec = [&]() {
        int u = -1;
        for (int v = 0; v < m; ++v)
            if (mate[static_cast<std::size_t>(v)] < 0) {
                u = v;
                break;
            }
        if (u < 0) {
            out.push_back(mate);
            return;
        }
        for (int v = u + 1; v < m; ++v) {
            if (mate[static_cast<std::size_t>(v)] >= 0) continue;
            mate[static_cast<std::size_t>(u)] = v;
            mate[static_cast<std::size_t>(v)] = u;
            rec();
            mate[static_cast<std::size_t>(u)] = mate[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec();
    return out;
}

}  // namespace

CensusResult enumerate_crystallizations(int m, const CensusFilters& filters, const CensusBudget& budget,
                                        const CensusHooks& hooks) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("census needs an even vertex count >= 2");
    CensusResult res;
    res.m = m;
    std::vector<Task> tasks = make_tasks(m, filters);
    Shared shared;
    shared.start = Clock::now();
    int jobs = std::max(1, budget.jobs);
    namespace fs = std::filesystem;
    fs::path spill_dir = budget.spill_dir.empty() ? fs::temp_directory_path() : fs::path(budget.spill_dir);
    std::string stem = "gem_census_" + std::to_string(reinterpret_cast<std::uintptr_t>(&shared));
    std::vector<std::unique_ptr<Worker>> workers;
    for (int i = 0; i < jobs; ++i)
        workers.push_back(std::make_unique<Worker>(m, filters, budget, hooks, shared,
                                                   (spill_dir / (stem + "_" + std::to_string(i))).string()));
    if (jobs == 1) {
        workers[0]->run(tasks);
    } else {
        std::vector<std::thread> threads;
        for (auto& w : workers) threads.emplace_back([&w, &tasks] { w->run(tasks); });
        for (auto& t : threads) t.join();
    }
    // Merge per-worker sets and spilled runs.
    std::set<std::string> merged;
    for (auto& w : workers) {
        merged.merge(w->certificates());
        for (const std::string& path : w->runs()) {
            std::ifstream in(path);
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) merged.insert(from_hex(line));
            fs::remove(path);
            ++res.stats.spilled_runs;
        }
        res.stats.leaves += w->leaves();
        res.stats.candidates += w->candidates();
    }
    res.stats.nodes = shared.nodes;
    res.stats.tasks_total = static_cast<long>(tasks.size());
    res.stats.tasks_done = shared.tasks_done;
    res.stats.workers = jobs;
    res.complete = !shared.stop && res.stats.tasks_done == res.stats.tasks_total;
    for (const std::string& cert : merged) {
        CensusClass cls;
        cls.certificate = cert;
        cls.graph = graph_from_certificate(cert);
        cls.g_vector = sorted_g(cls.graph);
        auto keep = group_filter(cls, filters, budget.group_budget);
        if (!keep)
            res.undecided.push_back(std::move(cls));
        else if (*keep)
            res.classes.push_back(std::move(cls));
    }
    res.stats.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
    return res;
}

std::vector<std::string> naive_census(int m, const CensusFilters& filters) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("census needs an even vertex count >= 2");
    auto ms = perfect_matchings(m);
    std::set<std::string> certs;
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : ms)
                for (const auto& d : ms) {
                    ColoredGraph g(m, 4);
                    const std::vector<int>* cols[4] = {&a, &b, &c, &d};
                    for (int k = 0; k < 4; ++k)
                        for (int v = 0; v < m; ++v) g.set_slot(v, k + 1, (*cols[k])[static_cast<std::size_t>(v)]);
                    if (!check_gagliardi(g).ok()) continue;
                    if (filters.simple && !is_simple(g)) continue;
                    if (filters.bipartite && !is_bipartite(g)) continue;
                    if (filters.g_vector && sorted_g(g) != *filters.g_vector) continue;
                    certs.insert(canonical_form(g, IsoMode::ColorPermuting));
                }
    std::vector<std::string> out;
    for (const std::string& cert : certs) {
        if (filters.nontrivial_pi1 || filters.group) {
            CensusClass cls{cert, graph_from_certificate(cert), {}, {}};
            auto keep = group_filter(cls, filters, GroupBudget{});
            if (!keep || !*keep) continue;
        }
        out.push_back(cert);
    }
    return out;
}

std::string to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::Certified: return "CERTIFIED";
        case LemmaStatus::BudgetExhausted: return "BUDGET-EXHAUSTED";
        case LemmaStatus::Failed: return "FAILED";
    }
    return "?";
}

LemmaReport verify_uniqueness_lemma(const std::string& lemma, const CensusBudget& budget) {
    LemmaReport rep;
    rep.lemma = lemma;
    CensusFilters& f = rep.filters;
    if (lemma == "4.2") {
        rep.m = 8;
        f.nontrivial_pi1 = true;
        rep.expected = {"J1", "J2", "K:2,1"};
    } else if (lemma == "4.3") {
        rep.m = 12;
        f.simple = true;
        f.group = GroupId::zn(3);
        rep.expected = {"K:3,1"};
    } else if (lemma == "4.4") {
        rep.m = 16;
        f.simple = f.bipartite = true;
        f.g_vector = std::array<int, 3>{3, 3, 4};
        f.group = GroupId::zn(5);
        rep.expected = {"M:2,3"};
    } else if (lemma == "4.5") {
        rep.m = 18;
        f.simple = f.bipartite = true;
        f.g_vector = std::array<int, 3>{3, 4, 4};
        f.group = GroupId::q8();
        rep.expected = {"J3"};
    } else if (lemma == "4.6") {
        rep.m = 24;
        f.simple = f.bipartite = true;
        f.g_vector = std::array<int, 3>{4, 4, 6};
        f.group = GroupId::zk(3);
        rep.expected = {"J4"};
    } else {
        throw std::invalid_argument("unknown lemma " + lemma);
    }
    rep.expected_count = static_cast<int>(rep.expected.size());
    rep.census = enumerate_crystallizations(rep.m, f, budget);
    std::map<std::string, std::string> known;
    for (const std::string& name : rep.expected)
        known[canonical_form(catalog_entry(name).built.graph, IsoMode::ColorPermuting)] = name;
    bool all_matched = true;
    for (const CensusClass& cls : rep.census.classes) {
        auto it = known.find(cls.certificate);
        rep.matched.push_back(it == known.end() ? std::string() : it->second);
        if (it == known.end()) all_matched = false;
    }
    int found = static_cast<int>(rep.census.classes.size());
    std::ostringstream detail;
    detail << "found " << found << " of " << rep.expected_count << " expected";
    if (!rep.census.undecided.empty()) detail << ", " << rep.census.undecided.size() << " undecided";
    if (!all_matched || found > rep.expected_count) {
        rep.status = LemmaStatus::Failed;
        detail << ", a class outside the catalog was found";
    } else if (!rep.census.complete) {
        rep.status = LemmaStatus::BudgetExhausted;
        detail << ", tasks " << rep.census.stats.tasks_done << "/" << rep.census.stats.tasks_total << ", nodes "
               << rep.census.stats.nodes;
    } else if (found == rep.expected_count && rep.census.undecided.empty()) {
        rep.status = LemmaStatus::Certified;
    } else {
        rep.status = LemmaStatus::Failed;
    }
    rep.detail = detail.str();
    return rep;
}

std::string summary_text(const CensusResult& r) {
    std::ostringstream out;
    out << "m=" << r.m << "\n";
    out << "classes=" << r.classes.size() << "\n";
    out << "undecided=" << r.undecided.size() << "\n";
    out << "complete=" << (r.complete ? "yes" : "no") << "\n";
    out << "nodes=" << r.stats.nodes << "\n";
    out << "leaves=" << r.stats.leaves << "\n";
    out << "candidates=" << r.stats.candidates << "\n";
    out << "tasks_done=" << r.stats.tasks_done << "\n";
    out << "tasks_total=" << r.stats.tasks_total << "\n";
    out << "spilled_runs=" << r.stats.spilled_runs << "\n";
    out << "workers=" << r.stats.workers << "\n";
    out << "seconds=" << r.stats.seconds << "\n";
    return out.str();
}

std::string index_text(const CensusResult& r) {
    std::ostringstream out;
    auto line = [&](const CensusClass& c, const char* tag) {
        out << to_hex(c.certificate) << " " << r.m << " " << c.g_vector[0] << "," << c.g_vector[1] << ","
            << c.g_vector[2] << " " << (c.group.empty() ? "-" : c.group) << tag << "\n";
    };
    for (const CensusClass& c : r.classes) line(c, "");
    for (const CensusClass& c : r.undecided) line(c, " undecided");
    return out.str();
}

void write_census(const CensusResult& r, const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    fs::path dir(directory);
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "class_%04zu.cgf", i);
        std::ofstream(dir / name) << write_cgf(r.classes[i].graph, {"certificate " + to_hex(r.classes[i].certificate)});
    }
    std::ofstream(dir / "census.txt") << index_text(r);
    std::ofstream(dir / "summary.txt") << summary_text(r);
}

}  // namespace gem
