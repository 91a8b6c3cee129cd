#pragma once

#include "gem/graph.hpp"
#include "gem/groups.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gem {

struct CensusFilters {
    // No two vertices joined by two or more edges.
    bool simple = false;
    bool bipartite = false;
    // Sorted (g12, g13, g14) after choosing colors so that g12 <= g13 <= g14.
    std::optional<std::array<int, 3>> g_vector;
    bool nontrivial_pi1 = false;
    std::optional<GroupId> group;
};

struct CensusBudget {
    long max_nodes = 0;        // 0: unlimited
    double max_seconds = 0.0;  // 0: unlimited
    int jobs = 1;
    // Certificates kept in memory per worker before spilling a sorted run to disk.
    std::size_t max_memory_certificates = 1u << 20;
    std::string spill_dir;  // empty: system temp directory
    GroupBudget group_budget{10000, 4000, 20000, 16};
};

struct CensusClass {
    std::string certificate;
    ColoredGraph graph;
    std::array<int, 3> g_vector{};
    std::string group;  // identify() of the (3,4) extraction, or empty if not computed
};

struct CensusStats {
    long nodes = 0;
    long leaves = 0;
    long candidates = 0;  // leaves passing all structural checks
    long tasks_total = 0;
    long tasks_done = 0;
    long spilled_runs = 0;
    int workers = 1;
    double seconds = 0.0;
};

struct CensusResult {
    int m = 0;
    bool complete = true;
    std::vector<CensusClass> classes;
    // Classes whose group filter could not be decided within budget.
    std::vector<CensusClass> undecided;
    CensusStats stats;
};

// Partial color-3 assignment cut by a cycle-count bound; used to test pruning soundness.
struct PrunedNode {
    ColoredGraph partial;  // colors 1, 2 complete, color 3 partial, color 4 empty
    std::array<int, 3> g{};
};

struct CensusHooks {
    std::function<void(const PrunedNode&)> on_pruned;
};

CensusResult enumerate_crystallizations(int m, const CensusFilters& filters = {}, const CensusBudget& budget = {},
                                        const CensusHooks& hooks = {});

// Unpruned reference: all 4-tuples of perfect matchings. Practical for m <= 6.
std::vector<std::string> naive_census(int m, const CensusFilters& filters = {});

enum class LemmaStatus { Certified, BudgetExhausted, Failed };

struct LemmaReport {
    std::string lemma;
    int m = 0;
    CensusFilters filters;
    int expected_count = 0;
    std::vector<std::string> expected;  // catalog names
    LemmaStatus status = LemmaStatus::Failed;
    CensusResult census;
    // For each class found, the catalog entry it matches (empty if none).
    std::vector<std::string> matched;
    std::string detail;
};

// lemma is one of "4.2".."4.6".
LemmaReport verify_uniqueness_lemma(const std::string& lemma, const CensusBudget& budget = {});

std::string to_string(LemmaStatus s);
std::string summary_text(const CensusResult& r);
std::string index_text(const CensusResult& r);
// One CGF per class, census.txt and summary.txt.
void write_census(const CensusResult& r, const std::string& directory);

}  // namespace gem
