#pragma once

#include "gem/groups.hpp"
#include "gem/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gem {

struct RbarResult {
    // Least-weight element found, ties broken by serialization order.
    std::optional<Word> word;
    int weight = 0;
    // False when some lighter or earlier candidate could not be decided.
    bool exact = false;
    // Set when R is empty and the empty-set convention applies.
    bool convention = false;
    long candidates_checked = 0;
    std::string note;
};

// Least-weight w such that replacing any single relator by w keeps the normal
// closure. max_weight <= 0 searches up to the weight of a relator product,
// which always qualifies.
RbarResult rbar_search(const Presentation& p, int max_weight = 0, const GroupBudget& budget = {});

// Absent when the search was inconclusive.
std::optional<std::pair<Word, int>> rbar_min_weight(const Presentation& p, int max_weight = 0,
                                                    const GroupBudget& budget = {});

struct PhiResult {
    std::optional<int> value;
    // Always valid: uses a relator product when the search is inconclusive.
    int upper_bound = 0;
    RbarResult next;
};

PhiResult phi_search(const Presentation& p, int max_weight = 0, const GroupBudget& budget = {});
std::optional<int> phi(const Presentation& p, int max_weight = 0, const GroupBudget& budget = {});

struct PsiLevel {
    int q = 0;
    int threshold = 0;
    // Least phi over presentations with at most q generators, if <= threshold.
    std::optional<int> psi;
    bool closed = true;
    std::optional<Presentation> witness;
    Word witness_next;
    long leaves = 0;
    long identified = 0;
    long undecided = 0;
    // Largest relator weight the level needed (words up to this were enumerated).
    int word_weight = 0;
};

struct PsiReport {
    GroupId target;
    int mu = 0;
    bool mu_exact = false;
    std::vector<PsiLevel> levels;
    // psi(G; mu) when it exceeds the level threshold (found by a wider search).
    std::optional<int> psi_at_mu;
    int rho = -1;
    std::optional<int> psi;
    bool closed = false;
    std::vector<std::string> notes;
};

struct PsiOptions {
    int q_min = -1;  // default: minimal generator count of the abelianization
    int q_max = 4;
    // Per-relator weight cap; 0 derives it from the level threshold.
    int max_weight = 0;
    GroupBudget budget;
};

PsiReport psi_of_group(const GroupId& target, const PsiOptions& options = {});

std::string to_text(const PsiReport& r);

}  // namespace gem
