#pragma once

#include "gem/words.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gem {

// Regular representation of a finite group from a completed coset table.
// Element k is the coset reached from the identity (element 0) along
// element_words[k].
struct FiniteGroupModel {
    int order = 0;
    int identity = 0;
    std::vector<int> generator_images;
    // action[col][e]: e times x_i (col 2(i-1)) or x_i^-1 (col 2(i-1)+1).
    std::vector<std::vector<int>> action;
    std::vector<Word> element_words;
    // Dense multiplication table; filled only for small orders.
    std::vector<std::vector<int>> table;

    int act(int e, Letter l) const;
    int evaluate(const Word& w, int from = 0) const;
    int multiply(int a, int b) const;
    int element_order(int e) const;
    // order -> number of elements of that order
    std::map<int, int> order_profile() const;
    bool is_abelian() const;
};

constexpr long kDefaultCosetCap = 100000;
constexpr int kDenseTableLimit = 512;

// Coset enumeration over the trivial subgroup (HLT with lookahead). Absent
// when the live-coset cap is reached without completing.
std::optional<FiniteGroupModel> todd_coxeter(const Presentation& p, long max_cosets = kDefaultCosetCap);

}  // namespace gem
