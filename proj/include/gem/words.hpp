#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gem {

// A letter is +i for x_i and -i for x_i^-1 (i >= 1).
using Letter = int;

inline int generator_of(Letter l) { return l < 0 ? -l : l; }
inline int sign_of(Letter l) { return l < 0 ? -1 : 1; }

// Total order on letters: x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_key(Letter l) { return 2 * generator_of(l) - (l > 0 ? 1 : 0); }

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls);
    Word(std::initializer_list<Letter> ls);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; }
    int max_generator() const;

    friend bool operator==(const Word&, const Word&) = default;
};

// Serialization order: shorter first, then letter_key lexicographic.
std::strong_ordering serial_compare(const Word& a, const Word& b);
struct SerialLess {
    bool operator()(const Word& a, const Word& b) const { return serial_compare(a, b) < 0; }
};

Word free_reduce(std::span<const Letter> raw);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word multiply(const Word& a, const Word& b);
Word power(Letter x, int p);
Word rotate(const Word& w, std::size_t k);
bool is_cyclically_reduced(const Word& w);

// Cyclic sum of |e_j - e_{j+1}|; zero for words of length <= 1.
int epsilon(const Word& w);
// 2m - epsilon/2 on the cyclic reduction; 2 for the empty word.
int weight_lambda(const Word& w);
Word tilde_expand(const Word& r, int aux_generator);

// Least rotation of w or w^-1 (after cyclic reduction) in serialization order.
Word canonical_class(const Word& w);
std::vector<long> exponent_vector(const Word& w, int generators);

std::string to_string(const Word& w);
// Unicode form such as x1²x2⁻¹, for prose output.
std::string to_pretty(const Word& w);
Word parse_word(std::string_view text);

// One representative per rotation/inversion class of nonempty cyclically
// reduced words over x_1..x_s with weight <= max_weight, sorted by
// (weight, serialization).
std::vector<Word> enumerate_words(int generators, int max_weight);

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

std::string to_text(const Presentation& p);
std::string to_pretty(const Presentation& p);
Presentation parse_presentation(std::string_view text);

// Throws std::invalid_argument when a relator uses a generator beyond s.
void check_presentation(const Presentation& p);

}  // namespace gem
