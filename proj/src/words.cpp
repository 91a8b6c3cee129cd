#include "gem/words.hpp"

#include "gem/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gem {

Word::Word(std::vector<Letter> ls) : letters(std::move(ls)) {
    *this = free_reduce(letters);
}

Word::Word(std::initializer_list<Letter> ls) : Word(std::vector<Letter>(ls)) {}

int Word::max_generator() const {
    int m = 0;
    for (Letter l : letters) m = std::max(m, generator_of(l));
    return m;
}

std::strong_ordering serial_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ka = letter_key(a[i]), kb = letter_key(b[i]);
        if (ka != kb) return ka <=> kb;
    }
    return std::strong_ordering::equal;
}

Word free_reduce(std::span<const Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    Word w;
    w.letters = std::move(out);
    return w;
}

Word cyclic_reduce(const Word& w) {
    std::size_t b = 0, e = w.size();
    while (e - b >= 2 && w[b] == -w[e - 1]) {
        ++b;
        --e;
    }
    Word r;
    r.letters.assign(w.letters.begin() + b, w.letters.begin() + e);
    return r;
}

Word inverse(const Word& w) {
    Word r;
    r.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

Word multiply(const Word& a, const Word& b) {
    std::vector<Letter> raw(a.letters);
    raw.insert(raw.end(), b.letters.begin(), b.letters.end());
    return free_reduce(raw);
}

Word power(Letter x, int p) {
    Word w;
    Letter l = p < 0 ? -x : x;
    w.letters.assign(static_cast<std::size_t>(p < 0 ? -p : p), l);
    return w;
}

Word rotate(const Word& w, std::size_t k) {
    Word r;
    if (w.empty()) return r;
    k %= w.size();
    r.letters.reserve(w.size());
    r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
    return r;
}

bool is_cyclically_reduced(const Word& w) {
    return w.size() < 2 || w[0] != -w[w.size() - 1];
}

int epsilon(const Word& w) {
    Word c = cyclic_reduce(w);
    std::size_t m = c.size();
    if (m <= 1) return 0;
    int changes = 0;
    for (std::size_t j = 0; j < m; ++j)
        if (sign_of(c[j]) != sign_of(c[(j + 1) % m])) ++changes;
    return 2 * changes;
}

int weight_lambda(const Word& w) {
    Word c = cyclic_reduce(w);
    if (c.empty()) return 2;
    int m = static_cast<int>(c.size());
    return 2 * m - epsilon(c) / 2;
}

Word tilde_expand(const Word& r, int aux) {
    Word c = cyclic_reduce(r);
    if (c.empty() || c.size() != r.size())
        throw std::invalid_argument("tilde_expand needs a nonempty cyclically reduced word");
    if (aux < 1) throw std::invalid_argument("auxiliary generator index must be positive");
    for (Letter l : c.letters)
        if (generator_of(l) == aux) throw std::invalid_argument("auxiliary generator occurs in the word");
    Word out;
    std::size_t m = c.size();
    for (std::size_t j = 0; j < m; ++j) {
        out.letters.push_back(c[j]);
        if (sign_of(c[j]) == sign_of(c[(j + 1) % m])) out.letters.push_back(-sign_of(c[j]) * aux);
    }
    return out;
}

namespace {

// Is rotation k of `a` (cyclic) lexicographically smaller than `b` (same length)?
int compare_rotation(const std::vector<Letter>& a, std::size_t k, const std::vector<Letter>& b) {
    std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        int ka = letter_key(a[(i + k) % m]), kb = letter_key(b[i]);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    return 0;
}

bool is_class_minimal(const std::vector<Letter>& w) {
    std::size_t m = w.size();
    std::vector<Letter> inv(w.rbegin(), w.rend());
    for (Letter& l : inv) l = -l;
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0 && compare_rotation(w, k, w) < 0) return false;
        if (compare_rotation(inv, k, w) < 0) return false;
    }
    return true;
}

}  // namespace

Word canonical_class(const Word& w) {
    Word c = cyclic_reduce(w);
    if (c.empty()) return c;
    Word inv = inverse(c);
    std::size_t m = c.size();
    const std::vector<Letter>* best = &c.letters;
    std::size_t best_k = 0;
    for (const std::vector<Letter>* src : {&c.letters, &inv.letters}) {
        for (std::size_t k = 0; k < m; ++k) {
            bool smaller = false;
            for (std::size_t i = 0; i < m; ++i) {
                int ka = letter_key((*src)[(i + k) % m]);
                int kb = letter_key((*best)[(i + best_k) % m]);
                if (ka != kb) {
                    smaller = ka < kb;
                    break;
                }
            }
            if (smaller) {
                best = src;
                best_k = k;
            }
        }
    }
    return rotate(Word(*best), best_k);
}

std::vector<long> exponent_vector(const Word& w, int generators) {
    std::vector<long> e(static_cast<std::size_t>(generators), 0);
    for (Letter l : w.letters) {
        int g = generator_of(l);
        if (g > generators) throw std::invalid_argument("generator index exceeds generator count");
        e[static_cast<std::size_t>(g - 1)] += sign_of(l);
    }
    return e;
}

std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += 'x';
        s += std::to_string(generator_of(w[i]));
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

namespace {

std::string superscript(int n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    if (n < 0) {
        out += "⁻";
        n = -n;
    }
    std::string d = std::to_string(n);
    for (char c : d) out += digits[c - '0'];
    return out;
}

}  // namespace

std::string to_pretty(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int run = static_cast<int>(j - i);
        s += 'x';
        s += std::to_string(generator_of(w[i]));
        int e = run * sign_of(w[i]);
        if (e != 1) s += superscript(e);
        i = j;
    }
    return s;
}

Word parse_word(std::string_view text) {
    std::vector<Letter> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        std::string_view tok = text.substr(i, j - i);
        i = j;
        if (tok.size() < 2 || tok[0] != 'x') throw std::invalid_argument("bad word token '" + std::string(tok) + "'");
        bool inv = false;
        std::string_view num = tok.substr(1);
        if (num.size() > 3 && num.substr(num.size() - 3) == "^-1") {
            inv = true;
            num = num.substr(0, num.size() - 3);
        }
        int g = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), g);
        if (ec != std::errc() || ptr != num.data() + num.size() || g < 1)
            throw std::invalid_argument("bad word token '" + std::string(tok) + "'");
        raw.push_back(inv ? -g : g);
    }
    return free_reduce(raw);
}

namespace {

struct WordEnumerator {
    int s;
    int max_weight;
    std::vector<Letter> cur;
    std::vector<std::pair<int, Word>> out;

    void emit() {
        std::size_t m = cur.size();
        if (m >= 2 && cur.front() == -cur.back()) return;
        int equal = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (sign_of(cur[j]) == sign_of(cur[(j + 1) % m])) ++equal;
        int lambda = static_cast<int>(m) + equal;
        if (lambda > max_weight) return;
        if (!is_class_minimal(cur)) return;
        Word w;
        w.letters = cur;
        out.emplace_back(lambda, std::move(w));
    }

    // partial = length + equal-sign adjacencies among consecutive letters so far.
    void extend(int partial) {
        if (!cur.empty()) emit();
        if (static_cast<int>(cur.size()) >= max_weight) return;
        int lo = cur.empty() ? 1 : generator_of(cur.front());
        for (int g = lo; g <= s; ++g) {
            for (int sg : {1, -1}) {
                Letter l = sg * g;
                if (cur.empty() && l < 0) continue;
                if (!cur.empty() && cur.back() == -l) continue;
                int next = partial + 1 + ((!cur.empty() && sign_of(cur.back()) == sg) ? 1 : 0);
                if (next > max_weight) continue;
                cur.push_back(l);
                extend(next);
                cur.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Word> enumerate_words(int generators, int max_weight) {
    if (generators < 1) return {};
    WordEnumerator en{generators, max_weight, {}, {}};
    en.extend(0);
    std::sort(en.out.begin(), en.out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return serial_compare(a.second, b.second) < 0;
    });
    std::vector<Word> words;
    words.reserve(en.out.size());
    for (auto& [lam, w] : en.out) words.push_back(std::move(w));
    return words;
}

std::string to_text(const Presentation& p) {
    std::string s = "gens " + std::to_string(p.generators) + "\n";
    for (const Word& r : p.relators) s += "rel " + to_string(r) + "\n";
    return s;
}

std::string to_pretty(const Presentation& p) {
    std::string s = "⟨";
    for (int i = 1; i <= p.generators; ++i) {
        if (i > 1) s += ", ";
        s += "x" + std::to_string(i);
    }
    s += " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i) s += ", ";
        s += to_string(p.relators[i]);
    }
    s += "⟩";
    return s;
}

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool have_gens = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line[0] == '#') continue;
        if (!have_gens) {
            if (line.substr(0, 5) != "gens ") throw ParseError(lineno, "expected 'gens <s>'");
            std::string_view num = line.substr(5);
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p.generators);
            if (ec != std::errc() || ptr != num.data() + num.size() || p.generators < 0)
                throw ParseError(lineno, "bad generator count");
            have_gens = true;
            continue;
        }
        if (line.substr(0, 4) != "rel ") throw ParseError(lineno, "expected 'rel <word>'");
        Word w;
        try {
            w = parse_word(line.substr(4));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        if (w.max_generator() > p.generators) throw ParseError(lineno, "relator uses an undeclared generator");
        w = cyclic_reduce(w);
        if (w.empty()) throw ParseError(lineno, "relator reduces to the empty word");
        p.relators.push_back(std::move(w));
        if (pos > text.size()) break;
    }
    if (!have_gens) throw ParseError(lineno, "missing 'gens' line");
    return p;
}

void check_presentation(const Presentation& p) {
    for (const Word& r : p.relators)
        if (r.max_generator() > p.generators)
            throw std::invalid_argument("relator " + to_string(r) + " uses a generator beyond " +
                                        std::to_string(p.generators));
}

}  // namespace gem
