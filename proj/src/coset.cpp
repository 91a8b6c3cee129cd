#include "gem/coset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gem {

namespace {

inline int column_of(Letter l) { return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0); }

class CosetEnumerator {
public:
    CosetEnumerator(int generators, std::vector<std::vector<int>> relators, long cap)
        : cols_(2 * generators), rels_(std::move(relators)), cap_(cap) {
        new_coset();
    }

    bool run() {
        for (long alpha = 0; alpha < total(); ++alpha) {
            for (std::size_t r = 0; r < rels_.size() && live(alpha); ++r)
                if (!scan_and_fill(alpha, rels_[r])) return false;
            for (int x = 0; x < cols_ && live(alpha); ++x)
                if (at(alpha, x) < 0 && !define(alpha, x)) return false;
        }
        return true;
    }

    FiniteGroupModel model() const {
        // Renumber live cosets breadth-first from coset 0 (column order).
        std::vector<long> num(static_cast<std::size_t>(total()), -1);
        std::vector<long> order{0};
        num[0] = 0;
        FiniteGroupModel m;
        m.element_words.push_back(Word{});
        for (std::size_t i = 0; i < order.size(); ++i) {
            long c = order[i];
            for (int x = 0; x < cols_; ++x) {
                long d = at(c, x);
                if (num[d] < 0) {
                    num[d] = static_cast<long>(order.size());
                    order.push_back(d);
                    Word w = m.element_words[i];
                    Letter l = (x % 2 == 0) ? (x / 2 + 1) : -(x / 2 + 1);
                    w.letters.push_back(l);
                    m.element_words.push_back(free_reduce(w.letters));
                }
            }
        }
        int n = static_cast<int>(order.size());
        m.order = n;
        m.action.assign(static_cast<std::size_t>(cols_), std::vector<int>(static_cast<std::size_t>(n)));
        for (int e = 0; e < n; ++e)
            for (int x = 0; x < cols_; ++x) m.action[x][e] = static_cast<int>(num[at(order[e], x)]);
        for (int g = 0; g < cols_ / 2; ++g) m.generator_images.push_back(m.action[2 * g][0]);
        if (n <= kDenseTableLimit) {
            m.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) m.table[a][b] = m.evaluate(m.element_words[b], a);
        }
        return m;
    }

private:
    int cols_;
    std::vector<std::vector<int>> rels_;
    long cap_;
    std::vector<long> tab_;
    std::vector<long> parent_;
    long live_count_ = 0;
    std::vector<long> queue_;

    long total() const { return static_cast<long>(parent_.size()); }
    bool live(long c) const { return parent_[c] == c; }
    long& at(long c, int x) { return tab_[static_cast<std::size_t>(c * cols_ + x)]; }
    long at(long c, int x) const { return tab_[static_cast<std::size_t>(c * cols_ + x)]; }

    long new_coset() {
        long c = total();
        parent_.push_back(c);
        tab_.resize(tab_.size() + static_cast<std::size_t>(cols_), -1);
        ++live_count_;
        return c;
    }

    bool define(long c, int x) {
        if (live_count_ >= cap_) {
            lookahead();
            if (!live(c) || at(c, x) >= 0) return true;
            if (live_count_ >= cap_) return false;
        }
        if (total() >= 4 * cap_ + 16) return false;
        long d = new_coset();
        at(c, x) = d;
        at(d, x ^ 1) = c;
        return true;
    }

    long rep(long c) {
        long r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            long nx = parent_[c];
            parent_[c] = r;
            c = nx;
        }
        return r;
    }

    void merge(long a, long b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_count_;
        queue_.push_back(b);
    }

    void coincidence(long a, long b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            long g = queue_[i];
            for (int x = 0; x < cols_; ++x) {
                long d = at(g, x);
                if (d < 0) continue;
                at(d, x ^ 1) = -1;
                long mu = rep(g), nu = rep(d);
                if (at(mu, x) >= 0)
                    merge(nu, at(mu, x));
                else if (at(nu, x ^ 1) >= 0)
                    merge(mu, at(nu, x ^ 1));
                else {
                    at(mu, x) = nu;
                    at(nu, x ^ 1) = mu;
                }
            }
        }
    }

    // Returns false when a definition was needed but the cap forbids it.
    bool scan_and_fill(long alpha, const std::vector<int>& w) {
        int len = static_cast<int>(w.size());
        while (true) {
            long f = alpha, b = alpha;
            int i = 0, j = len - 1;
            while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
            if (i > j) {
                if (f != alpha) coincidence(f, alpha);
                return true;
            }
            while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                return true;
            }
            if (!define(f, w[i])) return false;
            if (!live(alpha)) return true;
        }
    }

    void scan(long alpha, const std::vector<int>& w) {
        int len = static_cast<int>(w.size());
        long f = alpha, b = alpha;
        int i = 0, j = len - 1;
        while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
        if (i > j) {
            if (f != alpha) coincidence(f, alpha);
            return;
        }
        while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
        if (j < i) {
            coincidence(f, b);
        } else if (i == j) {
            at(f, w[i]) = b;
            at(b, w[i] ^ 1) = f;
        }
    }

    void lookahead() {
        for (long c = 0; c < total(); ++c)
            for (std::size_t r = 0; r < rels_.size() && live(c); ++r) scan(c, rels_[r]);
    }
};

}  // namespace

int FiniteGroupModel::act(int e, Letter l) const { return action[static_cast<std::size_t>(column_of(l))][e]; }

int FiniteGroupModel::evaluate(const Word& w, int from) const {
    int e = from;
    for (Letter l : w.letters) e = act(e, l);
    return e;
}

int FiniteGroupModel::multiply(int a, int b) const {
    if (!table.empty()) return table[a][b];
    return evaluate(element_words[b], a);
}

int FiniteGroupModel::element_order(int e) const {
    int k = 1;
    int cur = e;
    while (cur != identity) {
        cur = multiply(cur, e);
        ++k;
    }
    return k;
}

std::map<int, int> FiniteGroupModel::order_profile() const {
    std::map<int, int> prof;
    for (int e = 0; e < order; ++e) ++prof[element_order(e)];
    return prof;
}

bool FiniteGroupModel::is_abelian() const {
    for (std::size_t a = 0; a < generator_images.size(); ++a)
        for (std::size_t b = a + 1; b < generator_images.size(); ++b)
            if (multiply(generator_images[a], generator_images[b]) != multiply(generator_images[b], generator_images[a]))
                return false;
    return true;
}

std::optional<FiniteGroupModel> todd_coxeter(const Presentation& p, long max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("coset cap must be positive");
    check_presentation(p);
    std::vector<std::vector<int>> rels;
    for (const Word& r : p.relators) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        std::vector<int> cols;
        for (Letter l : c.letters) cols.push_back(column_of(l));
        rels.push_back(std::move(cols));
    }
    if (p.generators == 0) {
        FiniteGroupModel m;
        m.order = 1;
        m.element_words.push_back(Word{});
        m.table = {{0}};
        return m;
    }
    CosetEnumerator en(p.generators, std::move(rels), max_cosets);
    if (!en.run()) return std::nullopt;
    return en.model();
}

}  // namespace gem
