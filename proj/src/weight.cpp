#include "gem/weight.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gem {

namespace {

// Everything needed to test a candidate r_{t+1} against a relator set R.
struct RelatorContext {
    int s = 0;
    std::vector<Word> rels;
    IntMatrix rows;
    Lattice lattice;
    const TargetInfo* target = nullptr;

    RelatorContext(int gens, std::vector<Word> rs, const TargetInfo* t) : s(gens), rels(std::move(rs)), target(t) {
        for (const Word& r : rels) rows.push_back(exponent_vector(r, s));
        lattice = Lattice::span(rows, s);
    }

    // Necessary conditions visible in the abelianization.
    bool lattice_ok(const IntVector& ew, bool empty_word) const {
        if (!lattice.contains(ew)) return false;
        std::size_t t = rels.size();
        for (std::size_t k = 0; k < t; ++k) {
            IntMatrix m;
            for (std::size_t j = 0; j < t; ++j)
                if (j != k) m.push_back(rows[j]);
            if (!empty_word) m.push_back(ew);
            if (!(Lattice::span(m, s) == lattice)) return false;
            if (target && target->h2_rank > 0) {
                int count = static_cast<int>(m.size());
                if (count - matrix_rank(m, s) < target->h2_rank) return false;
            }
        }
        return true;
    }

    Presentation replaced(std::size_t k, const Word& w) const {
        Presentation p{s, {}};
        for (std::size_t j = 0; j < rels.size(); ++j)
            if (j != k) p.relators.push_back(rels[j]);
        if (!w.empty()) p.relators.push_back(w);
        return p;
    }

    Tri full_check(const Word& w, const GroupBudget& budget) const {
        Presentation base{s, rels};
        Tri member = target->abelian_group ? Tri::Yes : in_normal_closure(w, base, budget);
        if (member != Tri::Yes) return member;
        bool unknown = false;
        for (std::size_t k = 0; k < rels.size(); ++k) {
            Tri m = matches(replaced(k, w), *target, budget);
            if (m == Tri::No) return Tri::No;
            if (m == Tri::Unknown) unknown = true;
        }
        return unknown ? Tri::Unknown : Tri::Yes;
    }
};

// Products of all relators (first fixed, others in every order and sign);
// each lies in R-bar.
std::vector<Word> relator_products(const std::vector<Word>& rels) {
    std::vector<Word> out;
    std::size_t t = rels.size();
    if (t == 0) return out;
    if (t > 5) {
        Word w;
        for (const Word& r : rels) w = multiply(w, r);
        out.push_back(canonical_class(w));
        return out;
    }
    std::vector<std::size_t> idx(t - 1);
    std::iota(idx.begin(), idx.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask) {
            Word w = rels[0];
            for (std::size_t k = 0; k + 1 < t; ++k) {
                const Word& r = rels[idx[k]];
                w = multiply(w, (mask >> k) & 1u ? inverse(r) : r);
            }
            out.push_back(canonical_class(w));
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::optional<TargetInfo> target_of(const Presentation& p, const GroupBudget& budget, std::string& why) {
    GroupId g = identify(p, budget);
    switch (g.kind) {
        case GroupId::Kind::Unknown: why = to_string(g); return std::nullopt;
        case GroupId::Kind::FiniteOther: {
            auto m = todd_coxeter(simplify(p), budget.coset_cap);
            if (!m) {
                why = "coset enumeration failed";
                return std::nullopt;
            }
            TargetInfo t;
            t.id = g;
            t.abelian = g.invariants;
            t.order = m->order;
            t.abelian_group = m->is_abelian();
            t.profile = m->order_profile();
            return t;
        }
        default: return target_info(g);
    }
}

}  // namespace

RbarResult rbar_search(const Presentation& p, int max_weight, const GroupBudget& budget) {
    check_presentation(p);
    RbarResult res;
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
        Word c = cyclic_reduce(r);
        if (!c.empty()) rels.push_back(c);
    }
    if (rels.empty()) {
        res.convention = true;
        res.exact = true;
        res.weight = 2;
        res.word = Word{};
        res.note = "empty relator set";
        return res;
    }
    std::string why;
    auto target = target_of(p, budget, why);
    std::vector<Word> products = relator_products(rels);
    const Word* lightest = &products.front();
    for (const Word& w : products)
        if (weight_lambda(w) < weight_lambda(*lightest) ||
            (weight_lambda(w) == weight_lambda(*lightest) && serial_compare(w, *lightest) < 0))
            lightest = &w;
    int product_weight = weight_lambda(*lightest);
    if (!target) {
        res.word = *lightest;
        res.weight = product_weight;
        res.exact = false;
        res.note = "group not identified: " + why;
        return res;
    }
    int limit = max_weight > 0 ? std::min(max_weight, product_weight) : product_weight;
    std::set<Word, SerialLess> known(products.begin(), products.end());
    RelatorContext ctx(p.generators, rels, &*target);
    bool unknown = false;
    // Weight levels one at a time so that an early hit never materializes the heavier words.
    for (int level = 2; level <= limit; level += 2) {
        std::vector<Word> cands;
        if (level == 2) cands.push_back(Word{});
        for (Word& w : enumerate_words(p.generators, level))
            if (weight_lambda(w) == level) cands.push_back(std::move(w));
        for (const Word& c : cands) {
            if (!ctx.lattice_ok(exponent_vector(c, p.generators), c.empty())) continue;
            ++res.candidates_checked;
            Tri st = known.count(c) ? Tri::Yes : ctx.full_check(c, budget);
            if (st == Tri::Yes) {
                res.word = c;
                res.weight = level;
                res.exact = !unknown;
                if (unknown) res.note = "a lighter candidate was undecided";
                return res;
            }
            if (st == Tri::Unknown) unknown = true;
        }
    }
    res.exact = !unknown;
    res.note = "no element up to weight " + std::to_string(limit);
    return res;
}

std::optional<std::pair<Word, int>> rbar_min_weight(const Presentation& p, int max_weight, const GroupBudget& budget) {
    RbarResult r = rbar_search(p, max_weight, budget);
    if (!r.exact || !r.word) return std::nullopt;
    return std::make_pair(*r.word, r.weight);
}

PhiResult phi_search(const Presentation& p, int max_weight, const GroupBudget& budget) {
    check_presentation(p);
    int s = p.generators;
    int t = 0, sum = 0;
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        ++t;
        sum += weight_lambda(c);
        rels.push_back(c);
    }
    if (t > s) throw std::invalid_argument("phi needs at most as many relators as generators");
    PhiResult out;
    out.next = rbar_search(p, max_weight, budget);
    int product_weight = 2;
    if (!rels.empty()) {
        product_weight = 1 << 30;
        for (const Word& w : relator_products(rels)) product_weight = std::min(product_weight, weight_lambda(w));
    }
    int next_weight = out.next.word ? out.next.weight : product_weight;
    out.upper_bound = sum + next_weight + 2 * (s - t);
    if (out.next.exact && out.next.word) out.value = out.upper_bound;
    return out;
}

std::optional<int> phi(const Presentation& p, int max_weight, const GroupBudget& budget) {
    return phi_search(p, max_weight, budget).value;
}

namespace {

class LevelSearch {
public:
    LevelSearch(const TargetInfo& target, const GroupBudget& budget, int limit, int weight_cap)
        : target_(target), budget_(budget), limit_(limit), cap_(weight_cap) {}

    void run_generators(int s) {
        int rank = target_.abelian.rank;
        int t_lo = std::max(0, s - rank);
        if (target_.h2_rank > 0) t_lo = std::max(t_lo, s - rank + target_.h2_rank);
        if (t_lo > s) return;
        zero_sum_ = (s == rank);
        int w_min = zero_sum_ ? (s >= 2 ? 6 : 1 << 20) : 2;
        int need = 0;
        for (int t = t_lo; t <= s; ++t) {
            if (t == 0) continue;
            need = std::max(need, limit_ - 2 * (s - t) - 2 - (t - 1) * w_min);
        }
        if (cap_ > 0 && need > cap_) {
            truncated_ = true;
            need = cap_;
        }
        word_weight_ = std::max(word_weight_, need);
        words_.clear();
        weights_.clear();
        vectors_.clear();
        if (need >= 2)
            for (Word& w : enumerate_words(s, need)) {
                IntVector e = exponent_vector(w, s);
                if (zero_sum_ && std::any_of(e.begin(), e.end(), [](long x) { return x != 0; })) continue;
                weights_.push_back(weight_lambda(w));
                vectors_.push_back(std::move(e));
                words_.push_back(std::move(w));
            }
        s_ = s;
        for (int t = t_lo; t <= s; ++t) {
            t_ = t;
            chosen_.clear();
            dfs(0, 0);
        }
    }

    std::optional<int> best() const { return best_; }
    const Presentation& witness() const { return witness_; }
    const Word& witness_next() const { return witness_next_; }
    bool closed() const {
        if (truncated_) return false;
        int bound = best_ ? *best_ : limit_;
        for (int lb : undecided_)
            if (lb < bound || (!best_ && lb <= bound)) return false;
        return true;
    }
    long leaves() const { return leaves_; }
    long identified() const { return identified_; }
    long undecided() const { return static_cast<long>(undecided_.size()); }
    int word_weight() const { return word_weight_; }

private:
    const TargetInfo& target_;
    GroupBudget budget_;
    int limit_;
    int cap_;
    bool zero_sum_ = false;
    bool truncated_ = false;
    int word_weight_ = 0;
    int s_ = 0, t_ = 0;
    std::vector<Word> words_;
    std::vector<int> weights_;
    std::vector<IntVector> vectors_;
    std::vector<std::size_t> chosen_;
    std::optional<int> best_;
    Presentation witness_;
    Word witness_next_;
    std::vector<int> undecided_;
    long leaves_ = 0;
    long identified_ = 0;

    // Largest phi still worth finding.
    int bound() const { return best_ ? *best_ - 1 : limit_; }

    void dfs(std::size_t start, int sum) {
        int k = static_cast<int>(chosen_.size());
        int fixed = 2 * (s_ - t_);
        if (k == t_) {
            leaf(sum);
            return;
        }
        for (std::size_t i = start; i < words_.size(); ++i) {
            // Remaining relators weigh at least weights_[i] each; r_{t+1} at least 2.
            if (sum + (t_ - k) * weights_[i] + 2 + fixed > bound()) break;
            chosen_.push_back(i);
            dfs(i + 1, sum + weights_[i]);
            chosen_.pop_back();
        }
    }

    void leaf(int sum) {
        ++leaves_;
        int fixed = 2 * (s_ - t_);
        Presentation p{s_, {}};
        IntMatrix rows;
        for (std::size_t i : chosen_) {
            p.relators.push_back(words_[i]);
            rows.push_back(vectors_[i]);
        }
        if (cokernel_invariants(rows, s_) != target_.abelian) return;
        if (target_.h2_rank > 0 && t_ - matrix_rank(rows, s_) < target_.h2_rank) return;
        if (t_ == 0) {
            Tri m = matches(p, target_, budget_);
            ++identified_;
            if (m == Tri::Yes)
                record(p, Word{}, 2 + fixed);
            else if (m == Tri::Unknown)
                undecided_.push_back(2 + fixed);
            return;
        }
        RelatorContext ctx(s_, p.relators, &target_);
        // Candidate list for r_{t+1}: the empty word, then the word list.
        auto candidate = [&](long idx) -> std::pair<const Word*, int> {
            static const Word empty;
            if (idx < 0) return {&empty, 2};
            return {&words_[static_cast<std::size_t>(idx)], weights_[static_cast<std::size_t>(idx)]};
        };
        auto candidate_vector = [&](long idx) -> IntVector {
            if (idx < 0) return IntVector(static_cast<std::size_t>(s_), 0);
            return vectors_[static_cast<std::size_t>(idx)];
        };
        long first = -2;
        for (long idx = -1; idx < static_cast<long>(words_.size()); ++idx) {
            auto [w, wt] = candidate(idx);
            if (sum + wt + fixed > bound()) break;
            if (ctx.lattice_ok(candidate_vector(idx), idx < 0)) {
                first = idx;
                break;
            }
        }
        if (first == -2) return;
        Tri m = matches(p, target_, budget_);
        ++identified_;
        if (m == Tri::No) return;
        if (m == Tri::Unknown) {
            undecided_.push_back(sum + candidate(first).second + fixed);
            return;
        }
        for (long idx = first; idx < static_cast<long>(words_.size()); ++idx) {
            auto [w, wt] = candidate(idx);
            if (sum + wt + fixed > bound()) break;
            if (!ctx.lattice_ok(candidate_vector(idx), idx < 0)) continue;
            Tri st = ctx.full_check(*w, budget_);
            if (st == Tri::Yes) {
                record(p, *w, sum + wt + fixed);
                return;
            }
            if (st == Tri::Unknown) undecided_.push_back(sum + wt + fixed);
        }
    }

    void record(const Presentation& p, const Word& next, int value) {
        if (!best_ || value < *best_) {
            best_ = value;
            witness_ = p;
            witness_next_ = next;
        }
    }
};

PsiLevel search_level(const TargetInfo& target, int q, int threshold, const PsiOptions& opt) {
    PsiLevel level;
    level.q = q;
    level.threshold = threshold;
    LevelSearch search(target, opt.budget, threshold, opt.max_weight);
    int s_lo = target.abelian.minimal_generators();
    for (int s = s_lo; s <= q; ++s) search.run_generators(s);
    level.psi = search.best();
    level.closed = search.closed();
    if (level.psi) {
        level.witness = search.witness();
        level.witness_next = search.witness_next();
    }
    level.leaves = search.leaves();
    level.identified = search.identified();
    level.undecided = search.undecided();
    level.word_weight = search.word_weight();
    return level;
}

}  // namespace

PsiReport psi_of_group(const GroupId& target, const PsiOptions& opt) {
    TargetInfo info = target_info(target);
    PsiReport rep;
    rep.target = target;
    int mu_lb = info.abelian.minimal_generators();
    if (target.kind == GroupId::Kind::Quaternion8) mu_lb = std::max(mu_lb, 2);
    int q_lo = opt.q_min >= 0 ? std::max(opt.q_min, mu_lb) : mu_lb;
    std::optional<int> mu;
    bool all_closed = true;
    for (int q = q_lo; q <= opt.q_max; ++q) {
        int threshold = 6 * (q + 1);
        PsiLevel level = search_level(info, q, threshold, opt);
        all_closed = all_closed && level.closed;
        bool hit = level.psi.has_value();
        rep.levels.push_back(level);
        if (hit && !mu) mu = q;
        if (!hit && !mu && q == mu_lb) {
            // Widen the threshold to show that q generators suffice at all.
            for (int extra = 6; extra <= 24 && !mu; extra += 6) {
                PsiLevel wide = search_level(info, q, threshold + extra, opt);
                if (wide.psi) {
                    mu = q;
                    if (wide.closed) rep.psi_at_mu = wide.psi;
                    rep.notes.push_back("psi at q=" + std::to_string(q) + " found with threshold " +
                                        std::to_string(threshold + extra));
                }
            }
        }
        if (hit && level.closed) {
            rep.rho = q;
            break;
        }
        if (hit && !level.closed) {
            rep.rho = q;
            rep.notes.push_back("level " + std::to_string(q) + " has undecided branches");
            break;
        }
    }
    if (mu) {
        rep.mu = *mu;
        // Fewer than mu_lb generators cannot present the target.
        rep.mu_exact = (*mu == mu_lb);
    }
    if (rep.rho >= 0 && mu) {
        const PsiLevel& lv = rep.levels.back();
        rep.psi = std::max(*lv.psi, 6 * rep.mu + 2);
    }
    rep.closed = all_closed && rep.rho >= 0 && rep.mu_exact;
    if (!rep.closed) rep.notes.push_back("upper bound only");
    return rep;
}

std::string to_text(const PsiReport& r) {
    std::string s;
    s += "target=" + to_string(r.target) + "\n";
    for (const PsiLevel& lv : r.levels) {
        std::string q = std::to_string(lv.q);
        s += "level." + q + ".threshold=" + std::to_string(lv.threshold) + "\n";
        s += "level." + q + ".psi=" + (lv.psi ? std::to_string(*lv.psi) : std::string("none")) + "\n";
        s += "level." + q + ".closed=" + std::string(lv.closed ? "yes" : "no") + "\n";
        s += "level." + q + ".leaves=" + std::to_string(lv.leaves) + "\n";
        s += "level." + q + ".identified=" + std::to_string(lv.identified) + "\n";
        s += "level." + q + ".undecided=" + std::to_string(lv.undecided) + "\n";
        s += "level." + q + ".word_weight=" + std::to_string(lv.word_weight) + "\n";
    }
    if (r.psi_at_mu) s += "psi_at_mu=" + std::to_string(*r.psi_at_mu) + "\n";
    s += "mu=" + std::to_string(r.mu) + "\n";
    s += "mu_exact=" + std::string(r.mu_exact ? "yes" : "no") + "\n";
    s += "rho=" + std::to_string(r.rho) + "\n";
    s += "psi=" + (r.psi ? std::to_string(*r.psi) : std::string("none")) + "\n";
    s += "closed=" + std::string(r.closed ? "yes" : "no") + "\n";
    s += "---\n";
    for (const PsiLevel& lv : r.levels)
        if (lv.witness)
            s += "q=" + std::to_string(lv.q) + " witness " + to_pretty(*lv.witness) + " with r_next " +
                 to_pretty(lv.witness_next) + "\n";
    for (const std::string& n : r.notes) s += n + "\n";
    return s;
}

}  // namespace gem
