#include "gem/groups.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace gem {

GroupId GroupId::zn(long n) {
    if (n == 1) return trivial();
    if (n < 1) throw std::invalid_argument("Z_n needs n >= 1");
    GroupId g{Kind::CyclicZn, n, {}, {}};
    return g;
}

GroupId GroupId::zk(int k) {
    if (k == 0) return trivial();
    if (k == 1) return z();
    if (k < 0) throw std::invalid_argument("Z^k needs k >= 0");
    return {Kind::FreeAbelianZk, k, {}, {}};
}

long GroupId::order() const {
    switch (kind) {
        case Kind::Trivial: return 1;
        case Kind::CyclicZn:
        case Kind::FiniteOther:
        case Kind::Quaternion8: return n;
        default: return 0;
    }
}

bool operator==(const GroupId& a, const GroupId& b) {
    if (a.kind != b.kind || a.kind == GroupId::Kind::Unknown) return false;
    if (a.kind == GroupId::Kind::FiniteOther) return a.n == b.n && a.invariants == b.invariants;
    return a.n == b.n;
}

std::string to_string(const GroupId& g) {
    switch (g.kind) {
        case GroupId::Kind::Trivial: return "1";
        case GroupId::Kind::CyclicZ: return "Z";
        case GroupId::Kind::CyclicZn: return "Z_" + std::to_string(g.n);
        case GroupId::Kind::FreeAbelianZk: return "Z^" + std::to_string(g.n);
        case GroupId::Kind::Quaternion8: return "Q_8";
        case GroupId::Kind::FiniteOther:
            return "finite(order=" + std::to_string(g.n) + ",ab=" + to_string(g.invariants) + ")";
        case GroupId::Kind::Unknown: return "unknown(" + g.reason + ")";
    }
    return "?";
}

GroupId parse_group(const std::string& text) {
    if (text == "trivial" || text == "1") return GroupId::trivial();
    if (text == "z") return GroupId::z();
    if (text == "q8") return GroupId::q8();
    auto number = [&](const std::string& digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw std::invalid_argument("bad group '" + text + "'");
        return std::stol(digits);
    };
    if (text.rfind("zn:", 0) == 0) return GroupId::zn(number(text.substr(3)));
    if (text.size() > 1 && text[0] == 'z') return GroupId::zk(static_cast<int>(number(text.substr(1))));
    throw std::invalid_argument("bad group '" + text + "'");
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::No: return "no";
        case Tri::Yes: return "yes";
        default: return "inconclusive";
    }
}

IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix m;
    for (const Word& r : p.relators) m.push_back(exponent_vector(r, p.generators));
    return m;
}

AbelianInvariants abelianization(const Presentation& p) {
    check_presentation(p);
    return cokernel_invariants(exponent_matrix(p), p.generators);
}

Presentation simplify(const Presentation& p) {
    check_presentation(p);
    Presentation q;
    q.generators = p.generators;
    auto normalize = [](std::vector<Word>& rels) {
        std::vector<Word> out;
        for (const Word& r : rels) {
            Word c = canonical_class(r);
            if (c.empty()) continue;
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
        rels = std::move(out);
    };
    q.relators = p.relators;
    normalize(q.relators);
    while (true) {
        int best_r = -1, best_x = 0;
        for (int ri = 0; ri < static_cast<int>(q.relators.size()); ++ri) {
            const Word& r = q.relators[ri];
            if (best_r >= 0 && r.size() >= q.relators[best_r].size()) continue;
            std::map<int, int> count;
            for (Letter l : r.letters) ++count[generator_of(l)];
            for (auto [g, c] : count)
                if (c == 1) {
                    best_r = ri;
                    best_x = g;
                    break;
                }
        }
        if (best_r < 0) break;
        Word r = q.relators[best_r];
        std::size_t pos = 0;
        while (generator_of(r[pos]) != best_x) ++pos;
        Word rot = rotate(r, pos);
        int eps = sign_of(rot[0]);
        Word rest;
        rest.letters.assign(rot.letters.begin() + 1, rot.letters.end());
        // x^eps * rest = 1, so x = rest^(-eps).
        Word sub = eps > 0 ? inverse(rest) : rest;
        Word sub_inv = inverse(sub);
        std::vector<Word> next;
        bool too_long = false;
        for (int ri = 0; ri < static_cast<int>(q.relators.size()); ++ri) {
            if (ri == best_r) continue;
            std::vector<Letter> raw;
            for (Letter l : q.relators[ri].letters) {
                if (generator_of(l) == best_x) {
                    const Word& s = l > 0 ? sub : sub_inv;
                    raw.insert(raw.end(), s.letters.begin(), s.letters.end());
                } else {
                    raw.push_back(l);
                }
            }
            for (Letter& l : raw)
                if (generator_of(l) > best_x) l = l > 0 ? l - 1 : l + 1;
            if (raw.size() > 400) too_long = true;
            next.push_back(free_reduce(raw));
        }
        if (too_long) break;
        q.relators = std::move(next);
        --q.generators;
        normalize(q.relators);
    }
    return q;
}

namespace {

// All permutations of {0..d-1} with a multiplication table.
struct SymmetricGroup {
    int degree;
    std::vector<std::vector<int>> perms;
    std::vector<int> mult;  // mult[a*N+b] = a then b
    std::vector<int> inv;
    int identity = 0;
    std::vector<int> class_reps;

    explicit SymmetricGroup(int d) : degree(d) {
        std::vector<int> p(static_cast<std::size_t>(d));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        int n = static_cast<int>(perms.size());
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < n; ++i) index[perms[i]] = i;
        mult.resize(static_cast<std::size_t>(n * n));
        inv.resize(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<int> c(static_cast<std::size_t>(d));
                for (int k = 0; k < d; ++k) c[k] = perms[b][perms[a][k]];
                mult[a * n + b] = index[c];
                if (mult[a * n + b] == 0) inv[a] = b;
            }
        std::map<std::vector<int>, int> by_type;
        for (int i = 0; i < n; ++i) {
            std::vector<int> type;
            std::vector<bool> seen(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k) {
                if (seen[k]) continue;
                int len = 0;
                for (int x = k; !seen[x]; x = perms[i][x]) {
                    seen[x] = true;
                    ++len;
                }
                type.push_back(len);
            }
            std::sort(type.begin(), type.end());
            by_type.emplace(type, i);
        }
        for (auto& [t, i] : by_type) class_reps.push_back(i);
    }

    int size() const { return static_cast<int>(perms.size()); }
    int mul(int a, int b) const { return mult[static_cast<std::size_t>(a * size() + b)]; }
};

const SymmetricGroup& symmetric(int d) {
    static const SymmetricGroup s2(2), s3(3), s4(4), s5(5);
    switch (d) {
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        default: return s5;
    }
}

int eval_perm(const SymmetricGroup& S, const std::vector<int>& img, const Word& w) {
    int e = S.identity;
    for (Letter l : w.letters) {
        int x = img[generator_of(l) - 1];
        e = S.mul(e, l > 0 ? x : S.inv[x]);
    }
    return e;
}

struct ImageInfo {
    int order;
    bool abelian;
    std::map<int, int> profile;
};

ImageInfo image_info(const SymmetricGroup& S, const std::vector<int>& img) {
    std::vector<char> in(static_cast<std::size_t>(S.size()), 0);
    std::vector<int> elems{S.identity};
    in[S.identity] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int g : img) {
            int e = S.mul(elems[i], g);
            if (!in[e]) {
                in[e] = 1;
                elems.push_back(e);
            }
        }
    ImageInfo info{static_cast<int>(elems.size()), true, {}};
    for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = a + 1; b < img.size(); ++b)
            if (S.mul(img[a], img[b]) != S.mul(img[b], img[a])) info.abelian = false;
    for (int e : elems) {
        int k = 1;
        for (int c = e; c != S.identity; c = S.mul(c, e)) ++k;
        ++info.profile[k];
    }
    return info;
}

}  // namespace

std::optional<PermQuotient> find_perm_quotient(const Presentation& p, QuotientGoal goal, const TargetInfo* target,
                                               const Word* word, int max_degree) {
    int s = p.generators;
    if (s == 0) return std::nullopt;
    std::vector<std::vector<const Word*>> checks(static_cast<std::size_t>(s));
    for (const Word& r : p.relators)
        if (!r.empty()) checks[static_cast<std::size_t>(r.max_generator() - 1)].push_back(&r);
    int min_degree = goal == QuotientGoal::SeparatesWord ? 2 : 3;
    for (int d = min_degree; d <= std::min(max_degree, 5); ++d) {
        const SymmetricGroup& S = symmetric(d);
        std::vector<int> img(static_cast<std::size_t>(s), 0);
        std::optional<PermQuotient> found;
        auto accept = [&]() -> bool {
            if (goal == QuotientGoal::SeparatesWord) return eval_perm(S, img, *word) != S.identity;
            if (goal == QuotientGoal::NonAbelian) {
                for (int a = 0; a < s; ++a)
                    for (int b = a + 1; b < s; ++b)
                        if (S.mul(img[a], img[b]) != S.mul(img[b], img[a])) return true;
                return false;
            }
            ImageInfo info = image_info(S, img);
            if (target->abelian_group && !info.abelian) return true;
            if (target->order > 0) {
                if (target->order % info.order != 0) return true;
                if (info.order == target->order && info.profile != target->profile) return true;
            }
            return false;
        };
        auto rec = [&](auto&& self, int g) -> bool {
            if (g == s) return accept();
            const std::vector<int>* choices = nullptr;
            std::vector<int> all;
            if (g == 0) {
                choices = &S.class_reps;
            } else {
                all.resize(static_cast<std::size_t>(S.size()));
                std::iota(all.begin(), all.end(), 0);
                choices = &all;
            }
            for (int x : *choices) {
                img[g] = x;
                bool ok = true;
                for (const Word* r : checks[g])
                    if (eval_perm(S, img, *r) != S.identity) {
                        ok = false;
                        break;
                    }
                if (ok && self(self, g + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) {
            PermQuotient q;
            q.degree = d;
            for (int x : img) q.images.push_back(S.perms[x]);
            ImageInfo info = image_info(S, img);
            q.image_order = info.order;
            q.image_abelian = info.abelian;
            return q;
        }
    }
    return std::nullopt;
}

namespace {

std::string key_of(const Word& w) {
    std::string k;
    k.reserve(w.size());
    for (Letter l : w.letters) k.push_back(static_cast<char>(letter_key(l)));
    return k;
}

}  // namespace

bool derive_trivial(const Word& w0, const std::vector<Word>& relators, long max_nodes, int max_length) {
    Word start = canonical_class(w0);
    if (start.empty()) return true;
    std::vector<Word> conj;
    for (const Word& r : relators) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        for (const Word& v : {c, inverse(c)})
            for (std::size_t k = 0; k < v.size(); ++k) {
                Word rv = rotate(v, k);
                if (std::find(conj.begin(), conj.end(), rv) == conj.end()) conj.push_back(rv);
            }
    }
    using Item = std::pair<std::size_t, long>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<Word> nodes;
    std::unordered_set<std::string> seen;
    nodes.push_back(start);
    seen.insert(key_of(start));
    pq.push({start.size(), 0});
    long expanded = 0;
    while (!pq.empty() && expanded < max_nodes) {
        Word u = nodes[static_cast<std::size_t>(pq.top().second)];
        pq.pop();
        ++expanded;
        for (std::size_t k = 0; k < u.size(); ++k) {
            Word ur = rotate(u, k);
            for (const Word& rho : conj) {
                std::vector<Letter> raw(ur.letters);
                raw.insert(raw.end(), rho.letters.begin(), rho.letters.end());
                Word next = cyclic_reduce(free_reduce(raw));
                if (next.size() >= ur.size() + rho.size()) continue;
                if (next.empty()) return true;
                if (static_cast<int>(next.size()) > max_length) continue;
                next = canonical_class(next);
                if (!seen.insert(key_of(next)).second) continue;
                nodes.push_back(next);
                pq.push({next.size(), static_cast<long>(nodes.size() - 1)});
            }
        }
    }
    return false;
}

namespace {

bool prove_abelian(const Presentation& p, const GroupBudget& budget) {
    if (p.generators <= 1) return true;
    for (int i = 1; i <= p.generators; ++i)
        for (int j = i + 1; j <= p.generators; ++j) {
            Word c{i, j, -i, -j};
            if (!derive_trivial(c, p.relators, budget.rewrite_nodes, budget.rewrite_max_length)) return false;
        }
    return true;
}

std::map<int, int> cyclic_profile(long n) {
    std::map<int, int> prof;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        long phi = 0;
        for (long k = 1; k <= d; ++k)
            if (std::gcd(k, d) == 1) ++phi;
        prof[static_cast<int>(d)] = static_cast<int>(phi);
    }
    return prof;
}

bool is_q8_profile(const std::map<int, int>& prof) { return prof == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}; }

GroupId identify_finite(const FiniteGroupModel& m, const AbelianInvariants& ab) {
    long n = m.order;
    if (n == 1) return GroupId::trivial();
    if (n == ab.torsion_order()) {
        if (ab.torsion.size() == 1) return GroupId::zn(n);
        return GroupId::finite_other(n, ab);
    }
    if (n == 8 && is_q8_profile(m.order_profile())) return GroupId::q8();
    return GroupId::finite_other(n, ab);
}

}  // namespace

GroupId identify(const Presentation& p, const GroupBudget& budget) {
    AbelianInvariants ab = abelianization(p);
    Presentation q = simplify(p);
    if (q.generators == 0) return GroupId::trivial();
    if (q.generators == 1) {
        if (ab.rank == 1) return GroupId::z();
        if (ab.torsion.empty()) return GroupId::trivial();
        return GroupId::zn(ab.torsion[0]);
    }
    if (ab.rank == 0) {
        auto m = todd_coxeter(q, budget.coset_cap);
        if (!m) return GroupId::unknown("coset enumeration exceeded " + std::to_string(budget.coset_cap) + " cosets");
        return identify_finite(*m, ab);
    }
    if (!ab.torsion.empty()) {
        GroupId g = GroupId::unknown("infinite with torsion in the abelianization " + to_string(ab));
        g.invariants = ab;
        return g;
    }
    if (prove_abelian(q, budget)) return GroupId::zk(ab.rank);
    GroupId g = find_perm_quotient(q, QuotientGoal::NonAbelian)
                    ? GroupId::unknown("non-abelian with abelianization " + to_string(ab))
                    : GroupId::unknown("commutator derivation budget exhausted");
    g.invariants = ab;
    return g;
}

TargetInfo target_info(const GroupId& g) {
    TargetInfo t;
    t.id = g;
    switch (g.kind) {
        case GroupId::Kind::Trivial:
            t.order = 1;
            t.profile = {{1, 1}};
            break;
        case GroupId::Kind::CyclicZ: t.abelian.rank = 1; break;
        case GroupId::Kind::CyclicZn:
            t.abelian.torsion = {g.n};
            t.order = g.n;
            t.profile = cyclic_profile(g.n);
            break;
        case GroupId::Kind::FreeAbelianZk:
            t.abelian.rank = static_cast<int>(g.n);
            t.h2_rank = static_cast<int>(g.n * (g.n - 1) / 2);
            break;
        case GroupId::Kind::Quaternion8:
            t.abelian.torsion = {2, 2};
            t.order = 8;
            t.abelian_group = false;
            t.profile = {{1, 1}, {2, 1}, {4, 6}};
            break;
        default: throw std::invalid_argument("unsupported target group " + to_string(g));
    }
    return t;
}

namespace {

Tri compare_finite(const FiniteGroupModel& m, const TargetInfo& target) {
    if (m.order != target.order) return Tri::No;
    if (target.abelian_group) return Tri::Yes;  // abelianization already agrees
    return m.order_profile() == target.profile ? Tri::Yes : Tri::No;
}

}  // namespace

Tri matches(const Presentation& p, const TargetInfo& target, const GroupBudget& budget) {
    IntMatrix e = exponent_matrix(p);
    if (cokernel_invariants(e, p.generators) != target.abelian) return Tri::No;
    if (target.h2_rank > 0) {
        int t = 0;
        for (const Word& r : p.relators)
            if (!cyclic_reduce(r).empty()) ++t;
        if (t - matrix_rank(e, p.generators) < target.h2_rank) return Tri::No;
    }
    Presentation q = simplify(p);
    if (q.generators <= 1) return Tri::Yes;  // cyclic, so determined by the abelianization
    if (target.order > 0) {
        if (auto m = todd_coxeter(q, std::min(budget.quick_coset_cap, budget.coset_cap))) return compare_finite(*m, target);
        if (find_perm_quotient(q, QuotientGoal::NotQuotientOfTarget, &target)) return Tri::No;
        if (budget.coset_cap > budget.quick_coset_cap)
            if (auto m = todd_coxeter(q, budget.coset_cap)) return compare_finite(*m, target);
        return Tri::Unknown;
    }
    if (find_perm_quotient(q, QuotientGoal::NonAbelian, nullptr, nullptr, 4)) return Tri::No;
    if (prove_abelian(q, budget)) return Tri::Yes;
    if (find_perm_quotient(q, QuotientGoal::NonAbelian)) return Tri::No;
    return Tri::Unknown;
}

Tri in_normal_closure(const Word& w, const Presentation& p, const GroupBudget& budget) {
    check_presentation(p);
    if (w.max_generator() > p.generators) throw std::invalid_argument("word uses a generator beyond the presentation");
    Word c = cyclic_reduce(w);
    if (c.empty()) return Tri::Yes;
    for (const Word& r : p.relators)
        if (canonical_class(r) == canonical_class(c)) return Tri::Yes;
    IntMatrix e = exponent_matrix(p);
    if (!Lattice::span(e, p.generators).contains(exponent_vector(c, p.generators))) return Tri::No;
    AbelianInvariants ab = cokernel_invariants(e, p.generators);
    if (ab.rank == 0) {
        if (auto m = todd_coxeter(p, budget.coset_cap)) return m->evaluate(c) == m->identity ? Tri::Yes : Tri::No;
    } else if (ab.torsion.empty()) {
        Presentation q = simplify(p);
        // In an abelian group membership is decided by the abelianization.
        if (q.generators <= 1 || prove_abelian(q, budget)) return Tri::Yes;
    }
    if (find_perm_quotient(p, QuotientGoal::SeparatesWord, nullptr, &c)) return Tri::No;
    if (derive_trivial(c, p.relators, budget.rewrite_nodes, budget.rewrite_max_length)) return Tri::Yes;
    return Tri::Unknown;
}

}  // namespace gem
