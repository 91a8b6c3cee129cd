#include "gem/coset.hpp"
#include "gem/groups.hpp"
#include "gem/lattice.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace gem;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
Word comm(Letter a, Letter b) { return w({a, b, -a, -b}); }

Presentation q8() { return {2, {w({2, 1, 2, -1}), w({1, 2, 1, -2})}}; }
Presentation z3_cube() { return {3, {comm(1, 2), comm(1, 3), comm(2, 3)}}; }
Presentation triangle(int p, int q, int r) {
    Word ab = multiply(power(1, 1), power(2, 1));
    Word abr;
    for (int i = 0; i < r; ++i) abr = multiply(abr, ab);
    return {2, {power(1, p), power(2, q), abr}};
}

long det(IntMatrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long d = 0;
    for (int j = 0; j < n; ++j) {
        IntMatrix minor;
        for (int i = 1; i < n; ++i) {
            IntVector row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            minor.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * m[0][static_cast<std::size_t>(j)] * det(minor);
    }
    return d;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors from determinantal divisors: d_k / d_{k-1}, d_k the gcd of all k x k minors.
std::vector<long> determinantal_diagonal(const IntMatrix& a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<long> out;
    long prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        long g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix m;
                for (int i : r) {
                    IntVector row;
                    for (int j : c) row.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    m.push_back(row);
                }
                g = std::gcd(g, std::labs(det(m)));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

Word random_word(std::mt19937& rng, int gens, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), gen(1, gens), sign(0, 1);
    std::vector<Letter> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) v.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return Word(v);
}

}  // namespace

TEST(Smith, AgreesWithDeterminantalDivisors) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    for (int t = 0; t < 300; ++t) {
        int r = dim(rng), c = dim(rng);
        IntMatrix m(static_cast<std::size_t>(r), IntVector(static_cast<std::size_t>(c)));
        for (auto& row : m)
            for (long& x : row) x = entry(rng);
        EXPECT_EQ(smith_diagonal(m, c), determinantal_diagonal(m, c));
    }
}

TEST(Smith, CokernelInvariants) {
    AbelianInvariants a = cokernel_invariants({{2, 0}, {0, 4}}, 2);
    EXPECT_EQ(a.rank, 0);
    EXPECT_EQ(a.torsion, (std::vector<long>{2, 4}));
    EXPECT_EQ(a.torsion_order(), 8);
    AbelianInvariants b = cokernel_invariants({{6, 4, 0}}, 3);
    EXPECT_EQ(b.rank, 2);
    EXPECT_EQ(b.torsion, (std::vector<long>{2}));
    EXPECT_EQ(matrix_rank({{1, 2}, {2, 4}}, 2), 1);
}

TEST(Lattice, SpanMembership) {
    Lattice l = Lattice::span({{2, 0, 0}, {0, 3, 3}}, 3);
    EXPECT_EQ(l.rank(), 2);
    EXPECT_TRUE(l.contains({4, -3, -3}));
    EXPECT_FALSE(l.contains({1, 0, 0}));
    EXPECT_FALSE(l.contains({0, 3, 0}));
    EXPECT_EQ(l, Lattice::span({{2, 3, 3}, {0, 3, 3}, {2, 0, 0}}, 3));
}

TEST(ToddCoxeter, OrdersOfStandardGroups) {
    for (int n = 1; n <= 12; ++n) {
        auto m = todd_coxeter({1, {power(1, n)}});
        ASSERT_TRUE(m);
        EXPECT_EQ(m->order, n);
    }
    EXPECT_EQ(todd_coxeter(triangle(2, 3, 2))->order, 6);
    EXPECT_EQ(todd_coxeter(triangle(2, 5, 2))->order, 10);
    EXPECT_EQ(todd_coxeter(triangle(2, 3, 3))->order, 12);
    EXPECT_EQ(todd_coxeter(triangle(2, 3, 4))->order, 24);
    EXPECT_EQ(todd_coxeter(triangle(2, 3, 5))->order, 60);
    EXPECT_EQ(todd_coxeter({2, {power(1, 4), power(2, 6), comm(1, 2)}})->order, 24);
    EXPECT_FALSE(todd_coxeter({2, {comm(1, 2)}}, 2000));
}

TEST(ToddCoxeter, QuaternionModel) {
    auto m = todd_coxeter(q8());
    ASSERT_TRUE(m);
    EXPECT_EQ(m->order, 8);
    EXPECT_EQ(m->order_profile(), (std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}));
    EXPECT_FALSE(m->is_abelian());
    // Regular representation: relators act trivially and element words reach their cosets.
    for (int e = 0; e < m->order; ++e) {
        for (const Word& r : q8().relators) EXPECT_EQ(m->evaluate(r, e), e);
        EXPECT_EQ(m->evaluate(m->element_words[static_cast<std::size_t>(e)]), e);
    }
}

TEST(Abelianization, Examples) {
    EXPECT_EQ(abelianization(q8()).torsion, (std::vector<long>{2, 2}));
    EXPECT_EQ(abelianization(z3_cube()).rank, 3);
    AbelianInvariants z5 = abelianization({2, {w({1, 1, -2}), w({2, 2, 2, -1})}});
    EXPECT_EQ(z5.rank, 0);
    EXPECT_EQ(z5.torsion, (std::vector<long>{5}));
}

TEST(Simplify, PreservesGroup) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> gens(1, 3), rels(1, 3);
    for (int t = 0; t < 200; ++t) {
        Presentation p{gens(rng), {}};
        int k = rels(rng);
        for (int i = 0; i < k; ++i) p.relators.push_back(random_word(rng, p.generators, 6));
        Presentation s = simplify(p);
        EXPECT_LE(s.generators, p.generators);
        EXPECT_EQ(abelianization(s), abelianization(p));
        auto a = todd_coxeter(p, 3000), b = todd_coxeter(s, 3000);
        if (a && b) EXPECT_EQ(a->order, b->order);
    }
}

TEST(Identify, KnownGroups) {
    EXPECT_EQ(identify({1, {power(1, 1)}}), GroupId::trivial());
    EXPECT_EQ(identify({1, {}}), GroupId::z());
    EXPECT_EQ(identify({2, {comm(1, 2)}}), GroupId::zk(2));
    EXPECT_EQ(identify(z3_cube()), GroupId::zk(3));
    EXPECT_EQ(identify({2, {w({1, 1, -2}), w({2, 2, 2, -1})}}), GroupId::zn(5));
    EXPECT_EQ(identify(q8()), GroupId::q8());
    GroupId s3 = identify(triangle(2, 3, 2));
    EXPECT_EQ(s3.kind, GroupId::Kind::FiniteOther);
    EXPECT_EQ(s3.n, 6);
    EXPECT_EQ(to_string(GroupId::zn(7)), "Z_7");
    EXPECT_EQ(to_string(GroupId::q8()), "Q_8");
}

TEST(Matches, DistinguishesGroupsOfEqualOrder) {
    TargetInfo tq = target_info(GroupId::q8());
    EXPECT_EQ(matches(q8(), tq), Tri::Yes);
    EXPECT_EQ(matches(triangle(2, 4, 2), tq), Tri::No);
    EXPECT_EQ(matches({2, {power(1, 2), power(2, 4), comm(1, 2)}}, tq), Tri::No);
    EXPECT_EQ(matches({1, {power(1, 8)}}, tq), Tri::No);
    TargetInfo t3 = target_info(GroupId::zk(3));
    EXPECT_EQ(t3.h2_rank, 3);
    EXPECT_EQ(matches(z3_cube(), t3), Tri::Yes);
    EXPECT_EQ(matches({3, {comm(1, 2), comm(1, 3)}}, t3), Tri::No);
    EXPECT_EQ(matches({1, {}}, target_info(GroupId::z())), Tri::Yes);
}

TEST(Matches, NormalClosureAndDerivations) {
    Presentation z3{1, {power(1, 3)}};
    EXPECT_EQ(in_normal_closure(power(1, 6), z3), Tri::Yes);
    EXPECT_EQ(in_normal_closure(power(1, 2), z3), Tri::No);
    Presentation z2{2, {comm(1, 2)}};
    EXPECT_EQ(in_normal_closure(comm(2, 1), z2), Tri::Yes);
    EXPECT_EQ(in_normal_closure(power(1, 1), z2), Tri::No);
    EXPECT_TRUE(derive_trivial(power(1, 6), {power(1, 3)}, 1000, 12));
    EXPECT_TRUE(derive_trivial(w({2, 1, -2, -1}), {comm(1, 2)}, 1000, 12));
}

TEST(Matches, PermutationQuotients) {
    auto q = find_perm_quotient(triangle(2, 3, 2), QuotientGoal::NonAbelian);
    ASSERT_TRUE(q);
    EXPECT_FALSE(q->image_abelian);
    EXPECT_FALSE(find_perm_quotient({2, {comm(1, 2)}}, QuotientGoal::NonAbelian));
    Word x = power(1, 1);
    EXPECT_TRUE(find_perm_quotient(triangle(2, 3, 2), QuotientGoal::SeparatesWord, nullptr, &x));
}

TEST(GroupText, Parse) {
    EXPECT_EQ(parse_group("trivial"), GroupId::trivial());
    EXPECT_EQ(parse_group("z"), GroupId::z());
    EXPECT_EQ(parse_group("z3"), GroupId::zk(3));
    EXPECT_EQ(parse_group("zn:5"), GroupId::zn(5));
    EXPECT_EQ(parse_group("q8"), GroupId::q8());
    EXPECT_THROW(parse_group("zn:"), std::invalid_argument);
    EXPECT_THROW(parse_group("s3"), std::invalid_argument);
}
