#pragma once

#include "gem/coset.hpp"
#include "gem/lattice.hpp"
#include "gem/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gem {

struct GroupId {
    enum class Kind { Trivial, CyclicZ, CyclicZn, FreeAbelianZk, Quaternion8, FiniteOther, Unknown };

    Kind kind = Kind::Unknown;
    // n for Z_n, k for Z^k, the order for FiniteOther.
    long n = 0;
    AbelianInvariants invariants;
    std::string reason;

    static GroupId trivial() { return {Kind::Trivial, 1, {}, {}}; }
    static GroupId z() { return {Kind::CyclicZ, 0, {}, {}}; }
    static GroupId zn(long n);
    static GroupId zk(int k);
    static GroupId q8() { return {Kind::Quaternion8, 8, {}, {}}; }
    static GroupId finite_other(long order, AbelianInvariants inv) { return {Kind::FiniteOther, order, std::move(inv), {}}; }
    static GroupId unknown(std::string why) { return {Kind::Unknown, 0, {}, std::move(why)}; }

    bool known() const { return kind != Kind::Unknown; }
    // Known groups with a finite order (0 otherwise).
    long order() const;

    friend bool operator==(const GroupId& a, const GroupId& b);
};

std::string to_string(const GroupId& g);
// Accepts trivial, z, z<k> (k >= 2), zn:<n>, q8.
GroupId parse_group(const std::string& text);

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);

struct GroupBudget {
    long coset_cap = kDefaultCosetCap;
    long quick_coset_cap = 4000;
    long rewrite_nodes = 20000;
    int rewrite_max_length = 16;
};

AbelianInvariants abelianization(const Presentation& p);
IntMatrix exponent_matrix(const Presentation& p);

// Tietze eliminations of generators occurring once in some relator, plus
// removal of empty and duplicate relators. Presents the same group.
Presentation simplify(const Presentation& p);

GroupId identify(const Presentation& p, const GroupBudget& budget = {});

// Structural data of an identification target.
struct TargetInfo {
    GroupId id;
    AbelianInvariants abelian;
    long order = 0;  // 0 when infinite
    bool abelian_group = true;
    // Rank of the Schur multiplier H_2.
    int h2_rank = 0;
    std::map<int, int> profile;
};

TargetInfo target_info(const GroupId& g);

// Decides whether p presents the target group; Unknown when the budget runs out.
Tri matches(const Presentation& p, const TargetInfo& target, const GroupBudget& budget = {});

Tri in_normal_closure(const Word& w, const Presentation& p, const GroupBudget& budget = {});

// Best-first search for a derivation of w from the relators by inserting
// cyclic conjugates of relators and freely reducing.
bool derive_trivial(const Word& w, const std::vector<Word>& relators, long max_nodes, int max_length);

// A homomorphism onto a permutation group of degree <= 5 satisfying `accept`.
struct PermQuotient {
    int degree = 0;
    std::vector<std::vector<int>> images;  // one permutation per generator
    int image_order = 0;
    bool image_abelian = true;
};

enum class QuotientGoal { NonAbelian, NotQuotientOfTarget, SeparatesWord };

std::optional<PermQuotient> find_perm_quotient(const Presentation& p, QuotientGoal goal, const TargetInfo* target = nullptr,
                                               const Word* word = nullptr, int max_degree = 5);

}  // namespace gem
