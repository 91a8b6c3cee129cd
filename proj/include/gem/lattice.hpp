#pragma once

#include <string>
#include <vector>

namespace gem {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;

struct AbelianInvariants {
    int rank = 0;
    // d1 | d2 | ..., each >= 2.
    std::vector<long> torsion;

    int minimal_generators() const { return rank + static_cast<int>(torsion.size()); }
    bool finite() const { return rank == 0; }
    long torsion_order() const;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

// Nonzero diagonal of the Smith normal form, in divisibility order.
std::vector<long> smith_diagonal(IntMatrix rows, int columns);
// Invariants of Z^columns modulo the row lattice.
AbelianInvariants cokernel_invariants(const IntMatrix& rows, int columns);
int matrix_rank(const IntMatrix& rows, int columns);

// Sublattice of Z^n spanned by integer rows, kept in Hermite normal form.
class Lattice {
public:
    Lattice(int dimension = 0) : n_(dimension) {}
    static Lattice span(const IntMatrix& rows, int dimension);

    int dimension() const { return n_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    bool contains(IntVector v) const;
    const IntMatrix& basis() const { return basis_; }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    int n_;
    IntMatrix basis_;
    std::vector<int> pivots_;
};

}  // namespace gem
