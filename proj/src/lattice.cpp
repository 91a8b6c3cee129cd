#include "gem/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gem {

long AbelianInvariants::torsion_order() const {
    long p = 1;
    for (long d : torsion) p *= d;
    return p;
}

std::string to_string(const AbelianInvariants& a) {
    std::string s;
    auto add = [&](const std::string& t) {
        if (!s.empty()) s += " x ";
        s += t;
    };
    if (a.rank == 1) add("Z");
    if (a.rank > 1) add("Z^" + std::to_string(a.rank));
    for (long d : a.torsion) add("Z_" + std::to_string(d));
    return s.empty() ? "1" : s;
}

namespace {

void check_width(const IntMatrix& rows, int columns) {
    for (const IntVector& r : rows)
        if (static_cast<int>(r.size()) != columns) throw std::invalid_argument("row width mismatch");
}

}  // namespace

std::vector<long> smith_diagonal(IntMatrix a, int n) {
    check_width(a, n);
    int m = static_cast<int>(a.size());
    std::vector<long> diag;
    int t = 0;
    while (t < m && t < n) {
        // Pivot on the least nonzero entry of the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::labs(a[i][j]) < std::labs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            long q = a[i][t] / a[t][t];
            if (q != 0)
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            long q = a[t][j] / a[t][t];
            if (q != 0)
                for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        bool divides = true;
        for (int i = t + 1; i < m && divides; ++i)
            for (int j = t + 1; j < n; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (int k = t; k < n; ++k) a[t][k] += a[i][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(std::labs(a[t][t]));
        ++t;
    }
    return diag;
}

AbelianInvariants cokernel_invariants(const IntMatrix& rows, int columns) {
    std::vector<long> d = smith_diagonal(rows, columns);
    AbelianInvariants inv;
    inv.rank = columns - static_cast<int>(d.size());
    for (long x : d)
        if (x > 1) inv.torsion.push_back(x);
    return inv;
}

int matrix_rank(const IntMatrix& rows, int columns) {
    return static_cast<int>(smith_diagonal(rows, columns).size());
}

Lattice Lattice::span(const IntMatrix& rows, int n) {
    check_width(rows, n);
    IntMatrix a;
    for (const IntVector& r : rows)
        if (std::any_of(r.begin(), r.end(), [](long x) { return x != 0; })) a.push_back(r);
    Lattice L(n);
    int m = static_cast<int>(a.size());
    int t = 0;
    for (int col = 0; col < n && t < m; ++col) {
        // Euclid on column `col` among rows t..m-1.
        while (true) {
            int best = -1;
            for (int i = t; i < m; ++i)
                if (a[i][col] != 0 && (best < 0 || std::labs(a[i][col]) < std::labs(a[best][col]))) best = i;
            if (best < 0) break;
            std::swap(a[t], a[best]);
            bool done = true;
            for (int i = t + 1; i < m; ++i) {
                long q = a[i][col] / a[t][col];
                if (q != 0)
                    for (int j = col; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (a[t][col] == 0) continue;
        if (a[t][col] < 0)
            for (long& x : a[t]) x = -x;
        for (int i = 0; i < t; ++i) {
            long q = a[i][col] / a[t][col];
            if (a[i][col] - q * a[t][col] < 0) --q;
            if (q != 0)
                for (int j = col; j < n; ++j) a[i][j] -= q * a[t][j];
        }
        L.pivots_.push_back(col);
        ++t;
    }
    a.resize(static_cast<std::size_t>(t));
    L.basis_ = std::move(a);
    return L;
}

bool Lattice::contains(IntVector v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector width mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        int col = pivots_[k];
        long p = basis_[k][col];
        // Entries left of the pivot are already zero.
        if (v[col] % p != 0) return false;
        long q = v[col] / p;
        if (q != 0)
            for (int j = col; j < n_; ++j) v[j] -= q * basis_[k][j];
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

}  // namespace gem
