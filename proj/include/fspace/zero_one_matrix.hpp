#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fspace/poset.hpp"

namespace fspace {

// A square matrix with entries in {0,1}. Squareness and binary entries are
// enforced at construction; membership in the poset class (zero diagonal,
// no symmetric off-diagonal zeros, zero-transitivity) is a separate check.
class ZeroOneMatrix {
public:
    static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static ZeroOneMatrix from_entries(int n, std::vector<std::uint8_t> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    ZeroOneMatrix transpose() const;

    bool operator==(const ZeroOneMatrix& other) const = default;

private:
    ZeroOneMatrix(int n, std::vector<std::uint8_t> entries)
        : n_(n), entries_(std::move(entries)) {}

    int n_;
    std::vector<std::uint8_t> entries_;
};

// Witness for a failed membership condition. Indices are 0-based; k is only
// meaningful for condition 3.
struct MembershipViolation {
    int condition = 0;  // 1: nonzero diagonal, 2: symmetric zeros, 3: zero-transitivity
    int i = 0;
    int j = 0;
    int k = 0;

    std::string describe() const;
};

// Checks the three defining conditions of the matrix class: a[i][i] = 0;
// a[i][j] = 0 => a[j][i] = 1 for i != j; a[i][j] = a[j][k] = 0 => a[i][k] = 0.
// Returns the first violation in scan order, or nullopt when the matrix
// encodes a poset.
std::optional<MembershipViolation> validate_membership(const ZeroOneMatrix& m);

// Boolean-arithmetic idempotence of 1 - M: (1-M)(1-M) = (1-M) with OR/AND.
// Requires a zero diagonal (NonZeroDiagonal otherwise). Equivalent to
// zero-transitivity; antisymmetry (condition 2) is not covered by it.
bool validate_boolean_idempotent(const ZeroOneMatrix& m);

// The encoding of Definition 3.1: entry (i,j) is 0 iff x_i <= x_j.
ZeroOneMatrix matrix_from_poset(const Poset& p);

// Inverse of matrix_from_poset. Throws InvalidMatrix carrying the violated
// condition and witness indices when the matrix is not in the class.
Poset poset_from_matrix(const ZeroOneMatrix& m, std::vector<std::string> labels = {});

}  // namespace fspace
