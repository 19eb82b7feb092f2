#pragma once

#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

using Permutation = std::vector<int>;  // images, 0-based

// Composition convention: (g∘h)(x) = g(h(x)).
Permutation compose(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& g);

// A finite group acting freely on a poset by order automorphisms. Element 0
// is the identity; composition[i][j] = index of g_i∘g_j.
struct GroupAction {
    std::vector<Permutation> elements;
    std::vector<std::vector<int>> composition;

    int order() const { return static_cast<int>(elements.size()); }
};

// Verifies: the permutations contain the identity first, are pairwise
// distinct and closed under composition (NotAGroup otherwise); each is an
// order automorphism (NotOrderPreserving with a witness pair); no non-identity
// element has a fixed point (NotFree with the fixed point); and |X| is a
// multiple of |G| (OrbitSizeMismatch — unreachable for genuinely free
// actions, kept as a guard).
GroupAction validate_action(const Poset& p, const std::vector<Permutation>& perms);

struct BlockForm {
    std::vector<int> domain;        // fundamental domain, lowest index per orbit
    std::vector<int> point_order;   // reordering D, g_2 D, ..., g_m D
    ZeroOneMatrix reordered;        // X_M in that order
    std::vector<std::vector<int>> block_of;  // block (i,j) equals block (1, block_of[i][j])
    bool latin_verified = false;    // A_{i,j} == A_{1,s} checked entry-wise
};

// Latin-block structure of X_M under a free action: block (i,j) depends only
// on g_i⁻¹∘g_j.
BlockForm block_form(const Poset& p, const GroupAction& action);

struct Z2Factorization {
    BigInt det_sum;        // det(A11 + A12)
    BigInt det_difference; // det(A11 - A12)
    BigInt product;        // their product, equal to det(X_M)
    BigInt det_full;
};

// det(X_M) = det(A11+A12) · det(A11−A12) for a free ℤ₂ action. NotZ2 if the
// group order is not 2.
Z2Factorization z2_det_factorization(const Poset& p, const GroupAction& action);

struct OrbitSumReport {
    long long sum_down = 0;  // Σ_i |U_{x_i}|
    long long sum_up = 0;    // Σ_i |F_{x_i}|
    int group_order = 0;
    bool down_divisible = false;
    bool up_divisible = false;
};

OrbitSumReport orbit_sum_check(const Poset& p, const GroupAction& action);

}  // namespace fspace
