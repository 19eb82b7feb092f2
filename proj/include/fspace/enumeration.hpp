#pragma once

#include <string>
#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"

namespace fspace {

// Named families with documented labellings:
//   chain(n)        x1 < ... < xn
//   antichain(n)    no relations
//   fence(n)        x1 < x2 > x3 < x4 > ...
//   sphere_model(n) 2(n+1) points, two per height 0..n, each above every
//                   point of strictly lower height (minimal model of Sⁿ)
//   circle8         x1<x5>x2<x6>x3<x7>x4<x8>x1 (8-point circle)
//   twocircles8     y1<y5>y2<y6>y1 and y3<y7>y4<y8>y3 (two 4-point circles)
//   weakbeat4       a<b<x, a<c<x (x is a weak beat point, not a beat point)
struct FamilySpec {
    std::string name;
    int size = 0;  // chain/antichain/fence: point count; sphere_model: dimension
};

Poset make_family(const FamilySpec& spec);

Poset make_chain(int n);
Poset make_antichain(int n);
Poset make_fence(int n);
Poset make_sphere_model(int dimension);
Poset make_circle8();
Poset make_twocircles8();
Poset make_weakbeat4();

// Every n-point poset up to homeomorphism, exactly once, in canonical-form
// order. Generated by downset extension (each new point picks a downward
// closed strict down-set among the previous points) and deduplicated by
// canonical form. Guarded by the enumeration cap (default 7,
// FSPACE_SIZE_LIMIT overrides).
std::vector<Poset> enumerate_posets(int n);

int enumeration_size_limit();

// char_poly(fence(n)) == (-1)^n λ(λ-(n-2))(λ+1)^(n-2), expanded exactly.
bool fence_charpoly_check(int n);

// The closed form itself, for reporting.
IntPolynomial fence_charpoly_closed_form(int n);

}  // namespace fspace
