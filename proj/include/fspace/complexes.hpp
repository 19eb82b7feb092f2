#pragma once

#include <string>
#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"

namespace fspace {

// Finite abstract simplicial complex given by facets. Simplices are sorted
// vertex-index sets; the simplex list is closed under nonempty subsets and
// ordered by (dimension, lexicographic), which fixes every derived object.
class SimplicialComplex {
public:
    // Normalizes the facet list: sorts each facet, drops duplicates and
    // faces contained in another facet. Facets must be nonempty and within
    // range of the vertex list.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         std::vector<std::vector<int>> facets);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    // All simplices, (dimension, lex)-sorted. Guarded against explosion.
    const std::vector<std::vector<int>>& simplices() const { return simplices_; }

    // f_vector()[d] = number of d-simplices.
    std::vector<long long> f_vector() const;

private:
    SimplicialComplex(std::vector<std::string> vertices, std::vector<std::vector<int>> facets,
                      std::vector<std::vector<int>> simplices)
        : vertices_(std::move(vertices)),
          facets_(std::move(facets)),
          simplices_(std::move(simplices)) {}

    std::vector<std::string> vertices_;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<int>> simplices_;
};

// 𝒦: simplices are the nonempty chains of the poset, facets the maximal
// chains.
SimplicialComplex order_complex(const Poset& p);

// 𝒳: points are the simplices ordered by inclusion; labels render the
// vertex sets, e.g. "{a,b}".
Poset face_poset(const SimplicialComplex& k);

long long euler(const SimplicialComplex& k);
long long reduced_euler(const SimplicialComplex& k);

// det(K) = |det(𝒳(K) matrix)|, a simple homotopy invariant of the complex.
BigInt det_of_complex(const SimplicialComplex& k);

int rankbar_of_complex(const SimplicialComplex& k);

// χ̃(𝒦(p)) by chain counting: Σ_{k≥1} (-1)^{k-1} c_k - 1 with c_k the number
// of k-element chains. Independent of the determinant path; serves as its
// oracle.
BigInt reduced_euler_of_poset(const Poset& p);

}  // namespace fspace
