#pragma once

#include <vector>

#include "machh/simplicial_complex.hpp"

namespace machh {

/// K_I with its ground set relabeled to [|I|] in increasing vertex order.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Mask subset);

/// Simplicial join K∗L on [m_K + m_L]; L's vertices are shifted by m_K.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// One-point union identifying vertex `at_k` of K with vertex `at_l` of L.
///
/// The result lives on [m_K + m_L - 1]: K keeps its labels, and L's vertices
/// other than `at_l` follow in increasing order.
SimplicialComplex wedge(const SimplicialComplex& k, Vertex at_k,
                        const SimplicialComplex& l, Vertex at_l);

/// λ_σK = K ∪ {σ}. Requires σ ∉ K and every proper subset of σ in K.
SimplicialComplex glue_simplex(const SimplicialComplex& k, Mask sigma);

/// Applies a vertex permutation: vertex v of K becomes vertex perm[v].
SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::vector<Vertex>& perm);

/// Mask image under a vertex permutation.
Mask permute_mask(Mask s, const std::vector<Vertex>& perm);

/// k points with no edges.
SimplicialComplex discrete_points(int count);

/// The full simplex on [n+1].
SimplicialComplex simplex(int dimension);

/// Boundary of the simplex on [n+1].
SimplicialComplex simplex_boundary(int dimension);

/// Cycle graph 1-2-...-m-1 (m ≥ 3).
SimplicialComplex cycle(int m);

/// Member K_{2r} of the even-rank family together with the non-edge
/// {x, y} the recursion keeps track of.
struct EvenRankMember {
  SimplicialComplex complex;
  Vertex non_edge_x = 0;
  Vertex non_edge_y = 0;
};

/// K_{2r}: the square for r = 2, the square plus the diagonal {1,3} for
/// r = 1, K_r ∗ {A,B} for even r ≥ 4, and λ_{{A,B}}(K_{r+1} ∗ {A,B}) for odd
/// r ≥ 3. Here K_s denotes the member whose double cohomology has rank s,
/// i.e. k2r_family(s/2).
EvenRankMember k2r_family(int r);

}  // namespace machh
