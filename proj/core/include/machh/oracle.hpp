#pragma once

#include <cstdint>
#include <map>

#include "machh/simplicial_complex.hpp"

// Brute-force reference computations for small complexes. Nothing here uses
// the engine's elimination, basis selection or sign helpers; ranks of the
// double complex are obtained at cochain level instead of through explicit
// cohomology bases.
namespace machh::oracle {

inline constexpr int kMaxBettiVertices = 12;
inline constexpr int kMaxHhVertices = 8;

/// rank H̃^p(L) over Q. ResourceLimit above 12 vertices.
std::int64_t reduced_betti(const SimplicialComplex& l, int p);

/// rank H̃^p(K_I) over Q for the full subcomplex on `subset`.
std::int64_t reduced_betti(const SimplicialComplex& k, Mask subset, int p);

/// Rank of ψ_{p;i,I}: H̃^p(K_I) → H̃^p(K_{I∖{i}}).
std::int64_t psi_rank(const SimplicialComplex& k, Mask subset, Vertex removed, int p);

/// Rank of HH*(Z_K) in each row p. ResourceLimit above 8 vertices.
std::map<int, std::int64_t> hh_rows(const SimplicialComplex& k);

/// Total rank of HH*(Z_K).
std::int64_t hh_total(const SimplicialComplex& k);

}  // namespace machh::oracle
