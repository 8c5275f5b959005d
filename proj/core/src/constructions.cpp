#include "machh/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace machh {
namespace {

void require_vertex(const SimplicialComplex& k, Vertex v, const char* which) {
  if (v < 0 || v >= k.vertex_count()) {
    throw Error(ErrorCode::kNotAVertex,
                std::string(which) + " vertex " + std::to_string(v + 1) +
                    " is not a vertex of a complex on " +
                    std::to_string(k.vertex_count()) + " vertices");
  }
}

}  // namespace

SimplicialComplex full_subcomplex(const SimplicialComplex& k, Mask subset) {
  if ((subset & ~k.vertex_mask()) != 0) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "subset uses vertices outside the complex");
  }
  std::vector<Mask> faces;
  for (Mask f : k.faces()) {
    if (is_subset(f, subset)) faces.push_back(compress(f, subset));
  }
  return SimplicialComplex::from_masks(cardinality(subset), faces);
}

SimplicialComplex join(const SimplicialComplex& k,
                       const SimplicialComplex& l) {
  const int mk = k.vertex_count();
  const int m = mk + l.vertex_count();
  if (m > kMaxGroundSize) {
    throw Error(ErrorCode::kResourceLimit,
                "join would have " + std::to_string(m) + " vertices");
  }
  // Facets of a join are unions of facets.
  std::vector<Mask> facets;
  for (Mask a : k.facets()) {
    for (Mask b : l.facets()) facets.push_back(a | (b << mk));
  }
  return SimplicialComplex::from_masks(m, facets);
}

SimplicialComplex wedge(const SimplicialComplex& k, Vertex at_k,
                        const SimplicialComplex& l, Vertex at_l) {
  require_vertex(k, at_k, "wedge point");
  require_vertex(l, at_l, "wedge point");
  const int mk = k.vertex_count();
  const int m = mk + l.vertex_count() - 1;
  if (m > kMaxGroundSize) {
    throw Error(ErrorCode::kResourceLimit,
                "wedge would have " + std::to_string(m) + " vertices");
  }
  std::vector<Vertex> image(l.vertex_count());
  Vertex next = mk;
  for (Vertex v = 0; v < l.vertex_count(); ++v) {
    image[v] = (v == at_l) ? at_k : next++;
  }
  std::vector<Mask> facets(k.facets().begin(), k.facets().end());
  for (Mask f : l.facets()) {
    Mask mapped = 0;
    for (Vertex v : vertices_of(f)) mapped |= vertex_bit(image[v]);
    facets.push_back(mapped);
  }
  return SimplicialComplex::from_masks(m, facets);
}

SimplicialComplex glue_simplex(const SimplicialComplex& k, Mask sigma) {
  if (sigma == 0 || (sigma & ~k.vertex_mask()) != 0) {
    throw Error(ErrorCode::kBadSigma,
                "glued simplex must be a nonempty subset of the vertices");
  }
  if (k.contains(sigma)) {
    throw Error(ErrorCode::kFaceAlreadyPresent,
                SubsetMask(sigma, k.vertex_count()).to_string() +
                    " is already a face");
  }
  // Downward closure makes it enough to check the codimension-one faces.
  for (Mask rest = sigma; rest != 0; rest &= rest - 1) {
    const Mask facet = sigma & ~(rest & (~rest + 1));
    if (!k.contains(facet)) {
      throw Error(ErrorCode::kBoundaryMissing,
                  "boundary face " +
                      SubsetMask(facet, k.vertex_count()).to_string() +
                      " is missing");
    }
  }
  std::vector<Mask> facets(k.facets().begin(), k.facets().end());
  facets.push_back(sigma);
  return SimplicialComplex::from_masks(k.vertex_count(), facets);
}

Mask permute_mask(Mask s, const std::vector<Vertex>& perm) {
  Mask out = 0;
  for (Vertex v : vertices_of(s)) out |= vertex_bit(perm.at(v));
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::vector<Vertex>& perm) {
  const int m = k.vertex_count();
  std::vector<Vertex> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) {
    throw Error(ErrorCode::kInvalidArgument,
                "relabeling is not a permutation of the vertices");
  }
  std::vector<Mask> facets;
  for (Mask f : k.facets()) facets.push_back(permute_mask(f, perm));
  return SimplicialComplex::from_masks(m, facets);
}

SimplicialComplex discrete_points(int count) {
  std::vector<Mask> facets;
  for (Vertex v = 0; v < count; ++v) facets.push_back(vertex_bit(v));
  return SimplicialComplex::from_masks(count, facets);
}

SimplicialComplex simplex(int dimension) {
  const Mask top = full_mask(dimension + 1);
  return SimplicialComplex::from_masks(dimension + 1, std::span(&top, 1));
}

SimplicialComplex simplex_boundary(int dimension) {
  const int m = dimension + 1;
  std::vector<Mask> facets;
  for (Vertex v = 0; v < m; ++v) facets.push_back(full_mask(m) & ~vertex_bit(v));
  return SimplicialComplex::from_masks(m, facets);
}

SimplicialComplex cycle(int m) {
  if (m < 3) {
    throw Error(ErrorCode::kInvalidArgument, "a cycle needs at least 3 vertices");
  }
  std::vector<Mask> facets;
  for (Vertex v = 0; v < m; ++v) {
    facets.push_back(vertex_bit(v) | vertex_bit((v + 1) % m));
  }
  return SimplicialComplex::from_masks(m, facets);
}

EvenRankMember k2r_family(int r) {
  if (r < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k2r_family needs r >= 1");
  }
  if (r == 2) return {cycle(4), 0, 2};
  if (r == 1) return {glue_simplex(cycle(4), vertex_bit(0) | vertex_bit(2)), 1, 3};

  const SimplicialComplex pair = discrete_points(2);
  if (r % 2 == 0) {
    const EvenRankMember half = k2r_family(r / 2);
    const Vertex a = half.complex.vertex_count();
    return {join(half.complex, pair), a, a + 1};
  }
  const EvenRankMember base = k2r_family((r + 1) / 2);
  const Vertex a = base.complex.vertex_count();
  SimplicialComplex joined = join(base.complex, pair);
  return {glue_simplex(joined, vertex_bit(a) | vertex_bit(a + 1)),
          base.non_edge_x, base.non_edge_y};
}

}  // namespace machh
