#include "machh/simplicial_complex.hpp"

#include <algorithm>

namespace machh {
namespace {

void check_ground_size(int m) {
  if (m < 0 || m > kMaxGroundSize) {
    throw Error(ErrorCode::kResourceLimit,
                "ground set size " + std::to_string(m) + " outside [0," +
                    std::to_string(kMaxGroundSize) + "]");
  }
}

void add_closure(Mask top, std::unordered_set<Mask>& faces) {
  if (faces.contains(top)) return;
  // Enumerate every submask of `top`, including ∅ and `top` itself.
  Mask sub = top;
  while (true) {
    faces.insert(sub);
    if (sub == 0) break;
    sub = (sub - 1) & top;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex()
    : SimplicialComplex(0, std::unordered_set<Mask>{0}) {}

SimplicialComplex::SimplicialComplex(int m, std::unordered_set<Mask> faces)
    : m_(m), face_set_(std::move(faces)) {
  faces_.assign(face_set_.begin(), face_set_.end());
  std::sort(faces_.begin(), faces_.end(), [](Mask a, Mask b) {
    const int ca = cardinality(a);
    const int cb = cardinality(b);
    return ca != cb ? ca < cb : lex_less(a, b);
  });
  const int top = faces_.empty() ? -1 : cardinality(faces_.back());
  size_offsets_.assign(top + 2, 0);
  for (Mask f : faces_) ++size_offsets_[cardinality(f) + 1];
  for (std::size_t k = 1; k < size_offsets_.size(); ++k) {
    size_offsets_[k] += size_offsets_[k - 1];
  }
  for (Mask f : faces_) {
    bool maximal = true;
    for (Mask rest = full_mask(m_) & ~f; rest != 0; rest &= rest - 1) {
      if (face_set_.contains(f | (rest & (~rest + 1)))) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), lex_less);
}

SimplicialComplex SimplicialComplex::from_facets(
    int m, const std::vector<std::vector<int>>& facets) {
  check_ground_size(m);
  std::vector<Mask> generators;
  generators.reserve(facets.size());
  for (const auto& facet : facets) {
    generators.push_back(SubsetMask::from_one_based(facet, m).bits());
  }
  return from_masks(m, generators);
}

SimplicialComplex SimplicialComplex::from_masks(
    int m, std::span<const Mask> generators) {
  check_ground_size(m);
  std::unordered_set<Mask> faces{0};
  Mask covered = 0;
  for (Mask g : generators) {
    if ((g & ~full_mask(m)) != 0) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "face uses a vertex outside [1," + std::to_string(m) + "]");
    }
    add_closure(g, faces);
    covered |= g;
  }
  const Mask missing = full_mask(m) & ~covered;
  if (missing != 0) {
    const int v = std::countr_zero(missing) + 1;
    throw Error(ErrorCode::kGhostVertex,
                "vertex " + std::to_string(v) + " appears in no facet");
  }
  return SimplicialComplex(m, std::move(faces));
}

std::span<const Mask> SimplicialComplex::faces_of_size(int size) const {
  if (size < 0 || size + 1 >= static_cast<int>(size_offsets_.size())) {
    return {};
  }
  return std::span<const Mask>(faces_).subspan(
      size_offsets_[size], size_offsets_[size + 1] - size_offsets_[size]);
}

SimplicialComplex SimplicialComplex::with_labels(
    std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != m_) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(m_) + " labels, got " +
                    std::to_string(labels.size()));
  }
  SimplicialComplex out = *this;
  out.labels_ = std::move(labels);
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) out.push_back(SubsetMask(f, m_).one_based());
  return out;
}

}  // namespace machh
