#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "machh/subset_mask.hpp"

namespace machh {

/// A finite abstract simplicial complex on the ground set [m].
///
/// Faces are stored as masks. The family is downward closed, contains the
/// empty face, and contains every singleton: a complex never has ghost
/// vertices. Instances are immutable once built.
class SimplicialComplex {
 public:
  /// The empty complex {∅} on zero vertices.
  SimplicialComplex();

  /// Downward closure of `facets` (1-based vertex lists). Every vertex of [m]
  /// must occur in some facet.
  static SimplicialComplex from_facets(
      int m, const std::vector<std::vector<int>>& facets);

  /// Downward closure of the given masks (0-based bits). Same validation as
  /// from_facets.
  static SimplicialComplex from_masks(int m, std::span<const Mask> generators);

  int vertex_count() const { return m_; }
  Mask vertex_mask() const { return full_mask(m_); }

  bool contains(Mask face) const { return face_set_.contains(face); }

  /// All faces including ∅, ordered by size and then lexicographically.
  const std::vector<Mask>& faces() const { return faces_; }
  std::span<const Mask> faces_of_size(int size) const;
  std::size_t face_count() const { return faces_.size(); }

  /// Inclusion-maximal faces in lexicographic order.
  const std::vector<Mask>& facets() const { return facets_; }

  /// Largest face size minus one; -1 for the empty complex.
  int dimension() const { return static_cast<int>(size_offsets_.size()) - 3; }

  /// True when [m] itself is a face (m ≥ 1).
  bool is_simplex() const { return m_ > 0 && contains(vertex_mask()); }

  /// Optional display labels, one per vertex.
  const std::vector<std::string>& labels() const { return labels_; }
  SimplicialComplex with_labels(std::vector<std::string> labels) const;

  /// Facets as sorted 1-based vertex lists.
  std::vector<std::vector<int>> facet_lists() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  SimplicialComplex(int m, std::unordered_set<Mask> faces);

  int m_ = 0;
  std::unordered_set<Mask> face_set_;
  std::vector<Mask> faces_;
  // faces_of_size(k) is faces_[size_offsets_[k], size_offsets_[k+1])
  std::vector<std::size_t> size_offsets_;
  std::vector<Mask> facets_;
  std::vector<std::string> labels_;
};

}  // namespace machh
