#include "machh/subset_mask.hpp"

#include <algorithm>

namespace machh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kGhostVertex: return "GhostVertex";
    case ErrorCode::kNotAVertex: return "NotAVertex";
    case ErrorCode::kFaceAlreadyPresent: return "FaceAlreadyPresent";
    case ErrorCode::kBoundaryMissing: return "BoundaryMissing";
    case ErrorCode::kBadSigma: return "BadSigma";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kNotInSubset: return "NotInSubset";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

std::vector<Mask> subsets_of_size(int m, int size) {
  std::vector<Mask> out;
  if (size < 0 || size > m) return out;
  if (size == 0) return {0};
  // Gosper's hack walks same-popcount masks in increasing numeric order.
  const Mask limit = full_mask(m);
  Mask s = full_mask(size);
  while (true) {
    out.push_back(s);
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    if (r == 0 || r > limit) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (s > limit) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Vertex> vertices_of(Mask s) {
  std::vector<Vertex> out;
  out.reserve(cardinality(s));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

SubsetMask SubsetMask::from_one_based(const std::vector<int>& vertices, int m) {
  Mask bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > m) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside [1," +
                      std::to_string(m) + "]");
    }
    bits |= vertex_bit(v - 1);
  }
  return SubsetMask(bits, m);
}

std::vector<int> SubsetMask::one_based() const {
  std::vector<int> out;
  for (Vertex v : vertices()) out.push_back(v + 1);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : one_based()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace machh
