#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "machh/bigraded_table.hpp"
#include "machh/simplicial_complex.hpp"

namespace machh::io {

/// Extra data carried alongside a complex file, e.g. the tracked non-edge of
/// a K_{2r} family member. Vertices are 0-based here, 1-based on disk.
struct ComplexMeta {
  std::optional<int> r;
  std::optional<std::pair<Vertex, Vertex>> non_edge;
};

struct ComplexDocument {
  SimplicialComplex complex;
  ComplexMeta meta;
};

/// Parses {"m": int, "facets": [[1-based ints]], "labels": [...]?}.
/// Malformed documents throw ParseError; bad vertices VertexOutOfRange;
/// uncovered vertices GhostVertex.
ComplexDocument parse_complex(const std::string& text);
ComplexDocument load_complex(const std::filesystem::path& path);

/// Serializes a complex in the input format, facets in lexicographic order.
std::string complex_to_json(const SimplicialComplex& k, const ComplexMeta& meta = {});

/// Result document of the hh/h commands. Fields left empty are omitted.
struct ResultDocument {
  int m = 0;
  std::string field = "Q";
  std::optional<BigradedRankTable> h;
  std::optional<BigradedRankTable> hh;
  bool verified_exact = false;
};

/// {"m", "field", "h", "h_total", "hh", "hh_total", "hh_rows", "euler_hh"}
/// with bidegree keys "(-k,2l)" and row keys "p".
std::string result_to_json(const ResultDocument& doc);

/// Header "k,l,rank" and one line per nonzero entry, ordered by (l, k).
std::string table_to_csv(const BigradedRankTable& table);

/// Human-readable grid: one line per l, one column per k.
std::string table_to_text(const BigradedRankTable& table, const std::string& title);

/// Writes `contents` to `path` via a temporary file and rename, so a failed
/// run never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace machh::io
