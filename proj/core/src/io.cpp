#include "machh/io.hpp"

#include <fstream>
#include <set>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace machh::io {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

ordered_json table_json(const BigradedRankTable& table) {
  ordered_json out = ordered_json::object();
  for (const auto& [b, r] : table.entries()) out[b.key()] = r;
  return out;
}

}  // namespace

ComplexDocument parse_complex(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("complex document must be a JSON object");
  if (!doc.contains("m") || !doc["m"].is_number_integer()) {
    parse_error("missing integer field \"m\"");
  }
  if (!doc.contains("facets") || !doc["facets"].is_array()) {
    parse_error("missing array field \"facets\"");
  }
  const auto m = doc["m"].get<std::int64_t>();
  if (m < 0) parse_error("\"m\" must be nonnegative");
  if (m > kMaxGroundSize) {
    throw Error(ErrorCode::kResourceLimit,
                "m = " + std::to_string(m) + " exceeds " + std::to_string(kMaxGroundSize));
  }

  std::vector<std::vector<int>> facets;
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array()) parse_error("each facet must be an array of vertices");
    std::vector<int> vertices;
    for (const auto& v : facet) {
      if (!v.is_number_integer()) parse_error("vertices must be integers");
      const auto x = v.get<std::int64_t>();
      if (x < 1 || x > m) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(x) + " outside [1," + std::to_string(m) + "]");
      }
      vertices.push_back(static_cast<int>(x));
    }
    facets.push_back(std::move(vertices));
  }

  ComplexDocument out{SimplicialComplex::from_facets(static_cast<int>(m), facets), {}};

  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) parse_error("\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) parse_error("\"labels\" must be an array of strings");
      labels.push_back(label.get<std::string>());
    }
    if (static_cast<std::int64_t>(labels.size()) != m) {
      parse_error("\"labels\" must have exactly m entries");
    }
    out.complex = out.complex.with_labels(std::move(labels));
  }

  if (doc.contains("meta") && doc["meta"].is_object()) {
    const auto& meta = doc["meta"];
    if (meta.contains("r") && meta["r"].is_number_integer()) out.meta.r = meta["r"].get<int>();
    if (meta.contains("non_edge") && meta["non_edge"].is_array() &&
        meta["non_edge"].size() == 2) {
      out.meta.non_edge = {meta["non_edge"][0].get<int>() - 1,
                           meta["non_edge"][1].get<int>() - 1};
    }
  }
  return out;
}

ComplexDocument load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

std::string complex_to_json(const SimplicialComplex& k, const ComplexMeta& meta) {
  ordered_json doc;
  doc["m"] = k.vertex_count();
  ordered_json facets = ordered_json::array();
  for (const auto& f : k.facet_lists()) facets.push_back(f);
  doc["facets"] = facets;
  if (!k.labels().empty()) doc["labels"] = k.labels();
  if (meta.r || meta.non_edge) {
    ordered_json m = ordered_json::object();
    if (meta.r) m["r"] = *meta.r;
    if (meta.non_edge) m["non_edge"] = {meta.non_edge->first + 1, meta.non_edge->second + 1};
    doc["meta"] = m;
  }
  return doc.dump() + "\n";
}

std::string result_to_json(const ResultDocument& r) {
  ordered_json doc;
  doc["m"] = r.m;
  if (r.h) {
    doc["h"] = table_json(*r.h);
    doc["h_total"] = r.h->total();
  }
  if (r.hh) {
    doc["hh"] = table_json(*r.hh);
    doc["hh_total"] = r.hh->total();
    ordered_json rows = ordered_json::object();
    for (const auto& [p, rank] : r.hh->by_row()) rows[std::to_string(p)] = rank;
    doc["hh_rows"] = rows;
    doc["euler_hh"] = r.hh->euler_characteristic();
  }
  doc["field"] = r.field;
  if (r.verified_exact) doc["verified_exact"] = true;
  return doc.dump() + "\n";
}

std::string table_to_csv(const BigradedRankTable& table) {
  std::string out = "k,l,rank\n";
  for (const auto& [b, r] : table.entries()) {
    out += std::to_string(b.k) + "," + std::to_string(b.l) + "," + std::to_string(r) + "\n";
  }
  return out;
}

std::string table_to_text(const BigradedRankTable& table, const std::string& title) {
  std::set<int> ks;
  std::set<int> ls;
  for (const auto& [b, r] : table.entries()) {
    ks.insert(b.k);
    ls.insert(b.l);
  }
  std::ostringstream out;
  out << title << " (rows: 2l, columns: -k; total " << table.total() << ")\n";
  out << "      ";
  for (int k : ks) out << std::setw(6) << -k;
  out << "\n";
  for (int l : ls) {
    out << std::setw(6) << 2 * l;
    for (int k : ks) {
      const auto v = table.at({k, l});
      if (v == 0) {
        out << std::setw(6) << ".";
      } else {
        out << std::setw(6) << v;
      }
    }
    out << "\n";
  }
  return out.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace machh::io
