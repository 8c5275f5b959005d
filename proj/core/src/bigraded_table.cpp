#include "machh/bigraded_table.hpp"

#include "machh/error.hpp"

namespace machh {

std::string Bidegree::key() const {
  return "(" + std::to_string(-k) + "," + std::to_string(2 * l) + ")";
}

void BigradedRankTable::add(Bidegree at, Rank rank) {
  if (rank < 0) {
    throw Error(ErrorCode::kInternalInconsistency,
                "negative rank at bidegree " + at.key());
  }
  if (rank == 0) return;
  entries_[at] += rank;
}

BigradedRankTable::Rank BigradedRankTable::at(Bidegree b) const {
  const auto it = entries_.find(b);
  return it == entries_.end() ? 0 : it->second;
}

BigradedRankTable::Rank BigradedRankTable::total() const {
  Rank t = 0;
  for (const auto& [b, r] : entries_) t += r;
  return t;
}

BigradedRankTable::Rank BigradedRankTable::euler_characteristic() const {
  Rank chi = 0;
  for (const auto& [b, r] : entries_) chi += (b.k % 2 == 0) ? r : -r;
  return chi;
}

std::map<int, BigradedRankTable::Rank> BigradedRankTable::by_total_degree() const {
  std::map<int, Rank> out;
  for (const auto& [b, r] : entries_) out[b.total_degree()] += r;
  return out;
}

std::map<int, BigradedRankTable::Rank> BigradedRankTable::by_row() const {
  std::map<int, Rank> out;
  for (const auto& [b, r] : entries_) out[b.row()] += r;
  return out;
}

BigradedRankTable BigradedRankTable::convolve(const BigradedRankTable& other) const {
  BigradedRankTable out;
  for (const auto& [a, ra] : entries_) {
    for (const auto& [b, rb] : other.entries_) {
      out.add({a.k + b.k, a.l + b.l}, ra * rb);
    }
  }
  return out;
}

}  // namespace machh
