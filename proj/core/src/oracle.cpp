#include "machh/oracle.hpp"

#include <vector>

#include <gmpxx.h>

namespace machh::oracle {
namespace {

using Column = std::vector<mpq_class>;

/// Textbook Gaussian elimination on a list of equal-length column vectors.
std::int64_t column_rank(std::vector<Column> cols) {
  if (cols.empty()) return 0;
  const std::size_t height = cols.front().size();
  std::int64_t rank = 0;
  std::size_t next = 0;  // first column not yet used as a pivot
  for (std::size_t r = 0; r < height && next < cols.size(); ++r) {
    std::size_t pick = next;
    while (pick < cols.size() && cols[pick][r] == 0) ++pick;
    if (pick == cols.size()) continue;
    std::swap(cols[pick], cols[next]);
    const Column& piv = cols[next];
    for (std::size_t c = next + 1; c < cols.size(); ++c) {
      if (cols[c][r] == 0) continue;
      const mpq_class factor = cols[c][r] / piv[r];
      for (std::size_t i = r; i < height; ++i) {
        if (piv[i] != 0) cols[c][i] -= factor * piv[i];
      }
    }
    ++next;
    ++rank;
  }
  return rank;
}

/// Null space of the linear map whose columns are given (each of length h),
/// returned as vectors indexed by column.
std::vector<Column> null_space(const std::vector<Column>& cols, std::size_t height) {
  const std::size_t width = cols.size();
  // Row-major copy for reduced row echelon form.
  std::vector<std::vector<mpq_class>> a(height, std::vector<mpq_class>(width));
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < height; ++r) a[r][c] = cols[c][r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < width && row < height; ++c) {
    std::size_t pick = row;
    while (pick < height && a[pick][c] == 0) ++pick;
    if (pick == height) continue;
    std::swap(a[pick], a[row]);
    const mpq_class lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < height; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < width; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(width, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<Column> basis;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    Column v(width);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// All faces of K inside `subset` with exactly `size` vertices, found by
/// scanning every mask below 2^m.
std::vector<Mask> faces_with_size(const SimplicialComplex& k, Mask subset, int size) {
  std::vector<Mask> out;
  if (size < 0) return out;
  const Mask limit = Mask{1} << k.vertex_count();
  for (Mask s = 0; s < limit; ++s) {
    if ((s & ~subset) != 0) continue;
    int bits = 0;
    for (Mask t = s; t; t >>= 1) bits += static_cast<int>(t & 1U);
    if (bits == size && k.contains(s)) out.push_back(s);
  }
  return out;
}

int position(const std::vector<Mask>& list, Mask s) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == s) return static_cast<int>(i);
  }
  return -1;
}

/// Coboundary of degree q as columns: one column per q-simplex S, holding
/// the coefficients on the (q+1)-simplices. The coefficient of T = S ∪ {v}
/// is (-1) raised to the position of v in the sorted list of T.
std::vector<Column> coboundary(const std::vector<Mask>& lower,
                               const std::vector<Mask>& upper) {
  std::vector<Column> cols;
  for (Mask s : lower) {
    Column col(upper.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
      const Mask t = upper[r];
      if ((s & t) != s) continue;
      const Mask extra = t & ~s;
      if (extra == 0 || (extra & (extra - 1)) != 0) continue;
      int pos = 0;
      for (Mask below = 1; below < extra; below <<= 1) {
        if (t & below) ++pos;
      }
      col[r] = (pos % 2 == 0) ? 1 : -1;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

void require_size(int vertices, int cap) {
  if (vertices > cap) {
    throw Error(ErrorCode::kResourceLimit,
                "oracle limited to " + std::to_string(cap) + " vertices");
  }
}

struct Piece {
  Mask subset;
  std::vector<Mask> simplices;        // degree p
  std::vector<Column> cocycles;       // basis of Z^p(K_I)
  std::vector<Column> coboundaries;   // spanning set of B^p(K_I)
  std::int64_t cohomology_dim = 0;
};

Piece make_piece(const SimplicialComplex& k, Mask subset, int p) {
  Piece piece;
  piece.subset = subset;
  piece.simplices = faces_with_size(k, subset, p + 1);
  const auto upper = faces_with_size(k, subset, p + 2);
  const auto lower = faces_with_size(k, subset, p);
  const std::size_t n = piece.simplices.size();
  if (n == 0) return piece;
  // δ_p as a map from degree p to degree p+1; its columns are the
  // coboundaries of the p-simplices.
  const auto delta_p = coboundary(piece.simplices, upper);
  if (upper.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      Column e(n);
      e[j] = 1;
      piece.cocycles.push_back(std::move(e));
    }
  } else {
    piece.cocycles = null_space(delta_p, upper.size());
  }
  piece.coboundaries = coboundary(lower, piece.simplices);
  piece.cohomology_dim = static_cast<std::int64_t>(piece.cocycles.size()) -
                         column_rank(piece.coboundaries);
  return piece;
}

}  // namespace

std::int64_t reduced_betti(const SimplicialComplex& k, Mask subset, int p) {
  int vertices = 0;
  for (Mask t = subset; t; t >>= 1) vertices += static_cast<int>(t & 1U);
  require_size(vertices, kMaxBettiVertices);
  if (p < -1) return 0;
  return make_piece(k, subset, p).cohomology_dim;
}

std::int64_t reduced_betti(const SimplicialComplex& l, int p) {
  return reduced_betti(l, (Mask{1} << l.vertex_count()) - 1, p);
}

std::int64_t psi_rank(const SimplicialComplex& k, Mask subset, Vertex removed, int p) {
  const Piece src = make_piece(k, subset, p);
  const Piece dst = make_piece(k, subset & ~(Mask{1} << removed), p);
  // rank ψ = dim(r(Z_I) + B_J) - dim B_J
  std::vector<Column> stacked = dst.coboundaries;
  const std::int64_t base = column_rank(stacked);
  for (const Column& z : src.cocycles) {
    Column restricted(dst.simplices.size());
    for (std::size_t r = 0; r < dst.simplices.size(); ++r) {
      restricted[r] = z[position(src.simplices, dst.simplices[r])];
    }
    stacked.push_back(std::move(restricted));
  }
  if (dst.simplices.empty()) return 0;
  return column_rank(std::move(stacked)) - base;
}

std::map<int, std::int64_t> hh_rows(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  require_size(m, kMaxHhVertices);
  std::map<int, std::int64_t> rows;
  const Mask limit = Mask{1} << m;

  for (int p = -1; p <= m - 2 || (m == 0 && p == -1); ++p) {
    // pieces[l] holds every subset of size l, in increasing mask order.
    std::vector<std::vector<Piece>> pieces(m + 1);
    for (Mask s = 0; s < limit; ++s) {
      int size = 0;
      for (Mask t = s; t; t >>= 1) size += static_cast<int>(t & 1U);
      pieces[size].push_back(make_piece(k, s, p));
    }

    // rank of D_l : level l -> level l-1 computed at cochain level as
    // dim(R(Z_l) + B_{l-1}) - dim B_{l-1}.
    std::vector<std::int64_t> d_rank(m + 2, 0);
    for (int l = 1; l <= m; ++l) {
      std::vector<std::size_t> offset;
      std::size_t height = 0;
      for (const Piece& t : pieces[l - 1]) {
        offset.push_back(height);
        height += t.simplices.size();
      }
      if (height == 0) continue;
      std::vector<Column> boundary_part;
      for (std::size_t ti = 0; ti < pieces[l - 1].size(); ++ti) {
        for (const Column& b : pieces[l - 1][ti].coboundaries) {
          Column g(height);
          for (std::size_t r = 0; r < b.size(); ++r) g[offset[ti] + r] = b[r];
          boundary_part.push_back(std::move(g));
        }
      }
      std::vector<Column> stacked = boundary_part;
      const std::int64_t base = column_rank(std::move(boundary_part));
      for (const Piece& src : pieces[l]) {
        for (const Column& z : src.cocycles) {
          Column image(height);
          for (std::size_t ti = 0; ti < pieces[l - 1].size(); ++ti) {
            const Piece& dst = pieces[l - 1][ti];
            if ((dst.subset & ~src.subset) != 0) continue;
            const Mask gone = src.subset & ~dst.subset;
            // (-1)^{p+1} times (-1)^{#{a ∈ I : a < i}}
            int smaller = 0;
            for (Mask below = 1; below < gone; below <<= 1) {
              if (src.subset & below) ++smaller;
            }
            const int sign = ((p + 1 + smaller) % 2 == 0) ? 1 : -1;
            for (std::size_t r = 0; r < dst.simplices.size(); ++r) {
              image[offset[ti] + r] =
                  sign * z[position(src.simplices, dst.simplices[r])];
            }
          }
          stacked.push_back(std::move(image));
        }
      }
      d_rank[l] = column_rank(std::move(stacked)) - base;
    }

    std::int64_t total = 0;
    for (int l = 0; l <= m; ++l) {
      std::int64_t dim = 0;
      for (const Piece& piece : pieces[l]) dim += piece.cohomology_dim;
      total += dim - d_rank[l] - d_rank[l + 1];
    }
    if (total != 0) rows[p] = total;
  }
  return rows;
}

std::int64_t hh_total(const SimplicialComplex& k) {
  std::int64_t total = 0;
  for (const auto& [p, r] : hh_rows(k)) total += r;
  return total;
}

}  // namespace machh::oracle
