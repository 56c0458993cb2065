#include "cableord/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cableord {
namespace {

struct Pos {
  std::size_t row;
  std::size_t col;
};

std::optional<Pos> min_degree_entry(const PolyMatrix& m, std::size_t from) {
  std::optional<Pos> best;
  int best_deg = 0;
  for (std::size_t r = from; r < m.rows; ++r) {
    for (std::size_t c = from; c < m.cols; ++c) {
      const auto& e = m.at(r, c);
      if (e.is_zero()) continue;
      if (!best || e.degree() < best_deg) {
        best = Pos{r, c};
        best_deg = e.degree();
      }
    }
  }
  return best;
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] += f * row[src]
void add_row(PolyMatrix& m, std::size_t dst, std::size_t src, const PolyF2& f) {
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!m.at(src, c).is_zero()) m.at(dst, c) += f * m.at(src, c);
  }
}

void add_col(PolyMatrix& m, std::size_t dst, std::size_t src, const PolyF2& f) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!m.at(r, src).is_zero()) m.at(r, dst) += f * m.at(r, src);
  }
}

// Clears row t and column t outside the pivot. Returns false if a smaller
// remainder appeared and the pivot must be re-chosen.
bool clear_cross(PolyMatrix& m, std::size_t t) {
  const PolyF2 pivot = m.at(t, t);
  bool clean = true;
  for (std::size_t r = t + 1; r < m.rows; ++r) {
    if (m.at(r, t).is_zero()) continue;
    auto [q, rem] = PolyF2::divmod(m.at(r, t), pivot);
    add_row(m, r, t, q);
    if (!rem.is_zero()) clean = false;
  }
  for (std::size_t c = t + 1; c < m.cols; ++c) {
    if (m.at(t, c).is_zero()) continue;
    auto [q, rem] = PolyF2::divmod(m.at(t, c), pivot);
    add_col(m, c, t, q);
    if (!rem.is_zero()) clean = false;
  }
  return clean;
}

}  // namespace

std::vector<PolyF2> invariant_factors(PolyMatrix m) {
  std::vector<PolyF2> diag;
  const std::size_t limit = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < limit; ++t) {
    auto start = min_degree_entry(m, t);
    if (!start) break;
    swap_rows(m, t, start->row);
    swap_cols(m, t, start->col);
    while (true) {
      if (!clear_cross(m, t)) {
        // A remainder of smaller degree sits in row/column t; bring it to the pivot.
        std::optional<Pos> best;
        int best_deg = m.at(t, t).degree();
        for (std::size_t r = t + 1; r < m.rows; ++r) {
          const auto& e = m.at(r, t);
          if (!e.is_zero() && e.degree() < best_deg) {
            best = Pos{r, t};
            best_deg = e.degree();
          }
        }
        for (std::size_t c = t + 1; c < m.cols; ++c) {
          const auto& e = m.at(t, c);
          if (!e.is_zero() && e.degree() < best_deg) {
            best = Pos{t, c};
            best_deg = e.degree();
          }
        }
        if (best) {
          swap_rows(m, t, best->row);
          swap_cols(m, t, best->col);
        }
        continue;
      }
      // Cross is clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < m.rows && !bad_row; ++r) {
        for (std::size_t c = t + 1; c < m.cols; ++c) {
          if (m.at(r, c).is_zero()) continue;
          if (!PolyF2::divmod(m.at(r, c), m.at(t, t)).second.is_zero()) {
            bad_row = r;
            break;
          }
        }
      }
      if (!bad_row) break;
      add_row(m, t, *bad_row, PolyF2::one());
    }
    diag.push_back(m.at(t, t));
  }
  return diag;
}

}  // namespace cableord
