#pragma once

#include <cstddef>
#include <vector>

#include "cableord/poly_f2.hpp"

namespace cableord {

/// Row-major dense matrix over F2[U].
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<PolyF2> entries;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  PolyF2& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const PolyF2& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Invariant factors d_1 | d_2 | ... | d_r of a matrix over F2[U] (all nonzero,
/// ascending by divisibility); r is the rank over the fraction field.
///
/// Pivots are chosen by minimal degree with (row, column) lexicographic
/// tie-break, so the elimination sequence is deterministic.
std::vector<PolyF2> invariant_factors(PolyMatrix m);

}  // namespace cableord
