#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cableord {

/// Dense univariate polynomial over the two-element field, bit i = coefficient of U^i.
class PolyF2 {
 public:
  PolyF2() = default;

  static PolyF2 zero() { return {}; }
  static PolyF2 one() { return monomial(0); }
  static PolyF2 monomial(int exponent);
  /// Builds from coefficient bits, lowest degree first.
  static PolyF2 from_coefficients(const std::vector<int>& coeffs);

  bool is_zero() const noexcept { return words_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool coefficient(int i) const noexcept;
  /// True for U^k (exactly one nonzero coefficient).
  bool is_monomial() const noexcept;
  /// Exponent of the lowest nonzero term; -1 for zero.
  int valuation() const noexcept;

  PolyF2& operator+=(const PolyF2& other);
  friend PolyF2 operator+(PolyF2 a, const PolyF2& b) { return a += b; }
  friend PolyF2 operator-(PolyF2 a, const PolyF2& b) { return a += b; }
  friend PolyF2 operator*(const PolyF2& a, const PolyF2& b);
  friend bool operator==(const PolyF2& a, const PolyF2& b) = default;

  /// Euclidean division: returns {quotient, remainder}. Throws on division by zero.
  static std::pair<PolyF2, PolyF2> divmod(const PolyF2& a, const PolyF2& b);
  static PolyF2 gcd(PolyF2 a, PolyF2 b);

  std::string to_string() const;

 private:
  void trim();
  void set_bit(int i);

  std::vector<std::uint64_t> words_;
};

}  // namespace cableord
