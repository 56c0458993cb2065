#include "cableord/poly_f2.hpp"

#include <bit>
#include <stdexcept>

namespace cableord {

PolyF2 PolyF2::monomial(int exponent) {
  if (exponent < 0) throw std::invalid_argument("PolyF2::monomial: negative exponent");
  PolyF2 p;
  p.set_bit(exponent);
  return p;
}

PolyF2 PolyF2::from_coefficients(const std::vector<int>& coeffs) {
  PolyF2 p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1) p.set_bit(static_cast<int>(i));
  }
  return p;
}

void PolyF2::set_bit(int i) {
  const auto word = static_cast<std::size_t>(i) / 64;
  if (words_.size() <= word) words_.resize(word + 1, 0);
  words_[word] ^= (std::uint64_t{1} << (i % 64));
  trim();
}

void PolyF2::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int PolyF2::degree() const noexcept {
  if (words_.empty()) return -1;
  const auto top = words_.back();
  return static_cast<int>((words_.size() - 1) * 64) + 63 - std::countl_zero(top);
}

bool PolyF2::coefficient(int i) const noexcept {
  if (i < 0) return false;
  const auto word = static_cast<std::size_t>(i) / 64;
  if (word >= words_.size()) return false;
  return (words_[word] >> (i % 64)) & 1U;
}

bool PolyF2::is_monomial() const noexcept {
  int bits = 0;
  for (auto w : words_) bits += std::popcount(w);
  return bits == 1;
}

int PolyF2::valuation() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  }
  return -1;
}

PolyF2& PolyF2::operator+=(const PolyF2& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

PolyF2 operator*(const PolyF2& a, const PolyF2& b) {
  PolyF2 out;
  if (a.is_zero() || b.is_zero()) return out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  const int db = b.degree();
  for (int i = 0; i <= db; ++i) {
    if (!b.coefficient(i)) continue;
    const std::size_t shift_words = static_cast<std::size_t>(i) / 64;
    const int shift_bits = i % 64;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      out.words_[w + shift_words] ^= a.words_[w] << shift_bits;
      if (shift_bits != 0) out.words_[w + shift_words + 1] ^= a.words_[w] >> (64 - shift_bits);
    }
  }
  out.trim();
  return out;
}

std::pair<PolyF2, PolyF2> PolyF2::divmod(const PolyF2& a, const PolyF2& b) {
  if (b.is_zero()) throw std::domain_error("PolyF2::divmod: division by zero");
  PolyF2 quotient;
  PolyF2 rem = a;
  const int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    quotient.set_bit(shift);
    rem += b * monomial(shift);
  }
  return {quotient, rem};
}

PolyF2 PolyF2::gcd(PolyF2 a, PolyF2 b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string PolyF2::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "U";
    } else {
      out += "U^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace cableord
