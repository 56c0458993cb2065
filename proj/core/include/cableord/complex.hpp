#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cableord/validation.hpp"

namespace cableord {

enum class RingMode { Full, ModUV };

/// U^u V^v with coefficient 1; a missing differential entry encodes 0.
struct Monomial {
  int u = 0;
  int v = 0;

  bool is_unit() const noexcept { return u == 0 && v == 0; }
  bool is_mixed() const noexcept { return u > 0 && v > 0; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product in the given ring; empty when it vanishes (mixed terms in F[U,V]/(UV)).
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b, RingMode ring);

struct Generator {
  std::string id;
  int gr_u = 0;
  int gr_v = 0;

  /// (gr_u - gr_v) / 2; meaningful only when the difference is even.
  int alexander() const noexcept { return (gr_u - gr_v) / 2; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Differential entry addressed by generator ids (interchange form).
struct ArrowSpec {
  std::string from;
  std::string to;
  int u = 0;
  int v = 0;
};

/// Differential entry addressed by generator index.
struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Monomial coeff;
};

/// Free, finitely generated, bigraded complex over F[U,V] or F[U,V]/(UV).
///
/// Immutable value. The differential is a sparse table (source, target) -> monomial.
class BigradedComplex {
 public:
  using EntryMap = std::map<std::pair<std::size_t, std::size_t>, Monomial>;

  BigradedComplex() = default;

  /// Throws InvalidInput on duplicate ids, out-of-range indices, negative
  /// exponents, or mixed monomials in a ModUV complex.
  BigradedComplex(RingMode ring, std::vector<Generator> generators, EntryMap entries);

  /// Builds from id-addressed arrows; duplicate (from, to) pairs are rejected.
  static BigradedComplex from_arrows(RingMode ring, std::vector<Generator> generators,
                                     const std::vector<ArrowSpec>& arrows);

  RingMode ring() const noexcept { return ring_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  std::size_t size() const noexcept { return generators_.size(); }
  const EntryMap& entries() const noexcept { return entries_; }
  std::vector<Arrow> arrows() const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::optional<Monomial> entry(std::size_t from, std::size_t to) const;

  friend bool operator==(const BigradedComplex&, const BigradedComplex&) = default;

 private:
  RingMode ring_ = RingMode::Full;
  std::vector<Generator> generators_;
  EntryMap entries_;
};

/// Free rank and torsion exponents (ascending) of a finitely generated F[W]-module.
struct UModuleDecomposition {
  int free_rank = 0;
  std::vector<int> torsion_exponents;

  friend bool operator==(const UModuleDecomposition&, const UModuleDecomposition&) = default;
};

/// Which variable survives: U for H(C/V) (the minus homology), V for H(C/U).
enum class Variable { U, V };

/// Reports d^2 = 0, grading law, reduced form, both knot-like tower
/// conditions, and generator-count parity.
ValidationReport validate(const BigradedComplex& c);

/// True when every structural check and both tower conditions pass.
bool is_knot_like(const ValidationReport& report);

/// Gaussian cancellation of unit entries, lowest source index first.
BigradedComplex reduce(const BigradedComplex& c);

/// Homology of C with the other variable set to zero, as a module over F[var].
UModuleDecomposition homology(const BigradedComplex& c, Variable var);

/// H_*(C/V) as an F[U]-module.
inline UModuleDecomposition homology_minus(const BigradedComplex& c) { return homology(c, Variable::U); }

/// Maximal torsion exponent of H_*(C/V); 0 when there is no torsion.
/// Throws NotKnotLike unless the complex passes the knot-like conditions.
int torsion_order(const BigradedComplex& c);

/// Dual complex (arrows reversed, gradings negated); represents the mirror knot.
BigradedComplex mirror(const BigradedComplex& c);

/// Drops every mixed entry and relabels the ring as ModUV.
BigradedComplex to_mod_uv(const BigradedComplex& c);

/// Generators relabeled by a permutation: new index i holds old generator perm[i].
BigradedComplex permute(const BigradedComplex& c, const std::vector<std::size_t>& perm);

}  // namespace cableord
