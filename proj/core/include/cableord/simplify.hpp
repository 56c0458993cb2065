#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cableord/complex.hpp"

namespace cableord {

enum class Direction { Horizontal, Vertical };

struct ArrowPair {
  std::string source;
  std::string target;
  int length = 0;

  friend bool operator==(const ArrowPair&, const ArrowPair&) = default;
};

/// Horizontal pairs are mod-V arrows x -> U^n y (y sits n Alexander units
/// above x); vertical pairs are mod-U arrows x -> V^n y (y sits n below x).
struct ArrowPairing {
  Direction direction = Direction::Horizontal;
  std::vector<ArrowPair> pairs;
  std::optional<std::string> unpaired;

  std::vector<int> lengths() const;
  friend bool operator==(const ArrowPairing&, const ArrowPairing&) = default;
};

struct SimplifiedComplex {
  BigradedComplex complex;
  ArrowPairing pairing;
};

struct SimultaneousBasis {
  BigradedComplex complex;
  ArrowPairing horizontal;
  ArrowPairing vertical;
};

/// Change of basis over F[U,V]/(UV) after which the mod-V differential is a
/// perfect matching by single arrows U^n. Generator ids are kept; the basis
/// element that replaces y keeps y's id. Unit entries are cancelled first.
/// Throws InvalidInput for complexes over the full ring.
SimplifiedComplex horizontally_simplify(const BigradedComplex& c);

/// Same as horizontally_simplify with U and V exchanged.
SimplifiedComplex vertically_simplify(const BigradedComplex& c);

/// True when arrows of the given direction pair generators with each
/// generator meeting at most one such arrow.
bool is_simplified(const BigradedComplex& c, Direction d);

/// Reads the pairing off a complex that is already simplified in direction d.
/// Throws InvalidInput otherwise.
ArrowPairing read_pairing(const BigradedComplex& c, Direction d);

inline constexpr int kSimplifyRestarts = 200;

/// Alternates horizontal and vertical simplification for at most size()^2
/// rounds, restarting from seeded random bases of each bigrading class when
/// that cycles. Deterministic. Throws LocalSystemRequired if every attempt fails.
SimultaneousBasis simultaneous_simplify(const BigradedComplex& c);

}  // namespace cableord
