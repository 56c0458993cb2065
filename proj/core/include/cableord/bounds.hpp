#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cableord/knot_spec.hpp"
#include "cableord/lspace.hpp"

namespace cableord {

/// u(K) >= Ord(K).
int unknotting_lower(int ord);

/// max(P (ord_base - 1) + 1, P) with P the product of the windings.
/// Throws TrivialBase when ord_base = 0.
int cable_ord_lower(int ord_base, const std::vector<int>& ps);

struct LspaceBound {
  int value = 0;
  /// The base bridge index equals Ord + 1, so the bound is attained.
  bool equality = false;
};

/// P (Ord(K) + 1) - 1 for an L-space knot K other than the trefoil.
/// Throws ExcludedBase for [1,0,-1] and TrivialBase for [0].
LspaceBound lspace_cable_ord_lower(const StaircaseSpec& base, const std::vector<int>& ps,
                                   std::optional<int> base_bridge);

/// Bridge index of an iterated cable: br(K) times every winding.
int schubert_bridge(int br_base, const std::vector<int>& ps);

/// Ord + 1 bounds both bridge and braid index from below.
int bridge_braid_lower(int ord);

/// Ord + 1 local minima for a slice disk, when the knot is assumed slice.
std::optional<int> local_minima_lower(int ord, bool slice_assumed);

struct ReportOptions {
  bool slice_assumed = false;
  /// Bridge index of a file base; torus bases know their own.
  std::optional<int> base_bridge;
};

struct BoundsReport {
  std::string spec;
  int ord = 0;
  int tau = 0;
  int epsilon = 0;
  int u_lower = 0;
  int br_lower = 0;
  int b_lower = 0;
  std::optional<int> minima_lower;
  std::optional<int> formula_ord_lower;
  std::optional<int> lspace_ord_lower;
  bool equality_certified = false;
  std::optional<int> schubert_bridge;
  /// Field name -> how the value was obtained.
  std::map<std::string, std::string> provenance;
};

/// Cables the base, reads Ord, tau and epsilon off the curve and evaluates
/// every applicable bound. Specs with a negative torus base are mirrored
/// first (tau and epsilon flip back at the end). Throws CheckMismatch when a
/// closed formula exceeds the direct value, or a certified equality fails.
BoundsReport report(const CableSpec& spec, const ReportOptions& opts = {});

std::string bounds_to_json(const BoundsReport& r);
std::string bounds_to_text(const BoundsReport& r);

}  // namespace cableord
