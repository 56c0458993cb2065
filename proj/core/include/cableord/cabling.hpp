#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cableord/curve.hpp"

namespace cableord {

struct CableParams {
  int p = 2;
  int q = 1;

  friend bool operator==(const CableParams&, const CableParams&) = default;
};

/// Throws BadParams unless p >= 2 and gcd(p, q) = 1.
void check_params(const CableParams& cp);

/// Where an arc of the input curve ended up: component and start crossing
/// of the output arc containing the image of its p-th copy.
struct ArcLocation {
  std::size_t component = 0;
  std::size_t start = 0;

  friend bool operator==(const ArcLocation&, const ArcLocation&) = default;
  friend auto operator<=>(const ArcLocation&, const ArcLocation&) = default;
};

struct CableTrace {
  PegCurve curve;
  /// Input right arc -> output arc; absent when the image is an essential
  /// arc or its component vanished while pulling tight.
  std::map<ArcLocation, std::optional<ArcLocation>> right_arc_images;
};

/// (p,q)-cable of a peg curve: p copies scaled by p and staggered by q,
/// gamma0 copies joined end to end, pegs moved onto one axis, pulled tight.
/// Closed components give p disjoint copies. Exact integer arithmetic.
PegCurve cable_geometric(const PegCurve& pc, const CableParams& cp);

/// cable_geometric together with the location of every right arc's image.
CableTrace cable_traced(const PegCurve& pc, const CableParams& cp);

/// Prediction of the closed-form rule. `top` is empty when the rule leaves
/// the first superscript open.
struct RulePrediction {
  int length = 0;
  std::optional<char> top;
  char bottom = '-';
  bool initial = false;
};

/// Image of a right arc under (p,q)-cabling for noninitial arcs and for
/// initial arcs when epsilon = 1. Throws RuleNotApplicable otherwise.
RulePrediction cable_arc_rule(const ArcForm& arc, const CableParams& cp, int tau_base, int epsilon_base = 1);

struct RuleCheck {
  ArcLocation arc;
  ArcForm base;
  RulePrediction predicted;
  std::optional<ArcForm> observed;
  bool match = false;
  std::string detail;
};

struct CheckReport {
  std::vector<RuleCheck> checks;
  /// Right arcs the rules do not cover.
  int uncovered = 0;

  bool ok() const;
  int mismatches() const;
};

/// Compares cable_arc_rule against cable_traced for every covered right arc.
CheckReport crosscheck_rules(const PegCurve& pc, const CableParams& cp);

/// Left fold of cable_geometric over the stages.
PegCurve iterate_cable(const PegCurve& base, const std::vector<CableParams>& stages);

/// Largest right-arc length of a curve (0 when there is none).
int max_right_arc(const PegCurve& pc);

}  // namespace cableord
