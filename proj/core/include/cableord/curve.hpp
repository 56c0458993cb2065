#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cableord/complex.hpp"
#include "cableord/simplify.hpp"
#include "cableord/validation.hpp"

namespace cableord {

enum class Side { Left, Right };
enum class ComponentKind { Gamma0, Closed };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// One component of a peg curve, stored as the heights where it meets the
/// vertical axis, in traversal order.
///
/// gamma0 is listed from its left end: the essential left arc reaches
/// crossings[0] (y0), arcs then alternate right, left, ..., and the essential
/// right arc leaves the last crossing (x0). The count is odd and first_side is
/// Left (the side of the essential left arc).
///
/// A closed component is cyclic; first_side is the side of the arc from
/// crossings[0] to crossings[1] and the count is even.
struct CurveComponent {
  ComponentKind kind = ComponentKind::Gamma0;
  std::vector<int> crossings;
  Side first_side = Side::Left;
  /// Optional generator ids, parallel to crossings (empty when unnamed).
  std::vector<std::string> labels;

  /// Side of the arc starting at crossings[i] (for gamma0, the arc to i+1).
  Side side_after(std::size_t i) const;
  /// Number of arcs between two axis crossings (essential arcs excluded).
  std::size_t arc_count() const;
  /// Index of the crossing that ends the arc starting at i.
  std::size_t next(std::size_t i) const { return (i + 1) % crossings.size(); }

  friend bool operator==(const CurveComponent& a, const CurveComponent& b) {
    return a.kind == b.kind && a.crossings == b.crossings && a.first_side == b.first_side;
  }
};

struct PegCurve {
  std::vector<CurveComponent> components;

  /// The unique gamma0 component, or nullptr.
  const CurveComponent* gamma0() const;
  friend bool operator==(const PegCurve&, const PegCurve&) = default;
};

/// Superscript pair of a right arc: each end is '+' (the curve turns up),
/// '-' (turns down) or '0' (the essential left arc meets y0 = 0).
struct ArcForm {
  char top = '0';
  char bottom = '0';
  int length = 0;
  bool initial = false;
  /// The single-crossing gamma0 of the unknot.
  bool degenerate = false;

  /// "--", "+-", "0+", ... or "0" for the degenerate arc.
  std::string form() const;
  friend bool operator==(const ArcForm&, const ArcForm&) = default;
};

struct ClassifiedArc {
  std::size_t component = 0;
  /// Arc runs from crossings[start] to crossings[next(start)].
  std::size_t start = 0;
  ArcForm form;
};

/// Builds the curve of a simultaneously simplified complex. Right arcs come
/// from horizontal pairs, left arcs from vertical pairs, heights are
/// Alexander gradings. Without a horizontally unpaired generator no gamma0
/// is produced.
PegCurve complex_to_curve(const BigradedComplex& c, const ArrowPairing& horizontal, const ArrowPairing& vertical);

/// Runs simultaneous_simplify, then complex_to_curve.
PegCurve curve_of(const BigradedComplex& c);

/// Inverse of complex_to_curve. Generator ids are the crossing labels when
/// present, else "g<component>_<index>". gamma0 is graded so x0 has gr_v = 0;
/// each closed component so its first crossing has gr_u = 0.
BigradedComplex curve_to_complex(const PegCurve& pc);

/// Every right arc (essential arcs excluded); a single-crossing gamma0
/// contributes the degenerate arc.
std::vector<ClassifiedArc> classify_arcs(const PegCurve& pc);

/// Height of y0. Throws InvalidInput without gamma0.
int tau(const PegCurve& pc);

/// +1 if gamma0 turns down at y0, -1 if it turns up, 0 for a single crossing.
int epsilon(const PegCurve& pc);

/// Structure, pulled-tight lengths and the two right-arc obstructions; with
/// check_symmetry also the 180 degree rotation symmetry.
ValidationReport validate_curve(const PegCurve& pc, bool check_symmetry = false);

/// Cancels arcs of length zero (cyclically for closed components) until
/// every arc spans a peg. Closed components that vanish are dropped.
PegCurve pull_tight(const PegCurve& pc);

/// Curve of the mirror knot: every height negated, sides kept.
PegCurve mirror(const PegCurve& pc);

}  // namespace cableord
