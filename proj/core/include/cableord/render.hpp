#pragma once

#include <string>

#include "cableord/curve.hpp"

namespace cableord {

/// ASCII peg diagram, one block per component. Rows step by half a unit of
/// height (top first); the axis column shows pegs as 'o' and crossings as
/// '+'. Left arcs are drawn with '(' and right arcs with ')', shorter arcs
/// nearer the axis; '<' and '>' mark the essential ends of gamma0.
std::string render_curve(const PegCurve& pc);

}  // namespace cableord
