#include "cableord/render.hpp"

#include <algorithm>
#include <sstream>

namespace cableord {

namespace {

struct DrawnArc {
  int lo;
  int hi;
  std::size_t index;
};

// Offsets from the axis: shortest arcs innermost, ties by position along the curve.
std::vector<DrawnArc> arcs_on(const CurveComponent& comp, Side side) {
  std::vector<DrawnArc> out;
  for (std::size_t i = 0; i < comp.arc_count(); ++i) {
    if (comp.side_after(i) != side) continue;
    const int a = comp.crossings[i];
    const int b = comp.crossings[comp.next(i)];
    out.push_back({std::min(a, b), std::max(a, b), i});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DrawnArc& x, const DrawnArc& y) { return x.hi - x.lo < y.hi - y.lo; });
  return out;
}

void render_component(std::ostringstream& os, const CurveComponent& comp) {
  const bool open = comp.kind == ComponentKind::Gamma0;
  const auto left = arcs_on(comp, Side::Left);
  const auto right = arcs_on(comp, Side::Right);
  const std::size_t wl = left.size() + (open ? 1 : 0);
  const std::size_t wr = right.size() + (open ? 1 : 0);
  int top = *std::max_element(comp.crossings.begin(), comp.crossings.end());
  int bottom = *std::min_element(comp.crossings.begin(), comp.crossings.end());
  if (open) {
    top = std::max(top, 0);
    bottom = std::min(bottom, 0);
  }
  ++top;
  --bottom;
  const std::size_t label_width = std::max(std::to_string(top).size(), std::to_string(bottom).size());

  for (int y2 = 2 * top; y2 >= 2 * bottom; --y2) {
    // cells[0] is farthest left; axis sits between the two halves.
    std::string l(wl, ' ');
    std::string r(wr, ' ');
    auto draw = [&](std::string& half, bool is_left, std::size_t d, char c) {
      half[is_left ? half.size() - d : d - 1] = c;
    };
    auto fill = [&](std::string& half, bool is_left, std::size_t upto) {
      for (std::size_t d = 1; d < upto; ++d) {
        char& cell = half[is_left ? half.size() - d : d - 1];
        if (cell == ' ') cell = '-';
      }
    };
    for (std::size_t k = 0; k < left.size(); ++k) {
      const auto& a = left[k];
      if (y2 < 2 * a.lo || y2 > 2 * a.hi) continue;
      draw(l, true, k + 1, '(');
      if (y2 == 2 * a.lo || y2 == 2 * a.hi) fill(l, true, k + 1);
    }
    for (std::size_t k = 0; k < right.size(); ++k) {
      const auto& a = right[k];
      if (y2 < 2 * a.lo || y2 > 2 * a.hi) continue;
      draw(r, false, k + 1, ')');
      if (y2 == 2 * a.lo || y2 == 2 * a.hi) fill(r, false, k + 1);
    }
    if (open && y2 == 2 * comp.crossings.front()) {
      fill(l, true, wl);
      draw(l, true, wl, '<');
    }
    if (open && y2 == 2 * comp.crossings.back()) {
      fill(r, false, wr);
      draw(r, false, wr, '>');
    }
    char axis = '|';
    if (y2 % 2 != 0) {
      axis = 'o';
    } else if (std::find(comp.crossings.begin(), comp.crossings.end(), y2 / 2) != comp.crossings.end()) {
      axis = '+';
    }
    std::string label = y2 % 2 == 0 ? std::to_string(y2 / 2) : "";
    std::string line = std::string(label_width - label.size(), ' ') + label + " " + l + axis + r;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
}

}  // namespace

std::string render_curve(const PegCurve& pc) {
  std::ostringstream os;
  std::size_t closed = 0;
  for (std::size_t i = 0; i < pc.components.size(); ++i) {
    const auto& comp = pc.components[i];
    if (i > 0) os << "\n";
    if (comp.kind == ComponentKind::Gamma0) {
      os << "gamma0\n";
    } else {
      os << "closed " << ++closed << "\n";
    }
    if (comp.crossings.empty()) continue;
    render_component(os, comp);
  }
  return os.str();
}

}  // namespace cableord
