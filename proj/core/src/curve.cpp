#include "cableord/curve.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "cableord/errors.hpp"

namespace cableord {

Side CurveComponent::side_after(std::size_t i) const {
  if (kind == ComponentKind::Gamma0) return i % 2 == 0 ? opposite(first_side) : first_side;
  return i % 2 == 0 ? first_side : opposite(first_side);
}

std::size_t CurveComponent::arc_count() const {
  if (crossings.empty()) return 0;
  return kind == ComponentKind::Gamma0 ? crossings.size() - 1 : crossings.size();
}

const CurveComponent* PegCurve::gamma0() const {
  for (const auto& comp : components) {
    if (comp.kind == ComponentKind::Gamma0) return &comp;
  }
  return nullptr;
}

std::string ArcForm::form() const {
  if (degenerate) return "0";
  return std::string{top, bottom};
}

namespace {

char turn(int from, int to) {
  if (to > from) return '+';
  if (to < from) return '-';
  return '0';
}

// Behavior of the curve at crossing j, seen along the arc that does not start at `arc`.
char end_behavior(const CurveComponent& comp, std::size_t arc, std::size_t j) {
  const auto& h = comp.crossings;
  const std::size_t n = h.size();
  if (comp.kind == ComponentKind::Gamma0 && j == 0) return turn(h[0], 0);
  if (comp.kind == ComponentKind::Gamma0 && j == n - 1) return turn(h[j], 0);
  const std::size_t other = (j == arc) ? (j + n - 1) % n : j;
  const std::size_t far = (other == j) ? comp.next(j) : other;
  return turn(h[j], h[far]);
}

const CurveComponent& require_gamma0(const PegCurve& pc) {
  const auto* g = pc.gamma0();
  if (!g || g->crossings.empty()) throw InvalidInput("curve has no gamma0 component");
  return *g;
}

using Key = std::vector<std::pair<int, int>>;

Key encode(const std::vector<int>& h, const std::vector<Side>& sides) {
  Key k;
  for (std::size_t i = 0; i < h.size(); ++i) k.push_back({h[i], sides[i] == Side::Left ? 0 : 1});
  return k;
}

// Minimal encoding over all starting points and both traversal directions.
Key canonical_closed(const CurveComponent& comp) {
  const std::size_t n = comp.crossings.size();
  std::vector<Side> sides(n);
  for (std::size_t i = 0; i < n; ++i) sides[i] = comp.side_after(i);
  std::optional<Key> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> fh(n), bh(n);
    std::vector<Side> fs(n), bs(n);
    for (std::size_t i = 0; i < n; ++i) {
      fh[i] = comp.crossings[(s + i) % n];
      fs[i] = sides[(s + i) % n];
      const std::size_t j = (s + n - i) % n;
      bh[i] = comp.crossings[j];
      bs[i] = sides[(j + n - 1) % n];
    }
    for (Key k : {encode(fh, fs), encode(bh, bs)}) {
      if (!best || k < *best) best = std::move(k);
    }
  }
  return best.value_or(Key{});
}

bool symmetric(const PegCurve& pc) {
  std::multiset<Key> closed;
  std::multiset<Key> rotated;
  for (const auto& comp : pc.components) {
    if (comp.kind == ComponentKind::Gamma0) {
      const auto& h = comp.crossings;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[h.size() - 1 - i] != -h[i]) return false;
      }
      continue;
    }
    closed.insert(canonical_closed(comp));
    CurveComponent r = comp;
    for (auto& x : r.crossings) x = -x;
    r.first_side = opposite(r.first_side);
    rotated.insert(canonical_closed(r));
  }
  return closed == rotated;
}

}  // namespace

std::vector<ClassifiedArc> classify_arcs(const PegCurve& pc) {
  std::vector<ClassifiedArc> out;
  for (std::size_t ci = 0; ci < pc.components.size(); ++ci) {
    const auto& comp = pc.components[ci];
    const auto& h = comp.crossings;
    if (comp.kind == ComponentKind::Gamma0 && h.size() == 1) {
      ArcForm f;
      f.initial = true;
      f.degenerate = true;
      out.push_back({ci, 0, f});
      continue;
    }
    for (std::size_t i = 0; i < comp.arc_count(); ++i) {
      if (comp.side_after(i) != Side::Right) continue;
      const std::size_t j = comp.next(i);
      const std::size_t top = h[j] > h[i] ? j : i;
      const std::size_t bottom = top == i ? j : i;
      ArcForm f;
      f.length = std::abs(h[j] - h[i]);
      f.top = end_behavior(comp, i, top);
      f.bottom = end_behavior(comp, i, bottom);
      f.initial = comp.kind == ComponentKind::Gamma0 && i == 0;
      out.push_back({ci, i, f});
    }
  }
  return out;
}

int tau(const PegCurve& pc) { return require_gamma0(pc).crossings.front(); }

int epsilon(const PegCurve& pc) {
  const auto& g = require_gamma0(pc);
  if (g.crossings.size() == 1) return 0;
  if (g.crossings[1] < g.crossings[0]) return 1;
  if (g.crossings[1] > g.crossings[0]) return -1;
  return 0;
}

ValidationReport validate_curve(const PegCurve& pc, bool check_symmetry) {
  ValidationReport report;

  const auto gamma_count = std::count_if(pc.components.begin(), pc.components.end(),
                                         [](const CurveComponent& c) { return c.kind == ComponentKind::Gamma0; });
  report.add("single_gamma0", gamma_count == 1, std::to_string(gamma_count) + " gamma0 components");

  std::string structure;
  std::string slack;
  for (std::size_t ci = 0; ci < pc.components.size() && structure.empty(); ++ci) {
    const auto& comp = pc.components[ci];
    const auto n = comp.crossings.size();
    const std::string where = "component " + std::to_string(ci);
    if (!comp.labels.empty() && comp.labels.size() != n) structure = where + ": label count differs from crossing count";
    if (comp.kind == ComponentKind::Gamma0) {
      if (n % 2 == 0) structure = where + ": gamma0 needs an odd number of crossings";
      if (comp.first_side != Side::Left) structure = where + ": gamma0 must start with its essential left arc";
    } else if (n < 2 || n % 2 != 0) {
      structure = where + ": closed component needs a positive even number of crossings";
    }
    if (!structure.empty()) break;
    for (std::size_t i = 0; i < comp.arc_count() && slack.empty(); ++i) {
      if (comp.crossings[i] == comp.crossings[comp.next(i)]) {
        slack = where + ": arc starting at crossing " + std::to_string(i) + " spans no peg";
      }
    }
  }
  report.add("structure", structure.empty(), structure);
  report.add("pulled_tight", slack.empty(), slack);

  std::string bad_a;
  std::string bad_b;
  if (structure.empty()) {
    const int eps = gamma_count == 1 ? epsilon(pc) : 0;
    for (const auto& arc : classify_arcs(pc)) {
      const auto& f = arc.form;
      const std::string where = "component " + std::to_string(arc.component) + " arc " + std::to_string(arc.start);
      if (!f.initial && f.length == 1 && f.top == '-' && f.bottom == '+' && bad_a.empty()) {
        bad_a = where + " is a noninitial eta_1^{-+}";
      }
      if (f.initial && !f.degenerate && eps == 1 && f.length == 1 && f.bottom == '+' && bad_b.empty()) {
        bad_b = where + " is an initial eta_1^{" + f.form() + "} with epsilon = 1";
      }
    }
  }
  report.add("no_noninitial_eta1_minus_plus", bad_a.empty(), bad_a);
  report.add("no_initial_eta1_plus", bad_b.empty(), bad_b);

  if (check_symmetry) {
    const bool ok = structure.empty() && symmetric(pc);
    report.add("rotation_symmetry", ok, ok ? "" : "curve is not invariant under 180 degree rotation");
  }
  return report;
}

PegCurve complex_to_curve(const BigradedComplex& c, const ArrowPairing& horizontal, const ArrowPairing& vertical) {
  const std::size_t n = c.size();
  std::vector<std::optional<std::size_t>> right(n), left(n);
  auto find = [&](const std::string& id) {
    auto idx = c.index_of(id);
    if (!idx) throw InvalidInput("pairing refers to unknown generator '" + id + "'");
    return *idx;
  };
  auto link = [&](std::vector<std::optional<std::size_t>>& partner, const ArrowPair& p, int rise) {
    const auto s = find(p.source);
    const auto t = find(p.target);
    if (partner[s] || partner[t]) throw InvalidInput("generator '" + p.source + "' or '" + p.target + "' paired twice");
    if (c.generator(t).alexander() - c.generator(s).alexander() != rise * p.length) {
      throw InvalidInput("pair " + p.source + " -> " + p.target + " disagrees with the Alexander gradings");
    }
    partner[s] = t;
    partner[t] = s;
  };
  for (const auto& p : horizontal.pairs) link(right, p, 1);
  for (const auto& p : vertical.pairs) link(left, p, -1);

  std::vector<bool> seen(n, false);
  auto add = [&](CurveComponent& comp, std::size_t i) {
    if (seen[i]) throw InvalidInput("pairings revisit generator '" + c.generator(i).id + "'");
    seen[i] = true;
    comp.crossings.push_back(c.generator(i).alexander());
    comp.labels.push_back(c.generator(i).id);
  };

  PegCurve pc;
  if (horizontal.unpaired.has_value() != vertical.unpaired.has_value()) {
    throw InvalidInput("exactly one of the pairings has an unpaired generator");
  }
  if (horizontal.unpaired) {
    CurveComponent g0;
    g0.kind = ComponentKind::Gamma0;
    g0.first_side = Side::Left;
    const std::size_t x0 = find(*horizontal.unpaired);
    std::size_t cur = find(*vertical.unpaired);
    add(g0, cur);
    bool need_right = true;
    while (true) {
      const auto& next = need_right ? right[cur] : left[cur];
      if (!next) {
        if (need_right && cur == x0) break;
        throw InvalidInput("pairings do not form a path from y0 to x0");
      }
      cur = *next;
      add(g0, cur);
      need_right = !need_right;
    }
    pc.components.push_back(std::move(g0));
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    CurveComponent comp;
    comp.kind = ComponentKind::Closed;
    comp.first_side = Side::Right;
    std::size_t cur = start;
    bool need_right = true;
    do {
      add(comp, cur);
      const auto& next = need_right ? right[cur] : left[cur];
      if (!next) throw InvalidInput("generator '" + c.generator(cur).id + "' lies on an open path that is not gamma0");
      cur = *next;
      need_right = !need_right;
    } while (cur != start);
    if (!need_right) throw InvalidInput("closed component with an odd number of arcs");
    pc.components.push_back(std::move(comp));
  }
  return pc;
}

PegCurve curve_of(const BigradedComplex& c) {
  const auto s = simultaneous_simplify(c.ring() == RingMode::Full ? to_mod_uv(c) : c);
  return complex_to_curve(s.complex, s.horizontal, s.vertical);
}

BigradedComplex curve_to_complex(const PegCurve& pc) {
  std::vector<Generator> gens;
  std::vector<ArrowSpec> arrows;
  for (std::size_t ci = 0; ci < pc.components.size(); ++ci) {
    const auto& comp = pc.components[ci];
    const auto& h = comp.crossings;
    const std::size_t n = h.size();
    if (n == 0) throw InvalidInput("component " + std::to_string(ci) + " has no crossings");
    const std::size_t base = gens.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = comp.labels.empty() ? "g" + std::to_string(ci) + "_" + std::to_string(i) : comp.labels[i];
      gens.push_back({std::move(id), 0, 0});
    }
    // Grade along the traversal with crossing 0 at gr_v = 0, then shift.
    std::vector<int> gu(n), gv(n);
    gu[0] = 2 * h[0];
    gv[0] = 0;
    for (std::size_t i = 0; i < comp.arc_count(); ++i) {
      const std::size_t j = comp.next(i);
      const int len = std::abs(h[j] - h[i]);
      if (len == 0) throw InvalidInput("component " + std::to_string(ci) + " has an arc spanning no peg");
      const bool right_arc = comp.side_after(i) == Side::Right;
      // Right arcs point up by U^len, left arcs point down by V^len.
      const bool forward = right_arc ? h[j] > h[i] : h[j] < h[i];
      const int du = -1 + (right_arc ? 2 * len : 0);
      const int dv = -1 + (right_arc ? 0 : 2 * len);
      const int su = forward ? du : -du;
      const int sv = forward ? dv : -dv;
      if (j == 0) {
        if (gu[i] + su != gu[0] || gv[i] + sv != gv[0]) {
          throw InvalidInput("closed component " + std::to_string(ci) + " admits no consistent Maslov grading");
        }
      } else {
        gu[j] = gu[i] + su;
        gv[j] = gv[i] + sv;
      }
      const std::size_t from = forward ? i : j;
      const std::size_t to = forward ? j : i;
      arrows.push_back({gens[base + from].id, gens[base + to].id, right_arc ? len : 0, right_arc ? 0 : len});
    }
    int shift_u = 0;
    int shift_v = 0;
    if (comp.kind == ComponentKind::Gamma0) {
      shift_u = shift_v = -gv[n - 1];
    } else {
      shift_u = shift_v = -gu[0];
    }
    for (std::size_t i = 0; i < n; ++i) {
      gens[base + i].gr_u = gu[i] + shift_u;
      gens[base + i].gr_v = gv[i] + shift_v;
    }
  }
  return BigradedComplex::from_arrows(RingMode::ModUV, std::move(gens), arrows);
}

PegCurve pull_tight(const PegCurve& pc) {
  PegCurve out;
  for (const auto& comp : pc.components) {
    CurveComponent c = comp;
    const bool labelled = !c.labels.empty();
    auto erase_pair = [&](std::size_t i) {
      c.crossings.erase(c.crossings.begin() + static_cast<std::ptrdiff_t>(i),
                        c.crossings.begin() + static_cast<std::ptrdiff_t>(i + 2));
      if (labelled) {
        c.labels.erase(c.labels.begin() + static_cast<std::ptrdiff_t>(i),
                       c.labels.begin() + static_cast<std::ptrdiff_t>(i + 2));
      }
    };
    bool changed = true;
    while (changed && !c.crossings.empty()) {
      changed = false;
      for (std::size_t i = 0; i + 1 < c.crossings.size(); ++i) {
        if (c.crossings[i] == c.crossings[i + 1]) {
          erase_pair(i);
          changed = true;
          break;
        }
      }
      if (!changed && c.kind == ComponentKind::Closed && c.crossings.size() >= 2 &&
          c.crossings.back() == c.crossings.front()) {
        c.crossings.pop_back();
        c.crossings.erase(c.crossings.begin());
        if (labelled) {
          c.labels.pop_back();
          c.labels.erase(c.labels.begin());
        }
        c.first_side = opposite(c.first_side);
        changed = true;
      }
    }
    if (c.kind == ComponentKind::Closed && c.crossings.empty()) continue;
    out.components.push_back(std::move(c));
  }
  return out;
}

PegCurve mirror(const PegCurve& pc) {
  PegCurve out = pc;
  for (auto& comp : out.components) {
    for (auto& h : comp.crossings) h = -h;
  }
  return out;
}

}  // namespace cableord
