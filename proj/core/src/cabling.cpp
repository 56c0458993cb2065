#include "cableord/cabling.hpp"

#include <algorithm>
#include <numeric>

#include "cableord/errors.hpp"

namespace cableord {

void check_params(const CableParams& cp) {
  if (cp.p < 2) throw BadParams("cable needs p >= 2, got p = " + std::to_string(cp.p));
  if (std::gcd(cp.p, cp.q) != 1) {
    throw BadParams("cable parameters must be coprime, got (" + std::to_string(cp.p) + "," + std::to_string(cp.q) + ")");
  }
}

namespace {

// Exact value num/den with den > 0.
struct Frac {
  long long num;
  long long den;
};

bool less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
bool less(const Frac& a, long long b) { return a.num < b * a.den; }
bool greater(const Frac& a, long long b) { return a.num > b * a.den; }

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// The line through all pegs after staggering. Peg t sits at height t + p/2;
// x coordinates are stored times four so every column and offset is integral.
class PegLine {
 public:
  explicit PegLine(const CableParams& cp) : p_(cp.p) {
    const long long qm = mod(cp.q, cp.p);
    for (long long k = 1; k < p_; ++k) {
      if (mod(qm * k, p_) == 1) qinv_ = k;
    }
  }

  // Column (times four) of peg t.
  long long x4(long long t) const { return 4 * (mod(-t * qinv_, p_) + 1) - 2; }

  // Peg interval containing a horizontal line at integer height y, or nullopt
  // when y is a peg height. Returns {interval, x4 of the line at y}.
  std::optional<std::pair<long long, long long>> at_height(long long y) const {
    if (p_ % 2 == 0) return std::nullopt;
    const long long t = y - (p_ + 1) / 2;
    return std::make_pair(t, (x4(t) + x4(t + 1)) / 2);
  }

  long long p() const { return p_; }

 private:
  long long p_;
  long long qinv_ = 1;
};

struct RawCrossing {
  long long interval;
  bool left_to_right;
};

// Collects crossings of an axis-parallel polyline with the peg line, in order.
class Tracer {
 public:
  explicit Tracer(const PegLine& line) : line_(line) {}

  void segment(long long xa4, long long ya, long long xb4, long long yb) {
    if (ya == yb) {
      horizontal(ya, xa4, xb4);
    } else if (xa4 == xb4) {
      vertical(xa4, ya, yb);
    } else {
      throw NotPulledTight("polyline segment is not axis parallel");
    }
  }

  const std::vector<RawCrossing>& crossings() const { return crossings_; }
  std::size_t count() const { return crossings_.size(); }

 private:
  void horizontal(long long y, long long xa4, long long xb4) {
    if (xa4 == xb4) return;
    const long long lo = std::min(xa4, xb4);
    const long long hi = std::max(xa4, xb4);
    if (line_.p() % 2 == 0) {
      // y is a peg height; the peg line passes through that peg's column.
      const long long t = y - line_.p() / 2;
      const long long f = line_.x4(t);
      if (lo < f && f < hi) throw NotPulledTight("curve runs through a peg");
      return;
    }
    const auto hit = line_.at_height(y);
    const long long f = hit->second;
    if (lo < f && f < hi) crossings_.push_back({hit->first, xb4 > xa4});
  }

  void vertical(long long x4, long long ya, long long yb) {
    const long long lo = std::min(ya, yb);
    const long long hi = std::max(ya, yb);
    const bool up = yb > ya;
    std::vector<std::pair<Frac, RawCrossing>> found;
    // Peg t is at height t + p/2; intervals meeting (lo, hi) have t in this range.
    for (long long t = floor_div(2 * lo - line_.p(), 2) - 1; 2 * t + line_.p() < 2 * hi + 2; ++t) {
      const long long a = line_.x4(t);
      const long long b = line_.x4(t + 1);
      if (!((a < x4 && x4 < b) || (b < x4 && x4 < a))) continue;
      const long long d = b - a;
      Frac y{(2 * t + line_.p()) * d + 2 * (x4 - a), 2 * d};
      if (y.den < 0) y = {-y.num, -y.den};
      if (!greater(y, lo) || !less(y, hi)) continue;
      // Moving up across a segment that heads right means passing from its right to its left.
      const bool ltr = up ? (a > x4) : (a < x4);
      found.push_back({y, {t, ltr}});
    }
    std::sort(found.begin(), found.end(), [up](const auto& l, const auto& r) {
      return up ? less(l.first, r.first) : less(r.first, l.first);
    });
    for (const auto& f : found) crossings_.push_back(f.second);
  }

  const PegLine& line_;
  std::vector<RawCrossing> crossings_;
};

struct DisjointSets {
  std::vector<std::size_t> parent;

  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Reduced {
  std::vector<RawCrossing> crossings;
  // runs[i] is the run preceding crossing i; runs.back() follows the last one.
  std::vector<std::size_t> runs;
};

// Free reduction of a crossing word. Local run r lies between raw crossings r-1
// and r; run ids are allocated in `runs` starting at its current size.
Reduced reduce_word(const std::vector<RawCrossing>& raw, bool cyclic, DisjointSets& runs) {
  const std::size_t base = runs.parent.size();
  for (std::size_t i = 0; i <= raw.size(); ++i) runs.add();
  if (cyclic) runs.unite(base + raw.size(), base);
  struct Item {
    RawCrossing c;
    std::size_t before;
  };
  std::vector<Item> stack;
  std::size_t cur = base;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!stack.empty() && stack.back().c.interval == raw[j].interval) {
      if (stack.back().c.left_to_right == raw[j].left_to_right) throw NotPulledTight("consecutive crossings share a direction");
      runs.unite(cur, stack.back().before);
      runs.unite(base + j + 1, stack.back().before);
      cur = stack.back().before;
      stack.pop_back();
    } else {
      stack.push_back({raw[j], cur});
      cur = base + j + 1;
    }
  }
  std::size_t front = 0;
  if (cyclic) {
    while (stack.size() - front >= 2 && stack[front].c.interval == stack.back().c.interval) {
      const std::size_t after_front = front + 1 < stack.size() ? stack[front + 1].before : cur;
      runs.unite(cur, stack.back().before);
      runs.unite(stack[front].before, stack.back().before);
      runs.unite(after_front, stack.back().before);
      cur = stack.back().before;
      stack.pop_back();
      ++front;
    }
  }
  Reduced out;
  for (std::size_t i = front; i < stack.size(); ++i) {
    out.crossings.push_back(stack[i].c);
    out.runs.push_back(stack[i].before);
  }
  out.runs.push_back(cur);
  return out;
}

struct Marker {
  ArcLocation arc;
  std::size_t run;
};

struct Builder {
  const CableParams& cp;
  const PegLine& line;

  long long column4(int k) const { return 4LL * k - 2; }
  long long height(int k, int h) const { return static_cast<long long>(cp.p) * h - static_cast<long long>(k - 1) * cp.q; }
  long long offset(Side s) const { return s == Side::Right ? 1 : -1; }
};

// Walks gamma0's p copies as one polyline; records copy p's right-arc markers.
std::vector<RawCrossing> trace_gamma0(const Builder& b, const CurveComponent& g, std::size_t ci, DisjointSets& runs,
                                      std::vector<Marker>& markers) {
  Tracer tr(b.line);
  const std::size_t m = g.crossings.size();
  const int p = b.cp.p;
  long long x = 0;
  long long y = b.height(1, g.crossings[0]);
  const std::size_t base = runs.parent.size();
  for (int k = 1; k <= p; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const long long yi = b.height(k, g.crossings[i]);
      long long xs = 0;
      if (i + 1 < m) {
        xs = b.column4(k) + b.offset(g.side_after(i));
      } else {
        xs = k == p ? 4LL * p : b.column4(k) + 1;
      }
      tr.segment(x, y, xs, yi);
      x = xs;
      y = yi;
      long long ny = 0;
      if (i + 1 < m) {
        ny = b.height(k, g.crossings[i + 1]);
      } else if (k < p) {
        ny = b.height(k + 1, g.crossings[0]);
      } else {
        continue;
      }
      if (k == p && i + 1 < m && g.side_after(i) == Side::Right) {
        markers.push_back({{ci, i}, base + tr.count()});
      }
      const std::size_t before = tr.count();
      tr.segment(x, y, x, ny);
      if (k == p && i + 1 < m && g.side_after(i) == Side::Right && tr.count() != before) {
        throw NotPulledTight("the rightmost copy crossed the peg line on its right side");
      }
      y = ny;
    }
  }
  return tr.crossings();
}

// One copy of a closed component as a cyclic polyline starting at its first vertex.
std::vector<RawCrossing> trace_closed(const Builder& b, const CurveComponent& c, int k, std::size_t ci,
                                      DisjointSets& runs, std::vector<Marker>& markers) {
  Tracer tr(b.line);
  const std::size_t m = c.crossings.size();
  const std::size_t base = runs.parent.size();
  const long long x0 = b.column4(k) + b.offset(c.side_after(0));
  long long x = x0;
  long long y = b.height(k, c.crossings[0]);
  for (std::size_t i = 0; i < m; ++i) {
    const long long ny = b.height(k, c.crossings[c.next(i)]);
    if (k == b.cp.p && c.side_after(i) == Side::Right) markers.push_back({{ci, i}, base + tr.count()});
    tr.segment(x, y, x, ny);
    y = ny;
    const long long nx = b.column4(k) + b.offset(c.side_after(c.next(i)));
    tr.segment(x, y, nx, y);
    x = nx;
  }
  return tr.crossings();
}

}  // namespace

CableTrace cable_traced(const PegCurve& pc, const CableParams& cp) {
  check_params(cp);
  const PegLine line(cp);
  const Builder b{cp, line};
  // Interval t maps to height t + shift; this recentres gamma0's ends at 0.
  const long long shift = (cp.p + 1 + static_cast<long long>(cp.p - 1) * cp.q) / 2;

  CableTrace out;
  DisjointSets runs;
  std::vector<Marker> markers;
  struct Piece {
    std::size_t source;
    bool gamma0;
    Reduced reduced;
  };
  std::vector<Piece> pieces;

  for (std::size_t ci = 0; ci < pc.components.size(); ++ci) {
    const auto& comp = pc.components[ci];
    if (comp.crossings.empty()) throw InvalidInput("component without crossings");
    if (comp.kind == ComponentKind::Gamma0) {
      auto raw = trace_gamma0(b, comp, ci, runs, markers);
      pieces.push_back({ci, true, reduce_word(raw, false, runs)});
    } else {
      for (int k = 1; k <= cp.p; ++k) {
        auto raw = trace_closed(b, comp, k, ci, runs, markers);
        pieces.push_back({ci, false, reduce_word(raw, true, runs)});
      }
    }
  }

  // Arc representative -> output location.
  std::map<std::size_t, ArcLocation> arc_of_run;
  for (const auto& piece : pieces) {
    const auto& red = piece.reduced;
    if (!piece.gamma0 && red.crossings.empty()) continue;
    CurveComponent comp;
    comp.kind = piece.gamma0 ? ComponentKind::Gamma0 : ComponentKind::Closed;
    for (const auto& c : red.crossings) comp.crossings.push_back(static_cast<int>(c.interval + shift));
    if (piece.gamma0) {
      if (red.crossings.empty() || !red.crossings.front().left_to_right || !red.crossings.back().left_to_right) {
        throw NotPulledTight("cabled gamma0 does not run from the left end to the right end");
      }
      comp.first_side = Side::Left;
    } else {
      comp.first_side = red.crossings.front().left_to_right ? Side::Right : Side::Left;
    }
    const std::size_t index = out.curve.components.size();
    for (std::size_t i = 0; i < comp.arc_count(); ++i) {
      if (comp.side_after(i) == Side::Right) arc_of_run[runs.find(red.runs[i + 1])] = {index, i};
    }
    out.curve.components.push_back(std::move(comp));
  }
  for (const auto& mk : markers) {
    auto it = arc_of_run.find(runs.find(mk.run));
    out.right_arc_images[mk.arc] = it == arc_of_run.end() ? std::nullopt : std::optional<ArcLocation>(it->second);
  }
  for (const auto& comp : out.curve.components) {
    for (std::size_t i = 0; i < comp.arc_count(); ++i) {
      if (comp.crossings[i] == comp.crossings[comp.next(i)]) throw NotPulledTight("an arc of length zero survived");
    }
  }
  return out;
}

PegCurve cable_geometric(const PegCurve& pc, const CableParams& cp) { return cable_traced(pc, cp).curve; }

RulePrediction cable_arc_rule(const ArcForm& arc, const CableParams& cp, int tau_base, int epsilon_base) {
  check_params(cp);
  const int p = cp.p;
  const int q = cp.q;
  const int n = arc.length;
  if (arc.degenerate) throw RuleNotApplicable("the degenerate arc of the unknot is not covered");
  if (n < 1) throw RuleNotApplicable("arc is not pulled tight");
  RulePrediction r;
  r.initial = false;
  r.bottom = arc.bottom;
  if (!arc.initial) {
    const std::string f = arc.form();
    if (f == "--" || f == "++") {
      r.length = p * n;
    } else if (f == "-+") {
      r.length = p * n - p + 1;
    } else if (f == "+-") {
      r.length = p * n + p - 1;
    } else {
      throw RuleNotApplicable("noninitial arc of form " + f + " is not covered");
    }
    r.top = arc.top;
    return r;
  }
  if (epsilon_base != 1) throw RuleNotApplicable("initial arcs are covered only when epsilon = 1");
  if (arc.bottom == '0') throw RuleNotApplicable("initial arc with bottom end in the window");
  const long long low = static_cast<long long>(p) * (2LL * tau_base - 1);
  const long long high = 2LL * p * tau_base;
  if (q == low || q == high) throw RuleNotApplicable("q sits on a range boundary");
  const int range = q < low ? 1 : (q < high ? 2 : 3);
  const int t = tau_base;
  if (arc.bottom == '-') {
    r.length = range == 1 ? p * n : (range == 2 ? p * n + p - 2 * p * t + q - 1 : p * n + p - 1);
  } else {
    r.length = range == 1 ? p * n - p + 1 : (range == 2 ? p * n - 2 * p * t + q : p * n);
  }
  if (arc.top == '-' && arc.bottom == '-') r.top = range == 1 ? '-' : '+';
  return r;
}

bool CheckReport::ok() const { return mismatches() == 0; }

int CheckReport::mismatches() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const RuleCheck& c) { return !c.match; }));
}

CheckReport crosscheck_rules(const PegCurve& pc, const CableParams& cp) {
  check_params(cp);
  CheckReport report;
  const auto trace = cable_traced(pc, cp);
  const auto output_arcs = classify_arcs(trace.curve);
  const bool has_gamma0 = pc.gamma0() != nullptr;
  const int t = has_gamma0 ? tau(pc) : 0;
  const int e = has_gamma0 ? epsilon(pc) : 0;
  for (const auto& arc : classify_arcs(pc)) {
    if (arc.form.degenerate) {
      ++report.uncovered;
      continue;
    }
    RuleCheck check;
    check.arc = {arc.component, arc.start};
    check.base = arc.form;
    try {
      check.predicted = cable_arc_rule(arc.form, cp, t, e);
    } catch (const RuleNotApplicable&) {
      ++report.uncovered;
      continue;
    }
    const auto it = trace.right_arc_images.find(check.arc);
    if (it != trace.right_arc_images.end() && it->second) {
      for (const auto& out : output_arcs) {
        if (out.component == it->second->component && out.start == it->second->start) check.observed = out.form;
      }
    }
    if (!check.observed) {
      check.detail = "image is not a right arc between two crossings";
    } else {
      const auto& o = *check.observed;
      const auto& pr = check.predicted;
      std::string why;
      if (o.length != pr.length) why += "length " + std::to_string(o.length) + " != " + std::to_string(pr.length) + "; ";
      if (o.bottom != pr.bottom) why += std::string("bottom ") + o.bottom + " != " + pr.bottom + "; ";
      if (pr.top && o.top != *pr.top) why += std::string("top ") + o.top + " != " + *pr.top + "; ";
      if (o.initial != pr.initial) why += "initial flag differs; ";
      check.match = why.empty();
      check.detail = why;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

PegCurve iterate_cable(const PegCurve& base, const std::vector<CableParams>& stages) {
  PegCurve cur = base;
  for (const auto& st : stages) cur = cable_geometric(cur, st);
  return cur;
}

int max_right_arc(const PegCurve& pc) {
  int best = 0;
  for (const auto& a : classify_arcs(pc)) best = std::max(best, a.form.length);
  return best;
}

}  // namespace cableord
