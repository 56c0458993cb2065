#include "cableord/bounds.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cableord/cabling.hpp"
#include "cableord/errors.hpp"

namespace cableord {

namespace {

int product(const std::vector<int>& ps) { return std::accumulate(ps.begin(), ps.end(), 1, std::multiplies<>()); }

}  // namespace

int unknotting_lower(int ord) { return ord; }

int cable_ord_lower(int ord_base, const std::vector<int>& ps) {
  if (ord_base <= 0) throw TrivialBase("the cable bound needs a nontrivial base (Ord >= 1)");
  const int prod = product(ps);
  return std::max(prod * (ord_base - 1) + 1, prod);
}

LspaceBound lspace_cable_ord_lower(const StaircaseSpec& base, const std::vector<int>& ps,
                                   std::optional<int> base_bridge) {
  if (check_unique_genus_one(base)) throw ExcludedBase("the trefoil is excluded from the L-space cable bound");
  const int ord = ord_lspace(base);
  if (ord == 0) throw TrivialBase("the L-space cable bound needs a nontrivial base");
  return {product(ps) * (ord + 1) - 1, base_bridge.has_value() && *base_bridge == ord + 1};
}

int schubert_bridge(int br_base, const std::vector<int>& ps) { return br_base * product(ps); }

int bridge_braid_lower(int ord) { return ord + 1; }

std::optional<int> local_minima_lower(int ord, bool slice_assumed) {
  if (!slice_assumed) return std::nullopt;
  return ord + 1;
}

BoundsReport report(const CableSpec& input, const ReportOptions& opts) {
  CableSpec spec = input;
  bool mirrored = false;
  std::optional<NormalizedTorus> torus;
  if (const auto* t = std::get_if<TorusBase>(&spec.base)) {
    torus = normalize_torus(*t);
    if (torus->mirrored) {
      // -(K_{p,q}) is (-K)_{p,-q}: work with the positive torus knot.
      mirrored = true;
      spec.base = TorusBase{torus->p0, torus->q0};
      for (auto& st : spec.stages) st.q = -st.q;
      torus->mirrored = false;
    }
  }

  BoundsReport r;
  r.spec = input.to_string();
  const PegCurve base = base_curve(spec);
  const PegCurve curve = iterate_cable(base, spec.stages);
  const int ord_base = max_right_arc(base);
  const auto ps = spec.winding_numbers();

  r.ord = max_right_arc(curve);
  r.tau = tau(curve);
  r.epsilon = epsilon(curve);
  if (mirrored) {
    r.tau = -r.tau;
    r.epsilon = -r.epsilon;
  }
  r.provenance["ord"] = "direct: longest right arc of the cabled curve";
  r.provenance["tau"] = mirrored ? "direct: height of y0, negated for the mirror" : "direct: height of y0";
  r.provenance["epsilon"] = mirrored ? "direct: turn at y0, negated for the mirror" : "direct: turn at y0";

  r.u_lower = unknotting_lower(r.ord);
  r.provenance["u_lower"] = "formula: u >= Ord";
  r.br_lower = bridge_braid_lower(r.ord);
  r.provenance["br_lower"] = "formula: br >= Ord + 1";
  r.b_lower = bridge_braid_lower(r.ord);
  r.provenance["b_lower"] = "formula: b >= br >= Ord + 1";
  r.minima_lower = local_minima_lower(r.ord, opts.slice_assumed);
  r.provenance["minima_lower"] =
      opts.slice_assumed ? "formula: local minima >= Ord + 1 (sliceness assumed by the user)" : "absent: sliceness not assumed";

  if (ord_base >= 1) {
    r.formula_ord_lower = cable_ord_lower(ord_base, ps);
    r.provenance["formula_ord_lower"] = "formula: max(P(Ord(K)-1)+1, P) from the base Ord";
  } else {
    r.provenance["formula_ord_lower"] = "absent: trivial base";
  }

  // Schubert's product formula needs a nontrivial companion.
  std::optional<int> bridge = opts.base_bridge;
  if (torus) bridge = torus->trivial() ? std::nullopt : std::optional<int>(torus->p0);
  if (bridge) {
    r.schubert_bridge = schubert_bridge(*bridge, ps);
    r.provenance["schubert_bridge"] = "exact: base bridge index times every winding";
  } else {
    r.provenance["schubert_bridge"] = "absent: base bridge index unknown or base trivial";
  }

  if (torus && !torus->trivial()) {
    const auto stair = torus_staircase(*torus);
    if (check_unique_genus_one(stair)) {
      r.provenance["lspace_ord_lower"] = "absent: the trefoil base is excluded";
    } else {
      const auto lb = lspace_cable_ord_lower(stair, ps, bridge);
      r.lspace_ord_lower = lb.value;
      r.equality_certified = lb.equality;
      r.provenance["lspace_ord_lower"] = lb.equality ? "formula: P(Ord(K)+1)-1, attained since br(K) = Ord(K)+1"
                                                     : "formula: P(Ord(K)+1)-1";
    }
  } else {
    r.provenance["lspace_ord_lower"] = "absent: base is not a nontrivial torus knot";
  }

  if (r.formula_ord_lower && r.ord < *r.formula_ord_lower) {
    throw CheckMismatch("direct Ord " + std::to_string(r.ord) + " is below the cable bound " +
                        std::to_string(*r.formula_ord_lower));
  }
  if (r.lspace_ord_lower && r.ord < *r.lspace_ord_lower) {
    throw CheckMismatch("direct Ord " + std::to_string(r.ord) + " is below the L-space bound " +
                        std::to_string(*r.lspace_ord_lower));
  }
  if (r.equality_certified && r.ord != *r.lspace_ord_lower) {
    throw CheckMismatch("certified equality fails: Ord " + std::to_string(r.ord) + " vs " +
                        std::to_string(*r.lspace_ord_lower));
  }
  if (r.schubert_bridge && r.br_lower > *r.schubert_bridge) {
    throw CheckMismatch("bridge lower bound exceeds the bridge index");
  }
  return r;
}

std::string bounds_to_json(const BoundsReport& r) {
  using json = nlohmann::ordered_json;
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  json doc;
  doc["schema"] = 1;
  doc["spec"] = r.spec;
  doc["ord"] = r.ord;
  doc["tau"] = r.tau;
  doc["epsilon"] = r.epsilon;
  doc["u_lower"] = r.u_lower;
  doc["br_lower"] = r.br_lower;
  doc["b_lower"] = r.b_lower;
  doc["minima_lower"] = opt(r.minima_lower);
  doc["formula_ord_lower"] = opt(r.formula_ord_lower);
  doc["lspace_ord_lower"] = opt(r.lspace_ord_lower);
  doc["equality_certified"] = r.equality_certified;
  doc["schubert_bridge"] = opt(r.schubert_bridge);
  doc["provenance"] = json::object();
  for (const auto& [k, v] : r.provenance) doc["provenance"][k] = v;
  return doc.dump(2) + "\n";
}

std::string bounds_to_text(const BoundsReport& r) {
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"ord", std::to_string(r.ord)},
      {"tau", std::to_string(r.tau)},
      {"epsilon", std::to_string(r.epsilon)},
      {"u_lower", std::to_string(r.u_lower)},
      {"br_lower", std::to_string(r.br_lower)},
      {"b_lower", std::to_string(r.b_lower)},
      {"minima_lower", show(r.minima_lower)},
      {"formula_ord_lower", show(r.formula_ord_lower)},
      {"lspace_ord_lower", show(r.lspace_ord_lower)},
      {"equality_certified", r.equality_certified ? "yes" : "no"},
      {"schubert_bridge", show(r.schubert_bridge)},
  };
  std::size_t w0 = 5;
  std::size_t w1 = 5;
  for (const auto& [k, v] : rows) {
    w0 = std::max(w0, k.size());
    w1 = std::max(w1, v.size());
  }
  std::ostringstream os;
  os << "spec: " << r.spec << "\n";
  auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
    os << a << std::string(w0 - a.size() + 2, ' ') << b << std::string(w1 - b.size() + 2, ' ') << c;
    os << "\n";
  };
  line("field", "value", "source");
  for (const auto& [k, v] : rows) {
    auto it = r.provenance.find(k);
    line(k, v, it == r.provenance.end() ? "" : it->second);
  }
  std::string text = os.str();
  // Rows without a source keep no trailing blanks.
  std::string out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
    out += l + "\n";
  }
  return out;
}

}  // namespace cableord
