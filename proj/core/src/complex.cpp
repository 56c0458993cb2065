#include "cableord/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cableord/errors.hpp"
#include "cableord/smith.hpp"

namespace cableord {

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b, RingMode ring) {
  Monomial m{a.u + b.u, a.v + b.v};
  if (ring == RingMode::ModUV && m.is_mixed()) return std::nullopt;
  return m;
}

BigradedComplex::BigradedComplex(RingMode ring, std::vector<Generator> generators, EntryMap entries)
    : ring_(ring), generators_(std::move(generators)), entries_(std::move(entries)) {
  std::unordered_set<std::string> ids;
  for (const auto& g : generators_) {
    if (g.id.empty()) throw InvalidInput("generator with empty id");
    if (!ids.insert(g.id).second) throw InvalidInput("duplicate generator id '" + g.id + "'");
  }
  for (const auto& [key, m] : entries_) {
    if (key.first >= generators_.size() || key.second >= generators_.size()) {
      throw InvalidInput("differential entry refers to a missing generator");
    }
    if (m.u < 0 || m.v < 0) throw InvalidInput("negative exponent in differential");
    if (ring_ == RingMode::ModUV && m.is_mixed()) {
      throw InvalidInput("mixed monomial U^a V^b in a complex over F[U,V]/(UV)");
    }
  }
}

BigradedComplex BigradedComplex::from_arrows(RingMode ring, std::vector<Generator> generators,
                                             const std::vector<ArrowSpec>& arrows) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < generators.size(); ++i) index.emplace(generators[i].id, i);
  EntryMap entries;
  for (const auto& a : arrows) {
    auto f = index.find(a.from);
    auto t = index.find(a.to);
    if (f == index.end()) throw InvalidInput("arrow source '" + a.from + "' is not a generator");
    if (t == index.end()) throw InvalidInput("arrow target '" + a.to + "' is not a generator");
    if (!entries.emplace(std::make_pair(f->second, t->second), Monomial{a.u, a.v}).second) {
      throw InvalidInput("duplicate differential entry " + a.from + " -> " + a.to);
    }
  }
  return BigradedComplex(ring, std::move(generators), std::move(entries));
}

std::vector<Arrow> BigradedComplex::arrows() const {
  std::vector<Arrow> out;
  out.reserve(entries_.size());
  for (const auto& [key, m] : entries_) out.push_back({key.first, key.second, m});
  return out;
}

std::optional<std::size_t> BigradedComplex::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<Monomial> BigradedComplex::entry(std::size_t from, std::size_t to) const {
  auto it = entries_.find({from, to});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool grading_law_holds(const Generator& x, const Generator& y, const Monomial& m) {
  return y.gr_u == x.gr_u - 1 + 2 * m.u && y.gr_v == x.gr_v - 1 + 2 * m.v;
}

// Exponent of the surviving variable, or nullopt when the entry dies in C/(other).
std::optional<int> surviving_exponent(const Monomial& m, Variable var) {
  if (var == Variable::U) {
    if (m.v != 0) return std::nullopt;
    return m.u;
  }
  if (m.u != 0) return std::nullopt;
  return m.v;
}

// The grading preserved by the surviving variable: gr_v for F[U], gr_u for F[V].
int slice_grading(const Generator& g, Variable var) { return var == Variable::U ? g.gr_v : g.gr_u; }

PolyMatrix block_matrix(const BigradedComplex& c, Variable var, const std::vector<std::size_t>& sources,
                        const std::vector<std::size_t>& targets) {
  PolyMatrix m(targets.size(), sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      auto e = c.entry(sources[j], targets[i]);
      if (!e) continue;
      if (auto k = surviving_exponent(*e, var)) m.at(i, j) = PolyF2::monomial(*k);
    }
  }
  return m;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Free rank of the homology per slice grading. Requires the grading law.
std::map<int, int> free_rank_by_slice(const BigradedComplex& c, Variable var) {
  std::map<int, std::vector<std::size_t>> slices;
  for (std::size_t i = 0; i < c.size(); ++i) slices[slice_grading(c.generator(i), var)].push_back(i);
  auto rank_out_of = [&](int s) -> int {
    auto src = slices.find(s);
    auto dst = slices.find(s - 1);
    if (src == slices.end() || dst == slices.end()) return 0;
    return static_cast<int>(invariant_factors(block_matrix(c, var, src->second, dst->second)).size());
  };
  std::map<int, int> free;
  for (const auto& [s, members] : slices) {
    const int rank = static_cast<int>(members.size()) - rank_out_of(s) - rank_out_of(s + 1);
    if (rank != 0) free[s] = rank;
  }
  return free;
}

std::string tower_detail(const std::map<int, int>& free, const char* grading) {
  std::ostringstream os;
  os << "free part by " << grading << ":";
  if (free.empty()) os << " none";
  for (const auto& [s, r] : free) os << " [" << s << "]=" << r;
  return os.str();
}

void add_entry(BigradedComplex::EntryMap& entries, std::size_t from, std::size_t to, const Monomial& m) {
  auto [it, inserted] = entries.emplace(std::make_pair(from, to), m);
  if (inserted) return;
  if (!(it->second == m)) {
    throw InvalidInput("inhomogeneous differential: two different monomials from one generator to another");
  }
  entries.erase(it);
}

}  // namespace

ValidationReport validate(const BigradedComplex& c) {
  ValidationReport report;

  bool integral = true;
  for (const auto& g : c.generators()) {
    if ((g.gr_u - g.gr_v) % 2 != 0) {
      integral = false;
      report.add("alexander_integral", false, "gr_u - gr_v is odd for '" + g.id + "'");
      break;
    }
  }
  if (integral) report.add("alexander_integral", true);

  std::string bad_grading;
  for (const auto& [key, m] : c.entries()) {
    if (!grading_law_holds(c.generator(key.first), c.generator(key.second), m)) {
      bad_grading = c.generator(key.first).id + " -> " + c.generator(key.second).id;
      break;
    }
  }
  report.add("grading_law", bad_grading.empty(), bad_grading.empty() ? "" : "violated by " + bad_grading);

  std::string unit_entry;
  for (const auto& [key, m] : c.entries()) {
    if (m.is_unit()) {
      unit_entry = c.generator(key.first).id + " -> " + c.generator(key.second).id;
      break;
    }
  }
  report.add("reduced", unit_entry.empty(), unit_entry.empty() ? "" : "unit entry " + unit_entry);

  // d^2: count each (source, target, monomial) path mod 2.
  std::map<std::tuple<std::size_t, std::size_t, int, int>, int> paths;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Monomial>>> out;
  for (const auto& [key, m] : c.entries()) out[key.first].push_back({key.second, m});
  for (const auto& [x, firsts] : out) {
    for (const auto& [y, m1] : firsts) {
      auto it = out.find(y);
      if (it == out.end()) continue;
      for (const auto& [z, m2] : it->second) {
        if (auto prod = multiply(m1, m2, c.ring())) paths[{x, z, prod->u, prod->v}] ^= 1;
      }
    }
  }
  std::string nonzero;
  for (const auto& [key, parity] : paths) {
    if (parity) {
      nonzero = c.generator(std::get<0>(key)).id + " -> " + c.generator(std::get<1>(key)).id;
      break;
    }
  }
  report.add("d_squared_zero", nonzero.empty(), nonzero.empty() ? "" : "d^2 nonzero on " + nonzero);

  if (!report.passed("grading_law")) {
    report.add("tower_u", false, "skipped: grading law fails");
    report.add("tower_v", false, "skipped: grading law fails");
  } else {
    auto free_u = free_rank_by_slice(c, Variable::U);
    const bool ok_u = free_u.size() == 1 && free_u.begin()->first == 0 && free_u.begin()->second == 1;
    report.add("tower_u", ok_u, tower_detail(free_u, "gr_v"));
    auto free_v = free_rank_by_slice(c, Variable::V);
    const bool ok_v = free_v.size() == 1 && free_v.begin()->first == 0 && free_v.begin()->second == 1;
    report.add("tower_v", ok_v, tower_detail(free_v, "gr_u"));
  }

  report.add("odd_generator_count", c.size() % 2 == 1, std::to_string(c.size()) + " generators");
  return report;
}

bool is_knot_like(const ValidationReport& report) {
  for (const char* name : {"alexander_integral", "grading_law", "d_squared_zero", "tower_u", "tower_v"}) {
    if (!report.passed(name)) return false;
  }
  return true;
}

BigradedComplex reduce(const BigradedComplex& c) {
  auto entries = c.entries();
  std::vector<bool> alive(c.size(), true);

  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (const auto& [key, m] : entries) {
      if (m.is_unit()) {
        pick = key;  // map order = (source, target) ascending
        break;
      }
    }
    if (!pick) break;
    const auto [x, y] = *pick;
    if (x == y) throw InvalidInput("unit self-arrow: d^2 cannot vanish");

    std::vector<std::pair<std::size_t, Monomial>> into_y;
    std::vector<std::pair<std::size_t, Monomial>> out_of_x;
    for (const auto& [key, m] : entries) {
      if (key.second == y && key.first != x) into_y.push_back({key.first, m});
      if (key.first == x && key.second != y) out_of_x.push_back({key.second, m});
    }
    // Zig-zag: w -> y <- x -> z contributes w -> z.
    for (const auto& [w, a] : into_y) {
      for (const auto& [z, b] : out_of_x) {
        if (auto prod = multiply(a, b, c.ring())) add_entry(entries, w, z, *prod);
      }
    }
    for (auto it = entries.begin(); it != entries.end();) {
      const auto [f, t] = it->first;
      if (f == x || f == y || t == x || t == y) {
        it = entries.erase(it);
      } else {
        ++it;
      }
    }
    alive[x] = alive[y] = false;
  }

  std::vector<std::size_t> new_index(c.size(), 0);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!alive[i]) continue;
    new_index[i] = gens.size();
    gens.push_back(c.generator(i));
  }
  BigradedComplex::EntryMap remapped;
  for (const auto& [key, m] : entries) remapped.emplace(std::make_pair(new_index[key.first], new_index[key.second]), m);
  return BigradedComplex(c.ring(), std::move(gens), std::move(remapped));
}

UModuleDecomposition homology(const BigradedComplex& c, Variable var) {
  const auto idx = all_indices(c.size());
  const auto factors = invariant_factors(block_matrix(c, var, idx, idx));
  UModuleDecomposition out;
  out.free_rank = static_cast<int>(c.size()) - 2 * static_cast<int>(factors.size());
  for (const auto& d : factors) {
    if (!d.is_monomial()) {
      throw InvalidInput("invariant factor " + d.to_string() + " is not a power of the variable; grading is inconsistent");
    }
    if (d.degree() > 0) out.torsion_exponents.push_back(d.degree());
  }
  std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
  return out;
}

int torsion_order(const BigradedComplex& c) {
  const auto report = validate(c);
  if (!is_knot_like(report)) {
    std::string why;
    for (const auto& check : report.checks) {
      if (!check.passed && check.name != "reduced" && check.name != "odd_generator_count") {
        why += (why.empty() ? "" : "; ") + check.name + (check.detail.empty() ? "" : " (" + check.detail + ")");
      }
    }
    throw NotKnotLike("complex is not knot-like: " + why);
  }
  const auto h = homology_minus(c);
  return h.torsion_exponents.empty() ? 0 : h.torsion_exponents.back();
}

BigradedComplex mirror(const BigradedComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({g.id, -g.gr_u, -g.gr_v});
  BigradedComplex::EntryMap entries;
  for (const auto& [key, m] : c.entries()) entries.emplace(std::make_pair(key.second, key.first), m);
  return BigradedComplex(c.ring(), std::move(gens), std::move(entries));
}

BigradedComplex to_mod_uv(const BigradedComplex& c) {
  BigradedComplex::EntryMap entries;
  for (const auto& [key, m] : c.entries()) {
    if (!m.is_mixed()) entries.emplace(key, m);
  }
  return BigradedComplex(RingMode::ModUV, c.generators(), std::move(entries));
}

BigradedComplex permute(const BigradedComplex& c, const std::vector<std::size_t>& perm) {
  if (perm.size() != c.size()) throw InvalidInput("permutation size mismatch");
  std::vector<std::size_t> inverse(c.size(), c.size());
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= c.size() || inverse[perm[i]] != c.size()) throw InvalidInput("not a permutation");
    inverse[perm[i]] = i;
    gens.push_back(c.generator(perm[i]));
  }
  BigradedComplex::EntryMap entries;
  for (const auto& [key, m] : c.entries()) entries.emplace(std::make_pair(inverse[key.first], inverse[key.second]), m);
  return BigradedComplex(c.ring(), std::move(gens), std::move(entries));
}

}  // namespace cableord
