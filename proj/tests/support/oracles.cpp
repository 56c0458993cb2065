#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cableord/errors.hpp"
#include "cableord/validation.hpp"

namespace oracle {

using namespace cableord;

int gcd(int a, int b) { return std::gcd(a, b); }

// ---- determinantal divisors ----

namespace {

PolyF2 determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  PolyF2 det;
  do {
    PolyF2 term = PolyF2::one();
    for (std::size_t i = 0; i < rows.size() && !term.is_zero(); ++i) term = term * m.at(rows[i], cols[perm[i]]);
    det += term;  // signs vanish in characteristic two
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::vector<PolyF2> minor_invariant_factors(const PolyMatrix& m) {
  std::vector<PolyF2> divisors{PolyF2::one()};
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    subsets(m.rows, k, rs);
    subsets(m.cols, k, cs);
    PolyF2 g;
    for (const auto& r : rs)
      for (const auto& c : cs) g = PolyF2::gcd(g, determinant(m, r, c));
    if (g.is_zero()) break;
    divisors.push_back(g);
  }
  std::vector<PolyF2> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    auto [q, r] = PolyF2::divmod(divisors[k], divisors[k - 1]);
    if (!r.is_zero()) throw std::logic_error("determinantal divisors do not divide");
    out.push_back(q);
  }
  return out;
}

// ---- semigroup Alexander polynomial ----

std::vector<int> semigroup_alexander(int p, int q) {
  const int two_g = (p - 1) * (q - 1);
  std::vector<bool> in_s(static_cast<std::size_t>(two_g) + 1, false);
  for (int i = 0; i * p <= two_g; ++i)
    for (int j = 0; i * p + j * q <= two_g; ++j) in_s[static_cast<std::size_t>(i * p + j * q)] = true;
  std::vector<int> out;
  for (int k = two_g; k >= 0; --k) {
    const bool here = in_s[static_cast<std::size_t>(k)];
    const bool below = k > 0 && in_s[static_cast<std::size_t>(k - 1)];
    if (here != below) out.push_back(k - two_g / 2);
  }
  return out;
}

// ---- bit-matrix model of a homogeneous complex ----
//
// A homogeneous entry from g to h has its monomial fixed by the gradings, so
// a differential or a graded map is a 0/1 matrix. Products are plain F2
// products followed by zeroing positions whose implied monomial is mixed.

namespace {

struct Implied {
  int a = 0;
  int b = 0;
  bool valid = false;
};

// Monomial m with gr(m * to) = gr(from) + shift.
Implied implied(const Generator& from, const Generator& to, int shift) {
  const int du = to.gr_u - from.gr_u - shift;
  const int dv = to.gr_v - from.gr_v - shift;
  if (du % 2 != 0 || dv % 2 != 0) return {};
  Implied m{du / 2, dv / 2, true};
  if (m.a < 0 || m.b < 0) m.valid = false;
  return m;
}

struct BitModel {
  RingMode ring;
  std::vector<Generator> gens;
  std::vector<std::uint64_t> rows;  // differential, rows[g] bit h

  std::size_t n() const { return gens.size(); }

  // Entries of differential degree (-1,-1): gr(m*h) = gr(g) - (1,1) means shift -1.
  Implied d_mono(std::size_t g, std::size_t h) const { return implied(gens[g], gens[h], -1); }
  Implied p_mono(std::size_t g, std::size_t h) const { return implied(gens[g], gens[h], 0); }

  bool d_allowed(std::size_t g, std::size_t h) const {
    const auto m = d_mono(g, h);
    return m.valid && !(ring == RingMode::ModUV && m.a > 0 && m.b > 0);
  }
  bool p_allowed(std::size_t g, std::size_t h) const {
    const auto m = p_mono(g, h);
    return m.valid && !(ring == RingMode::ModUV && m.a > 0 && m.b > 0);
  }
};

BitModel to_bits(const BigradedComplex& c) {
  if (c.size() > 64) throw std::invalid_argument("bit model supports at most 64 generators");
  BitModel bm{c.ring(), c.generators(), std::vector<std::uint64_t>(c.size(), 0)};
  for (const auto& [key, m] : c.entries()) {
    const auto im = bm.d_mono(key.first, key.second);
    if (!im.valid || im.a != m.u || im.b != m.v) throw std::invalid_argument("entry disagrees with the gradings");
    bm.rows[key.first] |= std::uint64_t{1} << key.second;
  }
  return bm;
}

BigradedComplex from_bits(const BitModel& bm) {
  BigradedComplex::EntryMap e;
  for (std::size_t g = 0; g < bm.n(); ++g)
    for (std::size_t h = 0; h < bm.n(); ++h) {
      if (!((bm.rows[g] >> h) & 1U)) continue;
      const auto m = bm.d_mono(g, h);
      e[{g, h}] = Monomial{m.a, m.b};
    }
  return BigradedComplex(bm.ring, bm.gens, std::move(e));
}

using Bits = std::vector<std::uint64_t>;

Bits multiply(const Bits& x, const Bits& y) {
  Bits out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t r = x[i];
    while (r) {
      const int k = __builtin_ctzll(r);
      out[i] ^= y[static_cast<std::size_t>(k)];
      r &= r - 1;
    }
  }
  return out;
}

std::optional<Bits> inverse(Bits m) {
  const std::size_t n = m.size();
  Bits inv(n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !((m[piv] >> col) & 1U)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && ((m[r] >> col) & 1U)) {
        m[r] ^= m[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

Bits mask(const BitModel& bm, Bits d) {
  for (std::size_t g = 0; g < bm.n(); ++g)
    for (std::size_t h = 0; h < bm.n(); ++h)
      if (((d[g] >> h) & 1U) && !bm.d_allowed(g, h)) d[g] &= ~(std::uint64_t{1} << h);
  return d;
}

bool bits_simplified(const BitModel& bm, const Bits& d) {
  std::vector<int> hdeg(bm.n(), 0);
  std::vector<int> vdeg(bm.n(), 0);
  for (std::size_t g = 0; g < bm.n(); ++g)
    for (std::size_t h = 0; h < bm.n(); ++h) {
      if (!((d[g] >> h) & 1U)) continue;
      const auto m = bm.d_mono(g, h);
      if (m.a == 0 && m.b == 0) return false;
      if (m.b == 0 && (++hdeg[g] > 1 || ++hdeg[h] > 1)) return false;
      if (m.a == 0 && (++vdeg[g] > 1 || ++vdeg[h] > 1)) return false;
    }
  return true;
}

}  // namespace

std::optional<bool> exhaustive_simultaneous_basis(const BigradedComplex& input, std::uint64_t limit) {
  if (input.ring() != RingMode::ModUV) throw std::invalid_argument("search runs over the mod UV ring");
  const BitModel bm = to_bits(input);
  const std::size_t n = bm.n();
  if (n > 16) return std::nullopt;

  // Same-grading classes get invertible blocks; other allowed positions are free bits.
  std::map<std::pair<int, int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[{bm.gens[i].gr_u, bm.gens[i].gr_v}].push_back(i);
  std::vector<std::vector<Bits>> block_choices;
  std::uint64_t total = 1;
  for (const auto& [gr, members] : classes) {
    const std::size_t k = members.size();
    if (k > 4) return std::nullopt;
    std::vector<Bits> choices;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (k * k)); ++code) {
      Bits block(k, 0);
      for (std::size_t r = 0; r < k; ++r) block[r] = (code >> (r * k)) & ((std::uint64_t{1} << k) - 1);
      if (!inverse(block)) continue;
      Bits full(n, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          if ((block[r] >> c) & 1U) full[members[r]] |= std::uint64_t{1} << members[c];
      choices.push_back(std::move(full));
    }
    total *= choices.size();
    block_choices.push_back(std::move(choices));
  }
  std::vector<std::pair<std::size_t, std::size_t>> free_bits;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      if (g == h || !bm.p_allowed(g, h)) continue;
      const auto m = bm.p_mono(g, h);
      if (m.a == 0 && m.b == 0) continue;  // inside a class
      free_bits.push_back({g, h});
    }
  if (free_bits.size() > 40) return std::nullopt;
  total *= std::uint64_t{1} << free_bits.size();
  if (total > limit) return std::nullopt;

  std::vector<std::size_t> idx(block_choices.size(), 0);
  while (true) {
    Bits base(n, 0);
    for (std::size_t b = 0; b < block_choices.size(); ++b) {
      const auto& chosen = block_choices[b][idx[b]];
      for (std::size_t r = 0; r < n; ++r) base[r] |= chosen[r];
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits.size()); ++code) {
      Bits p = base;
      for (std::size_t f = 0; f < free_bits.size(); ++f)
        if ((code >> f) & 1U) p[free_bits[f].first] |= std::uint64_t{1} << free_bits[f].second;
      const auto q = inverse(p);
      if (!q) continue;
      if (bits_simplified(bm, mask(bm, multiply(multiply(p, bm.rows), *q)))) return true;
    }
    std::size_t b = 0;
    while (b < idx.size() && ++idx[b] == block_choices[b].size()) idx[b++] = 0;
    if (b == idx.size()) break;
  }
  return false;
}

std::optional<bool> liftable_to_full_ring(const BigradedComplex& input, std::size_t max_positions) {
  BitModel bm = to_bits(to_mod_uv(input));
  bm.ring = RingMode::Full;
  std::vector<std::pair<std::size_t, std::size_t>> diagonal;
  for (std::size_t g = 0; g < bm.n(); ++g)
    for (std::size_t h = 0; h < bm.n(); ++h) {
      const auto m = bm.d_mono(g, h);
      if (m.valid && m.a > 0 && m.b > 0) diagonal.push_back({g, h});
    }
  if (diagonal.size() > max_positions) return std::nullopt;
  // Over the full ring nothing vanishes, so squares are plain bit products.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << diagonal.size()); ++code) {
    Bits d = bm.rows;
    for (std::size_t k = 0; k < diagonal.size(); ++k)
      if ((code >> k) & 1U) d[diagonal[k].first] |= std::uint64_t{1} << diagonal[k].second;
    const auto sq = multiply(d, d);
    if (std::all_of(sq.begin(), sq.end(), [](std::uint64_t r) { return r == 0; })) return true;
  }
  return false;
}

// ---- example complexes ----

namespace {

// Two square boxes z + (a -> b, c -> d) sharing one bigrading pattern.
std::pair<std::vector<Generator>, std::vector<ArrowSpec>> box_pair() {
  std::vector<Generator> gens{{"z", 0, 0}};
  std::vector<ArrowSpec> arrows;
  for (const std::string k : {"1", "2"}) {
    gens.push_back({"a" + k, 1, 1});
    gens.push_back({"b" + k, 2, 0});
    gens.push_back({"c" + k, 0, 2});
    gens.push_back({"d" + k, 1, 1});
    arrows.push_back({"a" + k, "c" + k, 0, 1});
    arrows.push_back({"b" + k, "d" + k, 0, 1});
    arrows.push_back({"c" + k, "d" + k, 1, 0});
  }
  return {gens, arrows};
}

}  // namespace

BigradedComplex twisted_box_pair() {
  auto [gens, arrows] = box_pair();
  arrows.push_back({"a1", "b2", 1, 0});
  arrows.push_back({"a2", "b1", 1, 0});
  arrows.push_back({"a2", "b2", 1, 0});
  return BigradedComplex::from_arrows(RingMode::ModUV, gens, arrows);
}

BigradedComplex crossed_box_pair() {
  auto [gens, arrows] = box_pair();
  arrows.push_back({"a1", "b1", 1, 0});
  arrows.push_back({"a2", "b2", 1, 0});
  arrows.push_back({"a1", "b2", 1, 0});
  return BigradedComplex::from_arrows(RingMode::ModUV, gens, arrows);
}

BigradedComplex staircase5_complex() {
  return BigradedComplex::from_arrows(
      RingMode::Full, {{"a", 0, -8}, {"b", -1, -7}, {"c", -2, -2}, {"d", -7, -1}, {"e", -8, 0}},
      {{"b", "a", 1, 0}, {"b", "c", 0, 3}, {"d", "c", 3, 0}, {"d", "e", 0, 1}});
}

BigradedComplex diagonal_complex() {
  return BigradedComplex::from_arrows(
      RingMode::Full, {{"a", 0, 0}, {"b", 9, -1}, {"c", 8, 0}, {"d", 1, 1}, {"e", 0, 4}, {"f", -1, 5}},
      {{"a", "b", 5, 0},
       {"a", "d", 1, 1},
       {"a", "f", 0, 3},
       {"b", "c", 0, 1},
       {"d", "c", 4, 0},
       {"d", "e", 0, 2},
       {"f", "e", 1, 0}});
}

BigradedComplex unknot_complex() { return BigradedComplex::from_arrows(RingMode::Full, {{"x", 0, 0}}, {}); }

// ---- random data ----

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool knot_like_complex(const PegCurve& pc) {
  try {
    const auto c = curve_to_complex(pc);
    return is_knot_like(validate(c)) && liftable_to_full_ring(c).value_or(false);
  } catch (const Error&) {
    return false;
  }
}

// Distinct-neighbour heights in [-max_height, max_height].
std::vector<int> random_walk(Rng& rng, std::size_t len, int max_height) {
  std::vector<int> h(len);
  for (std::size_t i = 0; i < len; ++i) {
    do {
      h[i] = uniform(rng, -max_height, max_height);
    } while (i > 0 && h[i] == h[i - 1]);
  }
  return h;
}

}  // namespace

StaircaseSpec random_staircase(Rng& rng, int max_steps, int max_gap) {
  const int half = uniform(rng, 0, max_steps);
  std::vector<int> gaps;
  for (int i = 0; i < half; ++i) gaps.push_back(i == 0 ? 1 : uniform(rng, 1, max_gap));
  std::vector<int> all = gaps;
  all.insert(all.end(), gaps.rbegin(), gaps.rend());
  const int spread = std::accumulate(all.begin(), all.end(), 0);
  std::vector<int> ex{spread / 2};
  for (int g : all) ex.push_back(ex.back() - g);
  return {ex};
}

CurveComponent random_gamma0(Rng& rng, int max_half, int max_height) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto half = static_cast<std::size_t>(uniform(rng, 1, max_half));
    auto h = random_walk(rng, half, max_height);
    if (h.back() == 0) continue;
    CurveComponent comp;
    comp.kind = ComponentKind::Gamma0;
    comp.first_side = Side::Left;
    comp.crossings = h;
    comp.crossings.push_back(0);
    for (auto it = h.rbegin(); it != h.rend(); ++it) comp.crossings.push_back(-*it);
    PegCurve pc{{comp}};
    if (!knot_like_complex(pc)) continue;
    if (!validate_curve(pc, true).ok()) continue;
    return comp;
  }
  throw std::runtime_error("no valid random gamma0 found");
}

CurveComponent random_closed(Rng& rng, int max_half, int max_height) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto len = 2 * static_cast<std::size_t>(uniform(rng, 1, max_half));
    auto h = random_walk(rng, len, max_height);
    if (h.front() == h.back()) continue;
    CurveComponent comp;
    comp.kind = ComponentKind::Closed;
    comp.first_side = Side::Right;
    comp.crossings = h;
    try {
      (void)curve_to_complex(PegCurve{{comp}});
    } catch (const Error&) {
      continue;
    }
    return comp;
  }
  throw std::runtime_error("no valid random closed component found");
}

PegCurve random_mixed_curve(Rng& rng, int max_closed) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PegCurve pc;
    pc.components.push_back(random_gamma0(rng));
    const int closed = uniform(rng, 0, max_closed);
    for (int i = 0; i < closed; ++i) pc.components.push_back(random_closed(rng));
    if (knot_like_complex(pc) && validate_curve(pc).ok()) return pc;
  }
  throw std::runtime_error("no valid mixed curve found");
}

BigradedComplex scramble(const BigradedComplex& c, Rng& rng, int moves) {
  BitModel bm = to_bits(c);
  const std::size_t n = bm.n();
  if (n < 2) return c;
  for (int i = 0; i < moves; ++i) {
    const auto y = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    const auto w = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    if (y == w || !bm.p_allowed(y, w)) continue;
    // e'_y = e_y + m e_w; the elementary matrix is its own inverse.
    Bits p(n, 0);
    for (std::size_t r = 0; r < n; ++r) p[r] = std::uint64_t{1} << r;
    p[y] |= std::uint64_t{1} << w;
    bm.rows = mask(bm, multiply(multiply(p, bm.rows), p));
  }
  return from_bits(bm);
}

namespace {

// Smallest (side, crossings) over every rotation and both directions.
std::pair<int, std::vector<int>> cycle_key(const CurveComponent& c) {
  const std::size_t n = c.crossings.size();
  std::pair<int, std::vector<int>> best{2, {}};
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> seq = c.crossings;
    if (dir == 1) std::reverse(seq.begin(), seq.end());
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> rot(seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
      // Reversal keeps the side of the first arc when n is even.
      const bool flip = k % 2 == 1;
      const int side = (c.first_side == Side::Right) != flip ? 1 : 0;
      best = std::min(best, std::make_pair(side, rot));
    }
  }
  return best;
}

}  // namespace

bool same_curve(const PegCurve& a, const PegCurve& b) {
  std::vector<CurveComponent> ga;
  std::vector<CurveComponent> gb;
  std::vector<std::pair<int, std::vector<int>>> ca;
  std::vector<std::pair<int, std::vector<int>>> cb;
  for (const auto& c : a.components) (c.kind == ComponentKind::Closed ? ca.push_back(cycle_key(c)) : ga.push_back(c));
  for (const auto& c : b.components) (c.kind == ComponentKind::Closed ? cb.push_back(cycle_key(c)) : gb.push_back(c));
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ga == gb && ca == cb;
}

bool same_by_id(const BigradedComplex& a, const BigradedComplex& b) {
  if (a.size() != b.size() || a.ring() != b.ring()) return false;
  for (const auto& g : a.generators()) {
    auto j = b.index_of(g.id);
    if (!j || !(b.generator(*j) == g)) return false;
  }
  if (a.entries().size() != b.entries().size()) return false;
  for (const auto& [key, m] : a.entries()) {
    auto from = b.index_of(a.generator(key.first).id);
    auto to = b.index_of(a.generator(key.second).id);
    auto e = b.entry(*from, *to);
    if (!e || !(*e == m)) return false;
  }
  return true;
}

BigradedComplex random_complex(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) return scramble(staircase_from_alexander(random_staircase(rng)), rng, 30);
  return scramble(curve_to_complex(random_mixed_curve(rng)), rng, 30);
}

}  // namespace oracle
