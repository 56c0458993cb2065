#include "cableord/lspace.hpp"

#include <numeric>
#include <string>

#include "cableord/errors.hpp"

namespace cableord {

namespace {

using IntPoly = std::vector<long long>;  // coefficient of t^i at index i

IntPoly binomial(int degree) {
  IntPoly p(static_cast<std::size_t>(degree) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(degree)] += 1;
  return p;
}

IntPoly times(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic divisor (t^a - 1 products are monic).
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (long long r : num) {
    if (r != 0) throw BadParams("polynomial division left a remainder");
  }
  return quot;
}

}  // namespace

void check_staircase(const StaircaseSpec& s) {
  const auto& a = s.exponents;
  if (a.empty() || a.size() % 2 == 0) throw InvalidSpec("staircase needs an odd number of exponents");
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] >= a[i - 1]) throw InvalidSpec("exponents must be strictly decreasing");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != -a[a.size() - 1 - i]) throw InvalidSpec("exponents must be symmetric about 0");
  }
  if (a.size() >= 3 && a[0] != a[1] + 1) throw InvalidSpec("the top gap of an L-space staircase is 1");
}

StaircaseSpec torus_alexander(int p, int q) {
  if (p < 2 || q <= p) throw BadParams("torus knot needs 1 < p < q");
  if (std::gcd(p, q) != 1) throw BadParams("torus knot parameters must be coprime");
  const IntPoly num = times(binomial(p * q), binomial(1));
  const IntPoly den = times(binomial(p), binomial(q));
  const IntPoly quot = divide_exact(num, den);
  const int shift = (p - 1) * (q - 1) / 2;
  StaircaseSpec s;
  long long expect = 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (quot[k] == 0) continue;
    if (quot[k] != expect) throw BadParams("torus knot polynomial does not alternate");
    expect = -expect;
    s.exponents.push_back(static_cast<int>(k) - shift);
  }
  check_staircase(s);
  return s;
}

BigradedComplex staircase_from_alexander(const StaircaseSpec& s) {
  check_staircase(s);
  const auto& a = s.exponents;
  const std::size_t n = a.size();
  std::vector<Generator> gens(n);
  for (std::size_t k = 0; k < n; ++k) gens[k].id = "z" + std::to_string(k);
  gens[n - 1].gr_u = 2 * a[n - 1];
  gens[n - 1].gr_v = 0;
  std::vector<ArrowSpec> arrows;
  for (std::size_t k = n - 1; k >= 2; k -= 2) {
    const int down = a[k - 1] - a[k];
    const int up = a[k - 2] - a[k - 1];
    // z_{k-1} -> V^down z_k and z_{k-1} -> U^up z_{k-2}.
    gens[k - 1].gr_u = gens[k].gr_u + 1;
    gens[k - 1].gr_v = gens[k].gr_v + 1 - 2 * down;
    gens[k - 2].gr_u = gens[k - 1].gr_u - 1 + 2 * up;
    gens[k - 2].gr_v = gens[k - 1].gr_v - 1;
    arrows.push_back({gens[k - 1].id, gens[k - 2].id, up, 0});
    arrows.push_back({gens[k - 1].id, gens[k].id, 0, down});
  }
  return BigradedComplex::from_arrows(RingMode::Full, std::move(gens), arrows);
}

PegCurve staircase_curve(const StaircaseSpec& s) {
  check_staircase(s);
  CurveComponent g0;
  g0.kind = ComponentKind::Gamma0;
  g0.first_side = Side::Left;
  g0.crossings = s.exponents;
  for (std::size_t k = 0; k < s.exponents.size(); ++k) g0.labels.push_back("z" + std::to_string(k));
  return PegCurve{{g0}};
}

int ord_lspace(const StaircaseSpec& s) {
  check_staircase(s);
  int best = 0;
  for (std::size_t i = 1; i < s.exponents.size(); ++i) best = std::max(best, s.exponents[i - 1] - s.exponents[i]);
  return best;
}

int genus(const StaircaseSpec& s) {
  check_staircase(s);
  return (s.exponents.front() - s.exponents.back()) / 2;
}

bool check_unique_genus_one(const StaircaseSpec& s) { return s.exponents == std::vector<int>{1, 0, -1}; }

}  // namespace cableord
