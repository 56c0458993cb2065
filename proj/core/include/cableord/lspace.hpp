#pragma once

#include <vector>

#include "cableord/complex.hpp"
#include "cableord/curve.hpp"

namespace cableord {

/// Exponents alpha_0 > alpha_1 > ... > alpha_{2l} of a symmetrized Alexander
/// polynomial sum (-1)^k t^{alpha_k}.
struct StaircaseSpec {
  std::vector<int> exponents;

  friend bool operator==(const StaircaseSpec&, const StaircaseSpec&) = default;
};

/// Throws InvalidSpec unless the list is odd, strictly decreasing, symmetric,
/// and has unit gaps at both ends.
void check_staircase(const StaircaseSpec& s);

/// Exponents of the torus knot T(p,q), 1 < p < q coprime. Throws BadParams.
StaircaseSpec torus_alexander(int p, int q);

/// Staircase complex with generators z0..z{2l} at heights alpha_k. Each odd
/// z_{2j+1} maps to U^{a_{2j}-a_{2j+1}} z_{2j} + V^{a_{2j+1}-a_{2j+2}} z_{2j+2};
/// the bottom generator has gr_v = 0.
BigradedComplex staircase_from_alexander(const StaircaseSpec& s);

/// gamma0 of the staircase: crossings at the exponents, top first.
PegCurve staircase_curve(const StaircaseSpec& s);

/// Largest gap between consecutive exponents (0 for the unknot).
int ord_lspace(const StaircaseSpec& s);

int genus(const StaircaseSpec& s);

/// True exactly for [1, 0, -1], the trefoil.
bool check_unique_genus_one(const StaircaseSpec& s);

}  // namespace cableord
