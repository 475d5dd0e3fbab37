// dp, dp_inf, dominance and the d_X family.
#pragma once

#include <string>
#include <vector>

#include "coxeter/roots.hpp"

namespace cox {

// order coideal X of R_{>0}: empty, everything, [a, inf) or (a, inf)
struct Coideal {
  enum Kind { Empty, All, ClosedRay, OpenRay };
  Kind kind = All;
  Scalar a;

  static Coideal empty() { return {Empty, {}}; }
  static Coideal all() { return {All, {}}; }
  static Coideal closed(Scalar a) { return {ClosedRay, std::move(a)}; }
  static Coideal open(Scalar a) { return {OpenRay, std::move(a)}; }
  bool contains(const Field& F, const Scalar& x) const;
  bool contains_one(const Field& F) const { return contains(F, F.one()); }
  std::string describe(const Field& F) const;
};

inline int dp(const Group& G, RootId b) { return G.root(b).depth; }
inline int dp_infinity(const Group& G, RootId b) { return G.root(b).dp_inf; }

// {gamma in N(s_b) : B(gamma, b) >= 1, l(s_gamma) < l(s_b)}
std::vector<RootId> dom_set(const Group& G, RootId b);
bool dominates(const Group& G, RootId a, RootId b);  // a is dominated by b

int d_length(const Group& G, SignedRoot b, const Coideal& X);
int dp_X(const Group& G, RootId b, const Coideal& X);

}  // namespace cox
