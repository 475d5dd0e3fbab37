#include "coxeter/stats.hpp"

#include <algorithm>

namespace cox {

bool Coideal::contains(const Field& F, const Scalar& x) const {
  switch (kind) {
    case Empty: return false;
    case All: return F.sign(x) > 0;
    case ClosedRay: return F.compare(x, a) >= 0;
    case OpenRay: return F.compare(x, a) > 0;
  }
  return false;
}

std::string Coideal::describe(const Field& F) const {
  switch (kind) {
    case Empty: return "empty";
    case All: return "all";
    case ClosedRay: return "ge:" + F.to_string(a);
    case OpenRay: return "gt:" + F.to_string(a);
  }
  return "?";
}

std::vector<RootId> dom_set(const Group& G, RootId b) {
  std::vector<RootId> out;
  const Field& F = G.field();
  const std::size_t lb = G.reflection_word(b).size();
  for (RootId g : G.reflection_inversion_set(b)) {
    if (g == b) continue;
    if (F.cmp_to_one(G.B(g, b)) < 0) continue;
    if (G.length(G.reflection_word(g)) < lb) out.push_back(g);
  }
  return out;
}

bool dominates(const Group& G, RootId a, RootId b) {
  if (a == b) return true;
  auto d = dom_set(G, b);
  return std::binary_search(d.begin(), d.end(), a);
}

int d_length(const Group& G, SignedRoot b, const Coideal& X) {
  if (X.kind == Coideal::Empty) return 0;
  const auto& vb = G.vec(b.id);
  int count = 0;
  for (RootId a : G.reflection_inversion_set(b.id))
    if (X.contains(G.field(), G.B(G.vec(a), vb))) ++count;
  return b.negative ? -count : count;
}

int dp_X(const Group& G, RootId b, const Coideal& X) {
  int d = d_length(G, {b, false}, X);
  return X.contains_one(G.field()) ? (d - 1) / 2 : d / 2;
}

}  // namespace cox
