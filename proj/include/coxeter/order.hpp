// Weak order on W (meet, join via cone realization) and orders on roots.
#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "coxeter/automaton.hpp"
#include "coxeter/roots.hpp"

namespace cox {

// Membership in cone(A) for a fixed finite A, by Fourier-Motzkin on the
// Farkas alternative: v is outside cone(A) iff some y has y.a >= 0 for all
// a in A and y.v < 0.  Results are memoised per root id.
class Cone {
 public:
  Cone(const Group& G, std::vector<RootId> gens);
  const std::vector<RootId>& generators() const { return gens_; }
  bool contains(const RootVec& v) const;
  bool contains(RootId id) const;

 private:
  const Group* G_;
  std::vector<RootId> gens_;
  std::vector<int> support_;  // coordinates where some generator is nonzero
  mutable std::unordered_map<RootId, bool> memo_;
};

bool cone_member(const Group& G, const RootVec& v, const std::vector<RootId>& A);
// generators of the extreme rays of cone(A), sorted
std::vector<RootId> extreme_generators(const Group& G, const std::vector<RootId>& A);

struct Realization {
  enum Kind { Realized, Unbounded, NotBiconvex };
  Kind kind = Unbounded;
  Element x;             // valid when Realized
  int m = 0;             // automaton used for the boundedness test
  int witness_state = -1;
  std::size_t visited = 0;
};

Realization realize_cone(const Workspace& ws, const std::vector<RootId>& A);

struct JoinOutcome {
  bool exists = false;
  Element z;
  int m = 0;
  int witness_state = -1;  // state of the m-automaton containing the generators
};

JoinOutcome join(const Workspace& ws, const Element& u, const Element& v);
Element meet(const Group& G, const Element& u, const Element& v);
bool weak_le(const Group& G, const Element& u, const Element& v);  // N(u) subset of N(v)

struct RootPosetEdge {
  enum Kind { WeakCover, BruhatStep };
  SignedRoot from, to;
  Kind kind = WeakCover;
  RootId mediator = kNoRoot;
  Scalar coefficient;  // -2 B(mediator, from)
};

std::vector<RootPosetEdge> root_weak_covers(const Group& G, SignedRoot b);
std::vector<RootPosetEdge> root_bruhat_steps(const Group& G, SignedRoot b, int cap);

struct ChainLabels {
  SignedRoot start, end;
  std::vector<Gen> steps;        // beta_1..beta_n as simple generators
  std::vector<RootId> gammas;    // gamma_i = s_{beta_n}..s_{beta_{i+1}}(beta_i)
  std::vector<Scalar> numeric;   // c_i = B(beta_i, alpha_i), in order i = 1..n
  Element w;                     // s_{beta_n} .. s_{beta_1}
};

// path: starting root and the simple generators applied in order
ChainLabels chain_labels(const Group& G, SignedRoot start, const std::vector<Gen>& steps);

}  // namespace cox
