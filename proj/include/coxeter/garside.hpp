// Low elements, Garside shadow closure and verification.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxeter/automaton.hpp"
#include "coxeter/order.hpp"

namespace cox {

using ElementSet = std::set<Element>;  // shortlex ordered

bool is_n_low(const Group& G, const Element& w, int n);

struct LowReport {
  int n = 0;
  std::vector<Element> elements;  // shortlex sorted, distinct
  std::size_t num_states = 0;
  std::vector<int> realized_states;    // states A with Sigma_n(realize(A)) = A
  std::vector<int> unrealized_states;  // the rest
  bool bijection_holds = false;
};

LowReport low_elements(const Workspace& ws, int n);         // OpenMP over states
LowReport low_elements_serial(const Workspace& ws, int n);  // reference

struct ShadowReport {
  ElementSet elements;
  int iterations = 0;  // first m with S_m = S_{m+1}
  std::vector<std::size_t> joins_added, suffixes_added;
  bool converged = false;
};

ElementSet simple_seed(const Group& G);  // S and e
ShadowReport garside_closure(const Workspace& ws, const ElementSet& seed, int max_iter = 64);

struct GarsideVerdict {
  bool pass = true;
  std::vector<Gen> missing_generators;
  std::optional<std::pair<Element, Element>> suffix_witness;  // (w, suffix not in A)
  struct JoinWitness {
    Element u, v, z;
  };
  std::optional<JoinWitness> join_witness;
  std::size_t bounded_pairs = 0;
};

GarsideVerdict verify_garside(const Workspace& ws, const ElementSet& A, bool parallel = true);

}  // namespace cox
