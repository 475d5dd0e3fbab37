#include "coxeter/garside.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace cox {

bool is_n_low(const Group& G, const Element& w, int n) {
  for (RootId b : G.base(w))
    if (G.root(b).dp_inf > n) return false;
  return true;
}

namespace {

struct StateResult {
  bool realized = false;
  Element x;
  bool exact = false;  // Sigma_n(x) is the state itself
};

StateResult realize_state(const Workspace& ws, const Automaton& aut, int q) {
  StateResult r;
  Realization z = realize_cone(ws, aut.state_roots(q));
  if (z.kind != Realization::Realized) return r;
  r.realized = true;
  r.x = z.x;
  r.exact = aut.state_of(z.x) == q;
  return r;
}

LowReport assemble(int n, const std::vector<StateResult>& res) {
  LowReport rep;
  rep.n = n;
  rep.num_states = res.size();
  ElementSet els;
  for (std::size_t q = 0; q < res.size(); ++q) {
    if (res[q].realized) els.insert(res[q].x);
    (res[q].exact ? rep.realized_states : rep.unrealized_states).push_back(static_cast<int>(q));
  }
  rep.elements.assign(els.begin(), els.end());
  rep.bijection_holds = rep.unrealized_states.empty() && rep.elements.size() == res.size();
  return rep;
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(cox_parallel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

// Every n-low w is realize(Sigma_n(w)), so running over all states is complete.
LowReport low_elements(const Workspace& ws, int n) {
  const Automaton& aut = ws.automaton(n);
  std::vector<StateResult> res(aut.num_states());
  parallel_for(res.size(), [&](std::size_t q) { res[q] = realize_state(ws, aut, static_cast<int>(q)); });
  return assemble(n, res);
}

LowReport low_elements_serial(const Workspace& ws, int n) {
  const Automaton& aut = ws.automaton(n);
  std::vector<StateResult> res(aut.num_states());
  for (std::size_t q = 0; q < res.size(); ++q) res[q] = realize_state(ws, aut, static_cast<int>(q));
  return assemble(n, res);
}

ElementSet simple_seed(const Group& G) {
  ElementSet S{G.identity()};
  for (Gen s = 0; s < G.rank(); ++s) S.insert(G.generator(s));
  return S;
}

namespace {

std::size_t close_suffixes(const Group& G, ElementSet& A) {
  std::size_t added = 0;
  std::vector<Element> todo(A.begin(), A.end());
  while (!todo.empty()) {
    Element w = std::move(todo.back());
    todo.pop_back();
    for (Gen s : G.left_descents(w)) {
      Element v = G.mul(G.generator(s), w);
      if (A.insert(v).second) {
        ++added;
        todo.push_back(std::move(v));
      }
    }
  }
  return added;
}

}  // namespace

ShadowReport garside_closure(const Workspace& ws, const ElementSet& seed, int max_iter) {
  const Group& G = ws.group();
  ShadowReport rep;
  ElementSet cur = seed;
  close_suffixes(G, cur);
  std::map<std::pair<Element, Element>, std::optional<Element>> cache;
  for (int m = 0; m < max_iter; ++m) {
    std::vector<Element> v(cur.begin(), cur.end());
    std::vector<std::pair<Element, Element>> todo;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (!cache.count({v[i], v[j]})) todo.emplace_back(v[i], v[j]);
    std::vector<std::optional<Element>> out(todo.size());
    parallel_for(todo.size(), [&](std::size_t k) {
      JoinOutcome j = join(ws, todo[k].first, todo[k].second);
      if (j.exists) out[k] = j.z;
    });
    for (std::size_t k = 0; k < todo.size(); ++k) cache[todo[k]] = out[k];

    ElementSet next = cur;
    std::size_t joins = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const auto& z = cache[{v[i], v[j]}];
        if (z && next.insert(*z).second) ++joins;
      }
    std::size_t suff = close_suffixes(G, next);
    rep.joins_added.push_back(joins);
    rep.suffixes_added.push_back(suff);
    if (next == cur) {
      rep.converged = true;
      rep.iterations = m;
      rep.elements = std::move(cur);
      return rep;
    }
    cur = std::move(next);
  }
  rep.iterations = max_iter;
  rep.elements = std::move(cur);
  return rep;
}

GarsideVerdict verify_garside(const Workspace& ws, const ElementSet& A, bool parallel) {
  const Group& G = ws.group();
  GarsideVerdict v;
  for (Gen s = 0; s < G.rank(); ++s)
    if (!A.count(G.generator(s))) v.missing_generators.push_back(s);
  for (const Element& w : A) {
    for (Gen s : G.left_descents(w)) {
      Element x = G.mul(G.generator(s), w);
      if (!A.count(x)) {
        v.suffix_witness = {w, x};
        break;
      }
    }
    if (v.suffix_witness) break;
  }

  std::vector<Element> el(A.begin(), A.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) pairs.emplace_back(i, j);
  std::vector<signed char> bounded(pairs.size(), 0), inside(pairs.size(), 1);
  std::vector<Element> z(pairs.size());
  auto body = [&](std::size_t k) {
    JoinOutcome j = join(ws, el[pairs[k].first], el[pairs[k].second]);
    if (!j.exists) return;
    bounded[k] = 1;
    inside[k] = A.count(j.z) ? 1 : 0;
    z[k] = j.z;
  };
  if (parallel)
    parallel_for(pairs.size(), body);
  else
    for (std::size_t k = 0; k < pairs.size(); ++k) body(k);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    v.bounded_pairs += bounded[k];
    if (bounded[k] && !inside[k] && !v.join_witness)
      v.join_witness = GarsideVerdict::JoinWitness{el[pairs[k].first], el[pairs[k].second], z[k]};
  }
  v.pass = v.missing_generators.empty() && !v.suffix_witness && !v.join_witness;
  return v;
}

}  // namespace cox
