#include "coxeter/order.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace cox {

// ------------------------------------------------------------ Fourier-Motzkin

namespace {

struct Row {
  std::vector<Scalar> c;  // c . y >= k
  Scalar k;
  std::vector<std::uint64_t> origin;
};

int popcount(const std::vector<std::uint64_t>& v) {
  int n = 0;
  for (auto x : v) n += std::popcount(x);
  return n;
}

// divide by a positive rational to keep coefficients small
void normalize_row(Row& r) {
  for (const Scalar* s = r.c.data(); s != r.c.data() + r.c.size(); ++s)
    for (const auto& q : s->coeffs())
      if (sgn(q) != 0) {
        Rational inv = 1 / abs(q);
        for (auto& x : r.c) x *= inv;
        r.k *= inv;
        return;
      }
}

// true iff the system has no solution
bool fm_infeasible(const Field& F, std::vector<Row> rows, int nvars) {
  for (int j = 0; j < nvars; ++j) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = F.sign(r.c[j]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row r;
        r.origin.resize(p.origin.size());
        for (std::size_t w = 0; w < r.origin.size(); ++w) r.origin[w] = p.origin[w] | n.origin[w];
        // Chernikov: after j+1 eliminations more than j+2 parents is redundant
        if (popcount(r.origin) > j + 2) continue;
        const Scalar a = -n.c[j], b = p.c[j];
        bool all_zero = true;
        r.c.resize(nvars);
        for (int i = 0; i < nvars; ++i) {
          if (i == j) {
            r.c[i] = F.zero();
            continue;
          }
          r.c[i] = F.mul(a, p.c[i]) + F.mul(b, n.c[i]);
          all_zero = all_zero && r.c[i].is_zero();
        }
        r.k = F.mul(a, p.k) + F.mul(b, n.k);
        if (all_zero) {
          if (F.sign(r.k) > 0) return true;
          continue;
        }
        normalize_row(r);
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (F.sign(r.k) > 0) return true;
  return false;
}

}  // namespace

Cone::Cone(const Group& G, std::vector<RootId> gens) : G_(&G), gens_(sorted_unique(std::move(gens))) {
  for (int s = 0; s < G.rank(); ++s) {
    bool any = false;
    for (RootId a : gens_) any = any || !G.vec(a).coords[s].is_zero();
    if (any) support_.push_back(s);
  }
}

bool Cone::contains(RootId id) const {
  auto it = memo_.find(id);
  if (it != memo_.end()) return it->second;
  bool r = std::binary_search(gens_.begin(), gens_.end(), id) || contains(G_->vec(id));
  memo_.emplace(id, r);
  return r;
}

bool Cone::contains(const RootVec& v) const {
  const Group& G = *G_;
  const Field& F = G.field();
  if (gens_.empty()) return v.coords == G.zero_vec().coords;
  for (int s = 0; s < G.rank(); ++s)
    if (!v.coords[s].is_zero() && !std::binary_search(support_.begin(), support_.end(), s)) return false;
  // variables y_s for s in the support only
  const int nv = static_cast<int>(support_.size());
  const std::size_t words = (gens_.size() + 1 + 63) / 64;
  std::vector<Row> rows;
  for (std::size_t i = 0; i <= gens_.size(); ++i) {
    Row r;
    r.origin.assign(words, 0);
    r.origin[i / 64] |= std::uint64_t{1} << (i % 64);
    const RootVec& x = i < gens_.size() ? G.vec(gens_[i]) : v;
    for (int s : support_) r.c.push_back(i < gens_.size() ? x.coords[s] : -x.coords[s]);
    r.k = i < gens_.size() ? F.zero() : F.one();
    rows.push_back(std::move(r));
  }
  return fm_infeasible(F, std::move(rows), nv);
}

bool cone_member(const Group& G, const RootVec& v, const std::vector<RootId>& A) {
  return Cone(G, A).contains(v);
}

std::vector<RootId> extreme_generators(const Group& G, const std::vector<RootId>& A0) {
  std::vector<RootId> kept = sorted_unique(A0);
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<RootId> others = kept;
    others.erase(others.begin() + i);
    if (Cone(G, others).contains(G.vec(kept[i])))
      kept = std::move(others);
    else
      ++i;
  }
  return kept;
}

// ------------------------------------------------------------ realize / join

namespace {

std::size_t action_hash(const Action& a) {
  std::size_t h = 0x51ed270b27ULL;
  for (const auto& c : a.col)
    for (const auto& x : c.coords) h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

bool same_action(const Action& a, const Action& b) {
  for (std::size_t i = 0; i < a.col.size(); ++i)
    if (!(a.col[i].coords == b.col[i].coords)) return false;
  return true;
}

}  // namespace

// A subset of N(x) iff its extreme generators E are, N(x) being cone-closed.
// E lies in Sigma_m, so E in N(x) forces E in Sigma_m(x), a state of the
// m-automaton: no such state means no upper bound.  Otherwise the search
// below stays inside {x : N(x) in cone(A)}, a finite weak interval.
Realization realize_cone(const Workspace& ws, const std::vector<RootId>& A) {
  const Group& G = ws.group();
  Realization out;
  std::vector<RootId> E = extreme_generators(G, A);
  if (E.empty()) {
    out.kind = Realization::Realized;
    return out;
  }
  for (RootId a : E) out.m = std::max(out.m, G.root(a).dp_inf);
  const Automaton& aut = ws.automaton(out.m);
  auto states = aut.states_containing(aut.mask_of(E));
  if (states.empty()) {
    out.kind = Realization::Unbounded;
    return out;
  }
  out.witness_state = states.front();

  Cone cone(G, E);
  struct Node {
    Action a;
    Word w;
    std::size_t count;
  };
  std::deque<Node> queue;
  std::unordered_multimap<std::size_t, Action> seen;
  Node root{G.action({}), {}, 0};
  seen.emplace(action_hash(root.a), root.a);
  queue.push_back(std::move(root));
  while (!queue.empty()) {
    Node x = std::move(queue.front());
    queue.pop_front();
    ++out.visited;
    if (x.count == E.size()) {
      out.kind = Realization::Realized;
      out.x = G.normalize(x.w);
      return out;
    }
    for (Gen s = 0; s < G.rank(); ++s) {
      const RootVec& r = x.a.col[s];
      if (G.sign_of(r) < 0) continue;
      RootId id = G.intern(r);
      if (!cone.contains(id)) continue;
      Node y{x.a, x.w, x.count};
      G.right_multiply(y.a, s);
      std::size_t h = action_hash(y.a);
      auto [lo, hi] = seen.equal_range(h);
      bool dup = false;
      for (auto it = lo; it != hi && !dup; ++it) dup = same_action(it->second, y.a);
      if (dup) continue;
      seen.emplace(h, y.a);
      y.w.push_back(s);
      if (std::binary_search(E.begin(), E.end(), id)) ++y.count;
      queue.push_back(std::move(y));
    }
  }
  out.kind = Realization::NotBiconvex;
  return out;
}

bool weak_le(const Group& G, const Element& u, const Element& v) { return G.is_prefix(u, v); }

JoinOutcome join(const Workspace& ws, const Element& u, const Element& v) {
  const Group& G = ws.group();
  JoinOutcome out;
  if (weak_le(G, u, v) || weak_le(G, v, u)) {
    out.exists = true;
    out.z = u.length() >= v.length() ? u : v;
    return out;
  }
  std::vector<RootId> A = G.inversion_set(u);
  auto nv = G.inversion_set(v);
  A.insert(A.end(), nv.begin(), nv.end());
  Realization r = realize_cone(ws, A);
  out.m = r.m;
  out.witness_state = r.witness_state;
  if (r.kind == Realization::NotBiconvex)
    throw std::logic_error("bounded union of inversion sets with non-biconvex cone");
  out.exists = r.kind == Realization::Realized;
  out.z = r.x;
  return out;
}

Element meet(const Group& G, const Element& u0, const Element& v0) {
  Element u = u0, v = v0;
  Word common;
  for (;;) {
    Gen pick = -1;
    for (Gen s = 0; s < G.rank() && pick < 0; ++s)
      if (G.is_left_descent(u, s) && G.is_left_descent(v, s)) pick = s;
    if (pick < 0) break;
    common.push_back(pick);
    Element g = G.generator(pick);
    u = G.mul(g, u);
    v = G.mul(g, v);
  }
  return G.normalize(common);
}

// ------------------------------------------------------------ root posets

std::vector<RootPosetEdge> root_weak_covers(const Group& G, SignedRoot b) {
  std::vector<RootPosetEdge> out;
  const RootVec vb = G.vec(b);
  for (Gen s = 0; s < G.rank(); ++s) {
    if (G.field().sign(vb.form[s]) >= 0) continue;
    RootVec t = vb;
    G.reflect(s, t);
    RootPosetEdge e;
    e.from = b;
    e.to = G.intern_signed(t);
    e.kind = RootPosetEdge::WeakCover;
    e.mediator = G.simple_id(s);
    e.coefficient = vb.form[s] * Rational(-2);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RootPosetEdge> root_bruhat_steps(const Group& G, SignedRoot b, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  std::vector<RootPosetEdge> out;
  const RootVec vb = G.vec(b);
  for (RootId g : G.roots_up_to_depth(cap)) {
    Scalar c = G.B(G.vec(g), vb);
    if (G.field().sign(c) >= 0) continue;
    RootPosetEdge e;
    e.from = b;
    e.to = G.intern_signed(G.reflect_in(G.vec(g), vb));
    e.kind = RootPosetEdge::BruhatStep;
    e.mediator = g;
    e.coefficient = c * Rational(-2);
    out.push_back(std::move(e));
  }
  return out;
}

ChainLabels chain_labels(const Group& G, SignedRoot start, const std::vector<Gen>& steps) {
  ChainLabels L;
  L.start = start;
  L.steps = steps;
  RootVec cur = G.vec(start);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Gen s = steps[i];
    if (s < 0 || s >= G.rank()) throw std::out_of_range("generator out of range");
    if (G.field().sign(cur.form[s]) >= 0)
      throw std::invalid_argument("step " + std::to_string(i + 1) + " is not a weak cover");
    G.reflect(s, cur);
    L.numeric.push_back(cur.form[s]);  // B(beta_i, alpha_i) > 0
  }
  L.end = G.intern_signed(cur);
  const std::size_t n = steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    Word w(steps.rbegin(), steps.rbegin() + static_cast<long>(n - 1 - i));  // s_{beta_n} .. s_{beta_{i+1}}
    L.gammas.push_back(G.intern_signed(G.act(w, G.simple(steps[i]))).id);
  }
  L.w = G.normalize(Word(steps.rbegin(), steps.rend()));
  return L;
}

}  // namespace cox
