#include "coxeter/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coxeter/io.hpp"
#include "json.hpp"

namespace cox {

std::size_t RootMask::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

std::vector<std::size_t> RootMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t x = w_[k];
    while (x) {
      out.push_back(k * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

std::size_t RootMask::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w_) h = (h ^ x) * 0xff51afd7ed558ccdULL;
  return h ^ (h >> 29);
}

// Pruning is sound: an ascent beta -> s(beta) has B(alpha_s, beta) < 0, so
// dp_inf never drops along it, and every root is reached from a simple root
// by ascents.  Hence every n-small root has an n-small parent.
SmallRoots small_roots(const Group& G, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const Field& F = G.field();
  SmallRoots S;
  S.n = n;
  std::set<RootId> seen;
  std::vector<RootId> frontier;
  for (Gen s = 0; s < G.rank(); ++s) {
    frontier.push_back(G.simple_id(s));
    seen.insert(G.simple_id(s));
  }
  std::vector<RootId> all = frontier;
  while (!frontier.empty()) {
    std::vector<RootId> next;
    for (RootId b : frontier) {
      for (Gen s = 0; s < G.rank(); ++s) {
        if (F.sign(G.vec(b).form[s]) >= 0) continue;
        RootVec c = G.vec(b);
        G.reflect(s, c);
        RootId id = G.intern(c);
        if (G.root(id).dp_inf > n) continue;
        if (seen.insert(id).second) next.push_back(id);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [&](RootId a, RootId b) {
    int da = G.root(a).depth, db = G.root(b).depth;
    return da != db ? da < db : a < b;
  });
  S.roots = std::move(all);
  for (int i = 0; i < static_cast<int>(S.roots.size()); ++i) S.index[S.roots[i]] = i;
  return S;
}

Automaton build_automaton(const Group& G, int n) {
  Automaton A;
  A.sigma_ = small_roots(G, n);
  A.rank_ = G.rank();
  const int r = G.rank();
  const auto& roots = A.sigma_.roots;
  const std::size_t m = roots.size();

  // refl[s][i]: index of s(root_i) in Sigma_n, -1 outside, -2 when root_i = alpha_s
  std::vector<std::vector<int>> refl(r, std::vector<int>(m, -1));
  for (Gen s = 0; s < r; ++s)
    for (std::size_t i = 0; i < m; ++i) {
      if (roots[i] == G.simple_id(s)) {
        refl[s][i] = -2;
        continue;
      }
      RootVec v = G.vec(roots[i]);
      G.reflect(s, v);
      refl[s][i] = A.sigma_.index_of(G.intern(v));
    }

  A.lex_block_.assign(r, {});
  for (Gen s = 0; s < r; ++s)
    for (Gen t = 0; t < s; ++t) {
      if (G.system().label(s, t) == kInf) continue;
      RootVec v = G.simple(t);
      G.reflect(s, v);
      int idx = A.sigma_.index_of(G.intern(v));
      if (idx < 0) throw std::logic_error("finite rank-2 root outside Sigma_n");
      A.lex_block_[s].push_back(idx);
    }

  A.states_.push_back(RootMask(m));
  A.lookup_.emplace(A.states_[0], 0);
  for (std::size_t q = 0; q < A.states_.size(); ++q) {
    for (Gen s = 0; s < r; ++s) {
      const int as = A.sigma_.index_of(G.simple_id(s));
      if (A.states_[q].test(as)) {
        A.delta_.push_back(Automaton::kNone);
        continue;
      }
      RootMask t(m);
      t.set(as);
      for (std::size_t i : A.states_[q].indices())
        if (refl[s][i] >= 0) t.set(refl[s][i]);
      auto [it, fresh] = A.lookup_.emplace(t, static_cast<int>(A.states_.size()));
      if (fresh) A.states_.push_back(t);
      A.delta_.push_back(it->second);
    }
  }
  return A;
}

std::vector<RootId> Automaton::state_roots(int q) const {
  std::vector<RootId> out;
  for (std::size_t i : states_[q].indices()) out.push_back(sigma_.roots[i]);
  return sorted_unique(std::move(out));
}

int Automaton::run(const Word& w) const {
  int q = start();
  for (auto it = w.rbegin(); it != w.rend() && q != kNone; ++it) {
    if (*it < 0 || *it >= rank_) throw std::out_of_range("generator out of range");
    q = next(q, *it);
  }
  return q;
}

bool Automaton::lex_allowed(int q, Gen s) const {
  if (next(q, s) == kNone) return false;
  for (int idx : lex_block_[s])
    if (states_[q].test(idx)) return false;
  return true;
}

RootMask Automaton::mask_of(const std::vector<RootId>& A) const {
  RootMask m(sigma_.roots.size());
  for (RootId id : A) {
    int i = sigma_.index_of(id);
    if (i < 0) throw std::invalid_argument("root is not " + std::to_string(n()) + "-small");
    m.set(i);
  }
  return m;
}

int Automaton::find_state(const RootMask& m) const {
  auto it = lookup_.find(m);
  return it == lookup_.end() ? kNone : it->second;
}

std::vector<int> Automaton::states_containing(const RootMask& A) const {
  std::vector<int> out;
  for (std::size_t q = 0; q < states_.size(); ++q)
    if (states_[q].contains(A)) out.push_back(static_cast<int>(q));
  return out;
}

std::vector<mpz_class> Automaton::count_by_length(int maxlen) const {
  std::vector<mpz_class> out{1};
  std::vector<mpz_class> cur(states_.size());
  cur[0] = 1;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<mpz_class> nxt(states_.size());
    for (std::size_t q = 0; q < states_.size(); ++q) {
      if (cur[q] == 0) continue;
      for (Gen s = 0; s < rank_; ++s)
        if (lex_allowed(static_cast<int>(q), s)) nxt[next(static_cast<int>(q), s)] += cur[q];
    }
    mpz_class total = 0;
    for (const auto& x : nxt) total += x;
    out.push_back(total);
    cur = std::move(nxt);
  }
  return out;
}

std::string Automaton::to_dot(const Group& G) const {
  std::ostringstream os;
  os << "digraph automaton_" << n() << " {\n  rankdir=LR;\n";
  for (std::size_t q = 0; q < states_.size(); ++q) {
    os << "  q" << q << " [label=\"";
    auto rs = state_roots(static_cast<int>(q));
    if (rs.empty()) os << "{}";
    for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "\\n" : "") << format_root(G, rs[i]);
    os << "\"" << (q == 0 ? ", shape=doublecircle" : "") << "];\n";
  }
  for (std::size_t q = 0; q < states_.size(); ++q)
    for (Gen s = 0; s < rank_; ++s)
      if (next(static_cast<int>(q), s) != kNone)
        os << "  q" << q << " -> q" << next(static_cast<int>(q), s) << " [label=\"" << s + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string Automaton::to_json(const Group& G) const {
  nlohmann::json j;
  j["n"] = n();
  j["small_roots"] = nlohmann::json::array();
  for (RootId id : sigma_.roots) j["small_roots"].push_back(format_root(G, id));
  j["states"] = nlohmann::json::array();
  for (std::size_t q = 0; q < states_.size(); ++q) {
    nlohmann::json st;
    st["id"] = q;
    std::vector<std::size_t> idx = states_[q].indices();
    st["roots"] = idx;
    nlohmann::json tr = nlohmann::json::object();
    for (Gen s = 0; s < rank_; ++s)
      if (next(static_cast<int>(q), s) != kNone) tr[std::to_string(s + 1)] = next(static_cast<int>(q), s);
    st["next"] = tr;
    j["states"].push_back(st);
  }
  return j.dump(1);
}

const Automaton& Workspace::automaton(int n) const {
  std::lock_guard lock(mu_);
  auto& slot = automata_[n];
  if (!slot) slot = std::make_unique<Automaton>(build_automaton(G_, n));
  return *slot;
}

const SmallRoots& Workspace::small(int n) const {
  {
    std::lock_guard lock(mu_);
    auto it = automata_.find(n);
    if (it != automata_.end() && it->second) return it->second->sigma();
    auto& slot = small_[n];
    if (!slot) slot = std::make_unique<SmallRoots>(small_roots(G_, n));
    return *slot;
  }
}

}  // namespace cox
