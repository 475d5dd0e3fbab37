// n-small roots and the n-canonical automaton.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/roots.hpp"

namespace cox {

class RootMask {
 public:
  RootMask() = default;
  explicit RootMask(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool contains(const RootMask& o) const {  // superset test
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (o.w_[k] & ~w_[k]) return false;
    return true;
  }
  std::size_t count() const;
  std::vector<std::size_t> indices() const;
  std::size_t hash() const;
  friend bool operator==(const RootMask&, const RootMask&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct RootMaskHash {
  std::size_t operator()(const RootMask& m) const { return m.hash(); }
};

struct SmallRoots {
  int n = 0;
  std::vector<RootId> roots;  // ordered by (depth, id)
  std::unordered_map<RootId, int> index;
  int index_of(RootId id) const {
    auto it = index.find(id);
    return it == index.end() ? -1 : it->second;
  }
  bool contains(RootId id) const { return index.count(id) != 0; }
};

SmallRoots small_roots(const Group& G, int n);

class Automaton {
 public:
  static constexpr int kNone = -1;

  int n() const { return sigma_.n; }
  const SmallRoots& sigma() const { return sigma_; }
  int rank() const { return rank_; }
  std::size_t num_states() const { return states_.size(); }
  const RootMask& state(int q) const { return states_[q]; }
  std::vector<RootId> state_roots(int q) const;  // sorted ids
  int start() const { return 0; }
  int next(int q, Gen s) const { return delta_[q * rank_ + s]; }

  // Transitions prepend letters, so a word is read from its last letter.
  int run(const Word& w) const;  // kNone if the word is not reduced
  bool is_reduced(const Word& w) const { return run(w) != kNone; }
  int state_of(const Element& w) const { return run(w.word()); }
  // ShortLex filter: s w is lex-least iff s is the least left descent of s w
  bool lex_allowed(int q, Gen s) const;

  RootMask mask_of(const std::vector<RootId>& A) const;  // throws if A is not inside Sigma_n
  int find_state(const RootMask& m) const;
  std::vector<int> states_containing(const RootMask& A) const;
  std::vector<mpz_class> count_by_length(int maxlen) const;

  std::string to_dot(const Group& G) const;
  std::string to_json(const Group& G) const;

  friend Automaton build_automaton(const Group& G, int n);

 private:
  SmallRoots sigma_;
  int rank_ = 0;
  std::vector<RootMask> states_;
  std::vector<int> delta_;
  std::unordered_map<RootMask, int, RootMaskHash> lookup_;
  std::vector<std::vector<int>> lex_block_;  // for s: indices of s(alpha_t), t < s, m_st finite
};

Automaton build_automaton(const Group& G, int n);

// Group plus lazily built automata.  Thread-safe.
class Workspace {
 public:
  explicit Workspace(CoxeterSystem W) : G_(std::move(W)) {}
  const Group& group() const { return G_; }
  const Automaton& automaton(int n) const;
  const SmallRoots& small(int n) const;

 private:
  Group G_;
  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::unique_ptr<Automaton>> automata_;
  mutable std::unordered_map<int, std::unique_ptr<SmallRoots>> small_;
};

}  // namespace cox
