// Roots, the root table, and group elements in lex-least normal form.
#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/scalar.hpp"
#include "coxeter/system.hpp"

namespace cox {

using RootId = std::uint32_t;
inline constexpr RootId kNoRoot = 0xffffffffu;

std::vector<RootId> sorted_unique(std::vector<RootId> v);

// a vector of V together with its form values against the simple roots
struct RootVec {
  std::vector<Scalar> coords;  // over Delta
  std::vector<Scalar> form;    // form[s] = B(alpha_s, v)
  bool operator==(const RootVec& o) const { return coords == o.coords; }
};

struct Root {
  RootId id = kNoRoot;
  RootVec v;
  int depth = 1;
  int dp_inf = 0;
  RootId parent = kNoRoot;  // root = s_step(parent); for simple roots parent = kNoRoot
  Gen step = 0;
};

struct SignedRoot {
  RootId id = kNoRoot;
  bool negative = false;
  auto operator<=>(const SignedRoot&) const = default;
};

using Word = std::vector<Gen>;

// Canonical element: the lexicographically least reduced word.
class Element {
 public:
  Element() = default;
  // caller guarantees the word is already canonical
  static Element from_normal_word(Word w) {
    Element e;
    e.w_ = std::move(w);
    return e;
  }
  const Word& word() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool is_identity() const { return w_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  // shortlex
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
    return a.w_ <=> b.w_;
  }

 private:
  Word w_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ULL;
    for (Gen g : e.word()) h = (h ^ static_cast<std::size_t>(g + 1)) * 1099511628211ULL;
    return h;
  }
};

// images of the simple roots under an element
struct Action {
  std::vector<RootVec> col;
};

class Group {
 public:
  explicit Group(CoxeterSystem W);
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const CoxeterSystem& system() const { return W_; }
  const Field& field() const { return W_.field(); }
  int rank() const { return W_.rank(); }

  // ---- vectors
  RootVec simple(Gen s) const;
  RootVec zero_vec() const;
  RootVec make_vec(std::vector<Scalar> coords) const;  // fills the form values
  void reflect(Gen s, RootVec& v) const;               // v <- s(v)
  RootVec reflect_in(const RootVec& r, const RootVec& v) const;  // s_r(v), B(r,r) = 1
  Scalar B(const RootVec& a, const RootVec& b) const;
  Scalar B(RootId a, RootId b) const { return B(vec(a), vec(b)); }
  RootVec negate(const RootVec& v) const;
  void axpy(RootVec& y, const Scalar& a, const RootVec& x) const;  // y += a x
  int sign_of(const RootVec& v) const;  // +1 / -1 for roots, 0 for zero
  bool is_simple_vec(const RootVec& v, Gen s) const;

  // ---- root table
  RootId intern(const RootVec& positive_root) const;
  SignedRoot intern_signed(const RootVec& root) const;
  RootId find(const RootVec& v) const;  // kNoRoot if absent
  const Root& root(RootId id) const;
  const RootVec& vec(RootId id) const { return root(id).v; }
  RootVec vec(SignedRoot r) const { return r.negative ? negate(vec(r.id)) : vec(r.id); }
  std::size_t table_size() const { return size_.load(std::memory_order_acquire); }
  void generate_to_depth(int D) const;
  int generated_depth() const;
  std::vector<RootId> roots_up_to_depth(int D) const;  // sorted by (depth, id)
  RootId simple_id(Gen s) const { return static_cast<RootId>(s); }

  // witness: root = w(alpha_base), |w| = depth - 1
  Word witness(RootId id, Gen* base) const;
  Word reflection_word(RootId id) const;  // reduced, length 2 depth - 1
  Element reflection(RootId id) const { return normalize(reflection_word(id)); }

  // ---- elements
  Word reduce(const Word& w) const;  // some reduced word of the same element
  Element normalize(const Word& w) const;
  std::size_t length(const Word& w) const { return reduce(w).size(); }
  Element identity() const { return {}; }
  Element generator(Gen s) const { return Element::from_normal_word({s}); }
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  RootVec act(const Word& w, RootVec v) const;
  RootVec act(const Element& w, RootVec v) const { return act(w.word(), std::move(v)); }
  SignedRoot act(const Element& w, SignedRoot r) const { return intern_signed(act(w, vec(r))); }
  Action action(const Word& w) const;
  void right_multiply(Action& a, Gen s) const;  // a <- a * s
  bool is_left_descent(const Element& w, Gen s) const;
  bool is_right_descent(const Element& w, Gen s) const;
  std::vector<Gen> left_descents(const Element& w) const;
  std::vector<Gen> right_descents(const Element& w) const;
  bool is_prefix(const Element& u, const Element& v) const;  // u <=_R v by lengths

  // N(w) in word order: alpha_{s1}, s1(alpha_{s2}), ...
  std::vector<RootId> inversion_sequence(const Element& w) const { return inversion_sequence(w.word()); }
  std::vector<RootId> inversion_sequence(const Word& reduced_word) const;
  std::vector<RootId> inversion_set(const Element& w) const;  // sorted ids
  std::vector<RootId> base(const Element& w) const;           // N^1(w), sorted ids
  std::vector<RootId> reflection_inversion_set(RootId b) const {  // N(s_b)
    return sorted_unique(inversion_sequence(reflection_word(b)));
  }
  std::vector<Element> suffixes(const Element& w) const;      // shortlex sorted

 private:
  CoxeterSystem W_;
  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunk = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 14;
  std::unique_ptr<std::unique_ptr<Root[]>[]> chunks_;
  mutable std::atomic<std::size_t> size_{0};
  mutable std::shared_mutex mu_;
  mutable std::unordered_multimap<std::size_t, RootId> index_;
  mutable std::vector<std::vector<RootId>> levels_;  // complete depth levels (depth = i+1)

  static std::size_t key_hash(const RootVec& v);
  RootId find_locked(const RootVec& v, std::size_t h) const;
  RootId push_locked(Root r, std::size_t h) const;
  RootId intern_locked(const RootVec& v) const;
  int find_descent_index(const Word& w, Gen s, bool from_left) const;
};

}  // namespace cox
