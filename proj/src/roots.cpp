#include "coxeter/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cox {

std::vector<RootId> sorted_unique(std::vector<RootId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Group::Group(CoxeterSystem W)
    : W_(std::move(W)), chunks_(std::make_unique<std::unique_ptr<Root[]>[]>(kMaxChunks)) {
  std::unique_lock lock(mu_);
  std::vector<RootId> level;
  for (Gen s = 0; s < rank(); ++s) {
    Root r;
    r.v = simple(s);
    r.depth = 1;
    r.dp_inf = 0;
    r.step = s;
    level.push_back(push_locked(std::move(r), key_hash(simple(s))));
  }
  levels_.push_back(std::move(level));
}

// ------------------------------------------------------------ vectors

RootVec Group::zero_vec() const {
  RootVec v;
  v.coords.assign(rank(), field().zero());
  v.form.assign(rank(), field().zero());
  return v;
}

RootVec Group::simple(Gen s) const {
  RootVec v;
  v.coords.assign(rank(), field().zero());
  v.coords[s] = field().one();
  for (Gen t = 0; t < rank(); ++t) v.form.push_back(W_.form(t, s));
  return v;
}

RootVec Group::make_vec(std::vector<Scalar> coords) const {
  if (static_cast<int>(coords.size()) != rank()) throw std::invalid_argument("vector has wrong length");
  RootVec v;
  v.coords = std::move(coords);
  v.form.assign(rank(), field().zero());
  for (Gen s = 0; s < rank(); ++s)
    for (Gen t = 0; t < rank(); ++t)
      if (!v.coords[t].is_zero()) v.form[s] += field().mul(v.coords[t], W_.form(s, t));
  return v;
}

void Group::reflect(Gen s, RootVec& v) const {
  if (v.form[s].is_zero()) return;
  const Scalar c = v.form[s];
  v.coords[s] -= c * Rational(2);
  for (Gen t = 0; t < rank(); ++t) {
    const Scalar& g = W_.form2(t, s);
    if (g.is_zero()) continue;
    v.form[t] -= field().mul(c, g);
  }
}

Scalar Group::B(const RootVec& a, const RootVec& b) const {
  Scalar r = field().zero();
  for (Gen s = 0; s < rank(); ++s)
    if (!a.coords[s].is_zero() && !b.form[s].is_zero()) r += field().mul(a.coords[s], b.form[s]);
  return r;
}

void Group::axpy(RootVec& y, const Scalar& a, const RootVec& x) const {
  if (a.is_zero()) return;
  for (Gen s = 0; s < rank(); ++s) {
    if (!x.coords[s].is_zero()) y.coords[s] += field().mul(a, x.coords[s]);
    if (!x.form[s].is_zero()) y.form[s] += field().mul(a, x.form[s]);
  }
}

RootVec Group::reflect_in(const RootVec& r, const RootVec& v) const {
  RootVec out = v;
  axpy(out, B(r, v) * Rational(-2), r);
  return out;
}

RootVec Group::negate(const RootVec& v) const {
  RootVec out;
  for (const auto& c : v.coords) out.coords.push_back(-c);
  for (const auto& c : v.form) out.form.push_back(-c);
  return out;
}

int Group::sign_of(const RootVec& v) const {
  for (const auto& c : v.coords) {
    int s = field().sign(c);
    if (s != 0) return s;
  }
  return 0;
}

bool Group::is_simple_vec(const RootVec& v, Gen s) const {
  const Scalar& c = v.coords[s];
  if (!c.is_rational() || c[0] != 1) return false;
  for (Gen t = 0; t < rank(); ++t)
    if (t != s && !v.coords[t].is_zero()) return false;
  return true;
}

// ------------------------------------------------------------ root table

std::size_t Group::key_hash(const RootVec& v) {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& c : v.coords) h = (h ^ c.hash()) * 0x100000001b3ULL + 0x9e37;
  return h;
}

const Root& Group::root(RootId id) const {
  return chunks_[id >> kChunkBits][id & (kChunk - 1)];
}

RootId Group::find_locked(const RootVec& v, std::size_t h) const {
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (root(it->second).v.coords == v.coords) return it->second;
  return kNoRoot;
}

RootId Group::push_locked(Root r, std::size_t h) const {
  std::size_t idx = size_.load(std::memory_order_relaxed);
  if ((idx >> kChunkBits) >= kMaxChunks) throw std::length_error("root table full");
  auto& chunk = chunks_[idx >> kChunkBits];
  if (!chunk) chunk = std::make_unique<Root[]>(kChunk);
  r.id = static_cast<RootId>(idx);
  chunk[idx & (kChunk - 1)] = std::move(r);
  index_.emplace(h, static_cast<RootId>(idx));
  size_.store(idx + 1, std::memory_order_release);
  return static_cast<RootId>(idx);
}

RootId Group::find(const RootVec& v) const {
  std::shared_lock lock(mu_);
  return find_locked(v, key_hash(v));
}

RootId Group::intern(const RootVec& v) const {
  const std::size_t h = key_hash(v);
  {
    std::shared_lock lock(mu_);
    RootId id = find_locked(v, h);
    if (id != kNoRoot) return id;
  }
  std::unique_lock lock(mu_);
  return intern_locked(v);
}

// Descend to a known root through s with B(alpha_s, .) > 0 (depth drops by
// one each time), then insert the path upward.
RootId Group::intern_locked(const RootVec& v) const {
  std::vector<std::pair<RootVec, Gen>> chain;
  RootVec cur = v;
  RootId found;
  for (;;) {
    found = find_locked(cur, key_hash(cur));
    if (found != kNoRoot) break;
    Gen down = -1;
    for (Gen s = 0; s < rank(); ++s) {
      int sg = field().sign(cur.coords[s]);
      if (sg < 0) throw std::invalid_argument("vector is not a positive root");
      if (down < 0 && field().sign(cur.form[s]) > 0) down = s;
    }
    if (down < 0 || chain.size() > 100000) throw std::invalid_argument("vector is not a root");
    RootVec next = cur;
    reflect(down, next);
    chain.emplace_back(std::move(cur), down);
    cur = std::move(next);
  }
  RootId pid = found;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Root& p = root(pid);
    Root r;
    r.v = std::move(it->first);
    r.depth = p.depth + 1;
    r.dp_inf = p.dp_inf + (field().cmp_to_minus_one(p.v.form[it->second]) <= 0 ? 1 : 0);
    r.parent = pid;
    r.step = it->second;
    std::size_t h = key_hash(r.v);
    pid = push_locked(std::move(r), h);
  }
  return pid;
}

SignedRoot Group::intern_signed(const RootVec& v) const {
  int s = sign_of(v);
  if (s == 0) throw std::invalid_argument("zero vector is not a root");
  if (s > 0) return {intern(v), false};
  return {intern(negate(v)), true};
}

void Group::generate_to_depth(int D) const {
  std::unique_lock lock(mu_);
  while (static_cast<int>(levels_.size()) < D) {
    std::vector<RootId> next;
    std::set<RootId> seen;
    for (RootId id : levels_.back()) {
      for (Gen s = 0; s < rank(); ++s) {
        const Root& p = root(id);
        if (field().sign(p.v.form[s]) >= 0) continue;
        RootVec c = p.v;
        reflect(s, c);
        std::size_t h = key_hash(c);
        RootId cid = find_locked(c, h);
        if (cid == kNoRoot) {
          Root r;
          r.v = std::move(c);
          r.depth = p.depth + 1;
          r.dp_inf = p.dp_inf + (field().cmp_to_minus_one(p.v.form[s]) <= 0 ? 1 : 0);
          r.parent = id;
          r.step = s;
          cid = push_locked(std::move(r), h);
        }
        if (seen.insert(cid).second) next.push_back(cid);
      }
    }
    if (next.empty()) {
      // finite root system: all deeper levels are empty
      while (static_cast<int>(levels_.size()) < D) levels_.emplace_back();
      break;
    }
    std::sort(next.begin(), next.end());
    levels_.push_back(std::move(next));
  }
}

int Group::generated_depth() const {
  std::shared_lock lock(mu_);
  return static_cast<int>(levels_.size());
}

std::vector<RootId> Group::roots_up_to_depth(int D) const {
  generate_to_depth(D);
  std::shared_lock lock(mu_);
  std::vector<RootId> out;
  for (int k = 0; k < D && k < static_cast<int>(levels_.size()); ++k)
    out.insert(out.end(), levels_[k].begin(), levels_[k].end());
  return out;
}

Word Group::witness(RootId id, Gen* base) const {
  Word w;
  const Root* r = &root(id);
  while (r->parent != kNoRoot) {
    w.push_back(r->step);
    r = &root(r->parent);
  }
  if (base) *base = r->step;
  return w;
}

Word Group::reflection_word(RootId id) const {
  Gen b;
  Word w = witness(id, &b);
  Word out = w;
  out.push_back(b);
  out.insert(out.end(), w.rbegin(), w.rend());
  return out;
}

// ------------------------------------------------------------ elements

// from_left: index i with x1..x_{i-1}(alpha_s) = alpha_{x_i}  (s left descent)
// otherwise: index i with x_{i+1}..x_k(alpha_s) = alpha_{x_i} (s right descent)
int Group::find_descent_index(const Word& x, Gen s, bool from_left) const {
  RootVec v = simple(s);
  const int k = static_cast<int>(x.size());
  for (int j = 0; j < k; ++j) {
    int i = from_left ? j : k - 1 - j;
    if (is_simple_vec(v, x[i])) return i;
    reflect(x[i], v);
  }
  return -1;
}

Word Group::reduce(const Word& w) const {
  Word x;
  for (Gen t : w) {
    if (t < 0 || t >= rank()) throw std::out_of_range("generator out of range");
    int i = find_descent_index(x, t, false);
    if (i >= 0)
      x.erase(x.begin() + i);
    else
      x.push_back(t);
  }
  return x;
}

Element Group::normalize(const Word& w) const {
  Word x = reduce(w);
  Word out;
  out.reserve(x.size());
  while (!x.empty()) {
    bool done = false;
    for (Gen s = 0; s < rank() && !done; ++s) {
      int i = find_descent_index(x, s, true);
      if (i < 0) continue;
      out.push_back(s);
      x.erase(x.begin() + i);
      done = true;
    }
    if (!done) throw std::logic_error("reduced word without left descent");
  }
  return Element::from_normal_word(std::move(out));
}

Element Group::mul(const Element& a, const Element& b) const {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return normalize(w);
}

Element Group::inv(const Element& a) const {
  return normalize(Word(a.word().rbegin(), a.word().rend()));
}

RootVec Group::act(const Word& w, RootVec v) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) reflect(*it, v);
  return v;
}

Action Group::action(const Word& w) const {
  Action a;
  for (Gen s = 0; s < rank(); ++s) a.col.push_back(simple(s));
  for (Gen s : w) right_multiply(a, s);
  return a;
}

void Group::right_multiply(Action& a, Gen s) const {
  // (a s)(alpha_t) = a(alpha_t) - 2B(alpha_s, alpha_t) a(alpha_s)
  for (Gen t = 0; t < rank(); ++t) {
    if (t == s) continue;
    const Scalar& g = W_.form2(s, t);
    if (g.is_zero()) continue;
    axpy(a.col[t], -g, a.col[s]);
  }
  a.col[s] = negate(a.col[s]);
}

bool Group::is_left_descent(const Element& w, Gen s) const {
  return find_descent_index(w.word(), s, true) >= 0;
}

bool Group::is_right_descent(const Element& w, Gen s) const {
  return find_descent_index(w.word(), s, false) >= 0;
}

std::vector<Gen> Group::left_descents(const Element& w) const {
  std::vector<Gen> out;
  for (Gen s = 0; s < rank(); ++s)
    if (is_left_descent(w, s)) out.push_back(s);
  return out;
}

std::vector<Gen> Group::right_descents(const Element& w) const {
  std::vector<Gen> out;
  for (Gen s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) out.push_back(s);
  return out;
}

bool Group::is_prefix(const Element& u, const Element& v) const {
  if (u.length() > v.length()) return false;
  Word w(u.word().rbegin(), u.word().rend());
  w.insert(w.end(), v.word().begin(), v.word().end());
  return length(w) == v.length() - u.length();
}

std::vector<RootId> Group::inversion_sequence(const Word& w) const {
  std::vector<RootId> out;
  out.reserve(w.size());
  Action a = action({});
  for (Gen s : w) {
    out.push_back(intern(a.col[s]));
    right_multiply(a, s);
  }
  return out;
}

std::vector<RootId> Group::inversion_set(const Element& w) const {
  return sorted_unique(inversion_sequence(w));
}

std::vector<RootId> Group::base(const Element& w) const {
  std::vector<RootId> out;
  for (RootId b : inversion_set(w)) {
    Word x = reflection_word(b);
    x.insert(x.end(), w.word().begin(), w.word().end());
    if (length(x) + 1 == w.length()) out.push_back(b);
  }
  return out;
}

std::vector<Element> Group::suffixes(const Element& w) const {
  std::set<Element> seen{w};
  std::vector<Element> todo{w};
  while (!todo.empty()) {
    Element x = std::move(todo.back());
    todo.pop_back();
    for (Gen s = 0; s < rank(); ++s) {
      int i = find_descent_index(x.word(), s, true);
      if (i < 0) continue;
      Word y = x.word();
      y.erase(y.begin() + i);
      Element e = normalize(y);
      if (seen.insert(e).second) todo.push_back(std::move(e));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cox
