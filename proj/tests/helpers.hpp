// shorthand shared by the test binaries
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "coxeter/automaton.hpp"
#include "coxeter/garside.hpp"
#include "coxeter/io.hpp"
#include "coxeter/roots.hpp"
#include "oracle.hpp"

namespace th {

using namespace cox;

inline Element E(const Group& G, const std::string& w) { return G.normalize(parse_word(w, G.rank())); }

inline RootVec V(const Group& G, std::vector<int> coords) {
  std::vector<Scalar> c;
  for (int x : coords) c.push_back(G.field().from_rational(x));
  return G.make_vec(std::move(c));
}
inline RootId R(const Group& G, std::vector<int> coords) { return G.intern(V(G, std::move(coords))); }

inline std::set<std::string> words_of(const std::vector<Element>& els) {
  std::set<std::string> out;
  for (const auto& e : els) out.insert(format_element(e));
  return out;
}
inline std::set<std::string> words_of(const ElementSet& els) { return words_of(std::vector<Element>(els.begin(), els.end())); }

// elements named by any reduced word, e.g. {"e", "12", "2313"}, in normal form
inline std::set<std::string> elems(const Group& G, const std::vector<std::string>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(format_element(E(G, w)));
  return out;
}

inline std::vector<RootId> sorted(std::vector<RootId> v) { return sorted_unique(std::move(v)); }

// root id of an oracle vector (interning it)
inline RootId id_of(const Group& G, const oracle::Vec& v) { return G.intern(G.make_vec(v)); }

inline std::vector<RootId> ids_of(const Group& G, const std::vector<oracle::Vec>& vs) {
  std::vector<RootId> out;
  for (const auto& v : vs) out.push_back(id_of(G, v));
  return sorted(out);
}

// Element for an oracle ball entry
inline Element elem(const oracle::Ball& ball, int i) { return Element::from_normal_word(ball.word(i)); }

inline const std::vector<std::string>& acceptance_presets() {
  static const std::vector<std::string> p{"Atilde2", "Gtilde2", "Dinf", "universal:3", "rank3:7,3", "rank3:5,4",
                                          "triangle:2,3,7"};
  return p;
}

}  // namespace th
