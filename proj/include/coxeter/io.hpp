// Text formats for words, roots and scalars.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxeter/roots.hpp"

namespace cox {

// "3 1 2 1" (1-based); "e" for the identity
std::string format_word(const Word& w);
inline std::string format_element(const Element& e) { return format_word(e.word()); }
// accepts "e", "", "3 1 2 1", "3,1,2,1" and, when rank <= 9, "3121"
Word parse_word(std::string_view text, int rank);

// exact coordinates, e.g. "1,1,2" or "1,t,0"
std::string format_coords(const Group& G, const RootVec& v);
// "a1+a2+2a3" when coordinates are rational, else "coords:..."
std::string format_root(const Group& G, RootId id);
std::string format_root(const Group& G, SignedRoot r);

// "coords:c1,c2,..", "word:<w>/<k>" meaning w(alpha_k), "a<k>" / "alpha<k>"
RootVec parse_root_vec(const Group& G, std::string_view text);
SignedRoot parse_root(const Group& G, std::string_view text);

// rational or polynomial in t (alias theta): "1/2", "t-1", "2*theta^2 - 3/4"
Scalar parse_scalar(const Field& F, std::string_view text);
// exact value and 12-digit decimal
std::string format_scalar(const Field& F, const Scalar& x);

}  // namespace cox
