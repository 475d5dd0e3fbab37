#include "coxeter/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cox {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_any(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string_view::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Rational parse_rational(const std::string& tok, std::string_view whole) {
  auto bad = [&] { return std::invalid_argument("bad number '" + tok + "' in '" + std::string(whole) + "'"); };
  if (tok.empty()) throw bad();
  std::size_t slash = tok.find('/');
  std::string num = tok.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  auto digits = [](const std::string& x) {
    if (x.empty()) return false;
    for (char c : x)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(num) || !digits(den)) throw bad();
  mpz_class dn(den);
  if (dn == 0) throw bad();
  Rational q{mpz_class(num), dn};
  q.canonicalize();
  return q;
}

}  // namespace

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  std::string_view t = trim(text);
  if (t.empty() || t == "e") return {};
  auto toks = split_any(t, " ,\t");
  if (toks.size() == 1 && toks[0].size() > 1 && rank <= 9) {
    std::string one = toks[0];
    toks.clear();
    for (char c : one) toks.emplace_back(1, c);
  }
  Word w;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& tok = toks[i];
    bool ok = !tok.empty() && tok.size() < 6;
    for (char c : tok) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    int g = ok ? std::stoi(tok) : 0;
    if (!ok || g < 1 || g > rank)
      throw std::invalid_argument("word '" + std::string(text) + "': letter " + std::to_string(i + 1) + " ('" +
                                  tok + "') is not a generator in 1.." + std::to_string(rank));
    w.push_back(g - 1);
  }
  return w;
}

std::string format_coords(const Group& G, const RootVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ',';
    for (char c : G.field().to_string(v.coords[i]))
      if (c != ' ') out += c;
  }
  return out;
}

std::string format_root(const Group& G, RootId id) {
  const RootVec& v = G.vec(id);
  bool rational = true;
  for (const auto& c : v.coords) rational = rational && c.is_rational();
  if (!rational) return "coords:" + format_coords(G, v);
  std::string out;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    const Rational& q = v.coords[i][0];
    if (sgn(q) == 0) continue;
    if (!out.empty()) out += '+';
    if (q != 1) out += q.get_str();
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

std::string format_root(const Group& G, SignedRoot r) {
  std::string s = format_root(G, r.id);
  if (!r.negative) return s;
  return s.find('+') == std::string::npos && s.rfind("coords:", 0) != 0 ? "-" + s : "-(" + s + ")";
}

Scalar parse_scalar(const Field& F, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  // split into signed terms
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);
  Poly p;
  for (const auto& term : terms) {
    std::size_t i = 0;
    int sign = 1;
    while (i < term.size() && (term[i] == '+' || term[i] == '-')) {
      if (term[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < term.size() && (std::isdigit(static_cast<unsigned char>(term[j])) || term[j] == '/')) ++j;
    Rational coef = j > i ? parse_rational(term.substr(i, j - i), text) : Rational(1);
    if (j < term.size() && term[j] == '*') ++j;
    int power = 0;
    std::string rest = term.substr(j);
    if (rest.rfind("theta", 0) == 0 || rest.rfind("t", 0) == 0) {
      rest = rest.substr(rest.rfind("theta", 0) == 0 ? 5 : 1);
      power = 1;
      if (!rest.empty() && rest[0] == '^') {
        std::string e = rest.substr(1);
        bool ok = !e.empty() && e.size() < 4;
        for (char c : e) ok = ok && std::isdigit(static_cast<unsigned char>(c));
        if (!ok) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
        power = std::stoi(e);
        rest.clear();
      }
    } else if (j == i) {
      throw std::invalid_argument("cannot parse term '" + term + "' in '" + std::string(text) + "'");
    }
    if (!rest.empty()) throw std::invalid_argument("trailing '" + rest + "' in '" + std::string(text) + "'");
    if (static_cast<int>(p.size()) <= power) p.resize(power + 1);
    p[power] += sign * coef;
  }
  return F.from_poly(poly_trim(p));
}

std::string format_scalar(const Field& F, const Scalar& x) {
  return F.to_string(x) + " ~ " + F.to_decimal(x, 12);
}

RootVec parse_root_vec(const Group& G, std::string_view text0) {
  std::string_view text = trim(text0);
  bool neg = false;
  if (!text.empty() && text[0] == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  RootVec v;
  if (text.rfind("coords:", 0) == 0) {
    auto parts = split_any(text.substr(7), ",");
    if (static_cast<int>(parts.size()) != G.rank())
      throw std::invalid_argument("root '" + std::string(text0) + "' needs " + std::to_string(G.rank()) + " coordinates");
    std::vector<Scalar> c;
    for (const auto& p : parts) c.push_back(parse_scalar(G.field(), p));
    v = G.make_vec(std::move(c));
    if (!(G.B(v, v) == G.field().one()))
      throw std::invalid_argument("'" + std::string(text0) + "' does not have B(v,v) = 1, not a root");
  } else if (text.rfind("word:", 0) == 0) {
    auto body = text.substr(5);
    auto slash = body.rfind('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("word root needs 'word:<w>/<k>'");
    Word w = parse_word(body.substr(0, slash), G.rank());
    Word k = parse_word(body.substr(slash + 1), G.rank());
    if (k.size() != 1) throw std::invalid_argument("word root: one generator after '/'");
    v = G.act(w, G.simple(k[0]));
  } else {
    // sum of terms like a1, 2a3, 1/2*alpha2
    v = G.zero_vec();
    auto bad = [&] { return std::invalid_argument("cannot parse root '" + std::string(text0) + "'"); };
    auto terms = split_any(text, "+");
    if (terms.empty()) throw bad();
    for (const auto& term0 : terms) {
      std::string_view term = trim(term0);
      std::size_t k = 0;
      while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
      Rational c = k ? parse_rational(std::string(term.substr(0, k)), text0) : Rational(1);
      term.remove_prefix(k);
      if (!term.empty() && term[0] == '*') term.remove_prefix(1);
      if (term.rfind("alpha", 0) == 0)
        term.remove_prefix(5);
      else if (term.rfind("a", 0) == 0)
        term.remove_prefix(1);
      else
        throw bad();
      bool ok = !term.empty() && term.size() < 6;
      for (char ch : term) ok = ok && std::isdigit(static_cast<unsigned char>(ch));
      int g = ok ? std::stoi(std::string(term)) : 0;
      if (g < 1 || g > G.rank())
        throw std::invalid_argument("root '" + std::string(text0) + "': '" + term0 + "' is not a simple root a1..a" +
                                    std::to_string(G.rank()));
      G.axpy(v, G.field().from_rational(c), G.simple(g - 1));
    }
    if (!(G.B(v, v) == G.field().one()))
      throw std::invalid_argument("'" + std::string(text0) + "' does not have B(v,v) = 1, not a root");
  }
  return neg ? G.negate(v) : v;
}

SignedRoot parse_root(const Group& G, std::string_view text) {
  return G.intern_signed(parse_root_vec(G, text));
}

}  // namespace cox
