#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"

using namespace cox;
using th::E;
using th::R;
using th::V;

TEST_SUITE("roots") {
  TEST_CASE("simple reflections") {
    Group A(preset("Atilde2"));
    RootVec v = A.simple(0);
    A.reflect(0, v);
    CHECK(v == A.negate(A.simple(0)));
    v = A.simple(1);
    A.reflect(0, v);
    CHECK(v == V(A, {1, 1, 0}));

    Group D(preset("Dinf"));
    v = D.simple(1);
    D.reflect(0, v);
    CHECK(v == V(D, {2, 1}));
  }

  TEST_CASE("generation by depth") {
    Group A(preset("Atilde2"));
    auto two = A.roots_up_to_depth(2);
    std::vector<RootId> expect{R(A, {1, 0, 0}), R(A, {0, 1, 0}), R(A, {0, 0, 1}),
                               R(A, {1, 1, 0}), R(A, {1, 0, 1}), R(A, {0, 1, 1})};
    CHECK(th::sorted(two) == th::sorted(expect));

    Group D(preset("Dinf"));
    auto three = D.roots_up_to_depth(3);
    // alpha_{s,k}, alpha_{t,k}, k <= 2
    std::vector<RootId> dexp{R(D, {1, 0}), R(D, {0, 1}), R(D, {1, 2}), R(D, {2, 1}), R(D, {3, 2}), R(D, {2, 3})};
    CHECK(th::sorted(three) == th::sorted(dexp));

    Group one(build_system({{1}}));
    CHECK(one.roots_up_to_depth(5).size() == 1);
  }

  TEST_CASE("normal form") {
    Group A(preset("Atilde2"));
    CHECK(E(A, "1 1").is_identity());
    CHECK(format_element(E(A, "2 1 2")) == "1 2 1");
    Group D(preset("Dinf"));
    CHECK(format_element(E(D, "1 2 1 2")) == "1 2 1 2");
    Element w = E(A, "3121");
    CHECK(A.left_descents(w) == std::vector<Gen>{2});
    CHECK(A.mul(w, A.inv(w)).is_identity());
    CHECK(A.act(A.identity(), V(A, {1, 1, 2})) == V(A, {1, 1, 2}));
  }

  TEST_CASE("inversion sets") {
    Group A(preset("Atilde2"));
    CHECK(A.inversion_set(A.identity()).empty());
    Group D(preset("Dinf"));
    // N(ts) = {alpha_t, t(alpha_s)}
    CHECK(D.inversion_set(E(D, "2 1")) == th::sorted({R(D, {0, 1}), R(D, {1, 2})}));
    CHECK(A.inversion_set(E(A, "3121")) ==
          th::sorted({R(A, {0, 0, 1}), R(A, {1, 0, 1}), R(A, {0, 1, 1}), R(A, {1, 1, 2})}));
  }

  TEST_CASE("bases") {
    Group A(preset("Atilde2"));
    CHECK(A.base(A.identity()).empty());
    for (Gen s = 0; s < 3; ++s) CHECK(A.base(A.generator(s)) == std::vector<RootId>{A.simple_id(s)});
    CHECK(A.base(E(A, "3121")) == th::sorted({R(A, {0, 0, 1}), R(A, {1, 0, 1}), R(A, {0, 1, 1})}));
    Group D(preset("Dinf"));
    // two ends of the inversion chain of sts
    CHECK(D.base(E(D, "1 2 1")) == th::sorted({R(D, {1, 0}), R(D, {3, 2})}));
  }

  TEST_CASE("suffixes") {
    Group A(preset("Atilde2"));
    CHECK(th::words_of(A.suffixes(A.generator(0))) == th::elems(A, {"e", "1"}));
    CHECK(th::words_of(A.suffixes(E(A, "121"))) == th::elems(A, {"e", "1", "2", "12", "21", "121"}));
    auto s = th::words_of(A.suffixes(E(A, "1232")));
    CHECK(s.count("2 3 2"));
    CHECK(s.count("3 2"));
  }

  TEST_CASE("errors") {
    Group A(preset("Atilde2"));
    CHECK_THROWS(A.intern(V(A, {1, 1, 1})));  // not a root
    CHECK_THROWS(A.intern(A.negate(A.simple(0))));
    CHECK_THROWS(parse_word("1 4", 3));
  }

  TEST_CASE("agreement with the matrix ball") {
    for (const char* name : {"Atilde2", "Gtilde2", "Dinf", "universal:3", "H3", "B4", "rank3:7,3"}) {
      INFO(std::string(name));
      CoxeterSystem W = preset(name);
      Group G(W);
      oracle::Ball ball(W, W.rank() == 4 ? 5 : 6);
      std::map<std::string, int> by_word;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        Element w = G.normalize(ball.word(static_cast<int>(i)));
        // lex-least normal forms coincide
        CHECK(w.word() == ball.word(static_cast<int>(i)));
        CHECK(G.inversion_set(w).size() == w.length());
        CHECK(G.inversion_set(w) == th::ids_of(G, ball.inversion_set(static_cast<int>(i))));
        CHECK(G.base(w) == th::ids_of(G, ball.base(static_cast<int>(i))));
        for (RootId b : G.inversion_set(w)) CHECK(G.mul(G.reflection(b), w).length() < w.length());
      }
      // depths
      for (const auto& rr : ball.roots()) CHECK(G.root(th::id_of(G, rr.v)).depth == rr.depth);
      // weak order through lengths: u <= v iff l(u^-1 v) = l(v) - l(u)
      std::mt19937 rng(11);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(ball.size()) - 1);
      for (int k = 0; k < 300; ++k) {
        int u = pick(rng), v = pick(rng);
        Element eu = th::elem(ball, u), ev = th::elem(ball, v);
        oracle::Word q(ball.word(u).rbegin(), ball.word(u).rend());
        q.insert(q.end(), ball.word(v).begin(), ball.word(v).end());
        int lq = ball.length_of(q);
        bool le = lq >= 0 && lq == ball.length(v) - ball.length(u);
        CHECK(G.is_prefix(eu, ev) == le);
        CHECK(ball.weak_le(u, v) == le);
        // N(uv) = N(u) + u N(v) when lengths add
        Element uv = G.mul(eu, ev);
        if (uv.length() == eu.length() + ev.length()) {
          auto n = G.inversion_set(eu);
          for (RootId b : G.inversion_set(ev)) n.push_back(G.intern(G.act(eu, G.vec(b))));
          CHECK(th::sorted(n) == G.inversion_set(uv));
          CHECK(n.size() == uv.length());
        }
      }
    }
  }

  TEST_CASE("depth transitions") {
    for (const char* name : {"Atilde2", "Gtilde2", "universal:3", "triangle:2,3,7"}) {
      Group G(preset(name));
      const Field& F = G.field();
      auto roots = G.roots_up_to_depth(6);
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) REQUIRE(!(G.vec(roots[i]) == G.vec(roots[j])));
      for (RootId b : roots) {
        for (const auto& c : G.vec(b).coords) CHECK(F.sign(c) >= 0);
        for (Gen s = 0; s < G.rank(); ++s) {
          if (b == G.simple_id(s)) continue;
          RootVec v = G.vec(b);
          G.reflect(s, v);
          int d = G.root(G.intern(v)).depth, d0 = G.root(b).depth;
          int sg = F.sign(G.vec(b).form[s]);
          CHECK(d - d0 == (sg < 0 ? 1 : sg > 0 ? -1 : 0));
        }
      }
    }
  }
}
