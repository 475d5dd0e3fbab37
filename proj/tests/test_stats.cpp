#include <doctest.h>

#include <random>

#include "coxeter/stats.hpp"
#include "helpers.hpp"

using namespace cox;
using th::R;

namespace {

// alpha_{s,k}: [s,t]_k applied to alpha_s (k even) or alpha_t (k odd)
RootId alpha_k(const Group& G, Gen s, int k) {
  Gen t = 1 - s;
  Word w;
  for (int i = 0; i < k; ++i) w.push_back(i % 2 ? t : s);
  return G.intern(G.act(w, G.simple(k % 2 ? t : s)));
}

}  // namespace

TEST_SUITE("stats") {
  TEST_CASE("dp_inf examples") {
    Group A(preset("Atilde2"));
    for (Gen s = 0; s < 3; ++s) CHECK(dp_infinity(A, A.simple_id(s)) == 0);
    CHECK(dp_infinity(A, R(A, {1, 1, 2})) == 1);
    Group D(preset("Dinf"));
    for (int k = 0; k <= 6; ++k) {
      CHECK(dp_infinity(D, alpha_k(D, 0, k)) == k);
      CHECK(dp_infinity(D, alpha_k(D, 1, k)) == k);
    }
  }

  TEST_CASE("dominance sets") {
    Group A(preset("Atilde2"));
    for (RootId b : A.roots_up_to_depth(2)) CHECK(dom_set(A, b).empty());
    CHECK(dom_set(A, R(A, {1, 1, 2})) == std::vector<RootId>{R(A, {0, 0, 1})});
    Group D(preset("Dinf"));
    CHECK(dom_set(D, alpha_k(D, 0, 2)) == th::sorted({alpha_k(D, 0, 0), alpha_k(D, 0, 1)}));
    CHECK(dominates(D, alpha_k(D, 0, 1), alpha_k(D, 0, 2)));
    CHECK(!dominates(D, alpha_k(D, 0, 2), alpha_k(D, 0, 1)));
    CHECK(dominates(A, R(A, {1, 1, 0}), R(A, {1, 1, 0})));
    CHECK(!dominates(A, A.simple_id(0), A.simple_id(1)));
  }

  TEST_CASE("d_X examples") {
    Group G(preset("Gtilde2"));
    const Field& F = G.field();
    for (Gen s = 0; s < 3; ++s) {
      SignedRoot a{G.simple_id(s), false};
      CHECK(d_length(G, a, Coideal::all()) == 1);
      CHECK(dp_X(G, a.id, Coideal::all()) == 0);
    }
    std::mt19937 rng(3);
    auto roots = G.roots_up_to_depth(6);
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int k = 0; k < 50; ++k) {
      RootId b = roots[pick(rng)];
      CHECK(dp_X(G, b, Coideal::closed(F.one())) == dp_infinity(G, b));
      CHECK(d_length(G, {b, false}, Coideal::empty()) == 0);
      CHECK(dp_X(G, b, Coideal::empty()) == 0);
      CHECK(d_length(G, {b, true}, Coideal::all()) == -d_length(G, {b, false}, Coideal::all()));
    }
  }

  TEST_CASE("coideal membership") {
    Field F(6);
    Scalar half = F.from_rational(Rational(1, 2));
    CHECK(Coideal::all().contains(F, half));
    CHECK(!Coideal::all().contains(F, F.zero()));
    CHECK(Coideal::closed(F.one()).contains(F, F.one()));
    CHECK(!Coideal::open(F.one()).contains(F, F.one()));
    CHECK(Coideal::open(half).contains(F, F.theta() * Rational(1, 2)));
    CHECK(!Coideal::empty().contains(F, F.one()));
  }

  TEST_CASE("dp_inf equals |Dom| and the d_X identities") {
    for (const char* name : {"Atilde2", "Gtilde2", "Dinf", "universal:3", "rank3:7,3", "B4"}) {
      INFO(std::string(name));
      Group G(preset(name));
      const Field& F = G.field();
      for (RootId b : G.roots_up_to_depth(6)) {
        CHECK(dp_infinity(G, b) == static_cast<int>(dom_set(G, b).size()));
        CHECK(d_length(G, {b, false}, Coideal::all()) == 2 * dp(G, b) - 1);
        CHECK(d_length(G, {b, false}, Coideal::closed(F.one())) == 2 * dp_infinity(G, b) + 1);
      }
    }
  }

  TEST_CASE("d_X recurrence under simple reflections") {
    for (const char* name : {"Atilde2", "Gtilde2", "universal:3", "rank3:5,4"}) {
      INFO(std::string(name));
      Group G(preset(name));
      const Field& F = G.field();
      std::vector<Coideal> Xs{Coideal::all(), Coideal::closed(F.one()), Coideal::open(F.one()),
                              Coideal::closed(F.from_rational(Rational(1, 2))), Coideal::empty()};
      for (RootId b : G.roots_up_to_depth(5))
        for (Gen s = 0; s < G.rank(); ++s)
          for (const auto& X : Xs) {
            SignedRoot sb = G.intern_signed(G.reflect_in(G.simple(s), G.vec(b)));
            Scalar c = G.vec(b).form[s];
            int expect = d_length(G, {b, false}, X);
            if (X.contains(F, c)) expect -= 2;
            else if (X.contains(F, -c)) expect += 2;
            CHECK(d_length(G, sb, X) == expect);
          }
    }
  }

  TEST_CASE("dominance restricts to parabolic subsystems") {
    // Atilde2 sitting inside a rank 4 system, D_inf inside universal:3
    CoxeterSystem big = build_system({{1, 3, 3, kInf}, {3, 1, 3, 4}, {3, 3, 1, kInf}, {kInf, 4, kInf, 1}});
    Group Gb(big), Ga(preset("Atilde2"));
    for (RootId b : Ga.roots_up_to_depth(7)) {
      std::vector<Scalar> c;
      for (const auto& x : Ga.vec(b).coords) c.push_back(Gb.field().from_rational(x[0]));
      c.push_back(Gb.field().zero());
      CHECK(dp_infinity(Gb, Gb.intern(Gb.make_vec(c))) == dp_infinity(Ga, b));
    }
    Group U(preset("universal:3")), D(preset("Dinf"));
    for (RootId b : D.roots_up_to_depth(8)) {
      std::vector<Scalar> c = D.vec(b).coords;
      c.push_back(U.field().zero());
      CHECK(dp_infinity(U, U.intern(U.make_vec(c))) == dp_infinity(D, b));
    }
  }

  TEST_CASE("dominance is visible in inversion sets of a ball") {
    for (const char* name : {"Atilde2", "Gtilde2"}) {
      CoxeterSystem W = preset(name);
      Group G(W);
      oracle::Ball ball(W, 7);
      std::vector<oracle::Mat> inv;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        oracle::Word r(ball.word(static_cast<int>(i)).rbegin(), ball.word(static_cast<int>(i)).rend());
        inv.push_back(ball.of_word(r));
      }
      int pairs = 0;
      for (RootId b : G.roots_up_to_depth(5))
        for (RootId a : dom_set(G, b)) {
          ++pairs;
          for (const auto& m : inv)
            if (ball.sign(ball.apply(m, G.vec(b).coords)) < 0) CHECK(ball.sign(ball.apply(m, G.vec(a).coords)) < 0);
        }
      CHECK(pairs > 0);
    }
  }
}
