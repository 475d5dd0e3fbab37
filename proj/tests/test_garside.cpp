#include <doctest.h>

#include <omp.h>

#include "helpers.hpp"

using namespace cox;
using th::E;

namespace {

const std::vector<std::string> kAtilde2Low{"e",  "1",  "2",  "3",   "12",  "21",  "13",   "31",
                                           "23", "32", "121", "131", "232", "1232", "2313", "3121"};

}  // namespace

TEST_SUITE("garside") {
  TEST_CASE("is_n_low examples") {
    Group A(preset("Atilde2"));
    CHECK(is_n_low(A, A.identity(), 0));
    for (Gen s = 0; s < 3; ++s) CHECK(is_n_low(A, A.generator(s), 0));
    Group G(preset("Gtilde2"));
    CHECK(is_n_low(G, E(G, "1 3 2"), 0));
    Group D(preset("Dinf"));
    CHECK(!is_n_low(D, E(D, "1 2"), 0));
    CHECK(is_n_low(D, E(D, "1 2"), 1));
  }

  TEST_CASE("low elements examples") {
    Workspace wa(preset("Atilde2"));
    LowReport r = low_elements(wa, 0);
    CHECK(th::words_of(r.elements) == th::elems(wa.group(), kAtilde2Low));
    CHECK(r.elements.size() <= r.num_states);
    Workspace wd(preset("Dinf"));
    CHECK(th::words_of(low_elements(wd, 0).elements) == th::elems(wd.group(), {"e", "1", "2"}));
    Workspace wu(preset("universal:3"));
    CHECK(th::words_of(low_elements(wu, 0).elements) == th::elems(wu.group(), {"e", "1", "2", "3"}));
  }

  TEST_CASE("closure examples") {
    Workspace wa(preset("Atilde2"));
    ShadowReport s = garside_closure(wa, simple_seed(wa.group()));
    CHECK(s.converged);
    CHECK(s.iterations == 2);
    CHECK(th::words_of(s.elements) == th::elems(wa.group(), kAtilde2Low));
    Workspace wd(preset("Dinf"));
    ShadowReport d = garside_closure(wd, simple_seed(wd.group()));
    CHECK(d.converged);
    CHECK(th::words_of(d.elements) == th::elems(wd.group(), {"e", "1", "2"}));
    Workspace w3(preset("A2"));
    const Group& G3 = w3.group();
    ShadowReport f = garside_closure(w3, {G3.generator(0), G3.generator(1)});
    CHECK(th::words_of(f.elements) == th::elems(G3, {"e", "1", "2", "12", "21", "121"}));
    // a cut-off run is reported as such
    ShadowReport cut = garside_closure(wa, simple_seed(wa.group()), 1);
    CHECK(!cut.converged);
  }

  TEST_CASE("verify_garside examples") {
    Workspace wa(preset("Atilde2"));
    const Group& A = wa.group();
    ElementSet L;
    for (const auto& w : kAtilde2Low) L.insert(E(A, w));
    CHECK(verify_garside(wa, L).pass);
    L.erase(E(A, "1232"));
    GarsideVerdict v = verify_garside(wa, L);
    CHECK(!v.pass);
    CHECK(v.join_witness.has_value());
    Workspace wd(preset("Dinf"));
    CHECK(verify_garside(wd, simple_seed(wd.group())).pass);
    ElementSet bad{A.identity(), A.generator(0)};
    GarsideVerdict vb = verify_garside(wa, bad);
    CHECK(vb.missing_generators == std::vector<Gen>{1, 2});
    ElementSet nosuffix = simple_seed(A);
    nosuffix.insert(E(A, "12"));
    nosuffix.erase(A.generator(1));
    CHECK(verify_garside(wa, nosuffix).suffix_witness.has_value());
  }

  TEST_CASE("filtration, closure inside low, strictness on Gtilde2") {
    for (const char* name : {"Atilde2", "Gtilde2", "Dinf", "universal:3", "rank3:7,3"}) {
      INFO(std::string(name));
      Workspace ws(preset(name));
      LowReport l0 = low_elements(ws, 0), l1 = low_elements(ws, 1);
      for (const auto& w : l0.elements) CHECK(std::binary_search(l1.elements.begin(), l1.elements.end(), w));
      ShadowReport s = garside_closure(ws, simple_seed(ws.group()));
      REQUIRE(s.converged);
      CHECK(verify_garside(ws, s.elements).pass);
      for (const auto& w : s.elements) CHECK(std::binary_search(l0.elements.begin(), l0.elements.end(), w));
      if (std::string(name) == "Gtilde2") {
        CHECK(s.elements.size() < l0.elements.size());
        CHECK(!s.elements.count(E(ws.group(), "1 3 2")));
      }
    }
  }

  TEST_CASE("low elements are complete on a ball") {
    for (const char* name : {"Atilde2", "Gtilde2", "universal:3"}) {
      INFO(std::string(name));
      CoxeterSystem W = preset(name);
      Workspace ws(W);
      const Group& G = ws.group();
      oracle::Ball ball(W, 7);
      for (int n : {0, 1}) {
        LowReport r = low_elements(ws, n);
        std::size_t found = 0;
        for (std::size_t i = 0; i < ball.size(); ++i) {
          bool low = true;
          for (const auto& b : ball.base(static_cast<int>(i))) low = low && G.root(th::id_of(G, b)).dp_inf <= n;
          Element w = th::elem(ball, static_cast<int>(i));
          CHECK(std::binary_search(r.elements.begin(), r.elements.end(), w) == low);
          found += low;
        }
        std::size_t within = 0;
        for (const auto& w : r.elements) within += static_cast<int>(w.length()) <= ball.radius();
        CHECK(found == within);
      }
    }
  }

  TEST_CASE("parallel kernels match the serial reference") {
    omp_set_num_threads(4);
    for (auto [name, top] : {std::pair{"Atilde2", 1}, std::pair{"Gtilde2", 0}, std::pair{"rank3:7,3", 1}}) {
      Workspace ws(preset(name));
      for (int n = 0; n <= top; ++n) {
        LowReport p = low_elements(ws, n), s = low_elements_serial(ws, n);
        CHECK(p.elements == s.elements);
        CHECK(p.realized_states == s.realized_states);
        CHECK(p.unrealized_states == s.unrealized_states);
        ElementSet A(p.elements.begin(), p.elements.end());
        GarsideVerdict vp = verify_garside(ws, A, true), vs = verify_garside(ws, A, false);
        CHECK(vp.pass == vs.pass);
        CHECK(vp.bounded_pairs == vs.bounded_pairs);
      }
    }
  }
}
