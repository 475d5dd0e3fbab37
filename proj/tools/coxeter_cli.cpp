// coxeter: command line front end.  Exit codes: 0 ok, 1 check failed,
// 2 inconclusive (cap hit), 3 usage / input error.
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "coxeter/automaton.hpp"
#include "coxeter/dihedral.hpp"
#include "coxeter/garside.hpp"
#include "coxeter/io.hpp"
#include "coxeter/order.hpp"
#include "coxeter/stats.hpp"
#include "json.hpp"

using namespace cox;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kInconclusive = 2, kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group, matrix;
  int jobs = 1;
  bool as_json = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unique_ptr<Workspace> open_group(const Options& o) {
  if (o.group.empty() == o.matrix.empty()) throw UsageError("give exactly one of --group or --matrix");
  if (!o.group.empty()) return std::make_unique<Workspace>(preset(o.group));
  std::string text = o.matrix.find('{') != std::string::npos ? o.matrix : slurp(o.matrix);
  return std::make_unique<Workspace>(system_from_json(text));
}

RootId positive_root(const Group& G, const std::string& text) {
  SignedRoot r = parse_root(G, text);
  if (r.negative) throw UsageError("'" + text + "' is a negative root, a positive one is needed here");
  return r.id;
}

std::string scalar(const Group& G, const Scalar& x) { return format_scalar(G.field(), x); }

Element element(const Group& G, const std::string& w) { return G.normalize(parse_word(w, G.rank())); }

void print_elements(const std::vector<Element>& els, bool as_json) {
  if (as_json) {
    json j;
    j["elements"] = json::array();
    for (const auto& e : els) j["elements"].push_back(format_element(e));
    std::cout << j.dump(1) << "\n";
    return;
  }
  for (const auto& e : els) std::cout << format_element(e) << "\n";
}

json subsystem_json(const Group& G, const DihedralSubsystem& s) {
  json j;
  j["delta1"] = format_root(G, s.delta1);
  j["delta2"] = format_root(G, s.delta2);
  j["finite"] = s.finite;
  if (s.finite) j["order"] = s.order;
  j["gram"] = G.field().to_string(s.gram);
  j["gram_decimal"] = G.field().to_decimal(s.gram, 12);
  j["cap"] = s.cap_used;
  return j;
}

json segment_json(const Group& G, const std::vector<SegmentRoot>& seg) {
  json a = json::array();
  for (const auto& r : seg)
    a.push_back({{"root", format_root(G, r.id)}, {"local_length", r.local_length}, {"dp_inf", G.root(r.id).dp_inf}});
  return a;
}

std::string dp_values(const Group& G, const std::vector<SegmentRoot>& seg) {
  std::string out;
  for (std::size_t i = 0; i < seg.size(); ++i) out += (i ? "," : "") + std::to_string(G.root(seg[i].id).dp_inf);
  return out;
}

int exit_of(Verdict v) { return v == Verdict::Pass ? kOk : v == Verdict::Fail ? kFail : kInconclusive; }

void print_report(const Group& G, const std::string& kind, int n, const DihedralReport& r, json* out) {
  if (out) {
    json j;
    j["check"] = kind;
    j["n"] = n;
    j["verdict"] = verdict_name(r.verdict);
    j["planes"] = r.planes;
    j["cap"] = r.cap;
    j["violations"] = json::array();
    for (const auto& v : r.violations) {
      json w;
      w["gamma"] = format_root(G, v.gamma);
      w["subsystem"] = subsystem_json(G, v.sub);
      w["missing"] = json::array();
      for (RootId m : v.missing) w["missing"].push_back(format_root(G, m));
      w["segment"] = segment_json(G, v.segment);
      w["note"] = v.note;
      j["violations"].push_back(w);
    }
    j["capped"] = json::array();
    for (auto [g, d] : r.capped) j["capped"].push_back({format_root(G, g), format_root(G, d)});
    out->push_back(j);
    return;
  }
  std::cout << kind << " n=" << n << ": " << verdict_name(r.verdict) << " (" << r.planes << " planes, cap " << r.cap
            << ")\n";
  for (const auto& v : r.violations) {
    std::cout << "  gamma " << format_root(G, v.gamma) << " (dp_inf " << G.root(v.gamma).dp_inf << "): " << v.note
              << "\n";
    std::cout << "    simples " << format_root(G, v.sub.delta1) << " | " << format_root(G, v.sub.delta2) << ", "
              << (v.sub.finite ? "finite, order " + std::to_string(v.sub.order) : std::string("infinite"))
              << ", B = " << scalar(G, v.sub.gram) << "\n";
    std::cout << "    missing";
    for (RootId m : v.missing) std::cout << " " << format_root(G, m);
    std::cout << "\n    segment";
    for (const auto& s : v.segment) std::cout << " " << format_root(G, s.id);
    std::cout << "\n    dp_inf " << dp_values(G, v.segment) << "\n";
  }
  for (auto [g, d] : r.capped)
    std::cout << "  cap hit: plane(" << format_root(G, g) << ", " << format_root(G, d) << ")\n";
}

Coideal parse_coideal(const Field& F, const std::string& x) {
  if (x == "all") return Coideal::all();
  if (x == "empty") return Coideal::empty();
  if (x.rfind("ge:", 0) == 0) return Coideal::closed(parse_scalar(F, x.substr(3)));
  if (x.rfind("gt:", 0) == 0) return Coideal::open(parse_scalar(F, x.substr(3)));
  throw UsageError("--X expects all, empty, ge:<a> or gt:<a>, got '" + x + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--group", o.group, "preset name (see `presets`)");
  app.add_option("--matrix", o.matrix, "JSON file or inline {\"rank\":r,\"m\":[[..]]}, 0 = infinity");
  app.add_option("--jobs", o.jobs, "threads for per-root checks")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.as_json, "JSON output where supported");

  std::function<int()> run;
  int n = 0, depth = 4, max_len = 8, cap = 0, max_iter = 64;
  std::vector<int> ns{0};
  std::string w1, w2, X = "all", file, kind;
  std::vector<std::string> words, roots;
  bool dot = false, weak = false, bruhat = false;

  auto* c_presets = app.add_subcommand("presets", "list preset names");
  c_presets->callback([&] {
    run = [&] {
      for (const auto& p : preset_names()) std::cout << p << "\n";
      return kOk;
    };
  });

  auto* c_system = app.add_subcommand("system", "Coxeter matrix, field and Gram matrix");
  c_system->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      const Field& F = G.field();
      if (o.as_json) {
        std::cout << system_to_json(G.system()) << "\n";
        return kOk;
      }
      std::cout << "rank " << G.rank() << "\nfield Q(t), t = 2cos(pi/" << F.conductor() << "), degree " << F.degree()
                << "\n";
      for (Gen s = 0; s < G.rank(); ++s)
        for (Gen t = s + 1; t < G.rank(); ++t)
          std::cout << "B(a" << s + 1 << ",a" << t + 1 << ") = " << scalar(G, G.system().form(s, t)) << "\n";
      return kOk;
    };
  });

  auto* c_roots = app.add_subcommand("roots", "positive roots up to a depth");
  c_roots->add_option("--depth", depth)->check(CLI::Range(1, 64));
  c_roots->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      std::cout << "root\tdepth\tdp_inf\n";
      for (RootId r : G.roots_up_to_depth(depth))
        std::cout << format_root(G, r) << "\t" << G.root(r).depth << "\t" << G.root(r).dp_inf << "\n";
      return kOk;
    };
  });

  auto* c_small = app.add_subcommand("small", "n-small roots");
  c_small->add_option("--n", n)->check(CLI::NonNegativeNumber);
  c_small->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      std::cout << "root\tdepth\tdp_inf\n";
      for (RootId r : ws->small(n).roots)
        std::cout << format_root(G, r) << "\t" << G.root(r).depth << "\t" << G.root(r).dp_inf << "\n";
      return kOk;
    };
  });

  auto* c_aut = app.add_subcommand("automaton", "n-canonical automaton");
  c_aut->add_option("--n", n)->check(CLI::NonNegativeNumber);
  c_aut->add_flag("--dot", dot, "Graphviz output");
  c_aut->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      const Automaton& A = ws->automaton(n);
      if (dot) {
        std::cout << A.to_dot(G);
        return kOk;
      }
      if (o.as_json) {
        std::cout << A.to_json(G) << "\n";
        return kOk;
      }
      std::cout << "states " << A.num_states() << ", small roots " << A.sigma().roots.size() << "\n";
      for (std::size_t q = 0; q < A.num_states(); ++q) {
        std::cout << "q" << q << " {";
        auto rs = A.state_roots(static_cast<int>(q));
        for (std::size_t i = 0; i < rs.size(); ++i) std::cout << (i ? ", " : "") << format_root(G, rs[i]);
        std::cout << "}";
        for (Gen s = 0; s < G.rank(); ++s) {
          int t = A.next(static_cast<int>(q), s);
          if (t != Automaton::kNone) std::cout << " " << s + 1 << "->q" << t;
        }
        std::cout << "\n";
      }
      return kOk;
    };
  });

  auto* c_growth = app.add_subcommand("growth", "number of elements of each length");
  c_growth->add_option("--n", n)->check(CLI::NonNegativeNumber);
  c_growth->add_option("--max-len", max_len)->check(CLI::Range(0, 100000));
  c_growth->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      auto c = ws->automaton(n).count_by_length(max_len);
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << k << "\t" << c[k].get_str() << "\n";
      return kOk;
    };
  });

  auto* c_low = app.add_subcommand("low", "n-low elements");
  c_low->add_option("--n", n)->check(CLI::NonNegativeNumber);
  c_low->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      LowReport L = low_elements(*ws, n);
      print_elements(L.elements, o.as_json);
      std::cerr << L.elements.size() << " elements, " << L.num_states << " states, bijection "
                << (L.bijection_holds ? "holds" : "fails") << "\n";
      return kOk;
    };
  });

  auto* c_shadow = app.add_subcommand("shadow", "smallest Garside shadow containing the seed");
  c_shadow->add_option("--seed", words, "extra seed words");
  c_shadow->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);
  c_shadow->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      ElementSet seed = simple_seed(G);
      for (const auto& w : words) seed.insert(element(G, w));
      ShadowReport S = garside_closure(*ws, seed, max_iter);
      print_elements({S.elements.begin(), S.elements.end()}, o.as_json);
      std::cerr << S.elements.size() << " elements, " << (S.converged ? "converged" : "not converged")
                << " at iteration " << S.iterations << "\n";
      return S.converged ? kOk : kInconclusive;
    };
  });

  auto* c_join = app.add_subcommand("join", "join in the right weak order");
  c_join->add_option("u", w1)->required();
  c_join->add_option("v", w2)->required();
  c_join->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      JoinOutcome j = join(*ws, element(G, w1), element(G, w2));
      if (j.exists)
        std::cout << format_element(j.z) << "\n";
      else
        std::cout << "unbounded\n";
      return kOk;
    };
  });

  auto* c_meet = app.add_subcommand("meet", "meet in the right weak order");
  c_meet->add_option("u", w1)->required();
  c_meet->add_option("v", w2)->required();
  c_meet->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      std::cout << format_element(meet(G, element(G, w1), element(G, w2))) << "\n";
      return kOk;
    };
  });

  auto* c_suff = app.add_subcommand("suffixes", "all suffixes of an element");
  c_suff->add_option("w", w1)->required();
  c_suff->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      print_elements(G.suffixes(element(G, w1)), o.as_json);
      return kOk;
    };
  });

  auto* c_dpinf = app.add_subcommand("dpinf", "depth and infinity-depth of roots");
  c_dpinf->add_option("roots", roots)->required();
  c_dpinf->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      for (const auto& t : roots) {
        RootId r = positive_root(G, t);
        std::cout << format_root(G, r) << "\tdp " << G.root(r).depth << "\tdp_inf " << G.root(r).dp_inf << "\n";
      }
      return kOk;
    };
  });

  auto* c_dom = app.add_subcommand("dom", "roots strictly dominated by a root");
  c_dom->add_option("root", w1)->required();
  c_dom->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      for (RootId r : dom_set(G, positive_root(G, w1))) std::cout << format_root(G, r) << "\n";
      return kOk;
    };
  });

  auto* c_dlen = app.add_subcommand("dlen", "d_X length of a root");
  c_dlen->add_option("root", w1)->required();
  c_dlen->add_option("--X", X, "all | empty | ge:<a> | gt:<a>");
  c_dlen->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      SignedRoot r = parse_root(G, w1);
      Coideal c = parse_coideal(G.field(), X);
      std::cout << d_length(G, r, c) << "\n";
      return kOk;
    };
  });

  auto* c_check = app.add_subcommand("check", "bipodal / balanced / heart checks on n-small roots");
  c_check->add_option("kind", kind)->required()->check(CLI::IsMember({"bipodal", "balanced", "heart"}));
  c_check->add_option("--n", ns, "one or more n, comma separated")->delimiter(',');
  c_check->add_option("--cap", cap, "plane depth cap (default max(8, 2 + max depth))")->check(CLI::PositiveNumber);
  c_check->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      int code = kOk;
      json all = json::array();
      for (int k : ns) {
        if (k < 0) throw UsageError("--n must be non-negative");
        if (kind == "heart" && k != 0) throw UsageError("check heart is stated for n = 0 only");
        const auto& S = ws->small(k).roots;
        DihedralReport r = kind == "bipodal"    ? check_bipodal(G, S, cap)
                           : kind == "balanced" ? check_balanced(G, S, cap)
                                                : check_heart(G, S, cap);
        print_report(G, kind, k, r, o.as_json ? &all : nullptr);
        code = std::max(code, exit_of(r.verdict) == kFail ? 10 : exit_of(r.verdict));
      }
      if (o.as_json) std::cout << all.dump(1) << "\n";
      return code == 10 ? kFail : code;
    };
  });

  auto* c_dih = app.add_subcommand("dihedral", "maximal dihedral subsystem through two roots");
  c_dih->add_option("b1", w1)->required();
  c_dih->add_option("b2", w2)->required();
  c_dih->add_option("--cap", cap)->check(CLI::PositiveNumber);
  c_dih->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      RootId a = positive_root(G, w1), b = positive_root(G, w2);
      int c = cap > 0 ? cap : default_cap(G, {a, b});
      DihedralSubsystem s;
      try {
        s = plane_subsystem(G, a, b, c);
      } catch (const CapExceeded& e) {
        std::cout << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
      }
      MonotonicityReport m = monotonicity_probe(G, s, c);
      if (o.as_json) {
        json j = subsystem_json(G, s);
        j["roots"] = segment_json(G, s.roots_found);
        j["monotone"] = m.holds;
        if (m.open_inequality >= 0) j["open_inequality_observed"] = m.open_inequality == 1;
        std::cout << j.dump(1) << "\n";
        return kOk;
      }
      std::cout << "simples " << format_root(G, s.delta1) << " | " << format_root(G, s.delta2) << "\n";
      std::cout << (s.finite ? "finite, order " + std::to_string(s.order) : std::string("infinite")) << "\n";
      std::cout << "B(delta1,delta2) = " << scalar(G, s.gram) << "\n";
      std::cout << "root\tlocal_length\tdepth\tdp_inf\n";
      for (const auto& r : s.roots_found)
        std::cout << format_root(G, r.id) << "\t" << r.local_length << "\t" << G.root(r.id).depth << "\t"
                  << G.root(r.id).dp_inf << "\n";
      std::cout << "dp_inf monotonicity: " << (m.holds ? "holds" : "violated") << " (" << m.comparisons
                << " comparisons)\n";
      for (const auto& v : m.violations) std::cout << "  " << v << "\n";
      if (m.open_inequality >= 0)
        std::cout << "dp_inf(s_d2(d1)) >= dp_inf(d2) and symmetric: "
                  << (m.open_inequality ? "observed" : "not observed") << "\n";
      return kOk;
    };
  });

  auto* c_proj = app.add_subcommand("project", "normalized roots as CSV (rank 3 affine cut)");
  c_proj->add_option("--depth", depth)->check(CLI::Range(1, 64));
  c_proj->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      const Field& F = G.field();
      std::cout << "root,depth,dp_inf";
      for (Gen s = 0; s < G.rank(); ++s) std::cout << ",x" << s + 1;
      std::cout << "\n";
      for (RootId r : G.roots_up_to_depth(depth)) {
        const auto& c = G.vec(r).coords;
        Scalar sum = F.zero();
        for (const auto& x : c) sum += x;
        Scalar inv = F.inverse(sum);
        std::cout << "\"" << format_root(G, r) << "\"," << G.root(r).depth << "," << G.root(r).dp_inf;
        for (const auto& x : c) std::cout << "," << F.to_decimal(F.mul(x, inv), 12);
        std::cout << "\n";
      }
      return kOk;
    };
  });

  auto* c_real = app.add_subcommand("realize", "least element whose inversion set contains cone(roots)");
  c_real->add_option("roots", roots)->required();
  c_real->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      std::vector<RootId> A;
      for (const auto& t : roots) A.push_back(positive_root(G, t));
      Realization r = realize_cone(*ws, A);
      switch (r.kind) {
        case Realization::Realized: std::cout << format_element(r.x) << "\n"; return kOk;
        case Realization::Unbounded: std::cout << "unbounded\n"; return kOk;
        case Realization::NotBiconvex: std::cout << "not realizable\n"; return kFail;
      }
      return kOk;
    };
  });

  auto* c_rp = app.add_subcommand("rootposet", "weak covers or Bruhat steps above a root");
  c_rp->add_option("root", w1)->required();
  c_rp->add_flag("--weak", weak);
  c_rp->add_flag("--bruhat", bruhat);
  c_rp->add_option("--cap", cap)->check(CLI::PositiveNumber);
  c_rp->add_flag("--dot", dot);
  c_rp->callback([&] {
    run = [&] {
      if (weak == bruhat) throw UsageError("give exactly one of --weak or --bruhat");
      auto ws = open_group(o);
      const Group& G = ws->group();
      SignedRoot b = parse_root(G, w1);
      auto edges = weak ? root_weak_covers(G, b) : root_bruhat_steps(G, b, cap > 0 ? cap : 6);
      if (dot) {
        std::cout << "digraph rootposet {\n";
        for (const auto& e : edges)
          std::cout << "  \"" << format_root(G, e.from) << "\" -> \"" << format_root(G, e.to) << "\" [label=\""
                    << format_root(G, e.mediator) << "\"];\n";
        std::cout << "}\n";
        return kOk;
      }
      for (const auto& e : edges)
        std::cout << format_root(G, e.to) << "\tvia " << format_root(G, e.mediator) << "\tcoefficient "
                  << scalar(G, e.coefficient) << "\n";
      return kOk;
    };
  });

  auto* c_vg = app.add_subcommand("verify-garside", "check the Garside shadow axioms for a set");
  c_vg->add_option("--file", file, "{\"elements\": [\"3 1 2 1\", ...]}")->required();
  c_vg->callback([&] {
    run = [&] {
      auto ws = open_group(o);
      const Group& G = ws->group();
      json j = json::parse(slurp(file));
      if (!j.contains("elements") || !j["elements"].is_array()) throw UsageError("set file needs an 'elements' array");
      ElementSet A;
      for (const auto& e : j["elements"]) A.insert(element(G, e.get<std::string>()));
      GarsideVerdict v = verify_garside(*ws, A);
      std::cout << (v.pass ? "pass" : "fail") << " (" << A.size() << " elements, " << v.bounded_pairs
                << " bounded pairs)\n";
      for (Gen s : v.missing_generators) std::cout << "  missing generator " << s + 1 << "\n";
      if (v.suffix_witness)
        std::cout << "  suffix " << format_element(v.suffix_witness->second) << " of "
                  << format_element(v.suffix_witness->first) << " missing\n";
      if (v.join_witness)
        std::cout << "  join " << format_element(v.join_witness->u) << " v " << format_element(v.join_witness->v)
                  << " = " << format_element(v.join_witness->z) << " missing\n";
      return v.pass ? kOk : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  omp_set_num_threads(o.jobs);
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
