#include "coxeter/dihedral.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <exception>

namespace cox {

Plane::Plane(const Group& G, const RootVec& a, const RootVec& b) : G_(&G), a_(a), b_(b) {
  const Field& F = G.field();
  const int r = G.rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Scalar det = F.mul(a.coords[i], b.coords[j]) - F.mul(a.coords[j], b.coords[i]);
      if (det.is_zero()) continue;
      i_ = i;
      j_ = j;
      inv_det_ = F.inverse(det);
      return;
    }
  throw std::invalid_argument("roots are linearly dependent, no plane");
}

bool Plane::contains(const RootVec& v) const {
  const Field& F = G_->field();
  const auto &a = a_.coords, &b = b_.coords, &c = v.coords;
  Scalar x = F.mul(F.mul(c[i_], b[j_]) - F.mul(c[j_], b[i_]), inv_det_);
  Scalar y = F.mul(F.mul(a[i_], c[j_]) - F.mul(a[j_], c[i_]), inv_det_);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (static_cast<int>(k) == i_ || static_cast<int>(k) == j_) continue;
    if (!(F.mul(x, a[k]) + F.mul(y, b[k]) == c[k])) return false;
  }
  return true;
}

int default_cap(const Group& G, const std::vector<RootId>& A) {
  int d = 0;
  for (RootId a : A) d = std::max(d, G.root(a).depth);
  return std::max(8, d + 2);
}

bool dyer_certified(const Group& G, const Plane& P, RootId r) {
  for (RootId g : G.reflection_inversion_set(r))
    if (g != r && P.contains(g)) return false;
  return true;
}

namespace {

bool depth_less(const Group& G, RootId a, RootId b) {
  int da = G.root(a).depth, db = G.root(b).depth;
  return da != db ? da < db : a < b;
}

// some canonical simple of W' other than `skip` inside N(s_rho), or kNoRoot.
// N(s_rho) meets the plane in N_{W'}(s_rho), which holds a left descent of s_rho in W'.
RootId simple_below(const Group& G, const Plane& P, RootId rho, RootId skip) {
  std::vector<RootId> cand;
  for (RootId g : G.reflection_inversion_set(rho))
    if (P.contains(g)) cand.push_back(g);
  std::sort(cand.begin(), cand.end(), [&](RootId a, RootId b) { return depth_less(G, a, b); });
  for (RootId c : cand)
    if (c != skip && dyer_certified(G, P, c)) return c;
  return kNoRoot;
}

// a_1 = d1, b_1 = d2, a_{k+1} = s_{d1}(b_k), b_{k+1} = s_{d2}(a_k); an arm
// ends at the first root where stop(id, local length) holds
template <class Stop>
std::array<std::vector<SegmentRoot>, 2> infinite_arms(const Group& G, RootId d1, RootId d2, Stop stop) {
  std::array<std::vector<SegmentRoot>, 2> arm;
  const RootVec* r[2] = {&G.vec(d1), &G.vec(d2)};
  RootVec cur[2] = {*r[0], *r[1]};
  bool open[2] = {true, true};
  for (int i = 1; i <= 64 && (open[0] || open[1]); ++i) {
    for (int side = 0; side < 2; ++side) {
      if (!open[side]) continue;
      RootId id = G.intern(cur[side]);
      if (stop(id, 2 * i - 1))
        open[side] = false;
      else
        arm[side].push_back({id, 2 * i - 1});
    }
    RootVec a = G.reflect_in(*r[0], cur[1]), b = G.reflect_in(*r[1], cur[0]);
    cur[0] = std::move(a);
    cur[1] = std::move(b);
  }
  return arm;
}

bool in_sorted(const std::vector<RootId>& A, RootId r) { return std::binary_search(A.begin(), A.end(), r); }

}  // namespace

DihedralSubsystem plane_subsystem(const Group& G, RootId b1, RootId b2, int cap) {
  if (b1 == b2) throw std::invalid_argument("roots are linearly dependent, no plane");
  if (G.root(b1).depth > cap || G.root(b2).depth > cap) throw CapExceeded(b1, b2, cap);
  Plane P(G, G.vec(b1), G.vec(b2));
  RootId d1 = simple_below(G, P, b1, kNoRoot);
  if (d1 == kNoRoot) throw std::logic_error("no canonical simple below a root of the plane");
  // s_{d1} permutes the other positive roots of W' and swaps the two arms
  RootId rho = b1 != d1 ? b1 : b2, d2 = kNoRoot;
  for (int it = 0; it < 3 && d2 == kNoRoot; ++it) {
    d2 = simple_below(G, P, rho, d1);
    if (d2 != kNoRoot) break;
    rho = G.intern(G.reflect_in(G.vec(d1), G.vec(rho)));
    if (G.root(rho).depth > cap) throw CapExceeded(b1, b2, cap);
  }
  if (d2 == kNoRoot) throw std::logic_error("second canonical simple not found");

  DihedralSubsystem sub;
  sub.basis[0] = b1;
  sub.basis[1] = b2;
  if (depth_less(G, d2, d1)) std::swap(d1, d2);
  sub.delta1 = d1;
  sub.delta2 = d2;
  sub.gram = G.B(d1, d2);
  sub.finite = G.field().cmp_to_minus_one(sub.gram) > 0;
  sub.cap_used = cap;
  if (sub.finite) {
    sub.roots_found = segment(G, sub, INT_MAX);
    sub.order = static_cast<int>(sub.roots_found.size());
  } else {
    auto arm = infinite_arms(G, d1, d2, [&](RootId id, int) { return G.root(id).depth > cap; });
    sub.roots_found = arm[0];
    sub.roots_found.insert(sub.roots_found.end(), arm[1].rbegin(), arm[1].rend());
  }
  return sub;
}

std::vector<SegmentRoot> segment(const Group& G, const DihedralSubsystem& sub, int max_len) {
  const RootVec& v1 = G.vec(sub.delta1);
  const RootVec& v2 = G.vec(sub.delta2);
  std::vector<SegmentRoot> out;
  if (sub.finite) {
    // delta1, s1(delta2), s1 s2(delta1), ... ends at delta2
    std::vector<RootId> seq{sub.delta1};
    RootVec a = v1, b = G.reflect_in(v1, v2);
    for (int k = 0; seq.back() != sub.delta2; ++k) {
      if (k > 4096) throw std::logic_error("finite dihedral segment does not close");
      seq.push_back(G.intern(b));
      RootVec next = G.reflect_in(v1, G.reflect_in(v2, a));
      a = std::move(b);
      b = std::move(next);
    }
    const int m = static_cast<int>(seq.size());
    for (int j = 1; j <= m; ++j) {
      int len = 2 * std::min(j, m + 1 - j) - 1;
      if (len <= max_len) out.push_back({seq[j - 1], len});
    }
    return out;
  }
  auto arm = infinite_arms(G, sub.delta1, sub.delta2, [&](RootId, int len) { return len > max_len; });
  out = arm[0];
  out.insert(out.end(), arm[1].rbegin(), arm[1].rend());
  return out;
}

int local_reflection_length(const Group& G, RootId b, const DihedralSubsystem& sub) {
  Plane P(G, G.vec(sub.delta1), G.vec(sub.delta2));
  if (!P.contains(b)) throw std::invalid_argument("root is not in the plane of the subsystem");
  int n = 0;
  for (RootId g : G.reflection_inversion_set(b)) n += P.contains(g);
  return n;
}

RootId f_s(const Group& G, Gen s, RootId b, int cap) {
  RootId a = G.simple_id(s);
  if (b == a) throw std::invalid_argument("f_s is undefined at alpha_s");
  DihedralSubsystem sub = plane_subsystem(G, a, b, cap);
  return sub.delta1 == a ? sub.delta2 : sub.delta1;
}

// Completeness: if gamma is not simple in W' then l_{W'}(s_gamma) >= 3 and
// N(s_gamma) meets Phi_{W'} in N_{W'}(s_gamma), which holds a canonical
// simple delta; the plane is span(gamma, delta).
PlaneEnumeration enumerate_containing_planes(const Group& G, RootId gamma, int cap) {
  PlaneEnumeration out;
  std::vector<Plane> seen;
  const RootVec& vg = G.vec(gamma);
  for (RootId d : G.reflection_inversion_set(gamma)) {
    if (d == gamma) continue;
    bool dup = false;
    for (const auto& P : seen) dup = dup || P.contains(d);
    if (dup) continue;
    seen.emplace_back(G, vg, G.vec(d));
    if (dyer_certified(G, seen.back(), gamma)) continue;
    try {
      out.subs.push_back(plane_subsystem(G, gamma, d, cap));
    } catch (const CapExceeded&) {
      out.capped.push_back(d);
    }
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct PerRoot {
  std::size_t planes = 0;
  std::vector<DihedralViolation> violations;
  std::vector<std::pair<RootId, RootId>> capped;
};

template <class F>
DihedralReport run_check(const Group& G, const std::vector<RootId>& A0, int cap, bool parallel, F&& per_plane) {
  std::vector<RootId> A = sorted_unique(A0);
  DihedralReport rep;
  rep.cap = cap > 0 ? cap : default_cap(G, A);
  std::vector<PerRoot> res(A.size());
  auto body = [&](std::size_t i) {
    PerRoot& r = res[i];
    PlaneEnumeration pe = enumerate_containing_planes(G, A[i], rep.cap);
    r.planes = pe.subs.size() + pe.capped.size();
    for (RootId d : pe.capped) r.capped.emplace_back(A[i], d);
    for (const auto& sub : pe.subs) per_plane(A, A[i], sub, r.violations);
  };
  if (parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(A.size()); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(cox_dihedral_error)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < A.size(); ++i) body(i);
  }
  for (auto& r : res) {
    rep.planes += r.planes;
    for (auto& v : r.violations) rep.violations.push_back(std::move(v));
    rep.capped.insert(rep.capped.end(), r.capped.begin(), r.capped.end());
  }
  rep.verdict = !rep.violations.empty() ? Verdict::Fail : !rep.capped.empty() ? Verdict::Inconclusive : Verdict::Pass;
  return rep;
}

}  // namespace

DihedralReport check_bipodal(const Group& G, const std::vector<RootId>& A, int cap, bool parallel) {
  return run_check(G, A, cap, parallel,
                   [&](const std::vector<RootId>& S, RootId g, const DihedralSubsystem& sub, auto& out) {
                     DihedralViolation v;
                     for (RootId d : {sub.delta1, sub.delta2})
                       if (!in_sorted(S, d)) v.missing.push_back(d);
                     if (v.missing.empty()) return;
                     v.gamma = g;
                     v.sub = sub;
                     v.segment = segment(G, sub, local_reflection_length(G, g, sub));
                     v.note = "canonical simple missing";
                     out.push_back(std::move(v));
                   });
}

DihedralReport check_balanced(const Group& G, const std::vector<RootId>& A, int cap, bool parallel) {
  return run_check(G, A, cap, parallel,
                   [&](const std::vector<RootId>& S, RootId g, const DihedralSubsystem& sub, auto& out) {
                     const int L = local_reflection_length(G, g, sub);
                     DihedralViolation v;
                     for (const auto& r : segment(G, sub, L - 2))
                       if (!in_sorted(S, r.id)) v.missing.push_back(r.id);
                     if (v.missing.empty()) return;
                     v.gamma = g;
                     v.sub = sub;
                     v.segment = sub.finite ? sub.roots_found : segment(G, sub, L);
                     v.note = "root of smaller local length missing";
                     out.push_back(std::move(v));
                   });
}

DihedralReport check_heart(const Group& G, const std::vector<RootId>& sigma, int cap, bool parallel) {
  std::vector<RootId> A;
  for (RootId r : sigma)
    if (G.root(r).depth > 1) A.push_back(r);
  const Field& F = G.field();
  DihedralReport rep = run_check(
      G, A, cap > 0 ? cap : default_cap(G, sigma), parallel,
      [&](const std::vector<RootId>&, RootId g, const DihedralSubsystem& sub, auto& out) {
        for (Gen s = 0; s < G.rank(); ++s) {
          RootId a = G.simple_id(s);
          if (sub.is_simple(a) || F.sign(G.B(a, g)) <= 0) continue;
          for (RootId d : {sub.delta1, sub.delta2}) {
            Scalar b = G.B(a, d);
            if (F.cmp_to_minus_one(b) > 0 && F.cmp_to_one(b) < 0) continue;
            DihedralViolation v;
            v.gamma = g;
            v.sub = sub;
            v.missing = {a};
            v.note = "B(alpha_" + std::to_string(s + 1) + ", delta) = " + F.to_string(b) + " outside (-1, 1)";
            out.push_back(std::move(v));
          }
        }
      });
  return rep;
}

MonotonicityReport monotonicity_probe(const Group& G, const DihedralSubsystem& sub, int depth_cap) {
  MonotonicityReport rep;
  auto dpi = [&](RootId r) { return G.root(r).dp_inf; };
  auto dp = [&](RootId r) { return G.root(r).depth; };
  if (!sub.finite) {
    std::vector<SegmentRoot> seg;
    for (int L = 1;; L += 2) {
      auto s = segment(G, sub, L);
      bool deeper = false;
      for (const auto& r : s) deeper = deeper || (r.local_length == L && dp(r.id) > depth_cap);
      if (deeper || L > 127) break;
      seg = std::move(s);
    }
    for (const auto& p : seg)
      for (const auto& q : seg) {
        if (p.local_length >= q.local_length) continue;
        ++rep.comparisons;
        if (dpi(p.id) < dpi(q.id)) continue;
        rep.holds = false;
        rep.violations.push_back("local lengths " + std::to_string(p.local_length) + " < " +
                                 std::to_string(q.local_length) + " but dp_inf " + std::to_string(dpi(p.id)) +
                                 " >= " + std::to_string(dpi(q.id)));
      }
    return rep;
  }
  // finite: delta = x(gamma) with l(s_delta) = l(s_gamma) + 2 l_{W'}(x), i.e. dp grows by |x|
  const RootVec* r[2] = {&G.vec(sub.delta1), &G.vec(sub.delta2)};
  for (const auto& g : sub.roots_found) {
    for (int first = 0; first < 2; ++first) {
      RootVec v = G.vec(g.id);
      for (int k = 1; k <= sub.order; ++k) {
        v = G.reflect_in(*r[(first + k - 1) % 2], v);
        if (G.sign_of(v) < 0) break;
        RootId d = G.intern(v);
        if (dp(d) != dp(g.id) + k) continue;
        ++rep.comparisons;
        if (dpi(g.id) <= dpi(d)) continue;
        rep.holds = false;
        rep.violations.push_back("dp_inf " + std::to_string(dpi(g.id)) + " > " + std::to_string(dpi(d)) +
                                 " along a length-" + std::to_string(k) + " conjugation");
      }
    }
  }
  RootId ab = G.intern(G.reflect_in(*r[1], *r[0]));  // s_delta2(delta1)
  RootId ba = G.intern(G.reflect_in(*r[0], *r[1]));
  rep.open_inequality = dpi(ab) >= dpi(sub.delta2) && dpi(ba) >= dpi(sub.delta1) ? 1 : 0;
  return rep;
}

}  // namespace cox
