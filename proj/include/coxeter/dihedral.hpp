// Maximal dihedral reflection subgroups: canonical simples, local lengths,
// f_s, and the bipodal / balanced / heart checks on root sets.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter/roots.hpp"

namespace cox {

// 2-dimensional subspace of V spanned by two roots; exact membership
class Plane {
 public:
  Plane(const Group& G, const RootVec& a, const RootVec& b);  // throws if dependent
  bool contains(const RootVec& v) const;
  bool contains(RootId id) const { return contains(G_->vec(id)); }
  bool same(const Plane& o) const { return contains(o.a_) && contains(o.b_); }

 private:
  const Group* G_;
  RootVec a_, b_;
  int i_ = 0, j_ = 0;
  Scalar inv_det_;
};

struct CapExceeded : std::runtime_error {
  RootId first, second;
  int cap;
  CapExceeded(RootId a, RootId b, int c)
      : std::runtime_error("cap exceeded (depth " + std::to_string(c) + ")"), first(a), second(b), cap(c) {}
};

struct SegmentRoot {
  RootId id;
  int local_length;  // l_{W'}(s_root)
};

struct DihedralSubsystem {
  RootId basis[2] = {kNoRoot, kNoRoot};
  RootId delta1 = kNoRoot, delta2 = kNoRoot;  // segment runs delta1 -> delta2; delta1 has smaller depth
  bool finite = false;
  int order = 0;  // m' when finite
  Scalar gram;    // B(delta1, delta2)
  std::vector<SegmentRoot> roots_found;  // segment order; infinite: both arms up to the cap
  int cap_used = 0;

  bool is_simple(RootId r) const { return r == delta1 || r == delta2; }
};

int default_cap(const Group& G, const std::vector<RootId>& A);

// N(s_r) meets the plane in {r} only
bool dyer_certified(const Group& G, const Plane& P, RootId r);

DihedralSubsystem plane_subsystem(const Group& G, RootId b1, RootId b2, int cap);
// positive roots with local length <= max_len in segment order
std::vector<SegmentRoot> segment(const Group& G, const DihedralSubsystem& sub, int max_len);
int local_reflection_length(const Group& G, RootId b, const DihedralSubsystem& sub);
RootId f_s(const Group& G, Gen s, RootId b, int cap);

struct PlaneEnumeration {
  std::vector<DihedralSubsystem> subs;  // planes where gamma is not a canonical simple
  std::vector<RootId> capped;           // partners delta whose plane hit the cap
};
PlaneEnumeration enumerate_containing_planes(const Group& G, RootId gamma, int cap);

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct DihedralViolation {
  RootId gamma = kNoRoot;
  DihedralSubsystem sub;
  std::vector<RootId> missing;
  std::vector<SegmentRoot> segment;  // roots of W' below gamma, or the whole finite segment
  std::string note;
};

struct DihedralReport {
  Verdict verdict = Verdict::Pass;
  int cap = 0;
  std::size_t planes = 0;
  std::vector<DihedralViolation> violations;
  std::vector<std::pair<RootId, RootId>> capped;  // (gamma, partner)
};

DihedralReport check_bipodal(const Group& G, const std::vector<RootId>& A, int cap = 0, bool parallel = true);
DihedralReport check_balanced(const Group& G, const std::vector<RootId>& A, int cap = 0, bool parallel = true);
// A is Sigma (the 0-small roots)
DihedralReport check_heart(const Group& G, const std::vector<RootId>& sigma, int cap = 0, bool parallel = true);

struct MonotonicityReport {
  bool holds = true;
  std::size_t comparisons = 0;
  std::vector<std::string> violations;
  // finite only: dp_inf(s_b(a)) >= dp_inf(b) and symmetric, observed not asserted
  int open_inequality = -1;  // -1 not applicable, 0 violated, 1 observed
};

MonotonicityReport monotonicity_probe(const Group& G, const DihedralSubsystem& sub, int depth_cap);

}  // namespace cox
