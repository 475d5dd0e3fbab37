// Coxeter matrices, Gram matrices and named presets.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxeter/scalar.hpp"

namespace cox {

using Gen = int;  // 0-based internally, 1-based in all I/O

inline constexpr int kInf = 0;  // label encoding for m = infinity

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  // matrix is rank x rank, row-major; kInf for infinity
  CoxeterSystem(int rank, std::vector<int> matrix, std::string name = "");

  int rank() const { return rank_; }
  int label(Gen s, Gen t) const { return m_[s * rank_ + t]; }
  const std::vector<int>& matrix() const { return m_; }
  const Field& field() const { return field_; }
  const Scalar& form(Gen s, Gen t) const { return gram_[s * rank_ + t]; }
  // 2 * B(alpha_s, alpha_t), always a rational when the label is 1,2,3,inf
  const Scalar& form2(Gen s, Gen t) const { return gram2_[s * rank_ + t]; }
  const std::string& name() const { return name_; }

 private:
  int rank_ = 0;
  std::vector<int> m_;
  Field field_;
  std::vector<Scalar> gram_, gram2_;
  std::string name_;
};

CoxeterSystem build_system(const std::vector<std::vector<int>>& matrix, std::string name = "");
CoxeterSystem preset(std::string_view name);
std::vector<std::string> preset_names();

// {"rank": r, "m": [[...]]}, 0 meaning infinity
CoxeterSystem system_from_json(const std::string& text);
std::string system_to_json(const CoxeterSystem& W);

}  // namespace cox
