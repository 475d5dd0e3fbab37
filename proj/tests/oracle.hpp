// Brute-force reference computations.  Nothing here touches the root table,
// the normal form code or the automaton: elements are matrices, found by BFS.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxeter/system.hpp"

namespace oracle {

using cox::Gen;
using cox::Scalar;
using Vec = std::vector<Scalar>;
using Mat = std::vector<Scalar>;  // rank x rank, row-major, acts on coordinate columns
using Word = std::vector<Gen>;

class Ball {
 public:
  // all elements of length <= radius
  Ball(const cox::CoxeterSystem& W, int radius);

  int rank() const { return r_; }
  int radius() const { return radius_; }
  const cox::Field& field() const { return W_->field(); }
  std::size_t size() const { return mats_.size(); }
  const Word& word(int i) const { return words_[i]; }  // lex-least reduced word
  int length(int i) const { return static_cast<int>(words_[i].size()); }
  const Mat& mat(int i) const { return mats_[i]; }
  const std::vector<int>& level(int k) const { return levels_[k]; }

  Mat identity() const;
  Mat mul(const Mat& a, const Mat& b) const;
  Vec apply(const Mat& m, const Vec& v) const;
  Mat of_word(const Word& w) const;
  Mat reflection(const Vec& beta) const;  // s_beta, B(beta, beta) = 1
  int find(const Mat& m) const;           // -1 when outside the ball
  int length_of(const Word& w) const;     // -1 when longer than the radius

  Scalar B(const Vec& a, const Vec& b) const;
  int sign(const Vec& v) const;  // +1 nonneg nonzero, -1 nonpos nonzero, 0 otherwise

  // positive roots of depth <= radius + 1, each with its depth
  struct RootRec {
    Vec v;
    int depth;
  };
  const std::vector<RootRec>& roots() const { return roots_; }
  int root_depth(const Vec& v) const;  // -1 when not found

  // N(w) as coordinate vectors (roots of depth <= l(w) suffice)
  std::vector<Vec> inversion_set(int elem) const;
  std::vector<Vec> base(int elem) const;  // N^1(w)
  bool weak_le(int u, int v) const;       // N(u) subset of N(v)

  static std::string key(const std::vector<Scalar>& v);

 private:
  const cox::CoxeterSystem* W_;
  int r_, radius_;
  std::vector<Mat> sigma_;
  std::vector<Mat> mats_;
  std::vector<Word> words_;
  std::vector<std::vector<int>> levels_;
  std::map<std::string, int> index_;
  std::vector<RootRec> roots_;
  std::map<std::string, int> root_index_;
  mutable std::map<int, std::set<std::string>> inv_cache_;
};

// beta in cone(A) by trying every linearly independent subset (Caratheodory)
bool cone_contains(const cox::Field& F, int rank, const Vec& beta, const std::vector<Vec>& A);

}  // namespace oracle
