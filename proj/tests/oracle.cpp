#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

std::string Ball::key(const std::vector<Scalar>& v) {
  std::string k;
  for (const Scalar& x : v) {
    for (const auto& q : x.coeffs()) {
      k += q.get_str();
      k += ',';
    }
    k += ';';
  }
  return k;
}

Ball::Ball(const cox::CoxeterSystem& W, int radius) : W_(&W), r_(W.rank()), radius_(radius) {
  for (Gen s = 0; s < r_; ++s) {
    // sigma_s = I - 2 e_s (row s of the Gram matrix)
    Mat m = identity();
    for (int t = 0; t < r_; ++t) m[s * r_ + t] -= W.form(s, t) * cox::Rational(2);
    sigma_.push_back(std::move(m));
  }
  mats_.push_back(identity());
  words_.push_back({});
  index_[key(mats_[0])] = 0;
  levels_.push_back({0});
  for (int k = 0; k < radius_; ++k) {
    std::map<std::string, std::pair<Mat, Word>> next;
    for (int i : levels_[k])
      for (Gen s = 0; s < r_; ++s) {
        Mat m = mul(mats_[i], sigma_[s]);
        std::string kk = key(m);
        if (index_.count(kk)) continue;
        Word w = words_[i];
        w.push_back(s);
        auto it = next.find(kk);
        if (it == next.end())
          next.emplace(kk, std::make_pair(std::move(m), std::move(w)));
        else if (w < it->second.second)
          it->second.second = std::move(w);
      }
    std::vector<int> lev;
    for (auto& [kk, mw] : next) {
      int id = static_cast<int>(mats_.size());
      index_[kk] = id;
      mats_.push_back(std::move(mw.first));
      words_.push_back(std::move(mw.second));
      lev.push_back(id);
    }
    std::sort(lev.begin(), lev.end(), [&](int a, int b) { return words_[a] < words_[b]; });
    levels_.push_back(std::move(lev));
  }

  // roots w(alpha_s), first hit in length order gives the depth
  for (int k = 0; k <= radius_; ++k)
    for (int i : levels_[k])
      for (Gen s = 0; s < r_; ++s) {
        Vec v(r_);
        for (int t = 0; t < r_; ++t) v[t] = mats_[i][t * r_ + s];
        if (sign(v) < 0) continue;
        std::string kk = key(v);
        if (root_index_.count(kk)) continue;
        root_index_[kk] = static_cast<int>(roots_.size());
        roots_.push_back({std::move(v), k + 1});
      }
}

Mat Ball::identity() const {
  const cox::Field& F = W_->field();
  Mat m(r_ * r_, F.zero());
  for (int i = 0; i < r_; ++i) m[i * r_ + i] = F.one();
  return m;
}

Mat Ball::mul(const Mat& a, const Mat& b) const {
  const cox::Field& F = W_->field();
  Mat c(r_ * r_, F.zero());
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < r_; ++k) {
      const Scalar& x = a[i * r_ + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < r_; ++j)
        if (!b[k * r_ + j].is_zero()) c[i * r_ + j] += F.mul(x, b[k * r_ + j]);
    }
  return c;
}

Vec Ball::apply(const Mat& m, const Vec& v) const {
  const cox::Field& F = W_->field();
  Vec out(r_, F.zero());
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (!v[j].is_zero() && !m[i * r_ + j].is_zero()) out[i] += F.mul(m[i * r_ + j], v[j]);
  return out;
}

Mat Ball::of_word(const Word& w) const {
  Mat m = identity();
  for (Gen s : w) m = mul(m, sigma_.at(s));
  return m;
}

Scalar Ball::B(const Vec& a, const Vec& b) const {
  const cox::Field& F = W_->field();
  Scalar s = F.zero();
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) s += F.mul(F.mul(a[i], W_->form(i, j)), b[j]);
  return s;
}

Mat Ball::reflection(const Vec& beta) const {
  // s_beta(v) = v - 2 B(beta, v) beta
  const cox::Field& F = W_->field();
  Vec row(r_, F.zero());  // row[j] = B(beta, e_j)
  for (int j = 0; j < r_; ++j)
    for (int i = 0; i < r_; ++i) row[j] += F.mul(beta[i], W_->form(i, j));
  Mat m = identity();
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) m[i * r_ + j] -= F.mul(beta[i], row[j]) * cox::Rational(2);
  return m;
}

int Ball::find(const Mat& m) const {
  auto it = index_.find(key(m));
  return it == index_.end() ? -1 : it->second;
}

int Ball::length_of(const Word& w) const {
  int i = find(of_word(w));
  return i < 0 ? -1 : length(i);
}

int Ball::sign(const Vec& v) const {
  const cox::Field& F = W_->field();
  bool pos = false, neg = false;
  for (const auto& x : v) {
    int s = F.sign(x);
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

int Ball::root_depth(const Vec& v) const {
  auto it = root_index_.find(key(v));
  return it == root_index_.end() ? -1 : roots_[it->second].depth;
}

std::vector<Vec> Ball::inversion_set(int elem) const {
  Word rev(words_[elem].rbegin(), words_[elem].rend());
  Mat inv = of_word(rev);
  std::vector<Vec> out;
  for (const auto& rr : roots_)
    if (rr.depth <= length(elem) && sign(apply(inv, rr.v)) < 0) out.push_back(rr.v);
  if (static_cast<int>(out.size()) != length(elem)) throw std::logic_error("oracle: |N(w)| != l(w)");
  return out;
}

std::vector<Vec> Ball::base(int elem) const {
  std::vector<Vec> out;
  for (const Vec& b : inversion_set(elem)) {
    int j = find(mul(reflection(b), mats_[elem]));
    if (j < 0) throw std::logic_error("oracle: s_beta w escaped the ball");
    if (length(j) == length(elem) - 1) out.push_back(b);
  }
  return out;
}

bool Ball::weak_le(int u, int v) const {
  auto keys = [&](int i) -> const std::set<std::string>& {
    auto it = inv_cache_.find(i);
    if (it != inv_cache_.end()) return it->second;
    std::set<std::string> k;
    for (const auto& b : inversion_set(i)) k.insert(key(b));
    return inv_cache_.emplace(i, std::move(k)).first->second;
  };
  if (length(u) > length(v)) return false;
  const auto& nu = keys(u);
  const auto& nv = keys(v);
  return std::includes(nv.begin(), nv.end(), nu.begin(), nu.end());
}

namespace {

// unique nonnegative solution of sum l_i a_i = beta with independent a_i
bool solve_nonneg(const cox::Field& F, int rank, const Vec& beta, const std::vector<const Vec*>& cols) {
  const int k = static_cast<int>(cols.size());
  std::vector<Vec> M(rank, Vec(k + 1));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < k; ++j) M[i][j] = (*cols[j])[i];
    M[i][k] = beta[i];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = row; i < rank && p < 0; ++i)
      if (!M[i][c].is_zero()) p = i;
    if (p < 0) return false;  // dependent columns
    std::swap(M[p], M[row]);
    Scalar inv = F.inverse(M[row][c]);
    for (auto& x : M[row]) x = F.mul(x, inv);
    for (int i = 0; i < rank; ++i) {
      if (i == row || M[i][c].is_zero()) continue;
      Scalar f = M[i][c];
      for (int j = 0; j <= k; ++j) M[i][j] -= F.mul(f, M[row][j]);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int i = row; i < rank; ++i)
    if (!M[i][k].is_zero()) return false;
  for (int i = 0; i < row; ++i)
    if (F.sign(M[i][k]) < 0) return false;
  return true;
}

}  // namespace

bool cone_contains(const cox::Field& F, int rank, const Vec& beta, const std::vector<Vec>& A) {
  const int n = static_cast<int>(A.size());
  if (n > 20) throw std::invalid_argument("oracle cone: too many generators");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > rank) continue;
    std::vector<const Vec*> cols;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) cols.push_back(&A[i]);
    if (solve_nonneg(F, rank, beta, cols)) return true;
  }
  return false;
}

}  // namespace oracle
