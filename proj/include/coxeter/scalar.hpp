// Exact arithmetic in Q(theta), theta = 2cos(pi/N), power basis 1, theta, ...
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cox {

using Rational = mpq_class;
using Poly = std::vector<Rational>;  // low degree first

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::size_t degree) : c_(degree) {}
  Scalar(std::size_t degree, const Rational& q) : c_(degree) { c_[0] = q; }

  std::size_t degree() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // only the constant term is nonzero
  std::size_t hash() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Rational& q);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

std::size_t hash_rational(const Rational& q);

// Field context.  Immutable after construction.
class Field {
 public:
  explicit Field(int N = 1);
  static Field for_labels(const std::vector<int>& finite_labels);

  int conductor() const { return N_; }
  int degree() const { return d_; }
  const Poly& minpoly() const { return minpoly_; }
  std::pair<Rational, Rational> isolating_interval() const { return {lo_, hi_}; }
  double theta_approx() const { return theta_; }

  Scalar zero() const { return Scalar(d_); }
  Scalar one() const { return Scalar(d_, Rational(1)); }
  Scalar from_rational(const Rational& q) const { return Scalar(d_, q); }
  Scalar theta() const;
  Scalar from_poly(const Poly& p) const;  // reduces mod minpoly

  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inverse(const Scalar& a) const;  // throws on zero
  int sign(const Scalar& a) const;
  int compare(const Scalar& a, const Scalar& b) const { return sign(a - b); }
  int cmp_to_one(const Scalar& a) const;
  int cmp_to_minus_one(const Scalar& a) const;

  // cos(pi/m); m in {1,2,3} or m | N.
  Scalar cos_pi_over(int m) const;

  double to_double(const Scalar& a) const;
  std::string to_string(const Scalar& a) const;  // exact, e.g. "1/2 + 3*t - t^2"
  std::string to_decimal(const Scalar& a, int digits = 12) const;

 private:
  int N_ = 1;
  int d_ = 1;
  Poly minpoly_;
  Rational lo_, hi_;
  double theta_ = 0;
  std::vector<Scalar> high_powers_;  // theta^k mod minpoly, k = d .. 2d-2
  std::vector<Scalar> cheb_;         // p_k(theta), k = 0..N

  int sign_exact(const Scalar& a) const;
};

// polynomial helpers (exposed for tests)
Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& p, const Rational& x);
Poly cyclotomic(int n);
Poly minpoly_of_2cos(int N);
int euler_phi(int n);

}  // namespace cox
