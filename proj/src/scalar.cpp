#include "coxeter/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cox {

// ---------------------------------------------------------------- Scalar

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

std::size_t hash_rational(const Rational& q) {
  std::size_t h = mpz_get_ui(q.get_num_mpz_t());
  h ^= (std::size_t)mpz_get_ui(q.get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= (std::size_t)(sgn(q) + 1) << 61;
  h ^= mpz_size(q.get_num_mpz_t()) * 0x5bd1e995ULL;
  return h;
}

std::size_t Scalar::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& q : c_) h = (h ^ hash_rational(q)) * 0x100000001b3ULL;
  return h;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    for (auto& x : c_) x = 0;
    return *this;
  }
  for (auto& x : c_)
    if (sgn(x) != 0) x *= q;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

// ---------------------------------------------------------------- polynomials

Poly poly_trim(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b0) {
  Poly b = poly_trim(b0);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1);
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

static Poly poly_derivative(const Poly& p) {
  Poly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  return poly_trim(r);
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Poly cyclotomic(int n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divmod(p, cyclotomic(d)).first;
  return p;
}

// Phi_{2N}(x) = x^d psi(x + 1/x); returns psi.
Poly minpoly_of_2cos(int N) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  if (N == 1) return {Rational(2), Rational(1)};  // theta = -2
  Poly P = cyclotomic(2 * N);
  const int k = static_cast<int>(P.size() - 1) / 2;
  // a[j + k] = coefficient of x^j in x^{-k} P(x)
  Poly a = P;
  Poly psi(k + 1);
  std::vector<mpz_class> binom(k + 1);
  for (int j = k; j >= 0; --j) {
    Rational c = a[j + k];
    psi[j] = c;
    if (sgn(c) == 0) continue;
    // subtract c (x + 1/x)^j
    mpz_class b = 1;
    for (int i = 0; i <= j; ++i) {
      a[j - 2 * i + k] -= c * Rational(b);
      b = b * (j - i) / (i + 1);
    }
  }
  return psi;
}

// ---------------------------------------------------------------- Field

static int sturm_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(poly_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Field Field::for_labels(const std::vector<int>& labels) {
  // 2 and 3 have rational cosines; they only matter when nothing else is there
  long N = 1;
  int small = 2;
  for (int m : labels) {
    if (m < 2) throw std::invalid_argument("Coxeter label must be >= 2");
    if (m <= 3) {
      small = std::max(small, m);
      continue;
    }
    N = std::lcm(N, static_cast<long>(m));
  }
  if (N == 1) N = small;
  return Field(static_cast<int>(N));
}

Field::Field(int N) : N_(N) {
  minpoly_ = minpoly_of_2cos(N);
  d_ = static_cast<int>(minpoly_.size()) - 1;
  theta_ = 2.0 * std::cos(std::numbers::pi / N);

  // isolating interval
  std::vector<Poly> chain{minpoly_, poly_derivative(minpoly_)};
  while (chain.back().size() > 1) {
    auto r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(r);
  }
  Rational seed(theta_);
  Rational rad(1, 256);
  for (;;) {
    lo_ = seed - rad;
    hi_ = seed + rad;
    int slo = sgn(poly_eval(minpoly_, lo_)), shi = sgn(poly_eval(minpoly_, hi_));
    if (slo * shi < 0 && sturm_changes(chain, lo_) - sturm_changes(chain, hi_) == 1) break;
    rad /= 2;
    if (rad < Rational(1, 1L << 62)) throw std::logic_error("cannot isolate theta");
  }
  const int slo = sgn(poly_eval(minpoly_, lo_));
  const Rational eps(1, 1L << 62);
  while (d_ > 1 && hi_ - lo_ > eps) {  // rational theta keeps the coarse interval
    Rational mid = (lo_ + hi_) / 2;
    int s = sgn(poly_eval(minpoly_, mid));
    if (s == 0) {
      lo_ = hi_ = mid;
      break;
    }
    (s == slo ? lo_ : hi_) = mid;
  }

  // theta^k mod minpoly for k = d .. 2d-2
  Scalar p(d_);
  if (d_ >= 1) {
    for (int i = 0; i < d_; ++i) p[i] = -minpoly_[i];  // theta^d
    for (int k = d_; k <= 2 * d_ - 2; ++k) {
      high_powers_.push_back(p);
      Scalar q(d_);
      for (int i = 0; i + 1 < d_; ++i) q[i + 1] = p[i];
      Scalar top = high_powers_[0] * p[d_ - 1];
      p = q + top;
    }
  }

  cheb_.push_back(from_rational(2));
  if (N_ >= 1) cheb_.push_back(theta());
  for (int k = 1; k < N_; ++k) cheb_.push_back(mul(theta(), cheb_[k]) - cheb_[k - 1]);
}

Scalar Field::theta() const {
  if (d_ == 1) return from_rational(-minpoly_[0]);
  Scalar t(d_);
  t[1] = 1;
  return t;
}

Scalar Field::from_poly(const Poly& p0) const {
  Poly p = poly_divmod(p0, minpoly_).second;
  Scalar s(d_);
  for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i];
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_rational()) return b * a[0];
  if (b.is_rational()) return a * b[0];
  std::vector<Rational> prod(2 * d_ - 1);
  for (int i = 0; i < d_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < d_; ++j)
      if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
  }
  Scalar r(d_);
  for (int i = 0; i < d_; ++i) r[i] = prod[i];
  for (int k = d_; k <= 2 * d_ - 2; ++k)
    if (sgn(prod[k]) != 0) r += high_powers_[k - d_] * prod[k];
  return r;
}

Scalar Field::inverse(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (a.is_rational()) return from_rational(1 / a[0]);
  // extended Euclid: track s with s*a == r (mod minpoly)
  Poly r0 = minpoly_, r1 = poly_trim(a.coeffs());
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly qs = poly_mul(q, s1);
    Poly ns(std::max(s0.size(), qs.size()));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i < s0.size()) ns[i] += s0[i];
      if (i < qs.size()) ns[i] -= qs[i];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = poly_trim(ns);
  }
  // r1 is a nonzero constant (minpoly irreducible)
  for (auto& x : s1) x /= r1[0];
  return from_poly(s1);
}

int Field::sign(const Scalar& a) const {
  if (a.is_rational()) return sgn(a[0]);
  // floating filter
  double v = 0, mag = 0, tp = 1;
  bool ok = true;
  for (int i = 0; i < d_; ++i) {
    double c = a[i].get_d();
    if (!std::isfinite(c)) ok = false;
    v += c * tp;
    mag += std::fabs(c) * std::fabs(tp);
    tp *= theta_;
  }
  if (ok && std::isfinite(mag) && mag > 1e-250) {
    double err = mag * (8.0 * d_ + 16.0) * 0x1p-52;
    if (v > err) return 1;
    if (v < -err) return -1;
  }
  return sign_exact(a);
}

int Field::sign_exact(const Scalar& a) const {
  if (a.is_zero()) return 0;
  Rational lo = lo_, hi = hi_;
  const int slo = sgn(poly_eval(minpoly_, lo));
  for (;;) {
    if (lo == hi) return sgn(poly_eval(a.coeffs(), lo));
    Rational ilo = a[d_ - 1], ihi = a[d_ - 1];
    for (int i = d_ - 2; i >= 0; --i) {
      Rational p1 = ilo * lo, p2 = ilo * hi, p3 = ihi * lo, p4 = ihi * hi;
      Rational mn = p1, mx = p1;
      for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < mn) mn = *p;
        if (*p > mx) mx = *p;
      }
      ilo = mn + a[i];
      ihi = mx + a[i];
    }
    if (sgn(ilo) > 0) return 1;
    if (sgn(ihi) < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int s = sgn(poly_eval(minpoly_, mid));
    if (s == 0) {
      lo = hi = mid;
      continue;
    }
    (s == slo ? lo : hi) = mid;
  }
}

int Field::cmp_to_one(const Scalar& a) const { return sign(a - one()); }
int Field::cmp_to_minus_one(const Scalar& a) const { return sign(a + one()); }

Scalar Field::cos_pi_over(int m) const {
  if (m == 1) return from_rational(-1);
  if (m == 2) return zero();
  if (m == 3) return from_rational(Rational(1, 2));
  if (m < 1 || N_ % m != 0)
    throw std::invalid_argument("label " + std::to_string(m) + " does not divide conductor " +
                                std::to_string(N_));
  return cheb_[N_ / m] * Rational(1, 2);
}

double Field::to_double(const Scalar& a) const {
  // Horner in long double; display only
  long double v = 0;
  for (int i = d_ - 1; i >= 0; --i) v = v * theta_ + a[i].get_d();
  return static_cast<double>(v);
}

std::string Field::to_string(const Scalar& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d_; ++i) {
    const Rational& c = a[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::to_decimal(const Scalar& a, int digits) const {
  char buf[64];
  double v = to_double(a);
  if (v == 0) v = 0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace cox
