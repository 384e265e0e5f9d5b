#pragma once

#include "covstat/rational.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace covstat {

// Element of the ring Q[sqrt(d) : d squarefree], stored as a sparse map
// d -> rational coefficient.  Closed under + and *; that is all the YOR
// matrix entries need (no division by irrational values ever occurs).
class QSqrt {
 public:
  QSqrt() = default;
  QSqrt(const Rational& q) {
    if (q != 0) terms_[1] = q;
  }
  QSqrt(long long n) : QSqrt(Rational(n)) {}

  // q * sqrt(d), d > 0 not necessarily squarefree.
  static QSqrt sqrt_term(const Rational& q, long long d) {
    if (d <= 0) throw std::invalid_argument("QSqrt::sqrt_term needs d > 0");
    long long root = 1, rad = d;
    for (long long p = 2; p * p <= rad; ++p) {
      while (rad % (p * p) == 0) {
        rad /= p * p;
        root *= p;
      }
    }
    QSqrt r;
    Rational c = q * root;
    if (c != 0) r.terms_[rad] = c;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<long long, Rational>& terms() const { return terms_; }

  QSqrt& operator+=(const QSqrt& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  QSqrt& operator-=(const QSqrt& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  friend QSqrt operator+(QSqrt a, const QSqrt& b) { return a += b; }
  friend QSqrt operator-(QSqrt a, const QSqrt& b) { return a -= b; }
  friend QSqrt operator-(const QSqrt& a) {
    QSqrt r;
    for (const auto& [d, c] : a.terms_) r.terms_[d] = -c;
    return r;
  }

  friend QSqrt operator*(const QSqrt& a, const QSqrt& b) {
    QSqrt r;
    for (const auto& [d1, c1] : a.terms_)
      for (const auto& [d2, c2] : b.terms_) {
        long long g = gcd_ll(d1, d2);
        r.add_term((d1 / g) * (d2 / g), c1 * c2 * g);
      }
    return r;
  }
  QSqrt& operator*=(const QSqrt& o) { return *this = *this * o; }

  friend bool operator==(const QSqrt& a, const QSqrt& b) { return a.terms_ == b.terms_; }

  double to_double() const {
    double v = 0;
    for (const auto& [d, c] : terms_) v += covstat::to_double(c) * std::sqrt(double(d));
    return v;
  }

 private:
  static long long gcd_ll(long long a, long long b) {
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void add_term(long long d, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_[d] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long long, Rational> terms_;
};

}  // namespace covstat
