#pragma once

#include "covstat/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace covstat {

// Truncated Laurent series in u = 1/n.  Coefficients c_k for u^k with
// k in [lo, order); exponents >= order are unknown.  order == kExact marks
// an exact Laurent polynomial (no truncation).  Arithmetic propagates the
// weakest truncation so that O(n^-M) claims stay honest.
template <class C>
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  LaurentSeries() : lo_(0), order_(kExact) {}

  static LaurentSeries zero(int order = kExact) {
    LaurentSeries s;
    s.order_ = order;
    return s;
  }
  static LaurentSeries constant(const C& c, int order = kExact) { return monomial(c, 0, order); }
  static LaurentSeries monomial(const C& c, int k, int order = kExact) {
    LaurentSeries s;
    s.order_ = order;
    if (k < order && !(c == C(0))) {
      s.lo_ = k;
      s.c_.push_back(c);
    }
    return s;
  }

  int order() const { return order_; }
  bool exact() const { return order_ == kExact; }
  bool is_zero() const { return c_.empty(); }
  // Lowest exponent carrying a nonzero coefficient (throws on the zero series).
  int valuation() const {
    if (c_.empty()) throw std::domain_error("valuation of zero series");
    return lo_;
  }

  C coeff(int k) const {
    if (k < lo_ || k >= lo_ + (int)c_.size()) return C(0);
    return c_[k - lo_];
  }

  // Exponents with nonzero coefficients, ascending.
  std::vector<int> support() const {
    std::vector<int> r;
    for (int i = 0; i < (int)c_.size(); ++i)
      if (!(c_[i] == C(0))) r.push_back(lo_ + i);
    return r;
  }

  LaurentSeries truncated(int ord) const {
    LaurentSeries r = *this;
    r.order_ = std::min(order_, ord);
    if (r.lo_ + (int)r.c_.size() > r.order_) r.c_.resize(std::max(0, r.order_ - r.lo_));
    r.normalize();
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.order_ = std::min(a.order_, b.order_);
    if (a.c_.empty() && b.c_.empty()) return r;
    int lo = std::min(a.c_.empty() ? b.lo_ : a.lo_, b.c_.empty() ? a.lo_ : b.lo_);
    int hi = std::min(r.order_, std::max(a.lo_ + (int)a.c_.size(), b.lo_ + (int)b.c_.size()));
    if (hi <= lo) return r;
    r.lo_ = lo;
    r.c_.assign(hi - lo, C(0));
    for (int k = lo; k < hi; ++k) r.c_[k - lo] = a.coeff(k) + b.coeff(k);
    r.normalize();
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  friend LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = C(0) - x;
    return r;
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.order_ = mul_order(a, b);
    if (a.c_.empty() || b.c_.empty()) return r;
    int lo = a.lo_ + b.lo_;
    int hi = std::min(r.order_, a.lo_ + (int)a.c_.size() + b.lo_ + (int)b.c_.size() - 1);
    if (hi <= lo) return r;
    r.lo_ = lo;
    r.c_.assign(hi - lo, C(0));
    for (int i = 0; i < (int)a.c_.size(); ++i) {
      if (a.c_[i] == C(0)) continue;
      for (int j = 0; j < (int)b.c_.size(); ++j) {
        int k = a.lo_ + i + b.lo_ + j;
        if (k >= hi) break;
        r.c_[k - lo] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.lo_ == b.lo_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

  // Multiplicative inverse.  Needs a nonzero lowest coefficient; the result
  // is known to target_order (defaults are derived from this->order()).
  LaurentSeries invert(int target_order = kExact) const {
    if (c_.empty()) throw std::domain_error("invert of zero series");
    if (c_[0] == C(0)) throw std::domain_error("series not normalized");
    int l = lo_;
    int ord = target_order;
    if (order_ != kExact) ord = std::min(ord, order_ - 2 * l);
    if (ord == kExact) {
      if ((int)c_.size() == 1) {
        LaurentSeries r;
        r.order_ = kExact;
        r.lo_ = -l;
        r.c_.push_back(C(1) / c_[0]);
        return r;
      }
      throw std::domain_error("invert of exact non-monomial needs a target order");
    }
    int len = ord - (-l);
    if (len <= 0) return zero(ord);
    // s = c0 u^l (1 + t); 1/s = u^{-l}/c0 * sum (-t)^k
    std::vector<C> t(len, C(0));
    for (int i = 1; i < len && i < (int)c_.size(); ++i) t[i] = c_[i] / c_[0];
    std::vector<C> inv(len, C(0));
    inv[0] = C(1);
    for (int k = 1; k < len; ++k) {
      C acc = C(0);
      for (int j = 1; j <= k; ++j) acc += t[j] * inv[k - j];
      inv[k] = C(0) - acc;
    }
    LaurentSeries r;
    r.order_ = ord;
    r.lo_ = -l;
    r.c_.resize(len);
    for (int k = 0; k < len; ++k) r.c_[k] = inv[k] / c_[0];
    r.normalize();
    return r;
  }

  // Square root of a series with constant term 1 and no negative exponents.
  LaurentSeries sqrt(int target_order = kExact) const {
    if (lo_ < 0 && !c_.empty()) throw std::domain_error("sqrt needs no negative exponents");
    if (coeff(0) != C(1)) throw std::domain_error("sqrt needs constant term 1");
    int ord = std::min(order_, target_order);
    if (ord == kExact) ord = lo_ + (int)c_.size();  // exact input: heuristic cap
    int len = std::max(1, ord);
    std::vector<C> y(len, C(0));
    y[0] = C(1);
    for (int k = 1; k < len; ++k) {
      C acc = coeff(k);
      for (int j = 1; j < k; ++j) acc -= y[j] * y[k - j];
      y[k] = acc / C(2);
    }
    LaurentSeries r;
    r.order_ = std::min(order_, target_order);
    r.lo_ = 0;
    r.c_ = y;
    r.normalize();
    return r;
  }

  std::map<int, C> coeff_map() const {
    std::map<int, C> m;
    for (int i = 0; i < (int)c_.size(); ++i)
      if (!(c_[i] == C(0))) m[lo_ + i] = c_[i];
    return m;
  }

 private:
  static int mul_order(const LaurentSeries& a, const LaurentSeries& b) {
    int o = kExact;
    if (a.order_ != kExact) o = std::min(o, b.c_.empty() ? a.order_ : a.order_ + b.lo_);
    if (b.order_ != kExact) o = std::min(o, a.c_.empty() ? b.order_ : b.order_ + a.lo_);
    // zero-with-truncation times anything stays truncated at its own order
    if (a.c_.empty() && a.order_ != kExact) o = std::min(o, a.order_);
    if (b.c_.empty() && b.order_ != kExact) o = std::min(o, b.order_);
    return o;
  }

  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == C(0)) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + lead);
      lo_ += (int)lead;
    }
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
    if (c_.empty()) lo_ = 0;
  }

  int lo_;
  int order_;
  std::vector<C> c_;
};

using LaurentQ = LaurentSeries<Rational>;

// (n)_l = n(n-1)...(n-l+1) = n^l * prod_{j<l} (1 - j u), exact.
inline LaurentQ pochhammer_series(int l) {
  LaurentQ r = LaurentQ::constant(Rational(1));
  for (int j = 0; j < l; ++j) {
    LaurentQ f = LaurentQ::monomial(Rational(1), -1) + LaurentQ::constant(Rational(-j));
    r *= f;
  }
  return r;
}

// P(n) (coefficients of n^0, n^1, ...) as an exact Laurent polynomial in u.
inline LaurentQ poly_in_n(const std::vector<Rational>& coeffs) {
  LaurentQ r = LaurentQ::zero();
  for (int j = 0; j < (int)coeffs.size(); ++j) r += LaurentQ::monomial(coeffs[j], -j);
  return r;
}

// P(n)/Q(n) as a Laurent series known to target_order.
inline LaurentQ rational_fn_series(const std::vector<Rational>& P, const std::vector<Rational>& Q,
                                   int target_order) {
  LaurentQ q = poly_in_n(Q);
  if (q.is_zero()) throw std::domain_error("rational_fn_series: zero denominator");
  return poly_in_n(P) * q.invert(target_order);
}

inline Rational eval_at(const LaurentQ& s, long long n) {
  if (n < 1) throw std::domain_error("eval_at needs n >= 1");
  Rational u(1, n), acc(0), up(1);
  auto m = s.coeff_map();
  if (m.empty()) return acc;
  int k = m.begin()->first;
  up = Rational(1);
  if (k >= 0)
    for (int i = 0; i < k; ++i) up *= u;
  else
    for (int i = 0; i < -k; ++i) up *= Rational(n);
  int cur = k;
  for (const auto& [e, c] : m) {
    while (cur < e) {
      up *= u;
      ++cur;
    }
    acc += c * up;
  }
  return acc;
}

// Rendered as "a_{-1}*n + a_0 + a_1/n + ..." with an O-tail when truncated.
inline std::string to_string(const LaurentQ& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : s.coeff_map()) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (k < 0) os << "*n" << (k == -1 ? "" : "^" + std::to_string(-k));
    if (k > 0) os << "/n" << (k == 1 ? "" : "^" + std::to_string(k));
  }
  if (first) os << "0";
  if (!s.exact()) os << " + O(n^-" << s.order() << ")";
  return os.str();
}

}  // namespace covstat
