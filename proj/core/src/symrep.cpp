#include "covstat/symrep.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covstat::symrep {

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0], 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) q[j]++;
  return q;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> extend_partitions(const Partition& base, int k) {
  std::vector<Partition> out;
  int rows = (int)base.size() + k;
  Partition cur;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (left == 0) {
      Partition lam = cur;
      for (size_t i = (size_t)row; i < base.size(); ++i) lam.push_back(base[i]);
      if (is_partition(lam) && contains(lam, base)) out.push_back(lam);
      return;
    }
    if (row >= rows) return;
    int lo = row < (int)base.size() ? base[row] : 0;
    int hi = row == 0 ? (base.empty() ? left : base[0] + left)
                      : std::min(cur[row - 1], lo + left);
    if (row == 0 && !base.empty()) hi = base[0] + left;
    for (int v = hi; v >= lo; --v) {
      if (v == 0) {
        // remaining rows must be 0 too; only valid if left == 0 handled above
        break;
      }
      int add = v - lo;
      if (add > left) continue;
      cur.push_back(v);
      rec(row + 1, left - add);
      cur.pop_back();
    }
    if (lo == 0) {
      // stop adding rows; leftover must be zero (checked at entry)
    }
  };
  rec(0, k);
  // the recursion above requires every row positive; also allow stopping early
  // (rows beyond cur equal to base's remaining rows) — handled by rec(left==0).
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt dim(const Partition& p) {
  int n = size_of(p);
  if (n == 0) return 1;
  Partition cj = conjugate(p);
  BigInt num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int hook = (p[i] - j) + (cj[j] - (int)i) - 1;
      den *= hook;
    }
  assert(num % den == 0);
  return num / den;
}

int boxes_outside_first_row(const Partition& p) {
  return p.empty() ? 0 : size_of(p) - p[0];
}
int boxes_outside_first_column(const Partition& p) {
  return p.empty() ? 0 : size_of(p) - (int)p.size();
}

long long skew_dim(const SkewShape& s) {
  auto sp = TableauSpace::exact_skew(s.outer, s.inner);
  return (long long)sp.dim();
}

// ---------------------------------------------------------------- TableauSpace

TableauSpace TableauSpace::exact_skew(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) throw std::invalid_argument("exact_skew: inner not contained");
  TableauSpace sp;
  for (size_t i = 0; i < outer.size(); ++i) {
    int from = i < inner.size() ? inner[i] : 0;
    for (int j = from; j < outer[i]; ++j) {
      Box b;
      b.row = (int)i + 1;
      b.col = j + 1;
      b.content = {0, (long long)(j - (long long)i)};
      b.below_row1 = b.row > 1;
      sp.boxes_.push_back(b);
    }
  }
  sp.finalize();
  return sp;
}

void TableauSpace::finalize() {
  std::sort(boxes_.begin(), boxes_.end(), [](const Box& a, const Box& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  box_at_.clear();
  for (int i = 0; i < (int)boxes_.size(); ++i) box_at_[{boxes_[i].row, boxes_[i].col}] = i;
  int k = (int)boxes_.size();
  std::vector<int> pred_count(k, 0);
  std::vector<std::vector<int>> succ(k);
  for (int i = 0; i < k; ++i) {
    auto it = box_at_.find({boxes_[i].row, boxes_[i].col - 1});
    if (it != box_at_.end()) {
      succ[it->second].push_back(i);
      pred_count[i]++;
    }
    it = box_at_.find({boxes_[i].row - 1, boxes_[i].col});
    if (it != box_at_.end()) {
      succ[it->second].push_back(i);
      pred_count[i]++;
    }
  }
  tabs_.clear();
  std::vector<int> fill;
  std::vector<int> avail_count = pred_count;
  std::function<void()> rec = [&]() {
    if ((int)fill.size() == k) {
      tabs_.push_back(fill);
      return;
    }
    for (int b = 0; b < k; ++b) {
      if (avail_count[b] != 0) continue;
      bool used = std::find(fill.begin(), fill.end(), b) != fill.end();
      if (used) continue;
      fill.push_back(b);
      for (int s : succ[b]) avail_count[s]--;
      rec();
      for (int s : succ[b]) avail_count[s]++;
      fill.pop_back();
    }
  };
  rec();
  std::sort(tabs_.begin(), tabs_.end());
}

std::vector<int> TableauSpace::top_entries(size_t t) const {
  std::vector<int> out;
  for (int e = 1; e <= box_count(); ++e)
    if (boxes_[tabs_[t][e - 1]].row == 1) out.push_back(e);
  return out;
}

std::vector<int> TableauSpace::left_entries(size_t t) const {
  std::vector<int> out;
  for (int e = 1; e <= box_count(); ++e)
    if (boxes_[tabs_[t][e - 1]].col == 1) out.push_back(e);
  return out;
}

int TableauSpace::boxes_below_row1() const {
  int b = 0;
  for (const auto& bx : boxes_)
    if (bx.below_row1) ++b;
  return b;
}

bool TableauSpace::same_row(size_t t, int i) const {
  return boxes_[tabs_[t][i - 1]].row == boxes_[tabs_[t][i]].row;
}
bool TableauSpace::same_col(size_t t, int i) const {
  return boxes_[tabs_[t][i - 1]].col == boxes_[tabs_[t][i]].col;
}

ContentSym TableauSpace::ax(size_t t, int i) const {
  const auto& hi = boxes_[tabs_[t][i]].content;     // box of i+1
  const auto& lo = boxes_[tabs_[t][i - 1]].content; // box of i
  return {hi.t - lo.t, hi.c - lo.c};
}

int TableauSpace::swapped(size_t t, int i) const {
  if (same_row(t, i) || same_col(t, i)) return -1;
  std::vector<int> other = tabs_[t];
  std::swap(other[i - 1], other[i]);
  auto it = std::lower_bound(tabs_.begin(), tabs_.end(), other);
  assert(it != tabs_.end() && *it == other);
  return (int)(it - tabs_.begin());
}

TableauSpace::SplitTable TableauSpace::split_at(int cut) const {
  SplitTable st;
  st.of_tab.resize(tabs_.size());
  std::map<std::vector<int>, int> shape_ids;
  std::vector<std::map<std::vector<int>, int>> lo_ids, hi_ids;
  for (size_t t = 0; t < tabs_.size(); ++t) {
    std::vector<int> lo(tabs_[t].begin(), tabs_[t].begin() + cut);
    std::vector<int> hi(tabs_[t].begin() + cut, tabs_[t].end());
    std::vector<int> shape = lo;
    std::sort(shape.begin(), shape.end());
    auto [its, inss] = shape_ids.try_emplace(shape, (int)shape_ids.size());
    int sid = its->second;
    if (inss) {
      st.shape_boxes.push_back(shape);
      lo_ids.emplace_back();
      hi_ids.emplace_back();
    }
    auto [itl, _l] = lo_ids[sid].try_emplace(lo, (int)lo_ids[sid].size());
    auto [ith, _h] = hi_ids[sid].try_emplace(hi, (int)hi_ids[sid].size());
    st.of_tab[t] = {sid, itl->second, ith->second};
  }
  int ns = (int)shape_ids.size();
  st.lo_count.resize(ns);
  st.hi_count.resize(ns);
  st.compose.resize(ns);
  for (int s = 0; s < ns; ++s) {
    st.lo_count[s] = (int)lo_ids[s].size();
    st.hi_count[s] = (int)hi_ids[s].size();
    st.compose[s].assign((size_t)st.lo_count[s] * st.hi_count[s], -1);
  }
  for (size_t t = 0; t < tabs_.size(); ++t) {
    const auto& sp = st.of_tab[t];
    st.compose[sp.shape_id][(size_t)sp.lo_id * st.hi_count[sp.shape_id] + sp.hi_id] = (int)t;
  }
  return st;
}

// ---------------------------------------------------------------- policies

double YorDouble::inv_ax(const ContentSym& d) const {
  assert(d.t == 0);
  return 1.0 / (double)d.c;
}
double YorDouble::sqrt_term(const ContentSym& d) const {
  assert(d.t == 0);
  double x = 1.0 / (double)d.c;
  return std::sqrt(std::max(0.0, 1.0 - x * x));
}

YorSeries::S YorSeries::inv_ax(const ContentSym& d) const {
  if (d.t == 0) return S::constant(QSqrt(Rational(1, d.c)), order);
  // 1/(t*n + c) = t*u / (1 + t*c*u)
  S den = S::constant(QSqrt(1), order) + S::monomial(QSqrt(Rational(d.t) * d.c), 1, order);
  return S::monomial(QSqrt(Rational(d.t)), 1, order) * den.invert(order);
}

YorSeries::S YorSeries::sqrt_term(const ContentSym& d) const {
  if (d.t == 0) {
    long long a = d.c;
    long long a2 = a * a;
    if (a2 <= 1) return S::zero(order);
    // sqrt(1 - 1/a^2) = sqrt(a^2-1)/|a|
    return S::constant(QSqrt::sqrt_term(Rational(1, std::abs(a)), a2 - 1), order);
  }
  // sqrt(1 - u^2/(1 + t*c*u)^2), rational coefficients
  LaurentQ den = LaurentQ::constant(Rational(1), order) +
                 LaurentQ::monomial(Rational(d.t) * d.c, 1, order);
  LaurentQ inv = den.invert(order);
  LaurentQ x = LaurentQ::monomial(Rational(1), 1, order) * inv;
  LaurentQ arg = LaurentQ::constant(Rational(1), order) - x * x;
  LaurentQ rt = arg.sqrt(order);
  S out = S::zero(order);
  for (const auto& [k, c] : rt.coeff_map()) out += S::monomial(QSqrt(c), k, order);
  return out;
}

std::vector<int> bubble_factorization(std::vector<int> perm) {
  std::vector<int> gens;
  int k = (int)perm.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < k; ++i) {
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        gens.push_back(i + 1);  // 1-based adjacent transposition (i+1, i+2)
        moved = true;
      }
    }
  }
  std::reverse(gens.begin(), gens.end());
  return gens;
}

// ---------------------------------------------------------------- zeta

Rational zeta_exact(int n, int s) {
  Rational acc = 0;
  for (const auto& lam : partitions_of(n)) {
    BigInt d = dim(lam);
    BigInt ds = 1;
    for (int i = 0; i < s; ++i) ds *= d;
    acc += Rational(BigInt(1), ds);
  }
  return acc;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> dim_polynomial(const Partition& below_row1) {
  int b = size_of(below_row1);
  int m0 = 2 * b + (below_row1.empty() ? 0 : below_row1[0]) + 2;
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= b; ++i) {
    int m = m0 + i;
    Partition lam;
    lam.push_back(m - b);
    for (int r : below_row1) lam.push_back(r);
    if (!is_partition(lam)) throw std::logic_error("dim_polynomial: family does not exist");
    xs.push_back(Rational(m));
    ys.push_back(Rational(dim(lam)));
  }
  // Lagrange interpolation, then expand to monomial coefficients.
  int deg = b;
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (int i = 0; i <= deg; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= deg; ++j) {
      if (j == i) continue;
      std::vector<Rational> nb(basis.size() + 1, Rational(0));
      for (size_t d = 0; d < basis.size(); ++d) {
        nb[d] += basis[d] * (-xs[j]);
        nb[d + 1] += basis[d];
      }
      basis = nb;
      denom *= (xs[i] - xs[j]);
    }
    for (size_t d = 0; d < basis.size(); ++d) coeffs[d] += ys[i] * basis[d] / denom;
  }
  return coeffs;
}

std::vector<Rational> dim_polynomial_of(const Partition& lambda) {
  Partition below(lambda.begin() + (lambda.empty() ? 0 : 1), lambda.end());
  return dim_polynomial(below);
}

namespace {

// 1/G(m)^s as a power series in u = 1/m to the requested order.
LaurentQ inv_dim_series(const Partition& below_row1, int s, int order) {
  auto g = dim_polynomial(below_row1);
  int deg = (int)g.size() - 1;
  // G(m) = m^deg * ghat(u) with ghat(u) = sum g[deg-j] u^j
  LaurentQ ghat = LaurentQ::zero(order);
  for (int j = 0; j <= deg; ++j) ghat += LaurentQ::monomial(g[deg - j], j, order);
  LaurentQ inv = ghat.invert(order);
  LaurentQ r = LaurentQ::monomial(Rational(1), deg, order);  // u^deg = m^-deg
  for (int i = 0; i < s; ++i) r *= inv;
  for (int i = 1; i < s; ++i) r *= LaurentQ::monomial(Rational(1), deg, order);
  return r;
}

}  // namespace

std::vector<BigInt> zeta_poly(int s, int M) {
  int b = (M + s - 1) / s;
  LaurentQ P = LaurentQ::zero(M);
  for (int j = 0; j < b; ++j)
    for (const auto& below : partitions_of(j)) P += inv_dim_series(below, s, M);
  std::vector<BigInt> out(M, 0);
  for (const auto& [k, c] : P.coeff_map()) {
    if (denominator(c) != 1) throw std::logic_error("zeta_poly: non-integer coefficient");
    if (k >= 0 && k < M) out[k] = numerator(c);
  }
  return out;
}

std::vector<BigInt> zeta_inv_poly(int s, int M) {
  auto P = zeta_poly(s, M);
  LaurentQ Ps = LaurentQ::zero(M);
  for (int k = 0; k < M; ++k) Ps += LaurentQ::monomial(Rational(P[k]), k, M);
  LaurentQ Q = Ps.invert(M);
  std::vector<BigInt> out(M, 0);
  for (const auto& [k, c] : Q.coeff_map()) {
    if (denominator(c) != 1) throw std::logic_error("zeta_inv_poly: non-integer coefficient");
    if (k >= 0 && k < M) out[k] = numerator(c);
  }
  return out;
}

Rational truncation_tail(int n, int b, int s) {
  Rational acc = 0;
  for (const auto& lam : partitions_of(n)) {
    if (lam.empty()) continue;
    if (lam[0] > n - b) continue;
    if ((int)lam.size() > n - b) continue;
    BigInt d = dim(lam);
    BigInt ds = 1;
    for (int i = 0; i < s; ++i) ds *= d;
    acc += Rational(BigInt(1), ds);
  }
  return acc;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

}  // namespace covstat::symrep
