#pragma once

#include "covstat/laurent.hpp"
#include "covstat/qsqrt.hpp"
#include "covstat/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace covstat::symrep {

// Partition as weakly decreasing positive row lengths.
using Partition = std::vector<int>;

int size_of(const Partition& p);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
std::vector<Partition> partitions_of(int n);
// All λ ⊇ base with exactly k boxes added.
std::vector<Partition> extend_partitions(const Partition& base, int k);

BigInt dim(const Partition& p);                       // hook length formula
int boxes_outside_first_row(const Partition& p);      // b_λ
int boxes_outside_first_column(const Partition& p);

struct SkewShape {
  Partition outer, inner;
  int size() const { return size_of(outer) - size_of(inner); }
};

long long skew_dim(const SkewShape& s);

// ---------------------------------------------------------------- tableaux

// Content c = t*n + offset; t = 0 for fixed boxes, ±1 for boxes in the
// growing first row / first column of a diagram family.
struct ContentSym {
  int t = 0;
  long long c = 0;
};

// A finite collection of boxes with standard-filling order constraints,
// covering both concrete skew diagrams and symbolic diagram families.
class TableauSpace {
 public:
  static TableauSpace exact_skew(const Partition& outer, const Partition& inner);

  struct Box {
    int row, col;        // coordinates used only for precedence and same-row/col tests
    ContentSym content;
    bool below_row1;     // counts toward b_{shape} (resp. first column when transposed)
  };

  int box_count() const { return (int)boxes_.size(); }
  const Box& box(int i) const { return boxes_[i]; }
  size_t dim() const { return tabs_.size(); }
  // tableau t, entry e (1-based) sits in box tabs_[t][e-1]
  const std::vector<int>& tab(size_t t) const { return tabs_[t]; }

  // Entries lying in the top row (row 1) of tableau t, as a sorted list.
  std::vector<int> top_entries(size_t t) const;
  // Entries in the leftmost column.
  std::vector<int> left_entries(size_t t) const;

  int boxes_below_row1() const;  // b_{λ/ν} for this shape

  // index of the tableau obtained from t by swapping entries i, i+1,
  // or -1 when the swap is not admissible (same row or column)
  int swapped(size_t t, int i) const;
  bool same_row(size_t t, int i) const;
  bool same_col(size_t t, int i) const;
  // ax(box of i+1, box of i) as a symbolic content difference
  ContentSym ax(size_t t, int i) const;

  // Split of tableau t at cut c: box set of entries <= c (the μ-part),
  // plus ids of the restricted fillings.
  struct Split {
    int shape_id;  // id of the box subset
    int lo_id;     // id of the filling by entries 1..c
    int hi_id;     // id of the filling by entries c+1..k
  };
  struct SplitTable {
    std::vector<Split> of_tab;                    // per tableau
    std::vector<std::vector<int>> shape_boxes;    // shape_id -> sorted box indices
    std::vector<int> lo_count, hi_count;          // per shape_id
    // compose[shape_id][lo_id * hi_count + hi_id] -> tableau index
    std::vector<std::vector<int>> compose;
  };
  SplitTable split_at(int cut) const;

  void finalize();  // enumerate tableaux after boxes are set

  std::vector<Box>& mutable_boxes() { return boxes_; }

 private:
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> tabs_;
  std::map<std::pair<int, int>, int> box_at_;  // (row,col) -> index
};

// ------------------------------------------------------- scalar policies

template <class S>
struct Mat {
  int n = 0;
  std::vector<S> a;
  static Mat identity(int n, const S& one, const S& zero) {
    Mat m;
    m.n = n;
    m.a.assign((size_t)n * n, zero);
    for (int i = 0; i < n; ++i) m.a[(size_t)i * n + i] = one;
    return m;
  }
  S& at(int r, int c) { return a[(size_t)r * n + c]; }
  const S& at(int r, int c) const { return a[(size_t)r * n + c]; }
};

struct YorDouble {
  using S = double;
  S zero() const { return 0.0; }
  S one() const { return 1.0; }
  S minus_one() const { return -1.0; }
  S inv_ax(const ContentSym& d) const;
  S sqrt_term(const ContentSym& d) const;
};

// Coefficients live in Q[sqrt(d)]; truncation at `order`.
struct YorSeries {
  using S = LaurentSeries<QSqrt>;
  int order;
  explicit YorSeries(int order) : order(order) {}
  S zero() const { return S::zero(order); }
  S one() const { return S::constant(QSqrt(1), order); }
  S minus_one() const { return S::constant(QSqrt(-1), order); }
  S inv_ax(const ContentSym& d) const;
  S sqrt_term(const ContentSym& d) const;
};

// Left-multiply m by the YOR matrix of the adjacent transposition (i, i+1).
template <class P>
void apply_generator(const TableauSpace& sp, const P& pol, int i, Mat<typename P::S>& m) {
  using S = typename P::S;
  int n = (int)sp.dim();
  std::vector<S> newrow((size_t)n, pol.zero());
  std::vector<bool> done(n, false);
  for (int t = 0; t < n; ++t) {
    if (done[t]) continue;
    int u = sp.swapped(t, i);
    if (u < 0) {
      S diag = sp.same_row(t, i) ? pol.one() : pol.minus_one();
      for (int c = 0; c < n; ++c) m.at(t, c) = diag * m.at(t, c);
      done[t] = true;
    } else {
      ContentSym ax_t = sp.ax(t, i);
      S d_t = pol.inv_ax(ax_t);
      ContentSym ax_u = sp.ax(u, i);
      S d_u = pol.inv_ax(ax_u);
      S off = pol.sqrt_term(ax_t);
      for (int c = 0; c < n; ++c) {
        S rt = d_t * m.at(t, c) + off * m.at(u, c);
        S ru = off * m.at(t, c) + d_u * m.at(u, c);
        m.at(t, c) = rt;
        m.at(u, c) = ru;
      }
      done[t] = done[u] = true;
    }
  }
  (void)newrow;
}

// Decompose perm (0-based images on [0,k)) into adjacent transpositions.
std::vector<int> bubble_factorization(std::vector<int> perm);

// Matrix of perm acting on the tableau space in Young's orthogonal form.
template <class P>
Mat<typename P::S> perm_action(const TableauSpace& sp, const P& pol, const std::vector<int>& perm) {
  auto m = Mat<typename P::S>::identity((int)sp.dim(), pol.one(), pol.zero());
  for (int i : bubble_factorization(perm)) apply_generator(sp, pol, i, m);
  return m;
}

// ------------------------------------------------------- zeta machinery

Rational zeta_exact(int n, int s);

// Dimension polynomial of the family with the given boxes below the first
// row: G(m) = d_{root(m)} for all m where the family exists.
std::vector<Rational> dim_polynomial(const Partition& below_row1);
// Same but taking a full partition (its first row is discarded).
std::vector<Rational> dim_polynomial_of(const Partition& lambda);
Rational eval_poly(const std::vector<Rational>& c, const Rational& x);

// ζ^{S_n}(s) = 2·P_{s,M}(1/n) + O(n^-M); returns the integer coefficients
// of P (degree < M, constant coefficient 1).
std::vector<BigInt> zeta_poly(int s, int M);
// 1/ζ^{S_n}(s) = Q_{s,M}(1/n)/2 + O(n^-M).
std::vector<BigInt> zeta_inv_poly(int s, int M);

// Exact Σ_{λ ∈ Λ(n,b)} d_λ^{-s} (λ1 ≤ n-b and λ̌1 ≤ n-b).
Rational truncation_tail(int n, int b, int s);

std::string partition_str(const Partition& p);

}  // namespace covstat::symrep
