#include "covstat/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace covstat::symrep {

namespace {
constexpr int kFarColumn = 1 << 20;  // growing-row boxes sit past any fixed column
}

bool FamilySkew::valid() const {
  if (row1_boxes() < 0) return false;
  if (la_bar.size() < nu_bar.size()) return false;
  for (size_t i = 0; i < nu_bar.size(); ++i)
    if (la_bar[i] < nu_bar[i]) return false;
  return is_partition(la_bar) && is_partition(nu_bar);
}

TableauSpace FamilySkew::space() const {
  TableauSpace sp;
  auto& boxes = sp.mutable_boxes();
  int bnu = size_of(nu_bar);
  int alpha = row1_boxes();
  for (int i = 0; i < alpha; ++i) {
    TableauSpace::Box b;
    b.row = 1;
    b.col = kFarColumn + i;
    b.content = {1, (long long)i - vin - bnu};
    b.below_row1 = false;
    boxes.push_back(b);
  }
  for (size_t i = 0; i < la_bar.size(); ++i) {
    int from = i < nu_bar.size() ? nu_bar[i] : 0;
    for (int j = from; j < la_bar[i]; ++j) {
      TableauSpace::Box b;
      b.row = (int)i + 2;
      b.col = j + 1;
      b.content = {0, (long long)(j + 1) - ((long long)i + 2)};
      b.below_row1 = true;
      boxes.push_back(b);
    }
  }
  if (transposed) {
    for (auto& b : boxes) {
      std::swap(b.row, b.col);
      b.content.t = -b.content.t;
      b.content.c = -b.content.c;
      b.below_row1 = b.row != 1;
    }
  }
  sp.finalize();
  return sp;
}

SkewShape FamilySkew::at(int n) const {
  Partition outer, inner;
  outer.push_back(n - vout - size_of(la_bar));
  for (int r : la_bar) outer.push_back(r);
  inner.push_back(n - vin - size_of(nu_bar));
  for (int r : nu_bar) inner.push_back(r);
  if (!is_partition(outer) || !is_partition(inner) || !contains(outer, inner))
    throw std::domain_error("FamilySkew::at: n too small for this family");
  if (transposed) {
    outer = conjugate(outer);
    inner = conjugate(inner);
  }
  return {outer, inner};
}

int FamilySkew::min_n() const {
  int bnu = size_of(nu_bar), bla = size_of(la_bar);
  int n = std::max(vout + bla + (la_bar.empty() ? 1 : la_bar[0]),
                   vin + bnu + (nu_bar.empty() ? 1 : nu_bar[0]));
  // also need inner first row >= outer second row (family validity)
  while (n - vin - bnu < (la_bar.empty() ? 0 : la_bar[0])) ++n;
  return n;
}

std::vector<FamilySkew> enumerate_families(int vin, int vout, int b) {
  int k = vin - vout;
  std::vector<FamilySkew> out;
  for (int j = 0; j < b; ++j) {
    for (const auto& nu : partitions_of(j)) {
      for (int beta = 0; beta <= k; ++beta) {
        for (const auto& la : extend_partitions(nu, beta)) {
          for (bool tr : {false, true}) {
            FamilySkew f;
            f.nu_bar = nu;
            f.la_bar = la;
            f.vin = vin;
            f.vout = vout;
            f.transposed = tr;
            if (f.valid()) out.push_back(f);
          }
        }
      }
    }
  }
  return out;
}

std::vector<Rational> shift_poly(const std::vector<Rational>& p, long long shift) {
  // q(n) = p(n - shift)
  int deg = (int)p.size() - 1;
  std::vector<Rational> q(p.size(), Rational(0));
  std::vector<std::vector<BigInt>> binom(deg + 1, std::vector<BigInt>(deg + 1, 0));
  for (int i = 0; i <= deg; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
  }
  for (int d = 0; d <= deg; ++d) {
    Rational pw = 1;
    for (int j = d; j >= 0; --j) {
      // coefficient of n^j in p[d]*(n-shift)^d
      q[j] += p[d] * Rational(binom[d][j]) * pw;
      pw *= Rational(-shift);
    }
  }
  return q;
}

LaurentQ poly_series_shifted(const std::vector<Rational>& g, long long shift) {
  return poly_in_n(shift_poly(g, shift));
}

}  // namespace covstat::symrep
