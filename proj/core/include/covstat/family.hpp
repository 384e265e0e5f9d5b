#pragma once

#include "covstat/symrep.hpp"

#include <vector>

namespace covstat::symrep {

// Skew diagram family outer(n-vout)/inner(n-vin): both partitions grow in the
// first row (first column when transposed); the parts below it are fixed
// roots.  Valid for all large n, with tableaux identified across n.
struct FamilySkew {
  Partition nu_bar;   // inner minus its first row
  Partition la_bar;   // outer minus its first row
  int vin = 0;        // inner has size n - vin
  int vout = 0;       // outer has size n - vout
  bool transposed = false;

  int k() const { return vin - vout; }
  int beta() const { return size_of(la_bar) - size_of(nu_bar); }  // boxes added below row 1
  int row1_boxes() const { return k() - beta(); }
  bool valid() const;

  TableauSpace space() const;

  // Concrete skew shape at a given n (first rows restored); for validation.
  SkewShape at(int n) const;
  int min_n() const;  // smallest n where at(n) is a genuine skew shape
};

// All families (nu_bar ⊢ j < b) -> (la_bar ⊇ nu_bar with ≤ k extra boxes),
// both orientations.
std::vector<FamilySkew> enumerate_families(int vin, int vout, int b);

// Coefficients of p(n - shift) given those of p(m).
std::vector<Rational> shift_poly(const std::vector<Rational>& p, long long shift);

// Power series in u = 1/n of the polynomial G(n - shift), exact.
LaurentQ poly_series_shifted(const std::vector<Rational>& g, long long shift);

}  // namespace covstat::symrep
