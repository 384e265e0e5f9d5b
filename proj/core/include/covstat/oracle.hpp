#pragma once

#include "covstat/rational.hpp"
#include "covstat/tiled.hpp"
#include "covstat/words.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace covstat::oracle {

using Perm = std::vector<int>;  // images, 0-based

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // p after q
Perm perm_inverse(const Perm& p);

// Point of Hom(Γ₂, S_n) with right-to-left composition:
// [gd⁻¹, gc⁻¹][gb⁻¹, ga⁻¹] = id.
struct HomPoint {
  Perm g[4];
  bool relation_holds() const;
};

inline constexpr int kDefaultCap = 5;

// Streams all homomorphisms for n ≤ cap (g_d solved per (g_a,g_b,g_c) as a
// centralizer coset).
void enum_homs(int n, const std::function<void(const HomPoint&)>& sink, int cap = kDefaultCap);

BigInt hom_count_enumerated(int n, int cap = kDefaultCap);
// (n!)^3 ζ^{S_n}(2), the Hurwitz/zeta count.
BigInt hom_count_formula(int n);

tiled::TiledSurface cover_of(const HomPoint& phi);

// Monodromy permutation of a word (walk the cover's edges, first letter first).
Perm word_permutation(const HomPoint& phi, const words::Word& w);

Rational brute_e_fix(const words::Word& gamma, int n, int cap = kDefaultCap);
Rational brute_e_emb(const tiled::TiledSurface& W, int n, int cap = kDefaultCap);

struct SampleEstimate {
  double estimate;
  double stderr_;
  long long samples;
};

// Importance sampling with exact solution-set weights and exact |Hom|
// normalization; unbiased for E_n[fix_γ].
SampleEstimate sample_estimate(const words::Word& gamma, int n, long long samples,
                               std::uint64_t seed = 12345);

}  // namespace covstat::oracle
