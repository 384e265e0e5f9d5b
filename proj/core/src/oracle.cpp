#include "covstat/oracle.hpp"

#include "covstat/symrep.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace covstat::oracle {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}

bool HomPoint::relation_holds() const {
  auto comm_inv = [](const Perm& x, const Perm& y) {
    // [x⁻¹, y⁻¹] = x⁻¹ y⁻¹ x y
    return perm_compose(perm_inverse(x),
                        perm_compose(perm_inverse(y), perm_compose(x, y)));
  };
  Perm lhs = perm_compose(comm_inv(g[3], g[2]), comm_inv(g[1], g[0]));
  return lhs == perm_identity((int)g[0].size());
}

namespace {

std::vector<int> cycle_type(const Perm& p) {
  int n = (int)p.size();
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
  int n = (int)p.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cyc;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(j);
      j = p[j];
    }
    cyc.push_back(std::move(c));
  }
  return cyc;
}

// x with x⁻¹ a x = b (a, b of equal cycle type), by matching cycles.
Perm conjugator(const Perm& a, const Perm& b) {
  auto ca = cycles_of(a), cb = cycles_of(b);
  auto bylen = [](const std::vector<int>& x, const std::vector<int>& y) {
    return x.size() < y.size();
  };
  std::stable_sort(ca.begin(), ca.end(), bylen);
  std::stable_sort(cb.begin(), cb.end(), bylen);
  Perm x(a.size());
  for (size_t k = 0; k < ca.size(); ++k) {
    assert(ca[k].size() == cb[k].size());
    for (size_t t = 0; t < ca[k].size(); ++t) x[cb[k][t]] = ca[k][t];
  }
  // x maps b's cycles onto a's cycles: x b x⁻¹ = a, so x⁻¹ a x = b
  return x;
}

// all z commuting with p
void centralizer_elements(const Perm& p, const std::function<void(const Perm&)>& sink) {
  auto cyc = cycles_of(p);
  std::map<size_t, std::vector<int>> by_len;  // length -> cycle indices
  for (size_t k = 0; k < cyc.size(); ++k) by_len[cyc[k].size()].push_back((int)k);
  std::vector<std::pair<size_t, std::vector<int>>> groups(by_len.begin(), by_len.end());
  Perm z(p.size());
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      sink(z);
      return;
    }
    auto [len, idxs] = groups[gi];
    std::vector<int> target = idxs;
    std::sort(target.begin(), target.end());
    std::vector<int> rot(idxs.size(), 0);
    do {
      std::function<void(size_t)> rots = [&](size_t ci) {
        if (ci == idxs.size()) {
          rec(gi + 1);
          return;
        }
        for (int r = 0; r < (int)len; ++r) {
          const auto& src = cyc[idxs[ci]];
          const auto& dst = cyc[target[ci]];
          for (size_t t = 0; t < len; ++t) z[src[t]] = dst[(t + r) % len];
          rots(ci + 1);
        }
      };
      rots(0);
    } while (std::next_permutation(target.begin(), target.end()));
  };
  rec(0);
}

BigInt centralizer_size(const Perm& p) {
  auto type = cycle_type(p);
  std::map<int, int> mult;
  for (int l : type) mult[l]++;
  BigInt z = 1;
  for (auto [l, m] : mult) {
    for (int i = 0; i < m; ++i) z *= l;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

void all_perms(int n, std::vector<Perm>& out) {
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
}

// Solutions g_d of [gd⁻¹, gc⁻¹][gb⁻¹, ga⁻¹] = id form Z(g_c)·x0 or are empty.
struct DSolution {
  bool any = false;
  Perm x0;
};

DSolution solve_gd(const Perm& ga, const Perm& gb, const Perm& gc) {
  // need gd⁻¹ gc⁻¹ gd = T gc⁻¹ with T = [ga⁻¹, gb⁻¹]
  Perm T = perm_compose(perm_inverse(ga),
                        perm_compose(perm_inverse(gb), perm_compose(ga, gb)));
  Perm gci = perm_inverse(gc);
  Perm B = perm_compose(T, gci);
  DSolution s;
  if (cycle_type(B) != cycle_type(gci)) return s;
  s.any = true;
  s.x0 = conjugator(gci, B);
  return s;
}

}  // namespace

void enum_homs(int n, const std::function<void(const HomPoint&)>& sink, int cap) {
  if (n > cap) throw std::domain_error("enum_homs: n exceeds the oracle cap");
  std::vector<Perm> perms;
  all_perms(n, perms);
  for (const auto& ga : perms)
    for (const auto& gb : perms)
      for (const auto& gc : perms) {
        auto sol = solve_gd(ga, gb, gc);
        if (!sol.any) continue;
        centralizer_elements(perm_inverse(gc), [&](const Perm& z) {
          HomPoint phi;
          phi.g[0] = ga;
          phi.g[1] = gb;
          phi.g[2] = gc;
          phi.g[3] = perm_compose(z, sol.x0);
          sink(phi);
        });
      }
}

BigInt hom_count_enumerated(int n, int cap) {
  BigInt count = 0;
  if (n > cap) throw std::domain_error("hom_count_enumerated: n exceeds the oracle cap");
  std::vector<Perm> perms;
  all_perms(n, perms);
  for (const auto& ga : perms)
    for (const auto& gb : perms)
      for (const auto& gc : perms) {
        auto sol = solve_gd(ga, gb, gc);
        if (sol.any) count += centralizer_size(gc);
      }
  return count;
}

BigInt hom_count_formula(int n) {
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Rational z = symrep::zeta_exact(n, 2);
  Rational total = Rational(fact * fact * fact) * z;
  assert(denominator(total) == 1);
  return numerator(total);
}

tiled::TiledSurface cover_of(const HomPoint& phi) {
  int n = (int)phi.g[0].size();
  tiled::TiledSurface X(n);
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < n; ++i) X.add_edge(f, i, phi.g[f][i]);
  for (int i = 0; i < n; ++i)
    if (!X.add_octagon_at(i)) throw std::logic_error("cover_of: relation violated");
  return X;
}

Perm word_permutation(const HomPoint& phi, const words::Word& w) {
  int n = (int)phi.g[0].size();
  Perm m = perm_identity(n);
  for (LetterCode p : w.letters()) {
    const Perm& g = phi.g[base_of(p)];
    m = is_positive(p) ? perm_compose(g, m) : perm_compose(perm_inverse(g), m);
  }
  return m;
}

Rational brute_e_fix(const words::Word& gamma, int n, int cap) {
  BigInt total = 0, count = 0;
  enum_homs(n, [&](const HomPoint& phi) {
    Perm m = word_permutation(phi, gamma);
    int fx = 0;
    for (int i = 0; i < n; ++i)
      if (m[i] == i) ++fx;
    total += fx;
    count += 1;
  }, cap);
  return Rational(total, count);
}

Rational brute_e_emb(const tiled::TiledSurface& W, int n, int cap) {
  BigInt total = 0, count = 0;
  enum_homs(n, [&](const HomPoint& phi) {
    auto X = cover_of(phi);
    total += (long long)W.embeddings_into(X).size();
    count += 1;
  }, cap);
  return Rational(total, count);
}

SampleEstimate sample_estimate(const words::Word& gamma, int n, long long samples,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rand_perm = [&](int m) {
    Perm p = perm_identity(m);
    for (int i = m - 1; i > 0; --i) {
      std::uniform_int_distribution<int> d(0, i);
      std::swap(p[i], p[d(rng)]);
    }
    return p;
  };
  // uniform element of Z(gc_inv) given its cycles
  auto rand_centralizer = [&](const std::vector<std::vector<int>>& cyc) {
    std::map<size_t, std::vector<int>> by_len;
    for (size_t k = 0; k < cyc.size(); ++k) by_len[cyc[k].size()].push_back((int)k);
    Perm z(n);
    for (auto& [len, idxs] : by_len) {
      std::vector<int> target = idxs;
      for (int i = (int)target.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(target[i], target[d(rng)]);
      }
      for (size_t ci = 0; ci < idxs.size(); ++ci) {
        std::uniform_int_distribution<int> d(0, (int)len - 1);
        int r = d(rng);
        const auto& src = cyc[idxs[ci]];
        const auto& dst = cyc[target[ci]];
        for (size_t t = 0; t < len; ++t) z[src[t]] = dst[(t + r) % len];
      }
    }
    return z;
  };

  long double zeta = to_double(symrep::zeta_exact(n, 2));
  long double sum = 0, sumsq = 0;
  for (long long s = 0; s < samples; ++s) {
    HomPoint phi;
    phi.g[0] = rand_perm(n);
    phi.g[1] = rand_perm(n);
    phi.g[2] = rand_perm(n);
    auto sol = solve_gd(phi.g[0], phi.g[1], phi.g[2]);
    long double val = 0;
    if (sol.any) {
      Perm gci = perm_inverse(phi.g[2]);
      auto cyc = cycles_of(gci);
      Perm z = rand_centralizer(cyc);
      phi.g[3] = perm_compose(z, sol.x0);
      Perm m = word_permutation(phi, gamma);
      int fx = 0;
      for (int i = 0; i < n; ++i)
        if (m[i] == i) ++fx;
      long double w = to_double(Rational(centralizer_size(phi.g[2])));
      val = w * fx;
    }
    sum += val;
    sumsq += val * val;
  }
  // E[fix] = E[val] / ((n!)^3 ζ / (n!)^3) = E[val] / ζ
  long double mean = sum / samples;
  long double var = std::max((long double)0, sumsq / samples - mean * mean);
  long double se = std::sqrt(var / samples);
  SampleEstimate est;
  est.estimate = (double)(mean / zeta);
  est.stderr_ = (double)(se / zeta);
  est.samples = samples;
  return est;
}

}  // namespace covstat::oracle
