#include "covstat/tiled.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covstat::tiled {

namespace {
LetterCode pos_code(int letter) { return LetterCode(letter < 2 ? letter : letter + 2); }
}

LetterCode dart_reading(const Dart& d) {
  LetterCode p = pos_code(d.letter);
  return d.fwd ? p : inverse_letter(p);
}

void TiledSurface::reset(int vertices) {
  nv_ = vertices;
  for (int f = 0; f < 4; ++f) {
    next_[f].assign(nv_, -1);
    prev_[f].assign(nv_, -1);
  }
  octs_.clear();
}

int TiledSurface::add_vertex() {
  for (int f = 0; f < 4; ++f) {
    next_[f].push_back(-1);
    prev_[f].push_back(-1);
  }
  return nv_++;
}

bool TiledSurface::try_add_edge(int letter, int u, int v) {
  if (next_[letter][u] == v && prev_[letter][v] == u) return true;  // already present
  if (next_[letter][u] != -1 || prev_[letter][v] != -1) return false;
  next_[letter][u] = v;
  prev_[letter][v] = u;
  return true;
}

void TiledSurface::add_edge(int letter, int u, int v) {
  if (!try_add_edge(letter, u, v))
    throw std::invalid_argument("add_edge: slot already occupied (letter " +
                                std::string(1, "abcd"[letter]) + ", " + std::to_string(u) + "->" +
                                std::to_string(v) + ")");
}

int TiledSurface::step(int v, LetterCode p) const {
  int f = base_of(p);
  return is_positive(p) ? next_[f][v] : prev_[f][v];
}

bool TiledSurface::add_octagon_at(int start) {
  Octagon o;
  int cur = start;
  for (int i = 0; i < 8; ++i) {
    o.corners[i] = cur;
    cur = step(cur, relator_at(i));
    if (cur < 0) return false;
  }
  if (cur != start) return false;
  add_octagon(o);
  return true;
}

void TiledSurface::add_octagon(const Octagon& o) {
  auto it = std::lower_bound(octs_.begin(), octs_.end(), o);
  if (it != octs_.end() && *it == o) return;
  octs_.insert(it, o);
}

int TiledSurface::edge_count() const {
  int e = 0;
  for (int f = 0; f < 4; ++f) e += edge_count(f);
  return e;
}
int TiledSurface::edge_count(int letter) const {
  int e = 0;
  for (int v = 0; v < nv_; ++v)
    if (next_[letter][v] != -1) ++e;
  return e;
}

bool TiledSurface::slot_occupied(int v, int slot) const {
  switch (slot) {
    case 0: return next_[0][v] != -1;  // a-out
    case 1: return prev_[1][v] != -1;  // b-in
    case 2: return prev_[0][v] != -1;  // a-in
    case 3: return next_[1][v] != -1;  // b-out
    case 4: return next_[2][v] != -1;  // c-out
    case 5: return prev_[3][v] != -1;  // d-in
    case 6: return prev_[2][v] != -1;  // c-in
    case 7: return next_[3][v] != -1;  // d-out
  }
  return false;
}

Dart TiledSurface::dart_after(const Dart& d, int& gap_out) const {
  int w = d.fwd ? next_[d.letter][d.tail] : d.tail;
  int s = slot_in(dart_reading(d));
  gap_out = 0;
  for (int k = 1; k <= 8; ++k) {
    int slot = (s + k) % 8;
    if (!slot_occupied(w, slot)) {
      ++gap_out;
      continue;
    }
    switch (slot) {
      case 0: return {0, w, true};
      case 1: return {1, prev_[1][w], false};
      case 2: return {0, prev_[0][w], false};
      case 3: return {1, w, true};
      case 4: return {2, w, true};
      case 5: return {3, prev_[3][w], false};
      case 6: return {2, prev_[2][w], false};
      case 7: return {3, w, true};
    }
  }
  throw std::logic_error("dart_after: isolated endpoint");
}

void TiledSurface::compute_faces(std::vector<std::vector<Dart>>& faces,
                                 std::vector<std::vector<int>>& gaps,
                                 std::vector<bool>& covered) const {
  auto dart_id = [&](const Dart& d) { return ((d.letter * nv_ + d.tail) << 1) | (d.fwd ? 1 : 0); };
  std::vector<int> face_of(8 * nv_, -1);
  faces.clear();
  gaps.clear();
  for (int f = 0; f < 4; ++f)
    for (int u = 0; u < nv_; ++u) {
      if (next_[f][u] == -1) continue;
      for (bool fwd : {true, false}) {
        Dart d0{f, u, fwd};
        if (face_of[dart_id(d0)] != -1) continue;
        int id = (int)faces.size();
        faces.emplace_back();
        gaps.emplace_back();
        Dart d = d0;
        do {
          face_of[dart_id(d)] = id;
          int g = 0;
          Dart nd = dart_after(d, g);
          faces[id].push_back(d);
          gaps[id].push_back(g);
          d = nd;
        } while (!(d == d0));
        // rotate gaps so that gaps[i] follows darts[i]
      }
    }
  covered.assign(faces.size(), false);
  for (const auto& o : octs_) {
    for (int i = 0; i < 8; ++i) {
      LetterCode p = relator_at(i);
      Dart d = is_positive(p) ? Dart{base_of(p), o.corners[i], true}
                              : Dart{base_of(p), o.corners[(i + 1) % 8], false};
      covered[face_of[dart_id(d)]] = true;
    }
  }
}

std::vector<BoundaryCycle> TiledSurface::boundary_cycles() const {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::vector<int>> gaps;
  std::vector<bool> covered;
  compute_faces(faces, gaps, covered);
  std::vector<BoundaryCycle> out;
  for (size_t i = 0; i < faces.size(); ++i) {
    if (covered[i]) continue;
    BoundaryCycle c;
    c.darts = faces[i];
    c.gap = gaps[i];
    for (const auto& d : c.darts) c.reading.push_back(dart_reading(d));
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

CycleClassification classify_cycle(const BoundaryCycle& c) {
  CycleClassification cc;
  int n = (int)c.length();
  if (n == 0) return cc;
  bool all0 = std::all_of(c.gap.begin(), c.gap.end(), [](int g) { return g == 0; });
  if (all0) {
    cc.single_full_run = true;
    cc.blocks.push_back({0, n, c.reading[0]});
    return cc;
  }
  std::vector<int> starts;
  for (int i = 0; i < n; ++i)
    if (c.gap[(i - 1 + n) % n] != 0) starts.push_back(i);
  for (size_t s = 0; s < starts.size(); ++s) {
    int from = starts[s];
    int to = starts[(s + 1) % starts.size()];
    int len = (to - from + n) % n;
    if (len == 0) len = n;
    cc.blocks.push_back({from, len, c.reading[from]});
  }
  for (size_t s = 0; s < cc.blocks.size(); ++s) {
    const auto& b = cc.blocks[s];
    cc.junction_gap.push_back(c.gap[(b.start + b.length - 1) % n]);
  }
  return cc;
}

bool has_long_chain_in(const CycleClassification& cc) {
  int nb = (int)cc.blocks.size();
  if (nb < 2 || cc.single_full_run) return false;
  for (int s = 0; s < nb; ++s) {
    if (cc.blocks[s].length != 4) continue;
    int cur = s;
    for (int steps = 1; steps < nb; ++steps) {
      if (cc.junction_gap[cur] != 1) break;
      cur = (cur + 1) % nb;
      if (cc.blocks[cur].length == 4) return true;
      if (cc.blocks[cur].length != 3) break;
    }
  }
  return false;
}

bool is_half_chain(const CycleClassification& cc) {
  if (cc.blocks.empty() || cc.single_full_run) return false;
  for (const auto& b : cc.blocks)
    if (b.length != 3) return false;
  for (int g : cc.junction_gap)
    if (g != 1) return false;
  return true;
}

}  // namespace

BoundaryReport TiledSurface::classify_boundary() const {
  BoundaryReport r;
  for (const auto& c : boundary_cycles()) {
    auto cc = classify_cycle(c);
    // parity of even-length blocks in cyclic chains (all junctions gap 1)
    if (!cc.blocks.empty() && !cc.single_full_run) {
      bool cyclic_chain = true;
      for (int g : cc.junction_gap)
        if (g != 1) cyclic_chain = false;
      if (cyclic_chain) {
        int evens = 0;
        for (const auto& b : cc.blocks)
          if (b.length % 2 == 0) ++evens;
        assert(evens % 2 == 0);
        (void)evens;
      }
    }
    for (const auto& b : cc.blocks) {
      if (b.length >= 5) r.has_long_block = true;
      if (b.length >= 4) r.has_half_block = true;
    }
    if (has_long_chain_in(cc)) r.has_long_chain = true;
    if (is_half_chain(cc)) r.has_half_chain = true;
    r.cycles.push_back(std::move(cc));
  }
  return r;
}

bool TiledSurface::is_boundary_reduced() const {
  auto r = classify_boundary();
  return !r.has_long_block && !r.has_long_chain;
}
bool TiledSurface::is_strongly_boundary_reduced() const {
  auto r = classify_boundary();
  return !r.has_half_block && !r.has_half_chain;
}

namespace {

// Best total of sum(Defect(P) - 8) over disjoint proper arcs of a circular
// +1/-3 item sequence (arcs separated by at least one unused item), forced
// nonempty; the full-circle piece is handled by the caller.
long long best_arc_packing(const std::vector<int>& items) {
  const long long NEG = -(1LL << 40);
  int L = (int)items.size();
  if (L == 0) return NEG;
  long long best_allow_empty = 0;
  for (int cut = 0; cut < L; ++cut) {
    // item `cut` stays unused, which also provides the circular separation
    long long dp_free = 0, dp_in = NEG;
    for (int idx = 1; idx < L; ++idx) {
      int v = items[(cut + idx) % L];
      long long nfree = std::max(dp_free, dp_in);
      long long nin = std::max(dp_in, dp_free - 8) + v;
      dp_free = nfree;
      dp_in = nin;
    }
    best_allow_empty = std::max(best_allow_empty, std::max(dp_free, dp_in));
  }
  if (best_allow_empty > 0) return best_allow_empty;
  long long single = NEG;
  for (int s = 0; s < L; ++s) {
    long long sum = 0;
    for (int len = 1; len < L; ++len) {
      sum += items[(s + len - 1) % L];
      single = std::max(single, sum - 8);
    }
  }
  return single;
}

}  // namespace

int TiledSurface::max_defect() const {
  auto cycles = boundary_cycles();
  if (cycles.empty()) throw std::domain_error("max_defect: empty boundary");
  const long long NEG = -(1LL << 40);
  long long positives = 0;
  bool any_positive = false;
  long long best_single = NEG;
  for (const auto& c : cycles) {
    std::vector<int> items;
    long long circle_sum = 0;
    for (size_t i = 0; i < c.length(); ++i) {
      items.push_back(1);
      circle_sum += 1;
      for (int h = 0; h < c.gap[i]; ++h) {
        items.push_back(-3);
        circle_sum -= 3;
      }
    }
    long long arcs = best_arc_packing(items);
    long long best_c = std::max(arcs, circle_sum);  // full circle: chi = 0
    if (best_c > 0) {
      positives += best_c;
      any_positive = true;
    }
    best_single = std::max(best_single, best_c);
  }
  return any_positive ? (int)positives : (int)best_single;
}

std::vector<TiledSurface::Piece> TiledSurface::all_pieces() const {
  std::vector<Piece> out;
  for (const auto& c : boundary_cycles()) {
    std::vector<int> items;  // +1 exposed side, -1 hanging
    for (size_t i = 0; i < c.length(); ++i) {
      items.push_back(1);
      for (int h = 0; h < c.gap[i]; ++h) items.push_back(0);
    }
    int L = (int)items.size();
    int tot_e = 0, tot_h = 0;
    for (int v : items) (v ? tot_e : tot_h)++;
    out.push_back({tot_e, tot_h, 0});  // whole circle
    for (int s = 0; s < L; ++s)
      for (int len = 1; len < L; ++len) {
        int e = 0, h = 0;
        for (int i = 0; i < len; ++i) (items[(s + i) % L] ? e : h)++;
        out.push_back({e, h, 1});
      }
  }
  return out;
}

std::optional<std::string> TiledSurface::validate() const {
  if (2 * edge_count() < 8 * octagon_count()) return "more octagon sides than edge sides";
  for (int v = 0; v < nv_; ++v) {
    for (int q = 0; q < 8; ++q) {
      int cur = v;
      bool complete = true;
      for (int i = 0; i < 8 && complete; ++i) {
        cur = step(cur, relator_at(q + i));
        if (cur < 0) complete = false;
      }
      if (complete && cur != v)
        return "relator path not closed at vertex " + std::to_string(v) + " (start position " +
               std::to_string(q) + ")";
    }
  }
  std::map<std::pair<int, std::pair<int, int>>, int> side_count;  // (side, (letter, tail))
  for (size_t k = 0; k < octs_.size(); ++k) {
    const auto& o = octs_[k];
    if (k > 0 && octs_[k - 1] == o) return "duplicate octagon";
    int cur = o.corners[0];
    for (int i = 0; i < 8; ++i) {
      if (o.corners[i] != cur) return "octagon corner list inconsistent";
      LetterCode p = relator_at(i);
      int nxt = step(cur, p);
      if (nxt < 0) return "octagon path uses a missing edge";
      int tail = is_positive(p) ? cur : nxt;
      int side = is_positive(p) ? 0 : 1;  // forward step: octagon on the left
      if (++side_count[{side, {base_of(p), tail}}] > 1)
        return "edge side borders two octagons";
      cur = nxt;
    }
    if (cur != o.corners[0]) return "octagon path not closed";
  }
  return std::nullopt;
}

// ----------------------------------------------------------- components

std::vector<int> TiledSurface::component_of() const {
  std::vector<int> comp(nv_, -1);
  int c = 0;
  for (int s = 0; s < nv_; ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int f = 0; f < 4; ++f)
        for (int w : {next_[f][v], prev_[f][v]})
          if (w >= 0 && comp[w] == -1) {
            comp[w] = c;
            q.push(w);
          }
    }
    ++c;
  }
  return comp;
}

int TiledSurface::component_count() const {
  auto c = component_of();
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}
bool TiledSurface::connected() const { return component_count() <= 1; }

// ----------------------------------------------------------- morphisms

namespace {

// Extends the partial map from seed; false on inconsistency.
bool propagate(const TiledSurface& Y, const TiledSurface& Z, std::vector<int>& vmap, int seed) {
  std::queue<int> q;
  q.push(seed);
  while (!q.empty()) {
    int y = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      int yn = Y.next(f, y);
      if (yn >= 0) {
        int zn = Z.next(f, vmap[y]);
        if (zn < 0) return false;
        if (vmap[yn] == -1) {
          vmap[yn] = zn;
          q.push(yn);
        } else if (vmap[yn] != zn)
          return false;
      }
      int yp = Y.prev(f, y);
      if (yp >= 0) {
        int zp = Z.prev(f, vmap[y]);
        if (zp < 0) return false;
        if (vmap[yp] == -1) {
          vmap[yp] = zp;
          q.push(yp);
        } else if (vmap[yp] != zp)
          return false;
      }
    }
  }
  return true;
}

}  // namespace

Octagon TiledSurface::map_octagon(const Octagon& o, const std::vector<int>& vmap) {
  Octagon r;
  for (int i = 0; i < 8; ++i) r.corners[i] = vmap[o.corners[i]];
  return r;
}

std::vector<Morphism> TiledSurface::morphisms_to(const TiledSurface& Z) const {
  auto comp = component_of();
  int nc = component_count();
  std::vector<int> base(nc, -1);
  for (int v = 0; v < nv_; ++v)
    if (base[comp[v]] == -1) base[comp[v]] = v;
  // candidate partial maps per component
  std::vector<std::vector<std::vector<int>>> cand(nc);
  for (int c = 0; c < nc; ++c) {
    for (int z = 0; z < Z.vertex_count(); ++z) {
      std::vector<int> vmap(nv_, -1);
      vmap[base[c]] = z;
      if (!propagate(*this, Z, vmap, base[c])) continue;
      // octagons of this component must map to octagons of Z
      bool ok = true;
      for (const auto& o : octs_) {
        if (comp[o.corners[0]] != c) continue;
        Octagon img = map_octagon(o, vmap);
        if (!std::binary_search(Z.octagons().begin(), Z.octagons().end(), img)) {
          ok = false;
          break;
        }
      }
      if (ok) cand[c].push_back(std::move(vmap));
    }
  }
  std::vector<Morphism> out;
  if (nc == 0) {
    out.push_back({std::vector<int>{}});
    return out;
  }
  for (int c = 0; c < nc; ++c)
    if (cand[c].empty()) return {};
  std::vector<size_t> idx(nc, 0);
  for (;;) {
    Morphism m;
    m.vmap.assign(nv_, -1);
    for (int c = 0; c < nc; ++c)
      for (int v = 0; v < nv_; ++v)
        if (cand[c][idx[c]][v] != -1) m.vmap[v] = cand[c][idx[c]][v];
    out.push_back(std::move(m));
    int c = nc - 1;
    while (c >= 0) {
      if (++idx[c] < cand[c].size()) break;
      idx[c] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return out;
}

std::vector<Morphism> TiledSurface::embeddings_into(const TiledSurface& Z) const {
  std::vector<Morphism> out;
  for (auto& m : morphisms_to(Z)) {
    std::set<int> img(m.vmap.begin(), m.vmap.end());
    if ((int)img.size() == nv_) out.push_back(std::move(m));
  }
  return out;
}

// ----------------------------------------------------------- quotients

std::optional<TiledSurface> TiledSurface::fold_by(const TiledSurface& Y,
                                                  const std::vector<int>& part, int nclasses) {
  TiledSurface W(nclasses);
  for (int f = 0; f < 4; ++f)
    for (int u = 0; u < Y.vertex_count(); ++u) {
      int v = Y.next(f, u);
      if (v < 0) continue;
      if (!W.try_add_edge(f, part[u], part[v])) return std::nullopt;
    }
  for (const auto& o : Y.octagons()) W.add_octagon(map_octagon(o, part));
  return W;
}

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

// Merge u,v and fold-close: identified vertices force identification of
// like-labeled neighbors.  Returns the normalized partition.
std::vector<int> fold_closure(const TiledSurface& Y, const std::vector<int>& part, int u, int v) {
  int n = Y.vertex_count();
  UF uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] == part[j]) uf.unite(i, j);
  std::queue<std::pair<int, int>> q;
  q.push({u, v});
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop();
    if (!uf.unite(a, b)) continue;
    // collect per-class neighbor representatives and enqueue forced merges
    for (int f = 0; f < 4; ++f) {
      std::map<int, int> out_rep, in_rep;
      for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        int nx = Y.next(f, x);
        if (nx >= 0) {
          auto [it, ins] = out_rep.try_emplace(r, nx);
          if (!ins && uf.find(it->second) != uf.find(nx)) q.push({it->second, nx});
        }
        int px = Y.prev(f, x);
        if (px >= 0) {
          auto [it, ins] = in_rep.try_emplace(r, px);
          if (!ins && uf.find(it->second) != uf.find(px)) q.push({it->second, px});
        }
      }
    }
  }
  std::vector<int> norm(n, -1);
  int next_id = 0;
  std::map<int, int> ids;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto [it, ins] = ids.try_emplace(r, next_id);
    if (ins) ++next_id;
    norm[i] = it->second;
  }
  return norm;
}

}  // namespace

std::vector<TiledSurface::Quotient> TiledSurface::quotients(size_t state_cap) const {
  std::vector<int> discrete(nv_);
  std::iota(discrete.begin(), discrete.end(), 0);
  std::set<std::vector<int>> seen{discrete};
  std::vector<std::vector<int>> queue{discrete};
  while (!queue.empty()) {
    auto part = queue.back();
    queue.pop_back();
    int ncl = part.empty() ? 0 : 1 + *std::max_element(part.begin(), part.end());
    std::vector<int> rep(ncl, -1);
    for (int v = 0; v < nv_; ++v)
      if (rep[part[v]] == -1) rep[part[v]] = v;
    for (int i = 0; i < ncl; ++i)
      for (int j = i + 1; j < ncl; ++j) {
        auto merged = fold_closure(*this, part, rep[i], rep[j]);
        if (seen.size() >= state_cap) throw std::runtime_error("quotients: state cap exceeded");
        if (seen.insert(merged).second) queue.push_back(merged);
      }
  }
  std::vector<Quotient> out;
  for (const auto& part : seen) {
    int ncl = part.empty() ? 0 : 1 + *std::max_element(part.begin(), part.end());
    auto W = fold_by(*this, part, ncl);
    if (!W) continue;
    if (W->validate()) continue;  // invalid quotient
    Quotient q;
    q.map.vmap = part;
    q.image = std::move(*W);
    out.push_back(std::move(q));
  }
  return out;
}

// ----------------------------------------------------------- canonical form

namespace {

std::vector<int> bfs_encoding(const TiledSurface& Y, int start, const std::vector<int>& comp) {
  int c = comp[start];
  std::vector<int> label(Y.vertex_count(), -1);
  std::vector<int> order;
  label[start] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int f = 0; f < 4; ++f)
      for (int w : {Y.next(f, v), Y.prev(f, v)})
        if (w >= 0 && label[w] == -1) {
          label[w] = (int)order.size();
          order.push_back(w);
        }
  }
  std::vector<int> enc;
  enc.push_back((int)order.size());
  for (int v : order)
    for (int f = 0; f < 4; ++f) {
      int n = Y.next(f, v), p = Y.prev(f, v);
      enc.push_back(n >= 0 ? label[n] : -1);
      enc.push_back(p >= 0 ? label[p] : -1);
    }
  std::vector<std::array<int, 8>> octs;
  for (const auto& o : Y.octagons()) {
    if (comp[o.corners[0]] != c) continue;
    std::array<int, 8> t;
    for (int i = 0; i < 8; ++i) t[i] = label[o.corners[i]];
    octs.push_back(t);
  }
  std::sort(octs.begin(), octs.end());
  enc.push_back((int)octs.size());
  for (const auto& t : octs)
    for (int x : t) enc.push_back(x);
  return enc;
}

}  // namespace

std::string TiledSurface::canonical_form() const {
  auto comp = component_of();
  int nc = component_count();
  std::vector<std::vector<int>> comp_enc(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<int> best;
    for (int v = 0; v < nv_; ++v) {
      if (comp[v] != c) continue;
      auto enc = bfs_encoding(*this, v, comp);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    comp_enc[c] = std::move(best);
  }
  std::sort(comp_enc.begin(), comp_enc.end());
  std::ostringstream os;
  os << nv_ << ";";
  for (const auto& e : comp_enc) {
    for (int x : e) os << x << ",";
    os << ";";
  }
  return os.str();
}

bool TiledSurface::isomorphic(const TiledSurface& other) const {
  return canonical_form() == other.canonical_form();
}

bool TiledSurface::octagon_on_left(int letter, int tail) const {
  // forward relator steps put the octagon on the edge's left
  LetterCode p = pos_code(letter);
  int pos = p;  // position of the positive letter in the relator
  for (const auto& o : octs_)
    if (o.corners[pos] == tail) return true;
  return false;
}

bool TiledSurface::octagon_on_right(int letter, int tail) const {
  // the backward relator step over the edge puts the octagon on its right
  LetterCode p = inverse_letter(pos_code(letter));
  int pos = p;
  int head = next_[letter][tail];
  for (const auto& o : octs_)
    if (o.corners[pos] == head && o.corners[(pos + 1) % 8] == tail) return true;
  return false;
}

TiledSurface TiledSurface::disjoint_union(const TiledSurface& other) const {
  TiledSurface r(nv_ + other.nv_);
  for (int f = 0; f < 4; ++f) {
    for (int v = 0; v < nv_; ++v)
      if (next_[f][v] >= 0) r.add_edge(f, v, next_[f][v]);
    for (int v = 0; v < other.nv_; ++v)
      if (other.next_[f][v] >= 0) r.add_edge(f, v + nv_, other.next_[f][v] + nv_);
  }
  for (const auto& o : octs_) r.add_octagon(o);
  for (auto o : other.octs_) {
    for (auto& cr : o.corners) cr += nv_;
    r.add_octagon(o);
  }
  return r;
}

// ----------------------------------------------------------- stock surfaces

TiledSurface single_vertex() { return TiledSurface(1); }

TiledSurface bare_cycle(const std::vector<LetterCode>& w) {
  int n = (int)w.size();
  if (n == 0) throw std::invalid_argument("bare_cycle: empty word");
  TiledSurface Y(n);
  for (int i = 0; i < n; ++i) {
    LetterCode p = w[i];
    int u = i, v = (i + 1) % n;
    if (is_positive(p))
      Y.add_edge(base_of(p), u, v);
    else
      Y.add_edge(base_of(p), v, u);
  }
  return Y;
}

TiledSurface bare_relator_cycle() {
  std::vector<LetterCode> rel;
  for (int i = 0; i < 8; ++i) rel.push_back(relator_at(i));
  return bare_cycle(rel);
}

TiledSurface octagon_disc() {
  TiledSurface Y = bare_relator_cycle();
  if (!Y.add_octagon_at(0)) throw std::logic_error("octagon_disc: relator path broken");
  return Y;
}

TiledSurface genus2_base_cover() {
  TiledSurface Y(1);
  for (int f = 0; f < 4; ++f) Y.add_edge(f, 0, 0);
  if (!Y.add_octagon_at(0)) throw std::logic_error("genus2_base_cover: relator path broken");
  return Y;
}

}  // namespace covstat::tiled
