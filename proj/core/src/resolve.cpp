#include "covstat/resolve.hpp"

#include "covstat/core_surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace covstat::resolve {

using tiled::Morphism;
using tiled::TiledSurface;

Resolution image_resolution(const TiledSurface& Y) {
  Resolution r;
  r.kind = "image";
  for (auto& q : Y.quotients()) r.elements.push_back({q.map, std::move(q.image)});
  return r;
}

long growing_budget(const TiledSurface& Y, int chi0) {
  long d = Y.boundary_edge_count();
  long pi0 = Y.component_count();
  long a = std::max(0L, 2 * pi0 - (long)chi0);
  long steps = d / 2 + (d + 1) * (a + (a + 1) * d / 2) + 8;
  return (d / 3 + 1) * steps;
}

namespace {

struct AnnexJob {
  int start_vertex;
  int rel_pos;
  int length;
};

struct JunctionJob {
  int vertex;
  int rel_pos;  // letter of the junction edge, read away from the vertex
};

int dart_start_vertex(const TiledSurface& Y, const tiled::Dart& d) {
  return d.fwd ? d.tail : Y.next(d.letter, d.tail);
}

// Flagged blocks of one round of the growing process: half/long blocks,
// long-chain blocks, half-chain blocks, with shared junction edges.
void collect_flagged(const TiledSurface& W, std::vector<AnnexJob>& jobs,
                     std::vector<JunctionJob>& junctions) {
  for (const auto& cyc : W.boundary_cycles()) {
    int n = (int)cyc.length();
    if (n == 0) continue;
    bool all0 = std::all_of(cyc.gap.begin(), cyc.gap.end(), [](int g) { return g == 0; });
    if (all0) {
      if (n % 8 != 0) throw std::logic_error("growing: impossible full relator run");
      jobs.push_back({dart_start_vertex(W, cyc.darts[0]), cyc.reading[0], 8});
      continue;
    }
    std::vector<std::pair<int, int>> blocks;  // (start dart, length)
    {
      std::vector<int> starts;
      for (int i = 0; i < n; ++i)
        if (cyc.gap[(i - 1 + n) % n] != 0) starts.push_back(i);
      for (size_t s = 0; s < starts.size(); ++s) {
        int from = starts[s];
        int len = (starts[(s + 1) % starts.size()] - from + n) % n;
        if (len == 0) len = n;
        blocks.push_back({from, len});
      }
    }
    int nb = (int)blocks.size();
    auto jgap = [&](int bi) {
      return cyc.gap[(blocks[bi].first + blocks[bi].second - 1) % n];
    };
    std::vector<bool> flag(nb, false);
    for (int i = 0; i < nb; ++i)
      if (blocks[i].second >= 4) flag[i] = true;
    // long chains 4,3,...,3,4 joined by gap-1 junctions
    for (int s = 0; s < nb; ++s) {
      if (blocks[s].second != 4) continue;
      std::vector<int> run{s};
      int cur = s;
      for (int steps = 1; steps < nb; ++steps) {
        if (jgap(cur) != 1) break;
        cur = (cur + 1) % nb;
        run.push_back(cur);
        if (blocks[cur].second == 4) {
          for (int bi : run) flag[bi] = true;
          break;
        }
        if (blocks[cur].second != 3) break;
      }
    }
    // half-chain: the whole cycle consists of 3-blocks at gap-1 junctions
    bool half_chain = nb > 0;
    for (int i = 0; i < nb; ++i)
      if (blocks[i].second != 3 || jgap(i) != 1) half_chain = false;
    if (half_chain)
      for (int i = 0; i < nb; ++i) flag[i] = true;
    for (int i = 0; i < nb; ++i) {
      if (!flag[i]) continue;
      jobs.push_back({dart_start_vertex(W, cyc.darts[blocks[i].first]),
                      cyc.reading[blocks[i].first], std::min(blocks[i].second, 8)});
      int j = (i + 1) % nb;
      if (jgap(i) == 1 && flag[j] && !(nb == 1)) {
        // shared junction edge between the octagons of blocks i and j
        int v = dart_start_vertex(W, cyc.darts[blocks[i].first]);
        for (int t = 0; t < blocks[i].second; ++t) v = W.step(v, relator_at(cyc.reading[blocks[i].first] + t));
        junctions.push_back({v, (cyc.reading[blocks[i].first] + blocks[i].second) % 8});
      }
    }
  }
}

// W plus one round of free annexation; fresh octagon count returned.
TiledSurface free_annexation(const TiledSurface& W, int& fresh_octagons) {
  std::vector<AnnexJob> jobs;
  std::vector<JunctionJob> junctions;
  collect_flagged(W, jobs, junctions);
  TiledSurface F = W;
  for (const auto& j : junctions) {
    LetterCode p = relator_at(j.rel_pos);
    if (F.step(j.vertex, p) >= 0) throw std::logic_error("growing: junction slot occupied");
    int w = F.add_vertex();
    if (is_positive(p))
      F.add_edge(base_of(p), j.vertex, w);
    else
      F.add_edge(base_of(p), w, j.vertex);
  }
  for (const auto& j : jobs) core_surface::annex_octagon(F, j.start_vertex, j.rel_pos);
  fresh_octagons = F.octagon_count() - W.octagon_count();
  return F;
}

// Canonical key for a resolution element (W connected): minimal BFS encoding
// of W paired with the relabeled vertex images of Y.
std::string element_key(const TiledSurface& W, const std::vector<int>& fvmap);

std::vector<int> bfs_labels(const TiledSurface& Y, int start, std::vector<int>& enc) {
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
  enc.clear();
  enc.push_back((int)order.size());
  for (int v : order)
    for (int f = 0; f < 4; ++f) {
      int nx = Y.next(f, v), pv = Y.prev(f, v);
      enc.push_back(nx >= 0 ? label[nx] : -1);
      enc.push_back(pv >= 0 ? label[pv] : -1);
    }
  std::vector<std::array<int, 8>> octs;
  for (const auto& o : Y.octagons()) {
    std::array<int, 8> t;
    for (int i = 0; i < 8; ++i) t[i] = label[o.corners[i]];
    octs.push_back(t);
  }
  std::sort(octs.begin(), octs.end());
  enc.push_back((int)octs.size());
  for (const auto& t : octs)
    for (int x : t) enc.push_back(x);
  return label;
}

std::string element_key(const TiledSurface& W, const std::vector<int>& fvmap) {
  if (!W.connected()) throw std::logic_error("element_key: codomain must be connected");
  std::vector<int> best_enc;
  std::vector<int> best_map;
  for (int s = 0; s < W.vertex_count(); ++s) {
    std::vector<int> enc;
    auto label = bfs_labels(W, s, enc);
    std::vector<int> mapped(fvmap.size());
    for (size_t i = 0; i < fvmap.size(); ++i) mapped[i] = label[fvmap[i]];
    if (best_enc.empty() || enc < best_enc ||
        (enc == best_enc && mapped < best_map)) {
      best_enc = std::move(enc);
      best_map = std::move(mapped);
    }
  }
  std::string key;
  for (int x : best_enc) key += std::to_string(x) + ",";
  key += ";";
  for (int x : best_map) key += std::to_string(x) + ",";
  return key;
}

// Merge u,v into the partition and fold-close; normalized result.
std::vector<int> merge_and_close(const TiledSurface& F, const std::vector<int>& part, int u,
                                 int v) {
  int n = F.vertex_count();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] == part[b] && find(a) != find(b)) uf[find(b)] = find(a);
  std::queue<std::pair<int, int>> q;
  q.push({u, v});
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    uf[b] = a;
    for (int f = 0; f < 4; ++f) {
      std::map<int, int> out_rep, in_rep;
      for (int x = 0; x < n; ++x) {
        int r = find(x);
        int nx = F.next(f, x);
        if (nx >= 0) {
          auto [it, ins] = out_rep.try_emplace(r, nx);
          if (!ins && find(it->second) != find(nx)) q.push({it->second, nx});
        }
        int px = F.prev(f, x);
        if (px >= 0) {
          auto [it, ins] = in_rep.try_emplace(r, px);
          if (!ins && find(it->second) != find(px)) q.push({it->second, px});
        }
      }
    }
  }
  std::vector<int> np(n);
  std::map<int, int> ids;
  int next_id = 0;
  for (int x = 0; x < n; ++x) {
    auto [it, ins] = ids.try_emplace(find(x), next_id);
    if (ins) ++next_id;
    np[x] = it->second;
  }
  return np;
}

// Fold-closed partitions of F keeping the first `protect` vertices pairwise
// distinct (merges may attach fresh cells to protected ones).
std::vector<std::vector<int>> injective_quotient_partitions(const TiledSurface& F, int protect) {
  int n = F.vertex_count();
  std::vector<int> discrete(n);
  std::iota(discrete.begin(), discrete.end(), 0);
  std::set<std::vector<int>> seen{discrete};
  std::vector<std::vector<int>> queue{discrete};
  auto injective = [&](const std::vector<int>& part) {
    std::set<int> used;
    for (int v = 0; v < protect; ++v)
      if (!used.insert(part[v]).second) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  while (!queue.empty()) {
    auto part = queue.back();
    queue.pop_back();
    if (injective(part)) out.push_back(part);
    int ncl = 1 + *std::max_element(part.begin(), part.end());
    std::vector<int> rep(ncl, -1);
    std::vector<bool> has_protected(ncl, false);
    for (int v = 0; v < n; ++v) {
      if (rep[part[v]] == -1) rep[part[v]] = v;
      if (v < protect) has_protected[part[v]] = true;
    }
    for (int i = 0; i < ncl; ++i)
      for (int j = i + 1; j < ncl; ++j) {
        if (has_protected[i] && has_protected[j]) continue;
        auto np = merge_and_close(F, part, rep[i], rep[j]);
        if (seen.insert(np).second) queue.push_back(np);
      }
  }
  return out;
}

}  // namespace

Resolution growing_resolution(const TiledSurface& Y, int chi0) {
  if (!Y.connected()) throw std::invalid_argument("growing_resolution: Y must be connected");
  long budget = growing_budget(Y, chi0);
  Resolution R;
  R.kind = "growing";
  R.chi0 = chi0;
  struct State {
    TiledSurface W;
    std::vector<int> fvmap;
    long added;
  };
  std::vector<State> stack;
  std::set<std::string> seen_states, emitted;
  for (auto& q : Y.quotients()) {
    std::string key = element_key(q.image, q.map.vmap);
    if (seen_states.insert(key).second) stack.push_back({std::move(q.image), q.map.vmap, 0});
  }
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    bool sbr = st.W.is_strongly_boundary_reduced();
    bool br = st.W.is_boundary_reduced();
    if (sbr || (br && st.W.euler_characteristic() < chi0)) {
      std::string key = element_key(st.W, st.fvmap);
      if (emitted.insert(key).second) {
        Element e;
        e.map.vmap = st.fvmap;
        e.codomain = std::move(st.W);
        R.elements.push_back(std::move(e));
      }
      continue;
    }
    int fresh = 0;
    TiledSurface F = free_annexation(st.W, fresh);
    if (st.added + fresh > budget)
      throw std::logic_error("growing_resolution: octagon budget exceeded");
    for (const auto& part : injective_quotient_partitions(F, st.W.vertex_count())) {
      int ncl = 1 + *std::max_element(part.begin(), part.end());
      auto W2 = TiledSurface::fold_by(F, part, ncl);
      if (!W2) continue;
      if (W2->validate()) continue;
      std::vector<int> fv(st.fvmap.size());
      for (size_t i = 0; i < fv.size(); ++i) fv[i] = part[st.fvmap[i]];
      std::string key = element_key(*W2, fv);
      if (seen_states.insert(key).second)
        stack.push_back({std::move(*W2), std::move(fv), st.added + fresh});
    }
  }
  return R;
}

std::optional<FactorizationFailure> verify_resolution(const TiledSurface& Y, const Resolution& R,
                                                      const std::vector<TiledSurface>& covers) {
  for (size_t ci = 0; ci < covers.size(); ++ci) {
    const auto& X = covers[ci];
    // embeddings of each codomain into X, computed once per cover
    std::vector<std::vector<Morphism>> embs;
    for (const auto& e : R.elements) embs.push_back(e.codomain.embeddings_into(X));
    for (const auto& h : Y.morphisms_to(X)) {
      int count = 0;
      for (size_t k = 0; k < R.elements.size(); ++k) {
        const auto& f = R.elements[k].map.vmap;
        for (const auto& g : embs[k]) {
          bool match = true;
          for (size_t y = 0; y < h.vmap.size() && match; ++y)
            if (g.vmap[f[y]] != h.vmap[y]) match = false;
          if (match) ++count;
        }
      }
      if (count != 1) return FactorizationFailure{ci, h, count};
    }
  }
  return std::nullopt;
}

}  // namespace covstat::resolve
