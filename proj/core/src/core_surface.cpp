#include "covstat/core_surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace covstat::core_surface {

using tiled::BoundaryCycle;
using tiled::TiledSurface;

void annex_octagon(TiledSurface& Y, int start, int rel_pos) {
  std::array<int, 8> corners;
  corners.fill(-1);
  // forward walk
  int cur = start, i = 0;
  corners[((rel_pos) % 8 + 8) % 8] = start;
  while (i < 8) {
    int nxt = Y.step(cur, relator_at(rel_pos + i));
    if (nxt < 0) break;
    cur = nxt;
    ++i;
    if (i < 8) corners[((rel_pos + i) % 8 + 8) % 8] = cur;
  }
  if (i == 8) {
    if (cur != start) throw std::logic_error("annex_octagon: existing relator path not closed");
    tiled::Octagon o;
    for (int p = 0; p < 8; ++p) o.corners[p] = corners[p];
    Y.add_octagon(o);
    return;
  }
  // backward walk from start
  int bcur = start, j = 0;
  while (i + j < 8) {
    LetterCode p = relator_at(rel_pos + 7 - j);
    int pb = Y.step(bcur, inverse_letter(p));
    if (pb < 0) break;
    bcur = pb;
    ++j;
    corners[((rel_pos + 8 - j) % 8 + 8) % 8] = bcur;
  }
  // fresh chain for positions rel_pos+i .. rel_pos+7-j
  int gap = 8 - i - j;
  assert(gap >= 1);
  int from = cur;
  for (int t = 0; t < gap; ++t) {
    int to = (t == gap - 1) ? bcur : Y.add_vertex();
    LetterCode p = relator_at(rel_pos + i + t);
    if (is_positive(p))
      Y.add_edge(base_of(p), from, to);
    else
      Y.add_edge(base_of(p), to, from);
    if (t < gap - 1) corners[((rel_pos + i + t + 1) % 8 + 8) % 8] = to;
    from = to;
  }
  tiled::Octagon o;
  for (int p = 0; p < 8; ++p) {
    assert(corners[p] >= 0);
    o.corners[p] = corners[p];
  }
  Y.add_octagon(o);
}

namespace {

struct Flagged {
  bool found = false;
  bool half_chain = false;
  // block annexation data
  int start_vertex = 0;
  int rel_pos = 0;
  int length = 0;
  // half-chain data: per block (start vertex, rel_pos)
  std::vector<std::pair<int, int>> chain_blocks;
};

int dart_start_vertex(const TiledSurface& Y, const tiled::Dart& d) {
  return d.fwd ? d.tail : Y.next(d.letter, d.tail);
}

Flagged find_flagged(const TiledSurface& Y) {
  Flagged fl;
  for (const auto& cyc : Y.boundary_cycles()) {
    int n = (int)cyc.length();
    if (n == 0) continue;
    bool all0 = std::all_of(cyc.gap.begin(), cyc.gap.end(), [](int g) { return g == 0; });
    if (all0) {
      // whole cycle is one relator run
      if (n > 8) throw std::logic_error("core closure: relator run longer than 8");
      fl.found = true;
      fl.start_vertex = dart_start_vertex(Y, cyc.darts[0]);
      fl.rel_pos = cyc.reading[0];
      fl.length = n;
      return fl;
    }
    std::vector<int> starts;
    for (int i = 0; i < n; ++i)
      if (cyc.gap[(i - 1 + n) % n] != 0) starts.push_back(i);
    std::vector<std::pair<int, int>> blocks;  // (start dart index, length)
    for (size_t s = 0; s < starts.size(); ++s) {
      int from = starts[s];
      int len = (starts[(s + 1) % starts.size()] - from + n) % n;
      if (len == 0) len = n;
      blocks.push_back({from, len});
    }
    for (auto [from, len] : blocks) {
      if (len >= 4) {
        fl.found = true;
        fl.start_vertex = dart_start_vertex(Y, cyc.darts[from]);
        fl.rel_pos = cyc.reading[from];
        fl.length = std::min(len, 8);
        return fl;
      }
    }
    bool half_chain = !blocks.empty();
    for (auto [from, len] : blocks)
      if (len != 3) half_chain = false;
    if (half_chain)
      for (size_t s = 0; s < blocks.size(); ++s)
        if (cyc.gap[(blocks[s].first + blocks[s].second - 1) % n] != 1) half_chain = false;
    if (half_chain) {
      fl.found = true;
      fl.half_chain = true;
      for (auto [from, len] : blocks)
        fl.chain_blocks.push_back({dart_start_vertex(Y, cyc.darts[from]), cyc.reading[from]});
      return fl;
    }
  }
  return fl;
}

std::multiset<size_t> cycle_lengths(const TiledSurface& Y) {
  std::multiset<size_t> m;
  for (const auto& c : Y.boundary_cycles()) m.insert(c.length());
  return m;
}

}  // namespace

CoreResult core_cyclic(const words::Word& w) {
  words::CyclicWord u = words::dehn_reduce(words::CyclicWord(w));
  if (u.empty()) throw std::domain_error("core_cyclic: word is trivial in the surface group");
  TiledSurface Y = tiled::bare_cycle(u.letters());
  const auto target_lengths = cycle_lengths(Y);
  long guard = 6 * Y.boundary_edge_count() + (long)target_lengths.size();
  for (long round = 0;; ++round) {
    if (round > guard) throw std::logic_error("core_cyclic: closure did not terminate in bound");
    Flagged fl = find_flagged(Y);
    if (!fl.found) break;
    if (fl.half_chain) {
      // pre-create the shared junction edges: for block i the octagon's
      // rel_pos+3 edge is shared with the next octagon in the ring
      for (auto [sv, rp] : fl.chain_blocks) {
        // junction vertex = end of the 3-block starting at sv
        int v = sv;
        for (int t = 0; t < 3; ++t) v = Y.step(v, relator_at(rp + t));
        LetterCode p = relator_at(rp + 3);
        if (Y.step(v, p) < 0) {
          int wv = Y.add_vertex();
          if (is_positive(p))
            Y.add_edge(base_of(p), v, wv);
          else
            Y.add_edge(base_of(p), wv, v);
        }
      }
      for (auto [sv, rp] : fl.chain_blocks) annex_octagon(Y, sv, rp);
    } else {
      annex_octagon(Y, fl.start_vertex, fl.rel_pos);
    }
    if (cycle_lengths(Y) != target_lengths)
      throw std::logic_error("core_cyclic: annexation changed boundary-cycle lengths");
  }
  if (auto err = verify_core(Y)) throw std::logic_error("core_cyclic: " + *err);
  return {std::move(Y), 0};
}

std::optional<std::string> verify_core(const TiledSurface& Y) {
  if (!Y.connected()) return "not connected";
  if (auto err = Y.validate()) return "invalid tiled surface: " + *err;
  if (!Y.is_strongly_boundary_reduced()) return "not strongly boundary reduced";
  return std::nullopt;
}

}  // namespace covstat::core_surface
