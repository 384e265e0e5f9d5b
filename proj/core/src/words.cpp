#include "covstat/words.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>
#include <numeric>

namespace covstat::words {

namespace {
std::atomic<long> g_parity_checks{0};
}

long parity_checks_performed() { return g_parity_checks.load(); }

// ---------------------------------------------------------------- Word

void Word::free_reduce() {
  std::vector<LetterCode> out;
  out.reserve(l_.size());
  for (LetterCode x : l_) {
    if (!out.empty() && out.back() == inverse_letter(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  l_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<LetterCode> r(l_.rbegin(), l_.rend());
  for (auto& x : r) x = inverse_letter(x);
  return Word(std::move(r));
}

Word Word::operator*(const Word& o) const {
  std::vector<LetterCode> r = l_;
  r.insert(r.end(), o.l_.begin(), o.l_.end());
  return Word(std::move(r));
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

std::string Word::str() const {
  std::string s;
  for (LetterCode x : l_) s += letter_char(x);
  return s.empty() ? "1" : s;
}

bool operator<(const Word& a, const Word& b) {
  auto rank = [](LetterCode p) { return lex_rank(p); };
  return std::lexicographical_compare(a.l_.begin(), a.l_.end(), b.l_.begin(), b.l_.end(),
                                      [&](LetterCode x, LetterCode y) { return rank(x) < rank(y); });
}

// ---------------------------------------------------------------- CyclicWord

CyclicWord::CyclicWord(const Word& w) : l_(w.letters()) { canonicalize(); }
CyclicWord::CyclicWord(std::vector<LetterCode> letters) : l_(std::move(letters)) {
  Word w(l_);  // free reduction
  l_ = w.letters();
  canonicalize();
}

void CyclicWord::canonicalize() {
  // cyclic reduction
  while (l_.size() >= 2 && l_.front() == inverse_letter(l_.back())) {
    l_.erase(l_.begin());
    l_.pop_back();
  }
  if (l_.empty()) return;
  // lexicographically least rotation under lex_rank
  size_t n = l_.size();
  size_t best = 0;
  auto less_rot = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) {
      int ri = lex_rank(l_[(i + k) % n]);
      int rj = lex_rank(l_[(j + k) % n]);
      if (ri != rj) return ri < rj;
    }
    return false;
  };
  for (size_t i = 1; i < n; ++i)
    if (less_rot(i, best)) best = i;
  std::rotate(l_.begin(), l_.begin() + best, l_.end());
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(as_word().inverse()); }

std::string CyclicWord::str() const {
  std::string s;
  for (LetterCode x : l_) s += letter_char(x);
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- parsing

namespace {

void parse_into(const std::string& text, size_t& i, std::vector<LetterCode>& out, bool in_bracket);

int parse_power(const std::string& text, size_t& i) {
  if (i >= text.size() || text[i] != '^') return 1;
  ++i;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
    throw ParseError("malformed power", i);
  int k = 0;
  while (i < text.size() && std::isdigit((unsigned char)text[i])) {
    k = k * 10 + (text[i] - '0');
    ++i;
  }
  return neg ? -k : k;
}

std::optional<LetterCode> letter_code(char c) {
  constexpr const char* low = "abcd";
  for (int b = 0; b < 4; ++b) {
    if (c == low[b]) return LetterCode(b < 2 ? b : b + 2);            // a->0 b->1 c->4 d->5
    if (c == std::toupper(low[b])) return inverse_letter(LetterCode(b < 2 ? b : b + 2));
  }
  return std::nullopt;
}

void append_power(std::vector<LetterCode>& out, const std::vector<LetterCode>& unit, int k) {
  std::vector<LetterCode> u = unit;
  if (k < 0) {
    std::reverse(u.begin(), u.end());
    for (auto& x : u) x = inverse_letter(x);
    k = -k;
  }
  for (int r = 0; r < k; ++r) out.insert(out.end(), u.begin(), u.end());
}

void parse_into(const std::string& text, size_t& i, std::vector<LetterCode>& out, bool in_bracket) {
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    if (in_bracket && (c == ',' || c == ']')) return;
    if (c == '[') {
      size_t open = i++;
      std::vector<LetterCode> w1, w2;
      parse_into(text, i, w1, true);
      if (i >= text.size() || text[i] != ',') throw ParseError("expected ',' in commutator", i);
      ++i;
      parse_into(text, i, w2, true);
      if (i >= text.size() || text[i] != ']') throw ParseError("unclosed '[' ", open);
      ++i;
      std::vector<LetterCode> comm = w1;
      comm.insert(comm.end(), w2.begin(), w2.end());
      for (auto it = w1.rbegin(); it != w1.rend(); ++it) comm.push_back(inverse_letter(*it));
      for (auto it = w2.rbegin(); it != w2.rend(); ++it) comm.push_back(inverse_letter(*it));
      int k = parse_power(text, i);
      append_power(out, comm, k);
      continue;
    }
    auto lc = letter_code(c);
    if (!lc) throw ParseError(std::string("unknown character '") + c + "'", i);
    ++i;
    int k = parse_power(text, i);
    append_power(out, {*lc}, k);
  }
}

}  // namespace

Word parse_word(const std::string& text) {
  std::vector<LetterCode> out;
  size_t i = 0;
  if (text == "1") return Word();
  parse_into(text, i, out, false);
  return Word(std::move(out));
}

// ------------------------------------------------------- block structure

BlockStructure block_structure(const CyclicWord& w) {
  BlockStructure bs;
  const auto& l = w.letters();
  int n = (int)l.size();
  if (n == 0) return bs;
  auto advances = [&](int i) {
    return l[(i + 1) % n] == relator_at(l[i] + 1);
  };
  bool all = true;
  for (int i = 0; i < n; ++i)
    if (!advances(i)) {
      all = false;
      break;
    }
  if (all) {
    bs.single_full_run = true;
    bs.blocks.push_back({0, n, l[0]});
    return bs;
  }
  std::vector<int> starts;
  for (int i = 0; i < n; ++i)
    if (!advances((i - 1 + n) % n)) starts.push_back(i);
  for (size_t s = 0; s < starts.size(); ++s) {
    int from = starts[s];
    int to = starts[(s + 1) % starts.size()];
    int len = (to - from + n) % n;
    if (len == 0) len = n;
    bs.blocks.push_back({from, len, l[from]});
  }
  for (size_t s = 0; s < bs.blocks.size(); ++s) {
    const auto& b = bs.blocks[s];
    LetterCode last = l[(b.start + b.length - 1) % n];
    LetterCode next = l[bs.blocks[(s + 1) % bs.blocks.size()].start];
    bs.junction_gap.push_back(corner_gap(last, next));
  }
  // parity lemma: in every cyclic chain the number of even-length blocks is even
  bool cyclic_chain = !bs.blocks.empty();
  for (int g : bs.junction_gap)
    if (g != 1) cyclic_chain = false;
  if (cyclic_chain) {
    int evens = 0;
    for (const auto& b : bs.blocks)
      if (b.length % 2 == 0) ++evens;
    ++g_parity_checks;
    assert(evens % 2 == 0);
    (void)evens;
  }
  return bs;
}

// ------------------------------------------------------- Dehn reductions

namespace {

std::vector<LetterCode> relator_segment_inverse(int from, int count) {
  // inverse of R[from..from+count-1]
  std::vector<LetterCode> r;
  for (int i = count - 1; i >= 0; --i) r.push_back(inverse_letter(relator_at(from + i)));
  return r;
}

// Replace the cyclic index range [start, start+len) of l by repl.
std::vector<LetterCode> splice(const std::vector<LetterCode>& l, int start, int len,
                               const std::vector<LetterCode>& repl) {
  int n = (int)l.size();
  std::vector<LetterCode> out = repl;
  for (int i = 0; i < n - len; ++i) out.push_back(l[(start + len + i) % n]);
  return out;
}

// One long-block shortening pass; returns the new word or nullopt.
std::optional<CyclicWord> shorten_long_block(const CyclicWord& w) {
  auto bs = block_structure(w);
  for (const auto& b : bs.blocks) {
    if (b.length >= 8) {
      // contains a full relator rotation; delete those 8 letters
      auto out = splice(w.letters(), b.start, 8, {});
      return CyclicWord(std::move(out));
    }
    if (b.length >= 5) {
      auto repl = relator_segment_inverse(b.rel_pos + b.length, 8 - b.length);
      auto out = splice(w.letters(), b.start, b.length, repl);
      return CyclicWord(std::move(out));
    }
  }
  return std::nullopt;
}

struct ChainSpan {
  std::vector<int> block_idx;  // indices into BlockStructure::blocks, in order
};

// Contiguous run of blocks joined by gap-1 junctions matching 4,3,...,3,4.
std::optional<ChainSpan> find_long_chain(const BlockStructure& bs) {
  int nb = (int)bs.blocks.size();
  if (nb < 2 || bs.single_full_run) return std::nullopt;
  for (int s = 0; s < nb; ++s) {
    if (bs.blocks[s].length != 4) continue;
    ChainSpan span;
    span.block_idx.push_back(s);
    for (int steps = 1; steps < nb; ++steps) {
      int prev = span.block_idx.back();
      if (bs.junction_gap[prev] != 1) break;
      int cur = (prev + 1) % nb;
      int len = bs.blocks[cur].length;
      if (len == 4) {
        span.block_idx.push_back(cur);
        return span;
      }
      if (len != 3) break;
      span.block_idx.push_back(cur);
    }
  }
  return std::nullopt;
}

std::optional<CyclicWord> shorten_long_chain(const CyclicWord& w) {
  auto bs = block_structure(w);
  auto span = find_long_chain(bs);
  if (!span) return std::nullopt;
  const auto& blocks = bs.blocks;
  int total = 0;
  for (int bi : span->block_idx) total += blocks[bi].length;
  std::vector<LetterCode> repl;
  for (size_t j = 0; j < span->block_idx.size(); ++j) {
    const auto& b = blocks[span->block_idx[j]];
    if (j == 0) {
      auto piece = relator_segment_inverse(b.rel_pos + 5, 3);
      repl.insert(repl.end(), piece.begin(), piece.end());
    } else {
      auto piece = relator_segment_inverse(b.rel_pos + 4, 3);
      repl.insert(repl.end(), piece.begin(), piece.end());
    }
  }
  auto out = splice(w.letters(), blocks[span->block_idx.front()].start, total, repl);
  return CyclicWord(std::move(out));
}

}  // namespace

bool is_trivial(const Word& w) {
  CyclicWord c(w);
  for (;;) {
    if (c.empty()) return true;
    if (auto r = shorten_long_block(c)) {
      c = *r;
      continue;
    }
    CyclicWord inv = c.inverse();
    if (auto r = shorten_long_block(inv)) {
      c = r->inverse();
      continue;
    }
    return false;
  }
}

CyclicWord dehn_reduce(const CyclicWord& w) {
  CyclicWord c = w;
  for (;;) {
    if (c.empty()) return c;
    if (auto r = shorten_long_block(c)) {
      c = *r;
      continue;
    }
    CyclicWord inv = c.inverse();
    if (auto r = shorten_long_block(inv)) {
      c = r->inverse();
      continue;
    }
    if (auto r = shorten_long_chain(c)) {
      c = *r;
      continue;
    }
    if (auto r = shorten_long_chain(inv)) {
      c = r->inverse();
      continue;
    }
    return c;
  }
}

// ------------------------------------------------------- switch closure

namespace {

std::vector<CyclicWord> switches_of(const CyclicWord& w) {
  std::vector<CyclicWord> out;
  auto bs = block_structure(w);
  const auto& l = w.letters();
  for (const auto& b : bs.blocks) {
    assert(b.length <= 4);  // input must be cyclically shortest
    if (b.length == 4) {
      auto repl = relator_segment_inverse(b.rel_pos + 4, 4);
      out.push_back(CyclicWord(splice(l, b.start, 4, repl)));
    }
  }
  // half-chain switch: every block of length 3, every junction gap 1
  bool half_chain = !bs.blocks.empty() && !bs.single_full_run;
  for (const auto& b : bs.blocks)
    if (b.length != 3) half_chain = false;
  for (int g : bs.junction_gap)
    if (g != 1) half_chain = false;
  if (half_chain) {
    std::vector<LetterCode> repl;
    for (const auto& b : bs.blocks) {
      auto piece = relator_segment_inverse(b.rel_pos + 4, 3);
      repl.insert(repl.end(), piece.begin(), piece.end());
    }
    out.push_back(CyclicWord(std::move(repl)));
  }
  return out;
}

}  // namespace

std::set<CyclicWord> shortest_representatives(const CyclicWord& w) {
  CyclicWord start = dehn_reduce(w);
  std::set<CyclicWord> seen{start};
  std::vector<CyclicWord> queue{start};
  while (!queue.empty()) {
    CyclicWord cur = queue.back();
    queue.pop_back();
    std::vector<CyclicWord> next = switches_of(cur);
    for (const auto& s : switches_of(cur.inverse())) next.push_back(s.inverse());
    for (auto& s : next) {
      assert(s.size() == start.size());
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return seen;
}

bool are_conjugate(const Word& a, const Word& b) {
  CyclicWord da = dehn_reduce(CyclicWord(a));
  CyclicWord db = dehn_reduce(CyclicWord(b));
  if (da.size() != db.size()) return false;
  if (da.empty()) return true;
  if (da == db) return true;
  return shortest_representatives(da).count(db) > 0;
}

int divisor_count(int q) {
  int d = 0;
  for (int m = 1; m <= q; ++m)
    if (q % m == 0) ++d;
  return d;
}

RootDecomposition max_root(const Word& w) {
  CyclicWord u = dehn_reduce(CyclicWord(w));
  if (u.empty()) throw std::domain_error("max_root: word is trivial in the surface group");
  int L = (int)u.size();
  auto reps = shortest_representatives(u);
  RootDecomposition best;
  best.root = u;
  best.exponent = 1;
  for (const auto& s : reps) {
    const auto& l = s.letters();
    for (int q = 2; q <= L; ++q) {
      if (L % q != 0) continue;
      int p = L / q;
      bool periodic = true;
      for (int i = 0; i < L && periodic; ++i)
        if (l[i] != l[(i + p) % L]) periodic = false;
      if (!periodic) continue;
      if (q > best.exponent) {
        std::vector<LetterCode> root(l.begin(), l.begin() + p);
        CyclicWord rw(root);
        // sanity: the claimed root really is a q-th root of the input class
        if (are_conjugate(Word(root).pow(q), u.as_word())) {
          best.exponent = q;
          best.root = rw;
        }
      }
    }
  }
  best.divisor_count = divisor_count(best.exponent);
  return best;
}

}  // namespace covstat::words
