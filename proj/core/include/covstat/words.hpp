#pragma once

#include "covstat/relator.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace covstat::words {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// Freely reduced word in F(a,b,c,d).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<LetterCode> letters) : l_(std::move(letters)) { free_reduce(); }

  const std::vector<LetterCode>& letters() const { return l_; }
  size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word pow(int k) const;
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
  friend bool operator<(const Word& a, const Word& b);

 private:
  void free_reduce();
  std::vector<LetterCode> l_;
};

// Cyclically reduced cyclic word, stored as its lexicographically least
// rotation under a < A < b < B < c < C < d < D.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);
  explicit CyclicWord(std::vector<LetterCode> letters);

  const std::vector<LetterCode>& letters() const { return l_; }
  size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  Word as_word() const { return Word(l_); }
  CyclicWord inverse() const;
  std::string str() const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.l_ == b.l_; }
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return a.l_ < b.l_; }

 private:
  void canonicalize();
  std::vector<LetterCode> l_;
};

struct RootDecomposition {
  CyclicWord root;
  int exponent = 1;
  int divisor_count = 1;
};

// Maximal relator-run decomposition of a cyclic word: blocks advance through
// the cyclic relator; junction gaps are hanging-slot counts.
struct WordBlock {
  int start;   // index into the cyclic word
  int length;  // run length (capped at the word length)
  int rel_pos; // relator position of the first letter
};
struct BlockStructure {
  std::vector<WordBlock> blocks;   // in cyclic order
  std::vector<int> junction_gap;   // gap after block i (to block i+1 mod size)
  bool single_full_run = false;    // whole word is one relator-advancing run
};

BlockStructure block_structure(const CyclicWord& w);

Word parse_word(const std::string& text);

bool is_trivial(const Word& w);
CyclicWord dehn_reduce(const CyclicWord& w);
inline CyclicWord dehn_reduce(const Word& w) { return dehn_reduce(CyclicWord(w)); }

// All cyclically shortest representatives of the conjugacy class:
// closure under half-block switches and the half-chain switch.
std::set<CyclicWord> shortest_representatives(const CyclicWord& w);

bool are_conjugate(const Word& a, const Word& b);

RootDecomposition max_root(const Word& w);

int divisor_count(int q);

// Test hook: number of cyclic-chain parity checks performed so far.
long parity_checks_performed();

}  // namespace covstat::words
