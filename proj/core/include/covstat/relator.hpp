#pragma once

#include <array>
#include <cstdint>

namespace covstat {

// Genus-2 conventions.  Letters are encoded by their position in the cyclic
// relator R = [a,b][c,d] = a b a' b' c d c' d' (primes = inverses), so code
// p in 0..7 determines base letter, sign, and relator arithmetic at once.
inline constexpr int kGenus = 2;
inline constexpr int kLetters = 4;        // a, b, c, d
inline constexpr int kRelLen = 8;         // length of the relator

using LetterCode = std::uint8_t;          // 0..7, relator position encoding

inline constexpr std::array<int, 8> kBaseOf = {0, 1, 0, 1, 2, 3, 2, 3};
inline constexpr bool is_positive(LetterCode p) { return p == 0 || p == 1 || p == 4 || p == 5; }
inline constexpr LetterCode inverse_letter(LetterCode p) { return LetterCode(p ^ 2); }
inline constexpr int base_of(LetterCode p) { return kBaseOf[p]; }

// Lexicographic rank a < A < b < B < c < C < d < D (canonical rotations).
inline constexpr int lex_rank(LetterCode p) { return 2 * base_of(p) + (is_positive(p) ? 0 : 1); }

inline constexpr char letter_char(LetterCode p) {
  constexpr const char* pos = "abcd";
  constexpr const char* neg = "ABCD";
  return is_positive(p) ? pos[base_of(p)] : neg[base_of(p)];
}

// Half-edge slots around a vertex, in the fixed cyclic order
// a-out, b-in, a-in, b-out, c-out, d-in, c-in, d-out.
inline constexpr std::array<int, 4> kOutSlot = {0, 3, 4, 7};
inline constexpr std::array<int, 4> kInSlot = {2, 1, 6, 5};

// Slot through which a path reading letter p arrives at / departs from a vertex.
inline constexpr int slot_in(LetterCode p) {
  return is_positive(p) ? kInSlot[base_of(p)] : kOutSlot[base_of(p)];
}
inline constexpr int slot_out(LetterCode p) {
  return is_positive(p) ? kOutSlot[base_of(p)] : kInSlot[base_of(p)];
}

// Hanging slots crossed between reading x into a vertex and y out of it.
// Zero exactly when y follows x in the cyclic relator.
inline constexpr int corner_gap(LetterCode x, LetterCode y) {
  return ((slot_out(y) - slot_in(x) - 1) % 8 + 8) % 8;
}

inline constexpr LetterCode relator_at(int i) { return LetterCode(((i % 8) + 8) % 8); }

}  // namespace covstat
