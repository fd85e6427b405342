#pragma once

/* Words in the braid group B_d on `strands` strands, letters +-i for the
 * Artin generator X_i (1 <= i <= d-1) and its inverse.  The word problem is
 * solved exactly through the faithful Artin action on the rank-d free group:
 *
 *   X_i :  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   others fixed.
 *
 * Composition is leftmost-outermost everywhere in this artifact:
 *   artin_action(b1 b2) = compose(artin_action(b1), artin_action(b2)),
 * i.e. the rightmost letter of a word acts first.  Permutations multiply the
 * same way: (p*q)(x) = p(q(x)), and the permutation of a word multiplies the
 * letter transpositions left-to-right under that rule. */

#include "bmcalc/word.hpp"

#include <string>
#include <vector>

namespace bmc {

struct Permutation {
  int degree = 0;
  std::vector<int> map; // 0-based images: map[x] = p(x)

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b); // 1-based symbols

  int apply1(int x) const { return map[static_cast<size_t>(x - 1)] + 1; } // 1-based
  bool is_identity() const;
  bool is_transposition() const;
  /* The two 1-based symbols swapped; error if not a transposition. */
  std::pair<int, int> transposition_support() const;

  Permutation operator*(const Permutation& o) const; // this after o
  Permutation inversed() const;
  bool operator==(const Permutation& o) const { return degree == o.degree && map == o.map; }
  bool operator<(const Permutation& o) const { return map < o.map; }

  int sign() const;                    // +1 / -1
  std::vector<int> cycle_type() const; // descending part sizes, incl. fixed points
  std::string to_string() const;       // "(1 2)(3 4)" or "id"
};

struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int d, std::vector<int> ls); // validates letters against d

  bool empty() const { return letters.empty(); }
};

BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse(const BraidWord& a);
BraidWord braid_free_cancel(const BraidWord& a); // cancel adjacent X_i X_i^-1 only

FreeAutomorphism artin_action(const BraidWord& b);

/* Exact word-problem answer via the faithful Artin action. */
bool braid_equal(const BraidWord& a, const BraidWord& b);

Permutation braid_perm(const BraidWord& b);

/* Full twist Delta^2 = (X_1 ... X_{d-1})^d, the center's positive generator. */
BraidWord full_twist(int d);

/* Band Q X_i^k Q^-1 for k in {1, 2, -2, 3}; the monodromy alphabet. */
BraidWord band_generator(int d, const BraidWord& q, int i, int k);

std::string to_string(const BraidWord& b); // "B4: 1 3 -2"
BraidWord parse_braid_word(const std::string& text);

} // namespace bmc
