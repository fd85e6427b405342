#pragma once

/* Freely reduced words in a finite-rank free group, and the automorphisms the
 * braid calculus needs.  A letter is a signed generator index: +j means x_j,
 * -j means x_j^-1, 1 <= j <= rank.  Words are kept reduced at all times, so
 * word equality is plain vector equality.
 *
 * Automorphisms store explicit images AND inverse images for every generator.
 * They are only built from invertible elementary pieces (identity, Artin-type
 * moves, conjugations, compositions, inverses), so the pair is correct by
 * construction; make_automorphism verifies the mutual-inverse law for anyone
 * assembling one by hand.
 *
 * Composition convention, fixed once for the whole artifact:
 *   compose(f, g).apply(w) == f.apply(g.apply(w))   (g acts first).
 */

#include "bmcalc/zlinalg.hpp"

#include <string>
#include <vector>

namespace bmc {

struct FreeWord {
  int rank = 0;
  std::vector<int> letters; // freely reduced

  bool operator==(const FreeWord& o) const { return rank == o.rank && letters == o.letters; }
  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
};

/* Reduce an arbitrary letter string; rejects letters outside [-rank,-1] u [1,rank]. */
FreeWord reduce(int rank, const std::vector<int>& letters);

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord inverse_word(const FreeWord& w);
FreeWord conjugate_word(const FreeWord& q, const FreeWord& w); // q w q^-1

std::string to_string(const FreeWord& w); // "1 2 -1"; empty word -> "-"
FreeWord parse_free_word(int rank, const std::string& text);

struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;         // images[j-1] = f(x_j)
  std::vector<FreeWord> inverse_images; // inverse_images[j-1] = f^-1(x_j)
};

FreeAutomorphism identity_automorphism(int rank);

/* x_j -> q x_j q^-1 for every j; inverse is conjugation by q^-1. */
FreeAutomorphism conjugation_by(const FreeWord& q);

/* Checked assembly: verifies f(f^-1(x_j)) == x_j == f^-1(f(x_j)) for all j. */
FreeAutomorphism make_automorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);

FreeWord apply(const FreeAutomorphism& f, const FreeWord& w);
FreeWord apply_inverse(const FreeAutomorphism& f, const FreeWord& w);

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);
FreeAutomorphism inverse(const FreeAutomorphism& f);

/* Exact equality of automorphisms (reduced images are canonical). */
bool auto_equal(const FreeAutomorphism& f, const FreeAutomorphism& g);

/* Sum of letter signs per generator; used by abelianizations. */
std::vector<long> exponent_vector(const FreeWord& w);

} // namespace bmc
