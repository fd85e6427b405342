#pragma once

/* Monodromy factorizations: ordered lists of band factors Q X_i^k Q^-1 with
 * k in {1 tangency, 2 node, -2 negative node, 3 cusp}, multiplying to the
 * full twist Delta^2 when they cut out an honest plane curve.
 *
 * Equivalence is generated by Hurwitz moves, optional global conjugation, and
 * admissible creation/cancellation of node pairs.  There is no terminating
 * normal form for this relation, so hurwitz_equivalent is a bounded exact
 * search: cheap invariants first, then deterministic BFS over canonical keys,
 * answering found / refuted / exhausted. */

#include "bmcalc/braid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bmc {

struct Factor {
  BraidWord conjugator; // Q
  int base = 0;         // i
  int exponent = 0;     // k in {1, 2, -2, 3}

  BraidWord word() const; // Q X_i^k Q^-1, freely cancelled
};

Factor make_factor(int d, const BraidWord& q, int i, int k); // validates

struct Factorization {
  int degree = 0; // strand count d shared by all factors
  std::vector<Factor> factors;
};

Factorization make_factorization(int degree, std::vector<Factor> fs);

BraidWord product(const Factorization& f);

struct ValidationReport {
  bool product_is_full_twist = false;
  long tangencies = 0, nodes_positive = 0, nodes_negative = 0, cusps = 0;
  bool valid() const { return product_is_full_twist; }
};

ValidationReport validate(const Factorization& f);

/* Forward move at p: (f_p, f_{p+1}) -> (f_p f_{p+1} f_p^-1, f_p); conjugators
 * absorb the moving factor's word.  Backward is the exact inverse. */
Factorization hurwitz_move(const Factorization& f, long p, bool forward);

Factorization global_conjugate(const Factorization& f, const BraidWord& b);

/* Insert the cancelling pair (Q X_i^2 Q^-1, Q X_i^-2 Q^-1) at `position`. */
Factorization insert_node_pair(const Factorization& f, long position, const BraidWord& q, int i);

/* Delete the pair at (position, position+1); they must be a positive node and
 * its exact inverse (up to Artin equality of the band words). */
Factorization delete_node_pair(const Factorization& f, long position);

/* Canonical byte string: per-factor Artin-automorphism serializations.
 * Equal iff the factorizations agree factorwise as braid elements. */
std::string canonical_key(const Factorization& f);

struct Move {
  enum Kind { HurwitzForward, HurwitzBackward, Conjugate } kind;
  long arg = 0; // position for Hurwitz moves, conjugating-generator index for Conjugate
};

Factorization apply_move(const Factorization& f, const Move& m, const std::vector<BraidWord>& conj_gens);

struct SearchOptions {
  std::size_t max_states = 100000;
  bool allow_conjugation = false;
  std::vector<BraidWord> conj_gens; // defaults to X_1..X_{d-1} and inverses
  int threads = 1;                  // 1 = serial reference path, >1 = OpenMP frontier expansion
};

struct SearchResult {
  enum Status { Found, Refuted, Exhausted } status;
  std::vector<Move> path;  // moves carrying f1 to f2 (factorwise), when Found
  std::string refutation;  // which cheap invariant separated them, when Refuted
  std::size_t states_explored = 0;
};

SearchResult hurwitz_equivalent(const Factorization& f1, const Factorization& f2,
                                const SearchOptions& opt = {});

/* 128-bit deterministic fingerprint of canonical_key, used for BFS dedup. */
struct Fingerprint {
  std::uint64_t hi = 0, lo = 0;
  bool operator==(const Fingerprint& o) const { return hi == o.hi && lo == o.lo; }
  bool operator<(const Fingerprint& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};
Fingerprint fingerprint(const std::string& bytes);

} // namespace bmc
