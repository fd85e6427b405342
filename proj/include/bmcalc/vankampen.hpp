#pragma once

// Zariski-van Kampen presentations of plane-curve complement groups from a
// braid monodromy factorization, with the computable shadows used to tell
// such groups apart: abelianization, finite-quotient hom counts, stabilized
// quotients (commutators of geometric generators with disjoint covering
// labels), and the abelian-level structure checks of the branched-cover
// exact sequence.

#include "bmcalc/braid.hpp"
#include "bmcalc/cover.hpp"
#include "bmcalc/factor.hpp"
#include "bmcalc/word.hpp"
#include "bmcalc/zlinalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmc {

struct Presentation {
    int n_generators = 0;
    std::vector<FreeWord> relators;  // freely reduced, rank == n_generators
};

// Validates rank/range; freely reduces nothing (words carry reduction).
Presentation make_presentation(int n_generators, std::vector<FreeWord> relators);

// Generators x_1..x_d; for each factor with Artin automorphism phi, one
// relator phi(x_j) * x_j^-1 for every j with phi(x_j) != x_j; when
// projective, one extra relator x_d * x_{d-1} * ... * x_1.
// Errors: InvalidFactor when projective and the product is not the full
// twist (an affine presentation accepts any factorization).
Presentation presentation(const Factorization& f, bool projective);

// Cokernel of the generator-by-relator exponent-sum matrix.
AbelianGroup abelianization(const Presentation& p);

// A finite group small enough for exhaustive hom counting, stored as a
// multiplication table over element indices 0..order-1.
struct FiniteGroup {
    long order = 0;
    std::vector<int> table;    // order*order, row-major: table[a*order+b] = a.b
    std::vector<int> inverse;  // one entry per element
    int identity = 0;
    std::string description;

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

// Closure of generating permutations of degree <= 5 (MalformedInput beyond
// that); BoundExceeded when the group grows past `bound` elements.
FiniteGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                    long bound = 120);

// Validates a full multiplication table: closure, identity, inverses,
// associativity (MalformedInput on any violation; BoundExceeded past bound).
FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows, long bound = 120);

struct HomCount {
    std::string target_description;
    unsigned long long count = 0;
};

// Number of homomorphisms from the presented group to the target, by
// exhaustive enumeration of generator-image tuples (after Tietze
// simplification, which preserves the count).  Deterministic; `threads`
// caps the OpenMP workers used for the enumeration.
// Errors: BoundExceeded when |target| > bound or the tuple space is too
// large to enumerate.
HomCount count_homs(const Presentation& p, const FiniteGroup& target, long bound = 120,
                    int threads = 1);

// Serial reference: same count, no Tietze simplification, no parallelism.
unsigned long long count_homs_serial(const Presentation& p, const FiniteGroup& target);

// Safe Tietze reductions only: drop empty relators, drop duplicate
// relators, and eliminate a generator defined by a relator of length <= 2
// in which it appears exactly once.  Preserves the presented group and
// hom counts to every finite target.
Presentation tietze_simplify(const Presentation& p);

struct StabilizedPresentation {
    Presentation presentation;
    // True when disjoint-support conjugate pairs exist at all, so a finite
    // conjugator bound may miss commutators; false means the stabilized
    // quotient is exactly the input group.
    bool approximate = false;
    long conjugator_bound = 0;
};

// Adds the commutator [w x_a w^-1, v x_b v^-1] for every pair of conjugated
// generators whose covering labels (conjugated through theta of w and v)
// have disjoint supports, over all reduced conjugating words of length <=
// conjugator_bound (0 = plain generators).  Errors: Mismatch when the
// covering degree differs from the generator count.
StabilizedPresentation stabilized(const Presentation& p, const CoveringData& cov,
                                  long conjugator_bound);

struct StructureReport {
    bool degree_match = false;            // theta degree == d == generators, sheets == N
    bool relators_map_to_identity = false;  // theta kills every relator
    bool exponent_surjects_mod_d = false;   // total exponent is 0 mod d on relators
    bool sign_constraint_ok = false;        // sign(theta(x_i)) = (-1)^linking = -1
    bool sign_constraint_vacuous = false;   // N = 1: the sign character is trivial
    long long image_order = 0;    // subgroup of S_N x Z_d generated by (theta(x_i), 1)
    long long ambient_order = 0;  // N! * d
    long long image_index = 0;
    long long expected_index = 0;  // 2 when N >= 2 and d even, else 1
    bool index_ok = false;
    bool lambda_provided = false;
    int lambda_rank = 0;  // rank of the lattice spanned by the supplied pair
    bool lambda_rank_consistent = true;

    bool ok() const {
        return degree_match && relators_map_to_identity && exponent_surjects_mod_d &&
               sign_constraint_ok && index_ok && (!lambda_provided || lambda_rank_consistent);
    }
};

// Abelian-level checks of the exact-sequence structure over S_N x Z_d.  The
// optional lambda input supplies the two external pairing integers (the
// canonical-class and fiber-class pairings); only rank consistency against
// the free rank of the abelianization is verified.  Never throws: failures
// are report entries.
StructureReport structure_check(const Presentation& p, const CoveringData& cov, int d, int n,
                                std::optional<std::pair<long, long>> lambda = std::nullopt);

}  // namespace bmc
