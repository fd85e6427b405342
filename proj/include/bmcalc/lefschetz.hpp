#pragma once

// Lefschetz fibrations over the sphere at the homological level: the fiber
// genus together with the ordered list of vanishing-cycle classes in
// H_1(fiber) = Z^{2g}.  Provides the computable invariants (Euler
// characteristic, H_1 of the total space), twisted and untwisted fiber sums,
// the symplectic validity check (total monodromy acts trivially on H_1), and
// extraction of a fibration from a branched covering of a braided surface.

#include "bmcalc/cover.hpp"
#include "bmcalc/factor.hpp"
#include "bmcalc/mcg.hpp"
#include "bmcalc/zlinalg.hpp"

#include <optional>
#include <vector>

namespace bmc {

struct LFibration {
    int genus = 0;
    std::vector<std::vector<Int>> cycles;  // vanishing-cycle classes in Z^{2g}
    std::vector<bool> separating_flags;    // true = homologically trivial cycle

    std::size_t count() const { return cycles.size(); }
};

// Validates: one flag per cycle, every class has 2*genus coordinates, a
// separating-flagged cycle has zero class and a non-separating one is
// nonzero.  Throws MalformedInput / Mismatch otherwise.
LFibration make_lfibration(int genus, std::vector<std::vector<Int>> cycles,
                           std::vector<bool> separating_flags);

// A gluing mapping class for fiber sums, recorded by its symplectic action.
struct FibSumTwist {
    IntMatrix matrix;
};

// Validates that the matrix is symplectic of the right size (MalformedInput).
FibSumTwist make_fib_sum_twist(const IntMatrix& matrix, int genus);

// chi(total space) = 2(2 - 2g) + m, one critical point per cycle.
long long euler_characteristic(const LFibration& l);

// H_1 of the total space: Z^{2g} modulo the lattice spanned by the cycles
// (cokernel of the 2g x m matrix whose columns are the cycle classes).
AbelianGroup total_space_h1(const LFibration& l);

// Fiber sum: cycles of l1 followed by the cycles of l2 (each sent through
// the twist when one is given); separating flags concatenate.  Errors:
// genus mismatch (Mismatch), twist of the wrong size (Mismatch).
LFibration fiber_sum(const LFibration& l1, const LFibration& l2,
                     const std::optional<FibSumTwist>& twist = std::nullopt);

// Necessary condition for a fibration over the sphere: the product of the
// transvections along all cycles, leftmost-outermost, is the identity.
struct SpValidity {
    bool identity = false;
    IntMatrix product;
};

SpValidity sp_validity(const LFibration& l);

// Builds the genus-g fibration carried by a compatible pair (factorization,
// covering): the fiber is the covering surface, each tangency factor lifts
// to a transvection on its H_1 and contributes the transvection axis (the
// generator of the rank-1 column lattice of M - I, first nonzero coordinate
// positive) as a vanishing cycle; a tangency lifting to the identity
// contributes a zero class flagged separating; node and cusp factors lift
// to the identity and contribute nothing.  All classes are reported in a
// deterministic symplectic basis of the fiber's H_1 in which the
// intersection form is symplectic_form(g) and every tangency lift is the
// standard positive transvection along its cycle, so sp_validity of the
// result evaluates the honest total monodromy.
// Errors: Mismatch when check_compatibility fails; Internal when a tangency
// lift has rank(M - I) > 1 or a node/cusp lift is not the identity.
LFibration from_branch_data(const Factorization& f, const CoveringData& cov);

}  // namespace bmc
