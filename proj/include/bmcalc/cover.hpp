#pragma once

/* Double-point branched covers of the sphere carrying a braided curve.
 *
 * A covering is a sheet count N and one permutation label per strand; labels
 * are transpositions (identity labels are allowed only for the trivial
 * one-sheeted cover).  From closed, connected label data we build the fiber
 * surface as an explicit 2-complex (one slit polygon per sheet), compute its
 * first homology with an integral basis and intersection form, and transport
 * braids that preserve the labels to integer matrices acting on that basis. */

#include "bmcalc/braid.hpp"
#include "bmcalc/factor.hpp"
#include "bmcalc/zlinalg.hpp"

#include <utility>
#include <vector>

namespace bmc {

struct CoveringData {
  int sheets = 0;                  // N >= 1
  int degree = 0;                  // d = number of strands / branch slits
  std::vector<Permutation> labels; // t_1..t_d acting on {0..N-1}
};

CoveringData make_covering(int sheets, std::vector<Permutation> labels);

/* theta: F_d -> S_N, x_j -> t_j, letters multiplied left to right with the
 * rightmost letter acting first. */
Permutation theta_of_word(const CoveringData& cov, const FreeWord& w);

bool labels_transitive(const CoveringData& cov);
bool cover_closed(const CoveringData& cov); // t_1 t_2 ... t_d = id

struct CompatibilityReport {
  bool degree_match = false;
  bool labels_transitive = false;
  bool closed = false;
  std::vector<bool> local_ok;  // per factor: label pair fits the factor type
  std::vector<bool> global_ok; // per factor: theta . (factor action) = theta
  bool ok() const;
};

CompatibilityReport check_compatibility(const CoveringData& cov, const Factorization& f);

struct FiberInvariants {
  long genus = 0;
  long euler = 0;
  long marked = 0; // points over infinity
};

FiberInvariants fiber_genus(const CoveringData& cov); // requires closed + connected

/* The fiber surface as a 2-complex: N slit 2d-gons glued along lifted slit
 * edges.  Edge (j,s) runs from the branch vertex over slit j to the infinity
 * vertex on sheet s's chain; its index is j*N + s.  Face s is sheet s, with
 * boundary listed as a closed walk of signed 1-based edge indices. */
struct CombSurface {
  int sheets = 0, degree = 0;
  std::vector<Permutation> labels;
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges; // (tail, head)
  std::vector<std::vector<long>> faces;   // signed 1-based edge indices
  std::vector<int> marked_points;         // infinity vertices, one per sheet
};

CombSurface build_fiber_surface(const CoveringData& cov);

IntMatrix boundary1(const CombSurface& s); // vertices x edges
IntMatrix boundary2(const CombSurface& s); // edges x faces

struct SurfaceHomology {
  AbelianGroup h1;                     // always free for these surfaces
  IntMatrix intersection_form;         // J on the basis below, alternating, det +-1
  std::vector<std::vector<Int>> basis; // cycles in edge coordinates
  // coordinate pipeline internals (Smith data of d1 and of d2 in kernel coords)
  IntMatrix v1_inv;
  IntMatrix ur;
  long r1 = 0, r2 = 0, kernel_dim = 0;
};

SurfaceHomology surface_h1(const CombSurface& s);

/* Coordinates of a 1-cycle (edge coordinates) in the homology basis. */
std::vector<Int> h1_coords(const SurfaceHomology& h, const std::vector<Int>& cycle);

/* A braid lifts iff it preserves every label exactly: theta(phi_b(x_j)) = t_j. */
bool is_liftable(const CoveringData& cov, const BraidWord& b);

struct CoverModel {
  CoveringData cov;
  CombSurface surface;
  SurfaceHomology homology;
  IntMatrix bridge;      // covering-graph chains -> surface edge chains
  IntMatrix lift_system; // [bridge | boundary2], used to express basis cycles
  std::vector<std::vector<Int>> basis_graph; // basis cycles in graph coordinates
};

CoverModel build_cover_model(const CoveringData& cov);

/* Chain of the lift of w starting on sheet s, in covering-graph coordinates
 * (edge (j,s) of the graph joins sheet s to sheet t_j(s) and is indexed
 * j*N + s, like the surface edge it shadows). */
std::vector<Int> graph_chain(const CoveringData& cov, const FreeWord& w, int s);

/* Matrix of the lifted action of a label-preserving braid on H_1 of the
 * fiber surface, in the basis chosen by surface_h1. */
IntMatrix lift_homology(const CoverModel& model, const BraidWord& b);
IntMatrix lift_homology(const CoveringData& cov, const BraidWord& b);

} // namespace bmc
