#include "bmcalc/cover.hpp"

#include <algorithm>

namespace bmc {

namespace {

int apply0(const Permutation& p, int x) { return p.map[static_cast<std::size_t>(x)]; }

std::vector<int> moved_points(const Permutation& p) {
  std::vector<int> m;
  for (int x = 0; x < p.degree; ++x)
    if (p.map[static_cast<std::size_t>(x)] != x) m.push_back(x);
  return m;
}

std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& v) {
  if (m.cols != static_cast<long>(v.size())) fail(ErrorKind::Internal, "matvec dimension mismatch");
  std::vector<Int> out(static_cast<std::size_t>(m.rows), Int(0));
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c)
      if (v[static_cast<std::size_t>(c)] != 0) out[static_cast<std::size_t>(r)] += m.at(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

} // namespace

CoveringData make_covering(int sheets, std::vector<Permutation> labels) {
  if (sheets < 1) fail(ErrorKind::MalformedInput, "sheet count must be at least 1");
  if (labels.empty()) fail(ErrorKind::MalformedInput, "covering needs at least one label");
  for (const Permutation& t : labels) {
    if (t.degree != sheets) fail(ErrorKind::Mismatch, "label degree differs from sheet count");
    if (!t.is_transposition() && !(sheets == 1 && t.is_identity()))
      fail(ErrorKind::MalformedInput, "labels must be transpositions (identity only on a one-sheet cover)");
  }
  CoveringData c;
  c.sheets = sheets;
  c.degree = static_cast<int>(labels.size());
  c.labels = std::move(labels);
  return c;
}

Permutation theta_of_word(const CoveringData& cov, const FreeWord& w) {
  if (w.rank != cov.degree) fail(ErrorKind::Mismatch, "word rank differs from covering degree");
  Permutation p = Permutation::identity(cov.sheets);
  for (int l : w.letters) {
    const Permutation& t = cov.labels[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    p = p * (l > 0 ? t : t.inversed());
  }
  return p;
}

bool labels_transitive(const CoveringData& cov) {
  std::vector<char> seen(static_cast<std::size_t>(cov.sheets), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const Permutation& t : cov.labels) {
      int v = apply0(t, u);
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == cov.sheets;
}

bool cover_closed(const CoveringData& cov) {
  Permutation p = Permutation::identity(cov.sheets);
  for (const Permutation& t : cov.labels) p = p * t;
  return p.is_identity();
}

bool CompatibilityReport::ok() const {
  if (!degree_match || !labels_transitive || !closed) return false;
  for (bool b : local_ok)
    if (!b) return false;
  for (bool b : global_ok)
    if (!b) return false;
  return true;
}

CompatibilityReport check_compatibility(const CoveringData& cov, const Factorization& f) {
  CompatibilityReport r;
  r.degree_match = (cov.degree == f.degree);
  r.labels_transitive = labels_transitive(cov);
  r.closed = cover_closed(cov);
  if (!r.degree_match) return r;
  for (const Factor& fac : f.factors) {
    FreeAutomorphism rho = artin_action(fac.conjugator);
    // Labels seen by the band's local pair of strands, pulled back through Q.
    Permutation p1 = theta_of_word(cov, rho.images[static_cast<std::size_t>(fac.base - 1)]);
    Permutation p2 = theta_of_word(cov, rho.images[static_cast<std::size_t>(fac.base)]);
    std::vector<int> m1 = moved_points(p1), m2 = moved_points(p2), common;
    std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(common));
    bool ok = false;
    switch (fac.exponent) {
      case 1: ok = (p1 == p2); break;                    // tangency: equal labels
      case 2:
      case -2: ok = common.empty(); break;               // node: disjoint branches
      case 3: ok = (common.size() == 1); break;          // cusp: share one symbol
      default: fail(ErrorKind::InvalidFactor, "factor exponent outside {1,2,-2,3}");
    }
    r.local_ok.push_back(ok);
    r.global_ok.push_back(is_liftable(cov, fac.word()));
  }
  return r;
}

FiberInvariants fiber_genus(const CoveringData& cov) {
  if (!cover_closed(cov)) fail(ErrorKind::NotClosed, "label product over all slits is not the identity");
  if (!labels_transitive(cov)) fail(ErrorKind::MalformedInput, "labels are not transitive, the fiber is disconnected");
  long branch = 0;
  for (const Permutation& t : cov.labels)
    if (!t.is_identity()) ++branch;
  const long chi = 2L * cov.sheets - branch;
  if ((2 - chi) % 2 != 0) fail(ErrorKind::Internal, "odd Euler characteristic for a closed orientable fiber");
  FiberInvariants inv;
  inv.euler = chi;
  inv.genus = (2 - chi) / 2;
  inv.marked = cov.sheets;
  if (inv.genus < 0) fail(ErrorKind::Internal, "negative genus from covering data");
  return inv;
}

CombSurface build_fiber_surface(const CoveringData& cov) {
  if (!cover_closed(cov)) fail(ErrorKind::NotClosed, "label product over all slits is not the identity");
  if (!labels_transitive(cov)) fail(ErrorKind::MalformedInput, "labels are not transitive, the fiber is disconnected");
  const int N = cov.sheets, d = cov.degree;
  CombSurface s;
  s.sheets = N;
  s.degree = d;
  s.labels = cov.labels;

  for (int v = 0; v < N; ++v) s.marked_points.push_back(v); // infinity vertices first
  int next = N;
  std::vector<int> branch_vertex(static_cast<std::size_t>(d) * N, -1);
  for (int j = 0; j < d; ++j)
    for (int sh = 0; sh < N; ++sh) {
      std::size_t idx = static_cast<std::size_t>(j) * N + sh;
      if (branch_vertex[idx] != -1) continue;
      branch_vertex[idx] = next;
      branch_vertex[static_cast<std::size_t>(j) * N + apply0(cov.labels[static_cast<std::size_t>(j)], sh)] = next;
      ++next;
    }
  s.n_vertices = next;

  // Edge (j, sh) climbs from the branch vertex over slit j to the infinity
  // vertex reached after crossing the remaining slits j+1..d.
  s.edges.resize(static_cast<std::size_t>(d) * N);
  for (int j = 0; j < d; ++j)
    for (int sh = 0; sh < N; ++sh) {
      int u = sh;
      for (int k = j + 1; k < d; ++k) u = apply0(cov.labels[static_cast<std::size_t>(k)], u);
      s.edges[static_cast<std::size_t>(j) * N + sh] = {branch_vertex[static_cast<std::size_t>(j) * N + sh], u};
    }

  // Face of sheet sh: walk the slits from the last down to the first, each
  // one down its near side and up its far side.
  for (int sh = 0; sh < N; ++sh) {
    std::vector<long> word;
    for (int j = d - 1; j >= 0; --j) {
      word.push_back(-(static_cast<long>(j) * N + sh) - 1);
      word.push_back(+(static_cast<long>(j) * N + apply0(cov.labels[static_cast<std::size_t>(j)], sh)) + 1);
    }
    s.faces.push_back(std::move(word));
  }

  // The face words must be closed walks; this pins down every index above.
  for (const std::vector<long>& w : s.faces)
    for (std::size_t k = 0; k < w.size(); ++k) {
      long cur = w[k], nxt = w[(k + 1) % w.size()];
      int head_cur = cur > 0 ? s.edges[static_cast<std::size_t>(cur - 1)].second
                             : s.edges[static_cast<std::size_t>(-cur - 1)].first;
      int tail_nxt = nxt > 0 ? s.edges[static_cast<std::size_t>(nxt - 1)].first
                             : s.edges[static_cast<std::size_t>(-nxt - 1)].second;
      if (head_cur != tail_nxt) fail(ErrorKind::Internal, "face boundary walk does not close");
    }
  return s;
}

IntMatrix boundary1(const CombSurface& s) {
  IntMatrix m(s.n_vertices, static_cast<long>(s.edges.size()));
  for (long e = 0; e < m.cols; ++e) {
    m.at(s.edges[static_cast<std::size_t>(e)].second, e) += 1;
    m.at(s.edges[static_cast<std::size_t>(e)].first, e) -= 1;
  }
  return m;
}

IntMatrix boundary2(const CombSurface& s) {
  IntMatrix m(static_cast<long>(s.edges.size()), static_cast<long>(s.faces.size()));
  for (long f = 0; f < m.cols; ++f)
    for (long b : s.faces[static_cast<std::size_t>(f)]) {
      if (b > 0)
        m.at(b - 1, f) += 1;
      else
        m.at(-b - 1, f) -= 1;
    }
  return m;
}

namespace {

/* Intersection form from the cup product on the cone triangulation.  Each
 * 2d-gon face gets a center vertex and one cone edge per boundary corner;
 * every boundary step spans one triangle.  Integral cocycles alpha_i dual to
 * the homology basis are solved for, the cup pairing is evaluated against the
 * fundamental class, and the intersection matrix is its negated inverse. */
IntMatrix intersection_from_cup(const CombSurface& s, const std::vector<std::vector<Int>>& basis) {
  const long E = static_cast<long>(s.edges.size());
  const int N = s.sheets;
  const long twod = 2L * s.degree;
  const long total = E + N * twod;
  const long g2 = static_cast<long>(basis.size());
  auto cone = [&](int sh, long k) { return E + sh * twod + (k % twod); };

  IntMatrix A(N * twod + g2, total);
  long row = 0;
  for (int sh = 0; sh < N; ++sh) {
    const std::vector<long>& w = s.faces[static_cast<std::size_t>(sh)];
    for (long k = 0; k < twod; ++k, ++row) {
      const long b = w[static_cast<std::size_t>(k)];
      const long e = (b > 0 ? b : -b) - 1;
      A.at(row, e) += 1;
      if (b > 0) { // triangle [center, start, end]
        A.at(row, cone(sh, k + 1)) -= 1;
        A.at(row, cone(sh, k)) += 1;
      } else { // triangle [center, end, start], traversal runs against the edge
        A.at(row, cone(sh, k)) -= 1;
        A.at(row, cone(sh, k + 1)) += 1;
      }
    }
  }
  for (long j = 0; j < g2; ++j, ++row)
    for (long e = 0; e < E; ++e) A.at(row, e) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];

  std::vector<std::vector<Int>> alpha;
  for (long i = 0; i < g2; ++i) {
    std::vector<Int> b(static_cast<std::size_t>(N * twod + g2), Int(0));
    b[static_cast<std::size_t>(N * twod + i)] = 1;
    std::optional<std::vector<Int>> x = solve(A, b);
    if (!x) fail(ErrorKind::Internal, "dual cocycle system has no integral solution");
    alpha.push_back(std::move(*x));
  }

  IntMatrix Q(g2, g2);
  for (int sh = 0; sh < N; ++sh) {
    const std::vector<long>& w = s.faces[static_cast<std::size_t>(sh)];
    for (long k = 0; k < twod; ++k) {
      const long b = w[static_cast<std::size_t>(k)];
      const long e = (b > 0 ? b : -b) - 1;
      for (long i = 0; i < g2; ++i)
        for (long j = 0; j < g2; ++j) {
          if (b > 0)
            Q.at(i, j) += alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(cone(sh, k))] *
                          alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
          else
            Q.at(i, j) -= alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(cone(sh, k + 1))] *
                          alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
        }
    }
  }

  for (long i = 0; i < g2; ++i)
    for (long j = 0; j < g2; ++j)
      if (Q.at(i, j) != -Q.at(j, i)) fail(ErrorKind::Internal, "cup pairing is not alternating");
  return neg(inverse_unimodular(Q));
}

} // namespace

SurfaceHomology surface_h1(const CombSurface& s) {
  IntMatrix d1 = boundary1(s), d2 = boundary2(s);
  IntMatrix dd = mul(d1, d2);
  for (const Int& e : dd.a)
    if (e != 0) fail(ErrorKind::Internal, "boundary of boundary is nonzero");

  SmithForm s1 = smith_normal_form(d1);
  const long E = d1.cols;
  const long r1 = s1.rank;
  const long k = E - r1;

  SurfaceHomology h;
  h.r1 = r1;
  h.kernel_dim = k;
  h.v1_inv = inverse_unimodular(s1.V);

  // Face boundaries written in kernel coordinates.
  IntMatrix R(k, d2.cols);
  for (long f = 0; f < d2.cols; ++f) {
    std::vector<Int> col(static_cast<std::size_t>(E));
    for (long e = 0; e < E; ++e) col[static_cast<std::size_t>(e)] = d2.at(e, f);
    std::vector<Int> y = matvec(h.v1_inv, col);
    for (long i = 0; i < r1; ++i)
      if (y[static_cast<std::size_t>(i)] != 0) fail(ErrorKind::Internal, "face boundary is not a cycle");
    for (long i = 0; i < k; ++i) R.at(i, f) = y[static_cast<std::size_t>(r1 + i)];
  }

  SmithForm sR = smith_normal_form(R);
  h.r2 = sR.rank;
  h.ur = sR.U;
  h.h1 = cokernel(R);
  if (!h.h1.torsion.empty()) fail(ErrorKind::Internal, "torsion in the first homology of an orientable surface");

  // Basis cycles: kernel columns recombined by U_R^-1, past the image rank.
  IntMatrix ur_inv = inverse_unimodular(sR.U);
  for (long i = h.r2; i < k; ++i) {
    std::vector<Int> chain(static_cast<std::size_t>(E), Int(0));
    for (long e = 0; e < E; ++e)
      for (long c = 0; c < k; ++c) chain[static_cast<std::size_t>(e)] += s1.V.at(e, r1 + c) * ur_inv.at(c, i);
    h.basis.push_back(std::move(chain));
  }

  h.intersection_form = intersection_from_cup(s, h.basis);
  return h;
}

std::vector<Int> h1_coords(const SurfaceHomology& h, const std::vector<Int>& cycle) {
  if (static_cast<long>(cycle.size()) != h.v1_inv.cols) fail(ErrorKind::Mismatch, "chain has wrong length");
  std::vector<Int> y = matvec(h.v1_inv, cycle);
  for (long i = 0; i < h.r1; ++i)
    if (y[static_cast<std::size_t>(i)] != 0) fail(ErrorKind::Mismatch, "chain is not a cycle");
  std::vector<Int> w(static_cast<std::size_t>(h.kernel_dim), Int(0));
  for (long r = 0; r < h.kernel_dim; ++r)
    for (long c = 0; c < h.kernel_dim; ++c) w[static_cast<std::size_t>(r)] += h.ur.at(r, c) * y[static_cast<std::size_t>(h.r1 + c)];
  return std::vector<Int>(w.begin() + h.r2, w.end());
}

bool is_liftable(const CoveringData& cov, const BraidWord& b) {
  if (b.strands != cov.degree) fail(ErrorKind::Mismatch, "braid strand count differs from covering degree");
  FreeAutomorphism phi = artin_action(b);
  for (int j = 0; j < cov.degree; ++j)
    if (!(theta_of_word(cov, phi.images[static_cast<std::size_t>(j)]) == cov.labels[static_cast<std::size_t>(j)]))
      return false;
  return true;
}

std::vector<Int> graph_chain(const CoveringData& cov, const FreeWord& w, int s) {
  if (w.rank != cov.degree) fail(ErrorKind::Mismatch, "word rank differs from covering degree");
  if (s < 0 || s >= cov.sheets) fail(ErrorKind::MalformedInput, "sheet index out of range");
  std::vector<Int> ch(static_cast<std::size_t>(cov.degree) * cov.sheets, Int(0));
  int u = s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int l = *it;
    const int j = (l > 0 ? l : -l) - 1;
    const int v = apply0(cov.labels[static_cast<std::size_t>(j)], u);
    if (l > 0)
      ch[static_cast<std::size_t>(j) * cov.sheets + u] += 1;
    else
      ch[static_cast<std::size_t>(j) * cov.sheets + v] -= 1;
    u = v;
  }
  return ch;
}

namespace {

/* Graph edge (j,s) maps to the difference of the two halves of every other
 * slit's crossing, before the slit on sheet s and after it on sheet t_j(s).
 * This is the chain of the lifted path that the graph edge abbreviates. */
IntMatrix bridge_matrix(const CoveringData& cov) {
  const int N = cov.sheets, d = cov.degree;
  IntMatrix B(static_cast<long>(d) * N, static_cast<long>(d) * N);
  for (int j = 0; j < d; ++j)
    for (int sh = 0; sh < N; ++sh) {
      const long col = static_cast<long>(j) * N + sh;
      const int tjs = apply0(cov.labels[static_cast<std::size_t>(j)], sh);
      for (int k = j + 1; k < d; ++k) {
        B.at(static_cast<long>(k) * N + apply0(cov.labels[static_cast<std::size_t>(k)], sh), col) += 1;
        B.at(static_cast<long>(k) * N + sh, col) -= 1;
      }
      for (int k = 0; k < j; ++k) {
        B.at(static_cast<long>(k) * N + apply0(cov.labels[static_cast<std::size_t>(k)], tjs), col) += 1;
        B.at(static_cast<long>(k) * N + tjs, col) -= 1;
      }
    }
  return B;
}

} // namespace

CoverModel build_cover_model(const CoveringData& cov) {
  CoverModel m;
  m.cov = cov;
  m.surface = build_fiber_surface(cov);
  m.homology = surface_h1(m.surface);
  m.bridge = bridge_matrix(cov);

  IntMatrix d2 = boundary2(m.surface);
  m.lift_system = IntMatrix(m.bridge.rows, m.bridge.cols + d2.cols);
  for (long r = 0; r < m.bridge.rows; ++r) {
    for (long c = 0; c < m.bridge.cols; ++c) m.lift_system.at(r, c) = m.bridge.at(r, c);
    for (long c = 0; c < d2.cols; ++c) m.lift_system.at(r, m.bridge.cols + c) = d2.at(r, c);
  }

  for (const std::vector<Int>& cycle : m.homology.basis) {
    std::optional<std::vector<Int>> x = solve(m.lift_system, cycle);
    if (!x) fail(ErrorKind::Internal, "homology basis cycle has no covering-graph representative");
    m.basis_graph.emplace_back(x->begin(), x->begin() + m.bridge.cols);
  }
  return m;
}

IntMatrix lift_homology(const CoverModel& model, const BraidWord& b) {
  if (!is_liftable(model.cov, b)) fail(ErrorKind::Mismatch, "braid does not preserve the covering labels");
  const int N = model.cov.sheets, d = model.cov.degree;
  FreeAutomorphism phi = artin_action(b);

  std::vector<std::vector<Int>> edge_image(static_cast<std::size_t>(d) * N);
  for (int j = 0; j < d; ++j)
    for (int sh = 0; sh < N; ++sh)
      edge_image[static_cast<std::size_t>(j) * N + sh] = graph_chain(model.cov, phi.images[static_cast<std::size_t>(j)], sh);

  const long g2 = static_cast<long>(model.homology.basis.size());
  IntMatrix M(g2, g2);
  for (long i = 0; i < g2; ++i) {
    const std::vector<Int>& z = model.basis_graph[static_cast<std::size_t>(i)];
    std::vector<Int> zact(static_cast<std::size_t>(d) * N, Int(0));
    for (std::size_t idx = 0; idx < z.size(); ++idx)
      if (z[idx] != 0)
        for (std::size_t e = 0; e < zact.size(); ++e) zact[e] += z[idx] * edge_image[idx][e];
    std::vector<Int> coords = h1_coords(model.homology, matvec(model.bridge, zact));
    for (long r = 0; r < g2; ++r) M.at(r, i) = coords[static_cast<std::size_t>(r)];
  }
  return M;
}

IntMatrix lift_homology(const CoveringData& cov, const BraidWord& b) {
  return lift_homology(build_cover_model(cov), b);
}

} // namespace bmc
