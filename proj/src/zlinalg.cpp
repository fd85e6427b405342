#include "bmcalc/zlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace bmc {

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(ErrorKind::Mismatch, "matrix product dimension mismatch");
  IntMatrix z(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (long j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntMatrix add(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::Mismatch, "matrix sum dimension mismatch");
  IntMatrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

IntMatrix sub(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::Mismatch, "matrix difference dimension mismatch");
  IntMatrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

IntMatrix neg(const IntMatrix& x) {
  IntMatrix z = x;
  for (auto& v : z.a) v = -v;
  return z;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/* Elementary operations applied simultaneously to the work matrix and the
 * accumulated transforms.  Row ops ride on U (left), column ops on V (right). */
struct SmithWork {
  IntMatrix A, U, V;

  void swap_rows(long r1, long r2) {
    if (r1 == r2) return;
    for (long j = 0; j < A.cols; ++j) std::swap(A.at(r1, j), A.at(r2, j));
    for (long j = 0; j < U.cols; ++j) std::swap(U.at(r1, j), U.at(r2, j));
  }
  void swap_cols(long c1, long c2) {
    if (c1 == c2) return;
    for (long i = 0; i < A.rows; ++i) std::swap(A.at(i, c1), A.at(i, c2));
    for (long i = 0; i < V.rows; ++i) std::swap(V.at(i, c1), V.at(i, c2));
  }
  void addmul_row(long dst, long src, const Int& q) { // row dst += q * row src
    if (q == 0) return;
    for (long j = 0; j < A.cols; ++j) A.at(dst, j) += q * A.at(src, j);
    for (long j = 0; j < U.cols; ++j) U.at(dst, j) += q * U.at(src, j);
  }
  void addmul_col(long dst, long src, const Int& q) { // col dst += q * col src
    if (q == 0) return;
    for (long i = 0; i < A.rows; ++i) A.at(i, dst) += q * A.at(i, src);
    for (long i = 0; i < V.rows; ++i) V.at(i, dst) += q * V.at(i, src);
  }
  void negate_row(long r) {
    for (long j = 0; j < A.cols; ++j) A.at(r, j) = -A.at(r, j);
    for (long j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
  }
};

/* Quotient minimizing |a - q*p| (nearest integer, ties toward zero), so the
 * balanced remainder satisfies 2|r| <= |p|.  Keeping every elimination
 * multiplier minimal is what holds entry growth down during the reduction. */
Int balanced_quotient(const Int& a, const Int& p) {
  Int q = a / p;
  Int r = a - q * p;
  if (r != 0 && 2 * abs_int(r) > abs_int(p)) q += ((r > 0) == (p > 0)) ? 1 : -1;
  return q;
}

/* Deterministic pivot rule: smallest nonzero |entry| in the trailing block,
 * ties broken by lowest row index, then lowest column index. */
bool find_pivot(const IntMatrix& A, long t, long& pr, long& pc) {
  bool found = false;
  Int best;
  for (long i = t; i < A.rows; ++i)
    for (long j = t; j < A.cols; ++j) {
      const Int& v = A.at(i, j);
      if (v == 0) continue;
      Int av = abs_int(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = i;
        pc = j;
      }
    }
  return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& Ain) {
  SmithWork w{Ain, IntMatrix::identity(Ain.rows), IntMatrix::identity(Ain.cols)};
  const long n = std::min(Ain.rows, Ain.cols);

  bool exhausted = false;
  for (long t = 0; t < n && !exhausted; ++t) {
    /* Each pass reduces against the globally smallest entry of the trailing
     * block with balanced quotients, then re-selects the pivot.  Any pass
     * that leaves a nonzero remainder at least halves the minimal entry, so
     * the loop terminates after O(log max|a_ij|) passes per diagonal slot
     * without the entry swell a fixed pivot seat would cause. */
    for (;;) {
      long pr = 0, pc = 0;
      if (!find_pivot(w.A, t, pr, pc)) { // trailing block is zero
        exhausted = true;
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      for (long i = t + 1; i < w.A.rows; ++i)
        if (w.A.at(i, t) != 0)
          w.addmul_row(i, t, -balanced_quotient(w.A.at(i, t), w.A.at(t, t)));
      for (long j = t + 1; j < w.A.cols; ++j)
        if (w.A.at(t, j) != 0)
          w.addmul_col(j, t, -balanced_quotient(w.A.at(t, j), w.A.at(t, t)));

      bool cleared = true;
      for (long i = t + 1; i < w.A.rows && cleared; ++i)
        if (w.A.at(i, t) != 0) cleared = false;
      for (long j = t + 1; j < w.A.cols && cleared; ++j)
        if (w.A.at(t, j) != 0) cleared = false;
      if (!cleared) continue; // some balanced remainder survived: re-pivot on it

      /* Divisibility repair: if the pivot fails to divide a later entry, mix
       * that row into row t; the next pass then shrinks the pivot to a
       * divisor of both. */
      bool redo = false;
      for (long i = t + 1; i < w.A.rows && !redo; ++i)
        for (long j = t + 1; j < w.A.cols && !redo; ++j)
          if (w.A.at(i, j) % w.A.at(t, t) != 0) {
            w.addmul_row(t, i, 1);
            redo = true;
          }
      if (!redo) break;
    }
    if (!exhausted && w.A.at(t, t) < 0) w.negate_row(t);
  }

  SmithForm s;
  s.D = w.A;
  s.U = std::move(w.U);
  s.V = std::move(w.V);
  s.diagonal.resize(n);
  for (long i = 0; i < n; ++i) {
    s.diagonal[i] = s.D.at(i, i);
    if (s.diagonal[i] != 0) ++s.rank;
  }
  return s;
}

AbelianGroup cokernel(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A);
  AbelianGroup g;
  g.free_rank = A.rows - s.rank;
  for (const Int& d : s.diagonal)
    if (d > 1) g.torsion.push_back(d);
  std::sort(g.torsion.begin(), g.torsion.end()); // divisibility order == magnitude order
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

long int_rank(const IntMatrix& A) { return smith_normal_form(A).rank; }

IntMatrix kernel_basis(const IntMatrix& A) {
  /* A * V = U^-1 * D, so the V-columns past the rank are a kernel basis. */
  SmithForm s = smith_normal_form(A);
  long nullity = A.cols - s.rank;
  IntMatrix K(A.cols, nullity);
  for (long j = 0; j < nullity; ++j)
    for (long i = 0; i < A.cols; ++i) K.at(i, j) = s.V.at(i, s.rank + j);
  return K;
}

std::optional<std::vector<Int>> solve(const IntMatrix& A, const std::vector<Int>& b) {
  if (static_cast<long>(b.size()) != A.rows) fail(ErrorKind::Mismatch, "solve: rhs length mismatch");
  SmithForm s = smith_normal_form(A);
  /* A x = b  <=>  D (V^-1 x) = U b; solve coordinatewise. */
  std::vector<Int> ub(A.rows);
  for (long i = 0; i < A.rows; ++i) {
    Int acc = 0;
    for (long j = 0; j < A.rows; ++j) acc += s.U.at(i, j) * b[j];
    ub[i] = acc;
  }
  std::vector<Int> y(A.cols);
  long n = std::min(A.rows, A.cols);
  for (long i = 0; i < A.rows; ++i) {
    if (i < n && s.diagonal[i] != 0) {
      if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(A.cols);
  for (long i = 0; i < A.cols; ++i) {
    Int acc = 0;
    for (long j = 0; j < A.cols; ++j) acc += s.V.at(i, j) * y[j];
    x[i] = acc;
  }
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& A) {
  if (A.rows != A.cols) fail(ErrorKind::Mismatch, "inverse of non-square matrix");
  SmithForm s = smith_normal_form(A);
  for (const Int& d : s.diagonal)
    if (d != 1) fail(ErrorKind::Mismatch, "matrix is not unimodular");
  /* U A V = I  =>  A^-1 = V U. */
  return mul(s.V, s.U);
}

} // namespace bmc
