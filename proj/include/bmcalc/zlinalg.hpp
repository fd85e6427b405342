#pragma once

/* Exact integer linear algebra: dense matrices over Z with arbitrary-precision
 * entries, Smith normal form with unimodular change-of-basis tracking, and the
 * kernel/cokernel utilities the homology computations are built on.
 *
 * Intermediate entries in a Smith reduction can blow up far past 64 bits even
 * for small inputs, so the entry type is non-negotiable: cpp_int throughout. */

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmc {

using Int = boost::multiprecision::cpp_int;

/* Error taxonomy shared by all modules.  `kind` is a stable machine-readable
 * tag (the CLI surfaces it); `what()` carries the human diagnostic. */
enum class ErrorKind {
  MalformedInput,
  Mismatch,          // degree/rank/strand-count disagreement between arguments
  InvalidFactor,     // exponent outside {1,2,-2,3} or bad band index
  NotCancellingPair, // delete_node_pair precondition failure
  BoundExceeded,     // search/enumeration budget exhausted
  NotClosed,         // covering not closed over infinity
  Internal,          // invariant the code itself must maintain was violated
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<Int> a; // row-major, rows*cols entries

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    if (r < 0 || c < 0) fail(ErrorKind::MalformedInput, "negative matrix dimension");
  }

  Int& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix add(const IntMatrix& x, const IntMatrix& y);
IntMatrix sub(const IntMatrix& x, const IntMatrix& y);
IntMatrix neg(const IntMatrix& x);

/* U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
 * `diagonal` lists the min(rows,cols) diagonal entries of D. */
struct SmithForm {
  IntMatrix U, D, V;
  std::vector<Int> diagonal;
  long rank = 0; // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& A);

struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion; // invariant factors > 1, in divisibility order

  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const; // e.g. "Z^2 + Z/2 + Z/6", "0"
};

/* Cokernel Z^rows / (column lattice of A). */
AbelianGroup cokernel(const IntMatrix& A);

long int_rank(const IntMatrix& A);

/* Basis of { x : A x = 0 } as matrix columns (cols x nullity). */
IntMatrix kernel_basis(const IntMatrix& A);

/* One solution of A x = b over Z, if any. */
std::optional<std::vector<Int>> solve(const IntMatrix& A, const std::vector<Int>& b);

/* Inverse of a matrix with det = +-1; error otherwise. */
IntMatrix inverse_unimodular(const IntMatrix& A);

} // namespace bmc
