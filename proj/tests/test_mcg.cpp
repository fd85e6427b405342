#include "doctest.h"

#include "bmcalc/mcg.hpp"

#include <random>

using namespace bmc;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<long>(rows.size()),
              rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<Int> cls(const std::vector<long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("symplectic form and pairing") {
  CHECK(symplectic_form(1) == from_rows({{0, 1}, {-1, 0}}));
  CHECK(symplectic_form(2) ==
        from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  CHECK(symplectic_form(0).rows == 0);

  // <a_i, b_i> = 1, antisymmetric, distinct handles orthogonal.
  CHECK(intersection_pairing(cls({1, 0, 0, 0}), cls({0, 1, 0, 0})) == 1);
  CHECK(intersection_pairing(cls({0, 1, 0, 0}), cls({1, 0, 0, 0})) == -1);
  CHECK(intersection_pairing(cls({1, 0, 0, 0}), cls({0, 0, 0, 1})) == 0);
  CHECK(intersection_pairing(cls({3, -2, 5, 7}), cls({3, -2, 5, 7})) == 0);
  CHECK_THROWS_AS(intersection_pairing(cls({1, 0}), cls({1, 0, 0, 0})), Error);
}

TEST_CASE("transvections along a and b are the standard matrices") {
  IntMatrix ta = transvection(cls({1, 0}), 1);
  IntMatrix tb = transvection(cls({0, 1}), 1);
  CHECK(ta == from_rows({{1, 1}, {0, 1}}));
  CHECK(tb == from_rows({{1, 0}, {-1, 1}}));
  CHECK(is_symplectic(ta, 1));
  CHECK(is_symplectic(tb, 1));
  CHECK_FALSE(is_symplectic(from_rows({{1, 0}, {0, 2}}), 1));
  CHECK_FALSE(is_symplectic(ta, 2));

  // T_0 = identity; T_c T_c^{-1} = identity; wrong class size rejected.
  CHECK(transvection(cls({0, 0}), 1) == IntMatrix::identity(2));
  std::mt19937 rng(2026u);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> c(4);
    for (auto& x : c) x = d(rng);
    IntMatrix t = transvection(c, 2);
    CHECK(is_symplectic(t, 2));
    CHECK(mul(t, transvection_inverse(c, 2)) == IntMatrix::identity(4));
  }
  CHECK_THROWS_AS(transvection(cls({1, 0, 0}), 2), Error);
}

TEST_CASE("transvection formula: T_c(x) = x + <c,x> c") {
  std::mt19937 rng(7u);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> c(6), x(6);
    for (auto& v : c) v = d(rng);
    for (auto& v : x) v = d(rng);
    IntMatrix t = transvection(c, 3);
    Int p = intersection_pairing(c, x);
    for (long r = 0; r < 6; ++r) {
      Int got = 0;
      for (long k = 0; k < 6; ++k) got += t.at(r, k) * x[static_cast<size_t>(k)];
      CHECK(got == x[static_cast<size_t>(r)] + p * c[static_cast<size_t>(r)]);
    }
  }
}

TEST_CASE("standard chains and the chain-system validator") {
  ChainSystem g1 = standard_chain(1);
  CHECK(g1.classes == std::vector<std::vector<Int>>{cls({1, 0}), cls({0, 1}), cls({1, 0})});

  ChainSystem g2 = standard_chain(2);
  CHECK(g2.classes == std::vector<std::vector<Int>>{cls({1, 0, 0, 0}), cls({0, 1, 0, 0}),
                                                    cls({1, 0, 1, 0}), cls({0, 0, 0, 1}),
                                                    cls({0, 0, 1, 0})});

  ChainSystem g3 = standard_chain(3);
  CHECK(g3.size() == 7);
  for (std::size_t i = 0; i < g3.size(); ++i)
    for (std::size_t j = i + 1; j < g3.size(); ++j) {
      Int p = intersection_pairing(g3.classes[i], g3.classes[j]);
      if (j == i + 1)
        CHECK((p == 1 || p == -1));
      else
        CHECK(p == 0);
    }

  CHECK_THROWS_AS(standard_chain(0), Error);

  // Tampering is caught: wrong count, consecutive pairing != +-1,
  // non-consecutive pairing != 0, wrong coordinate size.
  auto tampered = g2.classes;
  tampered.pop_back();
  CHECK_THROWS_AS(make_chain_system(2, tampered), Error);
  tampered = g2.classes;
  tampered[1] = cls({0, 2, 0, 0});  // <c1, 2b1> = 2
  CHECK_THROWS_AS(make_chain_system(2, tampered), Error);
  tampered = g2.classes;
  tampered[2] = cls({0, 1, 1, 0});  // now <c1, c3> = 1 != 0
  CHECK_THROWS_AS(make_chain_system(2, tampered), Error);
  tampered = g2.classes;
  tampered[0] = cls({1, 0});
  CHECK_THROWS_AS(make_chain_system(2, tampered), Error);
}

TEST_CASE("genus-1 relations: braid relation, order of ABA, elliptic relation") {
  ChainSystem g1 = standard_chain(1);
  // Both copies of the a-class give the same transvection.
  CHECK(verify_relation({1}, {3}, g1));
  // ABA = BAB, and it equals the form matrix [[0,1],[-1,0]].
  CHECK(verify_relation({1, 2, 1}, {2, 1, 2}, g1));
  CHECK(sp_word({1, 2, 1}, g1) == from_rows({{0, 1}, {-1, 0}}));
  // (ABA)^2 = -I, (AB)^6 = I, and the chain word 1 2 3 3 2 1 is -I too.
  CHECK(sp_word({1, 2, 1, 1, 2, 1}, g1) == neg(IntMatrix::identity(2)));
  CHECK(sp_word({1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2}, g1) == IntMatrix::identity(2));
  CHECK(sp_word({1, 2, 3, 3, 2, 1}, g1) == neg(IntMatrix::identity(2)));
  // Inverse letters cancel.
  CHECK(sp_word({1, -1}, g1) == IntMatrix::identity(2));
  CHECK(sp_word({-2, 1, -1, 2}, g1) == IntMatrix::identity(2));
  CHECK(sp_word({}, g1) == IntMatrix::identity(2));
}

TEST_CASE("genus-2 relations over the standard chain") {
  ChainSystem g2 = standard_chain(2);
  // Braid relations between consecutive transvections, commutation otherwise.
  for (int i = 1; i <= 4; ++i)
    CHECK(verify_relation({i, i + 1, i}, {i + 1, i, i + 1}, g2));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 2; j <= 5; ++j) CHECK(verify_relation({i, j}, {j, i}, g2));

  std::vector<int> run;  // (t1 t2 t3 t4 t5)^6 = I
  for (int rep = 0; rep < 6; ++rep)
    for (int i = 1; i <= 5; ++i) run.push_back(i);
  CHECK(sp_word(run, g2) == IntMatrix::identity(4));

  // Hyperelliptic word: t1 t2 t3 t4 t5 t5 t4 t3 t2 t1 = -I.
  std::vector<int> hyp = parse_tau_word("1 2 3 4 5 5 4 3 2 1");
  CHECK(sp_word(hyp, g2) == neg(IntMatrix::identity(4)));
  // ... and its square is I, matching (t1..t5)^6 only up to both being +-I.
  std::vector<int> hyp2 = hyp;
  hyp2.insert(hyp2.end(), hyp.begin(), hyp.end());
  CHECK(verify_relation(hyp2, run, g2));
}

TEST_CASE("genus-3 chain relation (t1..t7)^8 = I") {
  ChainSystem g3 = standard_chain(3);
  std::vector<int> run;
  for (int rep = 0; rep < 8; ++rep)
    for (int i = 1; i <= 7; ++i) run.push_back(i);
  CHECK(sp_word(run, g3) == IntMatrix::identity(6));
  // Partial powers are not yet trivial.
  std::vector<int> half(run.begin(), run.begin() + 7 * 4);
  CHECK(sp_word(half, g3) != IntMatrix::identity(6));
}

TEST_CASE("random transvection words are symplectic; composition is leftmost-outermost") {
  ChainSystem g2 = standard_chain(2);
  std::mt19937 rng(99u);
  std::uniform_int_distribution<int> letter(1, 5);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> w;
    for (int k = 0; k < 12; ++k) w.push_back(letter(rng) * (sgn(rng) ? 1 : -1));
    IntMatrix m = sp_word(w, g2);
    CHECK(is_symplectic(m, 2));
    // Splitting the word anywhere multiplies left-to-right.
    std::vector<int> left(w.begin(), w.begin() + 5), right(w.begin() + 5, w.end());
    CHECK(m == mul(sp_word(left, g2), sp_word(right, g2)));
    // The reversed word of inverses is the matrix inverse.
    std::vector<int> inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(-*it);
    CHECK(mul(m, sp_word(inv, g2)) == IntMatrix::identity(4));
  }
}

TEST_CASE("symplectic_basis reduces alternating unimodular forms to the standard one") {
  // Conjugates of the standard form by random unimodular matrices.
  std::mt19937 rng(41u);
  std::uniform_int_distribution<long> shear(-2, 2);
  std::uniform_int_distribution<long> pick(0, 3);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix p = IntMatrix::identity(4);
    for (int step = 0; step < 8; ++step) {  // random elementary operations
      long i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Int t = shear(rng);
      for (long r = 0; r < 4; ++r) p.at(r, i) += t * p.at(r, j);
    }
    IntMatrix a = mul(mul(p.transposed(), symplectic_form(2)), p);
    IntMatrix b = symplectic_basis(a);
    CHECK(mul(mul(b.transposed(), a), b) == symplectic_form(2));
  }

  // A non-block-shaped alternating unimodular form.
  IntMatrix a = from_rows({{0, 1, 1, -1}, {-1, 0, 1, -1}, {-1, -1, 0, 1}, {1, 1, -1, 0}});
  IntMatrix b = symplectic_basis(a);
  CHECK(mul(mul(b.transposed(), a), b) == symplectic_form(2));

  CHECK(symplectic_basis(IntMatrix(0, 0)).rows == 0);
  CHECK_THROWS_AS(symplectic_basis(from_rows({{0, 2}, {-2, 0}})), Error);   // not unimodular
  CHECK_THROWS_AS(symplectic_basis(from_rows({{0, 1}, {1, 0}})), Error);    // not alternating
  CHECK_THROWS_AS(symplectic_basis(from_rows({{0, 0}, {0, 0}})), Error);    // degenerate
  CHECK_THROWS_AS(symplectic_basis(IntMatrix(3, 3)), Error);                // odd size
}

TEST_CASE("sp_word input validation and tau-word text form") {
  ChainSystem g1 = standard_chain(1);
  CHECK_THROWS_AS(sp_word({0}, g1), Error);
  CHECK_THROWS_AS(sp_word({4}, g1), Error);
  CHECK_THROWS_AS(sp_word({-4}, g1), Error);

  std::vector<int> w = parse_tau_word("1 2 3 4 5 5 4 3 2 1");
  CHECK(w == std::vector<int>{1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
  CHECK(tau_word_to_string(w) == "1 2 3 4 5 5 4 3 2 1");
  CHECK(parse_tau_word("  -1\n 2\t-3 ") == std::vector<int>{-1, 2, -3});
  CHECK(parse_tau_word("").empty());
  CHECK_THROWS_AS(parse_tau_word("1 x 2"), Error);
  CHECK_THROWS_AS(parse_tau_word("0"), Error);
  CHECK_THROWS_AS(parse_tau_word("1 2z"), Error);
}
