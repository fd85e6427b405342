#include "doctest.h"

#include "bmcalc/braid.hpp"

#include <random>

using namespace bmc;

namespace {

BraidWord bw(int d, std::vector<int> ls) { return BraidWord(d, std::move(ls)); }

/* Apply one random braid-relation rewrite (or a free insertion/cancellation)
 * at a random position; the result is always the same group element. */
BraidWord random_rewrite(std::mt19937& rng, const BraidWord& w) {
  int d = w.strands;
  std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(w.letters.size()));
  std::vector<int> ls = w.letters;
  int kind = static_cast<int>(rng() % 3);
  if (kind == 0) { // insert X_i X_i^-1
    int i = 1 + static_cast<int>(rng() % (d - 1));
    int s = (rng() % 2) ? i : -i;
    int p = pos_dist(rng);
    ls.insert(ls.begin() + p, {s, -s});
  } else if (kind == 1 && ls.size() >= 2) { // swap a distant-commuting pair
    for (int tries = 0; tries < 20; ++tries) {
      int p = static_cast<int>(rng() % (ls.size() - 1));
      if (std::abs(std::abs(ls[p]) - std::abs(ls[p + 1])) >= 2) {
        std::swap(ls[p], ls[p + 1]);
        break;
      }
    }
  } else if (ls.size() >= 3) { // braid relation X_i X_{i+1} X_i -> X_{i+1} X_i X_{i+1}
    for (int tries = 0; tries < 20; ++tries) {
      int p = static_cast<int>(rng() % (ls.size() - 2));
      int a = ls[p], b = ls[p + 1], c = ls[p + 2];
      if (a > 0 && b > 0 && c > 0 && a == c && (b == a + 1 || b == a - 1)) {
        ls[p] = b;
        ls[p + 1] = a;
        ls[p + 2] = b;
        break;
      }
    }
  }
  return BraidWord(d, ls);
}

BraidWord random_braid(std::mt19937& rng, int d, int len) {
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % (d - 1));
    ls.push_back((rng() % 2) ? g : -g);
  }
  return BraidWord(d, ls);
}

} // namespace

TEST_CASE("permutation basics") {
  Permutation p = Permutation::transposition(4, 1, 3);
  CHECK(p.is_transposition());
  CHECK(p.transposition_support() == std::pair<int, int>{1, 3});
  CHECK(p.sign() == -1);
  Permutation q = Permutation::transposition(4, 2, 3);
  // (p*q)(x) = p(q(x)): q first.
  Permutation pq = p * q;
  CHECK(pq.apply1(2) == 1);
  CHECK(pq.apply1(1) == 3);
  CHECK((pq * pq.inversed()).is_identity());
  CHECK(pq.cycle_type() == std::vector<int>{3, 1});
  CHECK(pq.sign() == 1);
  CHECK(Permutation::identity(3).to_string() == "id");
}

TEST_CASE("artin action generator images") {
  FreeAutomorphism f = artin_action(bw(3, {1}));
  CHECK(f.images[0].letters == std::vector<int>{1, 2, -1});
  CHECK(f.images[1].letters == std::vector<int>{1});
  CHECK(f.images[2].letters == std::vector<int>{3});
  // inverse generator
  FreeAutomorphism g = artin_action(bw(3, {-1}));
  CHECK(auto_equal(compose(f, g), identity_automorphism(3)));
}

TEST_CASE("braid relations hold under the artin action") {
  for (int d = 3; d <= 6; ++d) {
    for (int i = 1; i + 1 <= d - 1; ++i) {
      CHECK(braid_equal(bw(d, {i, i + 1, i}), bw(d, {i + 1, i, i + 1})));
    }
    for (int i = 1; i <= d - 1; ++i)
      for (int j = i + 2; j <= d - 1; ++j) CHECK(braid_equal(bw(d, {i, j}), bw(d, {j, i})));
    CHECK_FALSE(braid_equal(bw(d, {1}), bw(d, {2})));
    CHECK_FALSE(braid_equal(bw(d, {1}), bw(d, {-1})));
  }
}

TEST_CASE("the product of all generators is artin-invariant") {
  // Every sigma_i fixes x_1 x_2 ... x_d; hence so does every braid.
  std::mt19937 rng(5u);
  for (int d = 2; d <= 5; ++d) {
    std::vector<int> all;
    for (int j = 1; j <= d; ++j) all.push_back(j);
    FreeWord prod = reduce(d, all);
    for (int iter = 0; iter < 25; ++iter) {
      BraidWord b = random_braid(rng, d, 12);
      CHECK(apply(artin_action(b), prod) == prod);
    }
  }
}

TEST_CASE("full twist is central") {
  for (int d = 2; d <= 6; ++d) {
    BraidWord delta2 = full_twist(d);
    CHECK(static_cast<int>(delta2.letters.size()) == d * (d - 1));
    for (int i = 1; i <= d - 1; ++i) {
      BraidWord xi = bw(d, {i});
      CHECK(braid_equal(braid_concat(delta2, xi), braid_concat(xi, delta2)));
    }
    CHECK(braid_perm(delta2).is_identity());
  }
  // d = 1: trivial group, empty twist
  CHECK(full_twist(1).empty());
}

TEST_CASE("braid_perm is a homomorphism matching letter transpositions") {
  std::mt19937 rng(11u);
  for (int iter = 0; iter < 50; ++iter) {
    int d = 2 + static_cast<int>(rng() % 4);
    BraidWord a = random_braid(rng, d, 6), b = random_braid(rng, d, 6);
    CHECK(braid_perm(braid_concat(a, b)) == braid_perm(a) * braid_perm(b));
  }
  CHECK(braid_perm(bw(3, {1})) == Permutation::transposition(3, 1, 2));
  CHECK(braid_perm(bw(3, {-1})) == Permutation::transposition(3, 1, 2));
}

TEST_CASE("randomized consequence words evaluate equal") {
  std::mt19937 rng(20260814u);
  for (int iter = 0; iter < 200; ++iter) {
    int d = 2 + static_cast<int>(rng() % 5); // up to B_6
    BraidWord w = random_braid(rng, d, 10);
    BraidWord v = w;
    for (int k = 0; k < 4; ++k) v = random_rewrite(rng, v);
    CHECK(braid_equal(w, v));
  }
}

TEST_CASE("band generators") {
  BraidWord q = bw(3, {2});
  BraidWord a13 = band_generator(3, q, 1, 2);
  CHECK(a13.letters == std::vector<int>{2, 1, 1, -2});
  CHECK(braid_perm(a13).is_identity());
  BraidWord tangency = band_generator(3, q, 1, 1);
  CHECK(braid_perm(tangency).is_transposition());
  CHECK(braid_perm(tangency).transposition_support() == std::pair<int, int>{1, 3});
  BraidWord neg = band_generator(3, bw(3, {}), 2, -2);
  CHECK(neg.letters == std::vector<int>{-2, -2});
  CHECK_THROWS_AS((void)band_generator(3, q, 1, 4), Error);
  CHECK_THROWS_AS((void)band_generator(3, q, 1, -1), Error);
  CHECK_THROWS_AS((void)band_generator(3, q, 3, 1), Error);
}

TEST_CASE("braid word text io") {
  BraidWord b = bw(4, {1, 3, -2});
  CHECK(to_string(b) == "B4: 1 3 -2");
  BraidWord p = parse_braid_word("B4: 1 3 -2");
  CHECK(p.strands == 4);
  CHECK(p.letters == b.letters);
  CHECK(parse_braid_word("B3:").letters.empty());
  CHECK_THROWS_AS((void)parse_braid_word("4: 1"), Error);
  CHECK_THROWS_AS((void)parse_braid_word("B4: 9"), Error);
  CHECK_THROWS_AS((void)BraidWord(2, {2}), Error);
}
