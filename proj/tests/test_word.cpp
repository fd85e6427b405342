#include "doctest.h"

#include "bmcalc/word.hpp"

#include <random>

using namespace bmc;

namespace {

/* Brute-force substitution oracle: rewrite w letter by letter through the
 * image list with a separate reduction pass.  Independent of apply()'s
 * incremental cancellation. */
FreeWord substitute_oracle(const std::vector<FreeWord>& images, int rank, const FreeWord& w) {
  std::vector<int> out;
  for (int l : w.letters) {
    const FreeWord& img = images[static_cast<size_t>(std::abs(l)) - 1];
    if (l > 0)
      out.insert(out.end(), img.letters.begin(), img.letters.end());
    else
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) out.push_back(-*it);
  }
  return reduce(rank, out);
}

FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank), coin(0, 1);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    ls.push_back(coin(rng) ? g : -g);
  }
  return reduce(rank, ls);
}

} // namespace

TEST_CASE("free reduction") {
  CHECK(reduce(3, {1, 2, -2, -1}).empty());
  CHECK(reduce(3, {1, 2, -2, 3}).letters == std::vector<int>{1, 3});
  CHECK(reduce(2, {1, 1, -1, -1, 2}).letters == std::vector<int>{2});
  // already reduced words pass through
  CHECK(reduce(2, {1, 2, 1, -2}).letters == std::vector<int>{1, 2, 1, -2});
  CHECK_THROWS_AS((void)reduce(2, {3}), Error);
  CHECK_THROWS_AS((void)reduce(2, {0}), Error);
}

TEST_CASE("concat and inverse") {
  FreeWord u = reduce(2, {1, 2});
  FreeWord v = reduce(2, {-2, -1, 2});
  CHECK(concat(u, v).letters == std::vector<int>{2});
  CHECK(concat(u, inverse_word(u)).empty());
  CHECK(inverse_word(u).letters == std::vector<int>{-2, -1});
  CHECK(conjugate_word(u, reduce(2, {2})).letters == std::vector<int>{1, 2, -1});
}

TEST_CASE("word serialization round trip") {
  FreeWord w = reduce(3, {1, 2, -1});
  CHECK(to_string(w) == "1 2 -1");
  CHECK(parse_free_word(3, "1 2 -1") == w);
  CHECK(parse_free_word(3, "-") == reduce(3, {}));
  CHECK(to_string(reduce(3, {})) == "-");
  CHECK_THROWS_AS((void)parse_free_word(2, "1 x"), Error);
  CHECK_THROWS_AS((void)parse_free_word(2, "5"), Error);
}

TEST_CASE("conjugation automorphism and its inverse") {
  FreeWord q = reduce(3, {1, -2});
  FreeAutomorphism c = conjugation_by(q);
  FreeWord w = reduce(3, {3, 1});
  CHECK(apply(c, w) == conjugate_word(q, w));
  CHECK(apply_inverse(c, apply(c, w)) == w);
  CHECK(auto_equal(compose(c, inverse(c)), identity_automorphism(3)));
}

TEST_CASE("compose matches the substitution oracle") {
  std::mt19937 rng(42u);
  for (int iter = 0; iter < 300; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 3);
    FreeAutomorphism f = conjugation_by(random_word(rng, rank, 4));
    FreeAutomorphism g = conjugation_by(random_word(rng, rank, 4));
    FreeWord w = random_word(rng, rank, 8);
    // compose(f,g).apply(w) == f.apply(g.apply(w)), and both match the oracle
    FreeWord via_compose = apply(compose(f, g), w);
    FreeWord via_nested = apply(f, apply(g, w));
    CHECK(via_compose == via_nested);
    CHECK(via_nested == substitute_oracle(f.images, rank, substitute_oracle(g.images, rank, w)));
  }
}

TEST_CASE("make_automorphism rejects non-inverse data") {
  std::vector<FreeWord> img = {reduce(2, {1, 2}), reduce(2, {2})};
  std::vector<FreeWord> bad = {reduce(2, {1}), reduce(2, {2})};
  CHECK_THROWS_AS((void)make_automorphism(img, bad), Error);
  // A correct pair: x1 -> x1 x2, x2 -> x2 with inverse x1 -> x1 x2^-1.
  std::vector<FreeWord> inv = {reduce(2, {1, -2}), reduce(2, {2})};
  FreeAutomorphism f = make_automorphism(img, inv);
  CHECK(apply(f, reduce(2, {1})).letters == std::vector<int>{1, 2});
}

TEST_CASE("exponent vector") {
  auto e = exponent_vector(reduce(3, {1, 2, -1, 2, 3}));
  CHECK(e == std::vector<long>{0, 2, 1});
}
