#include "bmcalc/io.hpp"

#include "doctest.h"

#include <random>

using namespace bmc;

namespace {

Permutation tr(int n, int a, int b) { return Permutation::transposition(n, a, b); }

Factorization conic_fact() {
  return make_factorization(2, {make_factor(2, BraidWord(2, {}), 1, 1),
                                make_factor(2, BraidWord(2, {}), 1, 1)});
}

Factorization cusp_fact() {
  return make_factorization(
      3, {make_factor(3, BraidWord(3, {}), 1, 3), make_factor(3, BraidWord(3, {-1}), 2, 1),
          make_factor(3, BraidWord(3, {}), 1, 1), make_factor(3, BraidWord(3, {}), 2, 1)});
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.degree != b.degree || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (a.factors[i].conjugator.letters != b.factors[i].conjugator.letters) return false;
    if (a.factors[i].base != b.factors[i].base) return false;
    if (a.factors[i].exponent != b.factors[i].exponent) return false;
  }
  return true;
}

bool same_fibration(const LFibration& a, const LFibration& b) {
  return a.genus == b.genus && a.cycles == b.cycles && a.separating_flags == b.separating_flags;
}

// Expects a MalformedInput whose message carries the given position prefix.
template <typename Fn>
void check_position(Fn&& fn, const std::string& prefix) {
  try {
    fn();
    FAIL_CHECK("expected MalformedInput with prefix " << prefix);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::MalformedInput);
    CHECK(std::string(e.what()).substr(0, prefix.size()) == prefix);
  }
}

}  // namespace

TEST_CASE("factorization text round-trips, comments and blanks ignored") {
  Factorization f = cusp_fact();
  std::string text = print_factorization(f);
  CHECK(text ==
        "degree 3\n"
        "factor conj=- base=1 exp=3\n"
        "factor conj=-1 base=2 exp=1\n"
        "factor conj=- base=1 exp=1\n"
        "factor conj=- base=2 exp=1\n");
  CHECK(same_factorization(parse_factorization(text), f));
  CHECK(print_factorization(parse_factorization(text)) == text);

  std::string commented =
      "# braided cusp curve\n\ndegree 3   # three strands\n"
      "factor conj=- base=1 exp=3\nfactor conj=-1 base=2 exp=1\n"
      "factor conj=- base=1 exp=1\n\nfactor conj=- base=2 exp=1  # last\n";
  CHECK(same_factorization(parse_factorization(commented), f));

  // Multi-letter conjugators survive the comma form.
  Factorization g = make_factorization(4, {make_factor(4, BraidWord(4, {1, -2, 3}), 2, -2),
                                           make_factor(4, BraidWord(4, {}), 1, 2)});
  CHECK(same_factorization(parse_factorization(print_factorization(g)), g));
}

TEST_CASE("factorization parse errors carry line and column") {
  check_position([] { parse_factorization(""); }, "<input>:1:1:");
  check_position([] { parse_factorization("deg 2\n"); }, "<input>:1:1:");
  check_position([] { parse_factorization("degree x\n"); }, "<input>:1:8:");
  check_position([] { parse_factorization("degree 2\nfactor conj=- base=1\n"); },
                 "<input>:2:21:");
  check_position([] { parse_factorization("degree 2\nfactor conj=- base=1 exp=7\n"); },
                 "<input>:2:20:");  // bad exponent: semantic, anchored at the fields
  check_position([] { parse_factorization("degree 2\nfactor conj=9 base=1 exp=1\n"); },
                 "<input>:2:13:");  // conjugator letter out of range
  check_position(
      [] { parse_factorization("degree 2\nfactor conj=- base=1 exp=1 junk\n"); },
      "<input>:2:28:");
  check_position([](){ parse_factorization("degree 2\nfactor conj=1, base=1 exp=1\n"); },
                 "<input>:2:15:");  // dangling comma
  // A non-full-twist product is fine at parse level: parsing does not validate.
  CHECK(parse_factorization("degree 2\nfactor conj=- base=1 exp=1\n").factors.size() == 1);
}

TEST_CASE("covering text round-trips") {
  CoveringData cov = make_covering(3, {tr(3, 1, 2), tr(3, 1, 3), tr(3, 1, 3), tr(3, 1, 2)});
  std::string text = print_covering(cov);
  CHECK(text == "N 3\nlabels (1 2) (1 3) (1 3) (1 2)\n");
  CoveringData back = parse_covering(text);
  CHECK(back.sheets == cov.sheets);
  CHECK(back.degree == cov.degree);
  CHECK(back.labels == cov.labels);

  check_position([] { parse_covering("N 2\n"); }, "<input>:1:1:");
  check_position([] { parse_covering("N 2\nlabels (1 2) (2)\n"); }, "<input>:2:16:");
  check_position([] { parse_covering("N 2\nlabels (1 9)\n"); }, "<input>:2:8:");
  check_position([] { parse_covering("N 2\nlabels (1 1)\n"); }, "<input>:2:8:");
}

TEST_CASE("fibration text round-trips including genus zero") {
  LFibration lf = make_lfibration(
      1, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(0)}}, {false, false, true});
  std::string text = print_lfibration(lf);
  CHECK(text == "genus 1\ncycle 1 0 sep=0\ncycle 0 1 sep=0\ncycle 0 0 sep=1\n");
  CHECK(same_fibration(parse_lfibration(text), lf));

  LFibration sphere = make_lfibration(0, {{}, {}}, {true, true});
  std::string stext = print_lfibration(sphere);
  CHECK(stext == "genus 0\ncycle sep=1\ncycle sep=1\n");
  CHECK(same_fibration(parse_lfibration(stext), sphere));

  check_position([] { parse_lfibration("genus -1\n"); }, "<input>:1:7:");
  check_position([] { parse_lfibration("genus 1\ncycle 1 sep=0\n"); }, "<input>:2:9:");
  check_position([] { parse_lfibration("genus 1\ncycle 1 0 sep=2\n"); }, "<input>:2:15:");
  // Separating flag on a nonzero class is a semantic error, anchored to the header.
  check_position([] { parse_lfibration("genus 1\ncycle 1 0 sep=1\n"); }, "<input>:1:7:");
}

TEST_CASE("presentation text round-trips; relators reduce on parse") {
  Presentation p = make_presentation(
      2, {reduce(2, {1, 2, -1, -1}), reduce(2, {1, -2}), reduce(2, {})});
  std::string text = print_presentation(p);
  CHECK(text == "gens 2\nrel 1 2 -1 -1\nrel 1 -2\nrel -\n");
  Presentation back = parse_presentation(text);
  CHECK(back.n_generators == 2);
  REQUIRE(back.relators.size() == 3);
  CHECK(back.relators[0].letters == p.relators[0].letters);
  CHECK(back.relators[2].letters.empty());

  // Unreduced input is freely reduced while parsing.
  CHECK(parse_presentation("gens 2\nrel 1 -1 2\n").relators[0].letters ==
        std::vector<int>{2});

  check_position([] { parse_presentation("gens 2\nrel 3\n"); }, "<input>:2:5:");
  check_position([] { parse_presentation("gens 2\nrel 1 x\n"); }, "<input>:2:7:");
  check_position([] { parse_presentation("gens\nrel 1\n"); }, "<input>:1:5:");
}

TEST_CASE("hom target parsing matches group descriptions") {
  FiniteGroup s3 = parse_hom_target("perm 3: (1 2) (1 3)");
  CHECK(s3.order == 6);
  CHECK(s3.description == "perm 3: (1 2) (1 3)");
  CHECK(parse_hom_target(s3.description).order == 6);

  // Adjacent cycles with no space form a single generator.
  FiniteGroup klein = parse_hom_target("perm 4: (1 2)(3 4) (1 3)(2 4)");
  CHECK(klein.order == 4);
  CHECK(parse_hom_target(klein.description).order == 4);

  FiniteGroup z5 = parse_hom_target("perm 5: (1 2 3 4 5)");
  CHECK(z5.order == 5);
  FiniteGroup triv = parse_hom_target("perm 2: id");
  CHECK(triv.order == 1);

  check_position([] { parse_hom_target("perm 3 (1 2)"); }, "<target>:1:8:");
  check_position([] { parse_hom_target("perm 3: (1 2"); }, "<target>:1:13:");
  check_position([] { parse_hom_target("perm 3: (1 4)"); }, "<target>:1:12:");
  check_position([] { parse_hom_target("perm 3: (1 1 2)"); }, "<target>:1:9:");
  check_position([] { parse_hom_target("perm 3: (2)"); }, "<target>:1:9:");
  check_position([] { parse_hom_target("perm 0: (1 2)"); }, "<target>:1:6:");
  // Degree above 5 and order bounds surface as their own error kinds.
  CHECK_THROWS_AS(parse_hom_target("perm 6: (1 2)"), Error);
  try {
    parse_hom_target("perm 5: (1 2) (1 2 3 4 5)", 60);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("random factorizations and fibrations round-trip") {
  std::mt19937 rng(2026u);
  std::uniform_int_distribution<int> dd(2, 5), nf(1, 6), cl(0, 3), sgn(0, 1);
  const int exps[4] = {1, 2, -2, 3};
  for (int trial = 0; trial < 40; ++trial) {
    int d = dd(rng);
    std::uniform_int_distribution<int> base(1, d - 1);
    std::vector<Factor> fs;
    int m = nf(rng);
    for (int k = 0; k < m; ++k) {
      std::vector<int> conj;
      int l = cl(rng);
      for (int i = 0; i < l; ++i) conj.push_back(base(rng) * (sgn(rng) ? 1 : -1));
      fs.push_back(make_factor(d, BraidWord(d, conj), base(rng),
                               exps[static_cast<std::size_t>(cl(rng))]));
    }
    Factorization f = make_factorization(d, fs);
    CHECK(same_factorization(parse_factorization(print_factorization(f)), f));
  }

  std::uniform_int_distribution<int> gg(0, 3), nc(0, 5), entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int g = gg(rng);
    std::vector<std::vector<Int>> cycles;
    std::vector<bool> flags;
    int m = nc(rng);
    for (int k = 0; k < m; ++k) {
      std::vector<Int> cls(static_cast<std::size_t>(2 * g));
      bool zero = true;
      for (auto& v : cls) {
        v = Int(entry(rng));
        if (v != 0) zero = false;
      }
      cycles.push_back(cls);
      flags.push_back(zero);
    }
    LFibration lf = make_lfibration(g, cycles, flags);
    CHECK(same_fibration(parse_lfibration(print_lfibration(lf)), lf));
  }

  // Printed conic matches the shipped sample format exactly.
  CHECK(print_factorization(conic_fact()) ==
        "degree 2\nfactor conj=- base=1 exp=1\nfactor conj=- base=1 exp=1\n");
}

TEST_CASE("read_file reports unreadable paths") {
  CHECK_THROWS_AS(read_file("/nonexistent/bmcalc-io-test"), Error);
  try {
    read_file("/nonexistent/bmcalc-io-test");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::MalformedInput);
  }
}
