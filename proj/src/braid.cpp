#include "bmcalc/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bmc {

Permutation Permutation::identity(int n) {
  if (n < 1) fail(ErrorKind::MalformedInput, "permutation degree must be >= 1");
  Permutation p;
  p.degree = n;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    fail(ErrorKind::MalformedInput, "bad transposition symbols");
  std::swap(p.map[a - 1], p.map[b - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree; ++i)
    if (map[i] != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree; ++i)
    if (map[i] != i) ++moved;
  if (moved != 2) return false;
  for (int i = 0; i < degree; ++i)
    if (map[i] != i && map[map[i]] != i) return false;
  return true;
}

std::pair<int, int> Permutation::transposition_support() const {
  if (!is_transposition()) fail(ErrorKind::Internal, "transposition_support of non-transposition");
  int a = -1, b = -1;
  for (int i = 0; i < degree; ++i)
    if (map[i] != i) {
      if (a < 0)
        a = i;
      else
        b = i;
    }
  return {a + 1, b + 1};
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree != o.degree) fail(ErrorKind::Mismatch, "permutation degree mismatch");
  Permutation r;
  r.degree = degree;
  r.map.resize(degree);
  for (int x = 0; x < degree; ++x) r.map[x] = map[o.map[x]];
  return r;
}

Permutation Permutation::inversed() const {
  Permutation r;
  r.degree = degree;
  r.map.resize(degree);
  for (int x = 0; x < degree; ++x) r.map[map[x]] = x;
  return r;
}

int Permutation::sign() const {
  std::vector<bool> seen(degree, false);
  int parity = 0;
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = map[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(degree, false);
  std::vector<int> parts;
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = map[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string Permutation::to_string() const {
  std::vector<bool> seen(degree, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < degree; ++i) {
    if (seen[i] || map[i] == i) {
      seen[i] = true;
      continue;
    }
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = map[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

BraidWord::BraidWord(int d, std::vector<int> ls) : strands(d), letters(std::move(ls)) {
  if (d < 1) fail(ErrorKind::MalformedInput, "braid group needs >= 1 strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) > d - 1)
      fail(ErrorKind::MalformedInput,
           "braid letter " + std::to_string(l) + " invalid for " + std::to_string(d) + " strands");
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) fail(ErrorKind::Mismatch, "braid concat: strand mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord braid_inverse(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  r.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord braid_free_cancel(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  for (int l : a.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

namespace {

/* Elementary Artin automorphism for the signed letter l on d strands. */
FreeAutomorphism artin_letter(int d, int l) {
  int i = std::abs(l);
  std::vector<FreeWord> img, inv;
  for (int j = 1; j <= d; ++j) {
    img.push_back(reduce(d, {j}));
    inv.push_back(reduce(d, {j}));
  }
  if (l > 0) {
    img[i - 1] = reduce(d, {i, i + 1, -i}); // x_i     -> x_i x_{i+1} x_i^-1
    img[i] = reduce(d, {i});                // x_{i+1} -> x_i
    inv[i - 1] = reduce(d, {i + 1});
    inv[i] = reduce(d, {-(i + 1), i, i + 1});
  } else {
    img[i - 1] = reduce(d, {i + 1});
    img[i] = reduce(d, {-(i + 1), i, i + 1});
    inv[i - 1] = reduce(d, {i, i + 1, -i});
    inv[i] = reduce(d, {i});
  }
  FreeAutomorphism f;
  f.rank = d;
  f.images = std::move(img);
  f.inverse_images = std::move(inv);
  return f;
}

} // namespace

FreeAutomorphism artin_action(const BraidWord& b) {
  FreeAutomorphism acc = identity_automorphism(b.strands);
  for (int l : b.letters) acc = compose(acc, artin_letter(b.strands, l));
  return acc;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) fail(ErrorKind::Mismatch, "braid_equal: strand mismatch");
  return auto_equal(artin_action(a), artin_action(b));
}

Permutation braid_perm(const BraidWord& b) {
  Permutation p = Permutation::identity(b.strands);
  for (int l : b.letters) {
    int i = std::abs(l);
    p = p * Permutation::transposition(b.strands, i, i + 1);
  }
  return p;
}

BraidWord full_twist(int d) {
  BraidWord r;
  r.strands = d;
  for (int rep = 0; rep < d; ++rep)
    for (int i = 1; i <= d - 1; ++i) r.letters.push_back(i);
  return r;
}

BraidWord band_generator(int d, const BraidWord& q, int i, int k) {
  if (q.strands != d) fail(ErrorKind::Mismatch, "band conjugator strand mismatch");
  if (i < 1 || i > d - 1)
    fail(ErrorKind::InvalidFactor, "band index " + std::to_string(i) + " out of range");
  if (k != 1 && k != 2 && k != -2 && k != 3)
    fail(ErrorKind::InvalidFactor, "band exponent " + std::to_string(k) + " not in {1,2,-2,3}");
  BraidWord core;
  core.strands = d;
  for (int r = 0; r < std::abs(k); ++r) core.letters.push_back(k > 0 ? i : -i);
  return braid_free_cancel(braid_concat(braid_concat(q, core), braid_inverse(q)));
}

std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  os << 'B' << b.strands << ':';
  for (int l : b.letters) os << ' ' << l;
  return os.str();
}

BraidWord parse_braid_word(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  if (!(is >> head) || head.size() < 2 || head[0] != 'B')
    fail(ErrorKind::MalformedInput, "braid word must start with 'B<strands>:'");
  bool colon_in_head = head.back() == ':';
  std::string num = colon_in_head ? head.substr(1, head.size() - 2) : head.substr(1);
  int d = 0;
  try {
    d = std::stoi(num);
  } catch (const std::exception&) {
    fail(ErrorKind::MalformedInput, "bad strand count in '" + head + "'");
  }
  if (!colon_in_head) {
    std::string colon;
    if (!(is >> colon) || colon != ":")
      fail(ErrorKind::MalformedInput, "braid word must start with 'B<strands>:'");
  }
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    try {
      letters.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad braid letter '" + tok + "'");
    }
  }
  return BraidWord(d, std::move(letters));
}

} // namespace bmc
