#include "bmcalc/word.hpp"

#include <sstream>

namespace bmc {

FreeWord reduce(int rank, const std::vector<int>& letters) {
  if (rank < 0) fail(ErrorKind::MalformedInput, "negative free-group rank");
  FreeWord w;
  w.rank = rank;
  w.letters.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || l > rank || l < -rank)
      fail(ErrorKind::MalformedInput,
           "letter " + std::to_string(l) + " outside rank-" + std::to_string(rank) + " alphabet");
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank != v.rank) fail(ErrorKind::Mismatch, "concat: rank mismatch");
  FreeWord w = u;
  for (int l : v.letters) {
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

FreeWord inverse_word(const FreeWord& w) {
  FreeWord r;
  r.rank = w.rank;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

FreeWord conjugate_word(const FreeWord& q, const FreeWord& w) {
  return concat(concat(q, w), inverse_word(q));
}

std::string to_string(const FreeWord& w) {
  if (w.letters.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i];
  }
  return os.str();
}

FreeWord parse_free_word(int rank, const std::string& text) {
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "-") continue; // explicit empty word
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad word letter '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorKind::MalformedInput, "bad word letter '" + tok + "'");
    letters.push_back(v);
  }
  return reduce(rank, letters);
}

FreeAutomorphism identity_automorphism(int rank) {
  FreeAutomorphism f;
  f.rank = rank;
  f.images.reserve(rank);
  for (int j = 1; j <= rank; ++j) f.images.push_back(reduce(rank, {j}));
  f.inverse_images = f.images;
  return f;
}

FreeAutomorphism conjugation_by(const FreeWord& q) {
  FreeAutomorphism f;
  f.rank = q.rank;
  FreeWord qi = inverse_word(q);
  for (int j = 1; j <= q.rank; ++j) {
    FreeWord xj = reduce(q.rank, {j});
    f.images.push_back(conjugate_word(q, xj));
    f.inverse_images.push_back(conjugate_word(qi, xj));
  }
  return f;
}

namespace {

FreeWord substitute(const std::vector<FreeWord>& images, int rank, const FreeWord& w) {
  FreeWord out;
  out.rank = rank;
  for (int l : w.letters) {
    const FreeWord& img = images[static_cast<size_t>(std::abs(l)) - 1];
    if (l > 0) {
      for (int m : img.letters) {
        if (!out.letters.empty() && out.letters.back() == -m)
          out.letters.pop_back();
        else
          out.letters.push_back(m);
      }
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) {
        int m = -*it;
        if (!out.letters.empty() && out.letters.back() == -m)
          out.letters.pop_back();
        else
          out.letters.push_back(m);
      }
    }
  }
  return out;
}

} // namespace

FreeWord apply(const FreeAutomorphism& f, const FreeWord& w) {
  if (f.rank != w.rank) fail(ErrorKind::Mismatch, "apply: rank mismatch");
  return substitute(f.images, f.rank, w);
}

FreeWord apply_inverse(const FreeAutomorphism& f, const FreeWord& w) {
  if (f.rank != w.rank) fail(ErrorKind::Mismatch, "apply_inverse: rank mismatch");
  return substitute(f.inverse_images, f.rank, w);
}

FreeAutomorphism make_automorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images) {
  if (images.empty() || images.size() != inverse_images.size())
    fail(ErrorKind::MalformedInput, "automorphism needs matching image lists");
  FreeAutomorphism f;
  f.rank = static_cast<int>(images.size());
  for (auto& w : images)
    if (w.rank != f.rank) fail(ErrorKind::Mismatch, "automorphism image rank mismatch");
  for (auto& w : inverse_images)
    if (w.rank != f.rank) fail(ErrorKind::Mismatch, "automorphism image rank mismatch");
  f.images = std::move(images);
  f.inverse_images = std::move(inverse_images);
  for (int j = 1; j <= f.rank; ++j) {
    FreeWord xj = reduce(f.rank, {j});
    if (apply(f, f.inverse_images[j - 1]) != xj || apply_inverse(f, f.images[j - 1]) != xj)
      fail(ErrorKind::MalformedInput, "image lists are not mutually inverse");
  }
  return f;
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  if (f.rank != g.rank) fail(ErrorKind::Mismatch, "compose: rank mismatch");
  FreeAutomorphism h;
  h.rank = f.rank;
  h.images.reserve(f.rank);
  h.inverse_images.reserve(f.rank);
  for (int j = 0; j < f.rank; ++j) {
    h.images.push_back(apply(f, g.images[j]));                  // (f o g)(x_j) = f(g(x_j))
    h.inverse_images.push_back(apply_inverse(g, f.inverse_images[j])); // (f o g)^-1 = g^-1 o f^-1
  }
  return h;
}

FreeAutomorphism inverse(const FreeAutomorphism& f) {
  FreeAutomorphism g;
  g.rank = f.rank;
  g.images = f.inverse_images;
  g.inverse_images = f.images;
  return g;
}

bool auto_equal(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  if (f.rank != g.rank) fail(ErrorKind::Mismatch, "auto_equal: rank mismatch");
  return f.images == g.images; // reduced words are canonical; inverses are determined
}

std::vector<long> exponent_vector(const FreeWord& w) {
  std::vector<long> e(static_cast<size_t>(w.rank), 0);
  for (int l : w.letters) e[static_cast<size_t>(std::abs(l)) - 1] += (l > 0 ? 1 : -1);
  return e;
}

} // namespace bmc
