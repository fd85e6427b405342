#include "bmcalc/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bmc {

BraidWord Factor::word() const { return band_generator(conjugator.strands, conjugator, base, exponent); }

Factor make_factor(int d, const BraidWord& q, int i, int k) {
  if (q.strands != d) fail(ErrorKind::Mismatch, "factor conjugator has wrong strand count");
  band_generator(d, q, i, k); // validates i, k
  return Factor{q, i, k};
}

Factorization make_factorization(int degree, std::vector<Factor> fs) {
  if (degree < 1) fail(ErrorKind::MalformedInput, "factorization degree must be >= 1");
  for (const Factor& f : fs)
    if (f.conjugator.strands != degree) fail(ErrorKind::Mismatch, "factor strand count differs from factorization degree");
  return Factorization{degree, std::move(fs)};
}

BraidWord product(const Factorization& f) {
  BraidWord w(f.degree, {});
  for (const Factor& fac : f.factors) w = braid_concat(w, fac.word());
  return braid_free_cancel(w);
}

ValidationReport validate(const Factorization& f) {
  ValidationReport r;
  for (const Factor& fac : f.factors) {
    switch (fac.exponent) {
      case 1: ++r.tangencies; break;
      case 2: ++r.nodes_positive; break;
      case -2: ++r.nodes_negative; break;
      case 3: ++r.cusps; break;
      default: fail(ErrorKind::InvalidFactor, "factor exponent outside {1,2,-2,3}");
    }
  }
  r.product_is_full_twist = braid_equal(product(f), full_twist(f.degree));
  return r;
}

Factorization hurwitz_move(const Factorization& f, long p, bool forward) {
  const long m = static_cast<long>(f.factors.size());
  if (p < 0 || p + 1 >= m) fail(ErrorKind::MalformedInput, "Hurwitz move position out of range");
  Factorization g = f;
  const Factor& a = f.factors[static_cast<std::size_t>(p)];
  const Factor& b = f.factors[static_cast<std::size_t>(p + 1)];
  if (forward) {
    // (a, b) -> (a b a^-1, a)
    Factor moved{braid_free_cancel(braid_concat(a.word(), b.conjugator)), b.base, b.exponent};
    g.factors[static_cast<std::size_t>(p)] = moved;
    g.factors[static_cast<std::size_t>(p + 1)] = a;
  } else {
    // (a, b) -> (b, b^-1 a b)
    Factor moved{braid_free_cancel(braid_concat(braid_inverse(b.word()), a.conjugator)), a.base, a.exponent};
    g.factors[static_cast<std::size_t>(p)] = b;
    g.factors[static_cast<std::size_t>(p + 1)] = moved;
  }
  return g;
}

Factorization global_conjugate(const Factorization& f, const BraidWord& b) {
  if (b.strands != f.degree) fail(ErrorKind::Mismatch, "conjugating braid has wrong strand count");
  Factorization g = f;
  for (Factor& fac : g.factors) fac.conjugator = braid_free_cancel(braid_concat(b, fac.conjugator));
  return g;
}

Factorization insert_node_pair(const Factorization& f, long position, const BraidWord& q, int i) {
  const long m = static_cast<long>(f.factors.size());
  if (position < 0 || position > m) fail(ErrorKind::MalformedInput, "node pair position out of range");
  Factor pos = make_factor(f.degree, q, i, 2);
  Factor neg = make_factor(f.degree, q, i, -2);
  Factorization g = f;
  g.factors.insert(g.factors.begin() + position, {pos, neg});
  return g;
}

Factorization delete_node_pair(const Factorization& f, long position) {
  const long m = static_cast<long>(f.factors.size());
  if (position < 0 || position + 1 >= m) fail(ErrorKind::MalformedInput, "node pair position out of range");
  const Factor& a = f.factors[static_cast<std::size_t>(position)];
  const Factor& b = f.factors[static_cast<std::size_t>(position + 1)];
  if (a.exponent != 2 || b.exponent != -2)
    fail(ErrorKind::NotCancellingPair, "pair exponents are not (+2, -2)");
  if (!braid_equal(braid_concat(a.word(), b.word()), BraidWord(f.degree, {})))
    fail(ErrorKind::NotCancellingPair, "node factors are not mutually inverse");
  Factorization g = f;
  g.factors.erase(g.factors.begin() + position, g.factors.begin() + position + 2);
  return g;
}

std::string canonical_key(const Factorization& f) {
  std::ostringstream os;
  os << "d" << f.degree << ";m" << f.factors.size();
  for (const Factor& fac : f.factors) {
    FreeAutomorphism a = artin_action(fac.word());
    os << ";F";
    for (const FreeWord& img : a.images) {
      os << "|";
      for (std::size_t j = 0; j < img.letters.size(); ++j) {
        if (j) os << ",";
        os << img.letters[j];
      }
    }
  }
  return os.str();
}

Factorization apply_move(const Factorization& f, const Move& m, const std::vector<BraidWord>& conj_gens) {
  switch (m.kind) {
    case Move::HurwitzForward: return hurwitz_move(f, m.arg, true);
    case Move::HurwitzBackward: return hurwitz_move(f, m.arg, false);
    case Move::Conjugate:
      if (m.arg < 0 || m.arg >= static_cast<long>(conj_gens.size()))
        fail(ErrorKind::MalformedInput, "conjugation generator index out of range");
      return global_conjugate(f, conj_gens[static_cast<std::size_t>(m.arg)]);
  }
  fail(ErrorKind::Internal, "unknown move kind");
}

Fingerprint fingerprint(const std::string& bytes) {
  // FNV-1a, 128-bit variant.
  using u128 = unsigned __int128;
  const u128 prime = (static_cast<u128>(0x0000000001000000ULL) << 64) | 0x000000000000013BULL;
  u128 h = (static_cast<u128>(0x6c62272e07bb0142ULL) << 64) | 0x62b821756295c58dULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= prime;
  }
  return Fingerprint{static_cast<std::uint64_t>(h >> 64), static_cast<std::uint64_t>(h)};
}

namespace {

struct ArenaNode {
  long parent = -1;
  Move move{Move::HurwitzForward, 0};
};

std::vector<Move> path_to(const std::vector<ArenaNode>& arena, long id) {
  std::vector<Move> path;
  for (long cur = id; cur > 0; cur = arena[static_cast<std::size_t>(cur)].parent)
    path.push_back(arena[static_cast<std::size_t>(cur)].move);
  std::reverse(path.begin(), path.end());
  return path;
}

Factorization replay(const Factorization& root, const std::vector<Move>& path, const std::vector<BraidWord>& conj_gens) {
  Factorization f = root;
  for (const Move& m : path) f = apply_move(f, m, conj_gens);
  return f;
}

std::vector<Move> enumerate_moves(const Factorization& f, bool allow_conj, std::size_t n_conj_gens) {
  std::vector<Move> moves;
  const long m = static_cast<long>(f.factors.size());
  for (long p = 0; p + 1 < m; ++p) moves.push_back({Move::HurwitzForward, p});
  for (long p = 0; p + 1 < m; ++p) moves.push_back({Move::HurwitzBackward, p});
  if (allow_conj)
    for (long g = 0; g < static_cast<long>(n_conj_gens); ++g) moves.push_back({Move::Conjugate, g});
  return moves;
}

struct Candidate {
  Fingerprint fp;
  long parent = 0;
  Move move{Move::HurwitzForward, 0};
  std::size_t seq = 0; // enumeration order, used as deterministic tie break
};

// Expands one BFS level: for every frontier node, every applicable move.
// Parallel and serial paths produce identical candidate lists; the parallel
// path splits frontier entries across threads and results are stitched back
// in frontier order, so downstream processing is order independent of the
// thread count.
std::vector<Candidate> expand_level_serial(const Factorization& root, const std::vector<ArenaNode>& arena,
                                           const std::vector<long>& frontier, const std::vector<BraidWord>& conj_gens,
                                           bool allow_conj) {
  std::vector<Candidate> out;
  std::size_t seq = 0;
  for (long id : frontier) {
    Factorization f = replay(root, path_to(arena, id), conj_gens);
    for (const Move& mv : enumerate_moves(f, allow_conj, conj_gens.size())) {
      Factorization g = apply_move(f, mv, conj_gens);
      out.push_back({fingerprint(canonical_key(g)), id, mv, seq++});
    }
  }
  return out;
}

std::vector<Candidate> expand_level_parallel(const Factorization& root, const std::vector<ArenaNode>& arena,
                                             const std::vector<long>& frontier, const std::vector<BraidWord>& conj_gens,
                                             bool allow_conj, int threads) {
  std::vector<std::vector<Candidate>> per_node(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long fi = 0; fi < static_cast<long>(frontier.size()); ++fi) {
    const long id = frontier[static_cast<std::size_t>(fi)];
    Factorization f = replay(root, path_to(arena, id), conj_gens);
    std::vector<Candidate> local;
    for (const Move& mv : enumerate_moves(f, allow_conj, conj_gens.size())) {
      Factorization g = apply_move(f, mv, conj_gens);
      local.push_back({fingerprint(canonical_key(g)), id, mv, 0});
    }
    per_node[static_cast<std::size_t>(fi)] = std::move(local);
  }
  (void)threads;
  std::vector<Candidate> out;
  std::size_t seq = 0;
  for (auto& block : per_node)
    for (Candidate& c : block) {
      c.seq = seq++;
      out.push_back(c);
    }
  return out;
}

std::string cycle_type_string(const Permutation& p) {
  std::ostringstream os;
  for (int c : p.cycle_type()) os << c << ".";
  return os.str();
}

// Conjugacy-invariant tag of a single factor: exponent plus the cycle type of
// the underlying permutation of its band word.
std::multiset<std::string> factor_class_multiset(const Factorization& f) {
  std::multiset<std::string> tags;
  for (const Factor& fac : f.factors) {
    std::ostringstream os;
    os << fac.exponent << ":" << cycle_type_string(braid_perm(fac.word()));
    tags.insert(os.str());
  }
  return tags;
}

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int l : w.letters) s += (l > 0) ? 1 : -1;
  return s;
}

} // namespace

SearchResult hurwitz_equivalent(const Factorization& f1, const Factorization& f2, const SearchOptions& opt) {
  if (f1.degree != f2.degree) fail(ErrorKind::Mismatch, "factorizations have different degrees");

  SearchResult res;
  res.status = SearchResult::Refuted;

  // Cheap invariants of the equivalence relation, tried before any search.
  if (f1.factors.size() != f2.factors.size()) {
    res.refutation = "factor counts differ";
    return res;
  }
  if (factor_class_multiset(f1) != factor_class_multiset(f2)) {
    res.refutation = "multisets of factor classes (exponent, cycle type) differ";
    return res;
  }
  const BraidWord p1 = product(f1), p2 = product(f2);
  if (opt.allow_conjugation) {
    if (exponent_sum(p1) != exponent_sum(p2) || cycle_type_string(braid_perm(p1)) != cycle_type_string(braid_perm(p2))) {
      res.refutation = "products differ by a conjugation invariant";
      return res;
    }
  } else if (!braid_equal(p1, p2)) {
    res.refutation = "products are not equal braids";
    return res;
  }

  std::vector<BraidWord> conj_gens = opt.conj_gens;
  if (opt.allow_conjugation && conj_gens.empty())
    for (int i = 1; i < f1.degree; ++i) {
      conj_gens.emplace_back(f1.degree, std::vector<int>{i});
      conj_gens.emplace_back(f1.degree, std::vector<int>{-i});
    }

  const std::string target_key = canonical_key(f2);
  const Fingerprint target_fp = fingerprint(target_key);

  std::vector<ArenaNode> arena;
  arena.push_back({});
  std::set<Fingerprint> visited;
  visited.insert(fingerprint(canonical_key(f1)));

  auto found_at = [&](long id) -> SearchResult {
    SearchResult r;
    r.status = SearchResult::Found;
    r.path = path_to(arena, id);
    r.states_explored = visited.size();
    // Independent replay check: the reported path really carries f1 to f2.
    if (canonical_key(replay(f1, r.path, conj_gens)) != target_key)
      fail(ErrorKind::Internal, "search path failed replay verification");
    return r;
  };

  if (canonical_key(f1) == target_key) return found_at(0);

  std::vector<long> frontier{0};
  const bool use_parallel = opt.threads > 1;

  while (!frontier.empty()) {
    std::vector<Candidate> cands =
        use_parallel ? expand_level_parallel(f1, arena, frontier, conj_gens, opt.allow_conjugation, opt.threads)
                     : expand_level_serial(f1, arena, frontier, conj_gens, opt.allow_conjugation);
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (!(a.fp == b.fp)) return a.fp < b.fp;
      return a.seq < b.seq;
    });
    std::vector<long> next;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      const Candidate& c = cands[ci];
      if (ci > 0 && c.fp == cands[ci - 1].fp) continue; // level-internal duplicate
      if (visited.count(c.fp)) continue;
      if (visited.size() >= opt.max_states) {
        res.status = SearchResult::Exhausted;
        res.refutation.clear();
        res.states_explored = visited.size();
        return res;
      }
      visited.insert(c.fp);
      arena.push_back({c.parent, c.move});
      const long id = static_cast<long>(arena.size()) - 1;
      if (c.fp == target_fp) {
        // Fingerprints are 128 bits; still confirm by exact key before reporting.
        if (canonical_key(replay(f1, path_to(arena, id), conj_gens)) == target_key) return found_at(id);
        continue;
      }
      next.push_back(id);
    }
    frontier = std::move(next);
  }

  // The frontier emptied below the state cap: the whole orbit of f1 was
  // enumerated and f2 is not in it.  That is an exact negative answer.
  res.status = SearchResult::Refuted;
  res.refutation = "orbit enumerated without reaching the target";
  res.states_explored = visited.size();
  return res;
}

} // namespace bmc
