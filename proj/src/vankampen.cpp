#include "bmcalc/vankampen.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bmc {

Presentation make_presentation(int n_generators, std::vector<FreeWord> relators) {
    if (n_generators < 0) fail(ErrorKind::MalformedInput, "negative generator count");
    for (std::size_t k = 0; k < relators.size(); ++k) {
        if (relators[k].rank != n_generators)
            fail(ErrorKind::Mismatch, "relator " + std::to_string(k + 1) + " has rank " +
                                          std::to_string(relators[k].rank) + ", expected " +
                                          std::to_string(n_generators));
        for (int letter : relators[k].letters) {
            int idx = letter > 0 ? letter : -letter;
            if (letter == 0 || idx > n_generators)
                fail(ErrorKind::MalformedInput,
                     "relator " + std::to_string(k + 1) + " uses generator index " +
                         std::to_string(letter) + " outside 1.." + std::to_string(n_generators));
        }
    }
    Presentation p;
    p.n_generators = n_generators;
    p.relators = std::move(relators);
    return p;
}

Presentation presentation(const Factorization& f, bool projective) {
    if (projective && !validate(f).valid())
        fail(ErrorKind::InvalidFactor,
             "projective presentation needs a full-twist factorization");
    int d = f.degree;
    std::vector<FreeWord> relators;
    for (const Factor& factor : f.factors) {
        FreeAutomorphism phi = artin_action(factor.word());
        for (int j = 1; j <= d; ++j) {
            const FreeWord& img = phi.images[static_cast<std::size_t>(j - 1)];
            if (img.letters.size() == 1 && img.letters[0] == j) continue;
            relators.push_back(concat(img, reduce(d, {-j})));
        }
    }
    if (projective) {
        std::vector<int> letters;
        for (int j = d; j >= 1; --j) letters.push_back(j);
        relators.push_back(reduce(d, letters));
    }
    return make_presentation(d, std::move(relators));
}

AbelianGroup abelianization(const Presentation& p) {
    IntMatrix e(p.n_generators, static_cast<long>(p.relators.size()));
    for (long k = 0; k < e.cols; ++k) {
        std::vector<long> exps = exponent_vector(p.relators[static_cast<std::size_t>(k)]);
        for (long i = 0; i < e.rows; ++i) e.at(i, k) = exps[static_cast<std::size_t>(i)];
    }
    return cokernel(e);
}

FiniteGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                    long bound) {
    if (degree < 1 || degree > 5)
        fail(ErrorKind::MalformedInput,
             "permutation targets must have degree 1..5, got " + std::to_string(degree));
    for (const Permutation& g : gens)
        if (g.degree != degree)
            fail(ErrorKind::Mismatch, "generator degree " + std::to_string(g.degree) +
                                          " does not match target degree " +
                                          std::to_string(degree));

    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, int> index{{elems[0], 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Permutation& g : gens) {
            Permutation next = elems[head] * g;
            if (index.count(next)) continue;
            if (static_cast<long>(elems.size()) >= bound)
                fail(ErrorKind::BoundExceeded, "permutation group exceeds the bound of " +
                                                   std::to_string(bound) + " elements");
            index.emplace(next, static_cast<int>(elems.size()));
            elems.push_back(next);
        }
    }

    FiniteGroup g;
    g.order = static_cast<long>(elems.size());
    g.table.resize(static_cast<std::size_t>(g.order) * g.order);
    g.inverse.resize(static_cast<std::size_t>(g.order));
    for (long a = 0; a < g.order; ++a) {
        for (long b = 0; b < g.order; ++b) {
            auto it = index.find(elems[static_cast<std::size_t>(a)] *
                                 elems[static_cast<std::size_t>(b)]);
            if (it == index.end())
                fail(ErrorKind::Internal, "closure is not closed under multiplication");
            g.table[static_cast<std::size_t>(a) * g.order + b] = it->second;
        }
        g.inverse[static_cast<std::size_t>(a)] =
            index.at(elems[static_cast<std::size_t>(a)].inversed());
    }
    g.identity = 0;
    g.description = "perm " + std::to_string(degree) + ":";
    for (const Permutation& gen : gens) g.description += " " + gen.to_string();
    return g;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows, long bound) {
    long n = static_cast<long>(rows.size());
    if (n < 1) fail(ErrorKind::MalformedInput, "empty multiplication table");
    if (n > bound)
        fail(ErrorKind::BoundExceeded,
             "table order " + std::to_string(n) + " exceeds the bound of " + std::to_string(bound));
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != n)
            fail(ErrorKind::MalformedInput, "multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                fail(ErrorKind::MalformedInput, "table entry " + std::to_string(v) +
                                                    " outside 0.." + std::to_string(n - 1));
    }

    long e = -1;
    for (long cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (long a = 0; a < n && ok; ++a)
            ok = rows[static_cast<std::size_t>(cand)][static_cast<std::size_t>(a)] == a &&
                 rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(cand)] == a;
        if (ok) e = cand;
    }
    if (e < 0) fail(ErrorKind::MalformedInput, "multiplication table has no identity");

    FiniteGroup g;
    g.order = n;
    g.identity = static_cast<int>(e);
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b)
            if (rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == e &&
                rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == e) {
                g.inverse[static_cast<std::size_t>(a)] = static_cast<int>(b);
                break;
            }
        if (g.inverse[static_cast<std::size_t>(a)] < 0)
            fail(ErrorKind::MalformedInput,
                 "element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                int ab = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                int bc = rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                if (rows[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
                    rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)])
                    fail(ErrorKind::MalformedInput, "multiplication table is not associative");
            }
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            g.table[static_cast<std::size_t>(a) * n + b] =
                rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    g.description = "table " + std::to_string(n);
    return g;
}

namespace {

constexpr unsigned long long kTupleCap = 1000000000ull;

int eval_image(const FreeWord& w, const FiniteGroup& g, const std::vector<int>& images) {
    int acc = g.identity;
    for (int letter : w.letters) {
        int e = images[static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1)];
        if (letter < 0) e = g.inverse[static_cast<std::size_t>(e)];
        acc = g.mul(acc, e);
    }
    return acc;
}

unsigned long long enumerate_homs(const Presentation& p, const FiniteGroup& g, int threads) {
    int n = p.n_generators;
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > kTupleCap / static_cast<unsigned long long>(g.order))
            fail(ErrorKind::BoundExceeded, "generator-image tuple space is too large");
        total *= static_cast<unsigned long long>(g.order);
    }
    if (threads < 1) threads = 1;

    long long count = 0;
    const long long signed_total = static_cast<long long>(total);
#pragma omp parallel for reduction(+ : count) schedule(static) num_threads(threads)
    for (long long idx = 0; idx < signed_total; ++idx) {
        std::vector<int> images(static_cast<std::size_t>(n));
        unsigned long long rest = static_cast<unsigned long long>(idx);
        for (int k = 0; k < n; ++k) {
            images[static_cast<std::size_t>(k)] =
                static_cast<int>(rest % static_cast<unsigned long long>(g.order));
            rest /= static_cast<unsigned long long>(g.order);
        }
        bool ok = true;
        for (const FreeWord& r : p.relators)
            if (eval_image(r, g, images) != g.identity) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return static_cast<unsigned long long>(count);
}

}  // namespace

HomCount count_homs(const Presentation& p, const FiniteGroup& target, long bound, int threads) {
    if (target.order > bound)
        fail(ErrorKind::BoundExceeded, "target order " + std::to_string(target.order) +
                                           " exceeds the bound of " + std::to_string(bound));
    HomCount h;
    h.target_description = target.description;
    h.count = enumerate_homs(tietze_simplify(p), target, threads);
    return h;
}

unsigned long long count_homs_serial(const Presentation& p, const FiniteGroup& target) {
    return enumerate_homs(p, target, 1);
}

namespace {

// Replace x_elim by `image` (a word not using x_elim) and drop the generator,
// shifting the indices above it down by one.
FreeWord substitute_and_drop(const FreeWord& w, int elim, const FreeWord& image) {
    std::vector<int> letters;
    for (int letter : w.letters) {
        int idx = letter > 0 ? letter : -letter;
        if (idx != elim) {
            int shifted = idx > elim ? idx - 1 : idx;
            letters.push_back(letter > 0 ? shifted : -shifted);
            continue;
        }
        const FreeWord& piece = letter > 0 ? image : inverse_word(image);
        for (int il : piece.letters) {
            int iidx = il > 0 ? il : -il;
            int shifted = iidx > elim ? iidx - 1 : iidx;
            letters.push_back(il > 0 ? shifted : -shifted);
        }
    }
    return reduce(w.rank - 1, letters);
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
    int n = p.n_generators;
    std::vector<FreeWord> rels = p.relators;
    for (;;) {
        // Drop empty and duplicate relators.
        std::vector<FreeWord> kept;
        std::set<std::vector<int>> seen;
        for (const FreeWord& r : rels) {
            if (r.empty() || !seen.insert(r.letters).second) continue;
            kept.push_back(r);
        }
        rels = std::move(kept);

        // Find a short relator defining one generator.
        int elim = 0;
        FreeWord image;
        for (const FreeWord& r : rels) {
            if (r.length() > 2) continue;
            for (std::size_t pos = 0; pos < r.letters.size() && elim == 0; ++pos) {
                int letter = r.letters[pos];
                int idx = letter > 0 ? letter : -letter;
                bool unique = true;
                for (std::size_t q = 0; q < r.letters.size(); ++q) {
                    int other = r.letters[q];
                    if (q != pos && (other == idx || other == -idx)) unique = false;
                }
                if (!unique) continue;
                // r = u x_idx^s v = 1  =>  x_idx^s = u^-1 v^-1  =>  solve for x_idx.
                FreeWord u = reduce(n, std::vector<int>(r.letters.begin(),
                                                        r.letters.begin() + pos));
                FreeWord v = reduce(n, std::vector<int>(r.letters.begin() + pos + 1,
                                                        r.letters.end()));
                FreeWord rhs = concat(inverse_word(u), inverse_word(v));
                if (letter < 0) rhs = inverse_word(rhs);
                elim = idx;
                image = rhs;
            }
            if (elim != 0) break;
        }
        if (elim == 0) break;

        std::vector<FreeWord> next;
        for (const FreeWord& r : rels) {
            FreeWord s = substitute_and_drop(r, elim, image);
            if (!s.empty()) next.push_back(s);
        }
        rels = std::move(next);
        --n;
    }
    return make_presentation(n, std::move(rels));
}

namespace {

std::pair<int, int> support_of(const Permutation& t) {
    std::pair<int, int> s = t.transposition_support();
    if (s.first > s.second) std::swap(s.first, s.second);
    return s;
}

// Orbit of the label's support under the subgroup of S_N generated by all
// labels: exactly the supports realizable by conjugated geometric generators.
std::set<std::pair<int, int>> support_orbit(const CoveringData& cov, int a) {
    std::set<std::pair<int, int>> orbit{support_of(cov.labels[static_cast<std::size_t>(a - 1)])};
    std::vector<std::pair<int, int>> frontier(orbit.begin(), orbit.end());
    while (!frontier.empty()) {
        std::pair<int, int> s = frontier.back();
        frontier.pop_back();
        for (const Permutation& t : cov.labels) {
            std::pair<int, int> m{t.apply1(s.first), t.apply1(s.second)};
            if (m.first > m.second) std::swap(m.first, m.second);
            if (orbit.insert(m).second) frontier.push_back(m);
        }
    }
    return orbit;
}

bool disjoint(const std::pair<int, int>& s1, const std::pair<int, int>& s2) {
    return s1.first != s2.first && s1.first != s2.second && s1.second != s2.first &&
           s1.second != s2.second;
}

}  // namespace

StabilizedPresentation stabilized(const Presentation& p, const CoveringData& cov,
                                  long conjugator_bound) {
    if (cov.degree != p.n_generators)
        fail(ErrorKind::Mismatch, "covering has " + std::to_string(cov.degree) +
                                      " labels but the presentation has " +
                                      std::to_string(p.n_generators) + " generators");
    if (conjugator_bound < 0)
        fail(ErrorKind::MalformedInput, "negative conjugator bound");
    int d = p.n_generators;

    // All reduced conjugating words of length <= bound, in length order.
    std::vector<FreeWord> conjugators{reduce(d, {})};
    std::vector<FreeWord> frontier = conjugators;
    for (long l = 1; l <= conjugator_bound; ++l) {
        std::vector<FreeWord> next;
        for (const FreeWord& w : frontier)
            for (int gidx = 1; gidx <= d; ++gidx)
                for (int letter : {gidx, -gidx}) {
                    if (!w.letters.empty() && w.letters.back() == -letter) continue;
                    FreeWord ext = w;
                    ext.letters.push_back(letter);
                    next.push_back(ext);
                }
        conjugators.insert(conjugators.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    std::vector<FreeWord> relators = p.relators;
    std::set<std::vector<int>> seen;
    for (const FreeWord& r : relators) seen.insert(r.letters);

    for (int a = 1; a <= d; ++a)
        for (int b = a; b <= d; ++b)
            for (const FreeWord& w : conjugators)
                for (const FreeWord& v : conjugators) {
                    Permutation pw = theta_of_word(cov, w);
                    Permutation pv = theta_of_word(cov, v);
                    Permutation la =
                        pw * cov.labels[static_cast<std::size_t>(a - 1)] * pw.inversed();
                    Permutation lb =
                        pv * cov.labels[static_cast<std::size_t>(b - 1)] * pv.inversed();
                    if (!disjoint(support_of(la), support_of(lb))) continue;
                    FreeWord ga = conjugate_word(w, reduce(d, {a}));
                    FreeWord gb = conjugate_word(v, reduce(d, {b}));
                    FreeWord comm = concat(concat(ga, gb),
                                           concat(inverse_word(ga), inverse_word(gb)));
                    if (comm.empty() || !seen.insert(comm.letters).second) continue;
                    relators.push_back(comm);
                }

    // Exactness: with no realizable disjoint-support pair at all, nothing can
    // ever be added, for any bound.
    bool any_possible = false;
    for (int a = 1; a <= d && !any_possible; ++a) {
        std::set<std::pair<int, int>> oa = support_orbit(cov, a);
        for (int b = a; b <= d && !any_possible; ++b)
            for (const auto& s1 : oa) {
                for (const auto& s2 : support_orbit(cov, b))
                    if (disjoint(s1, s2)) {
                        any_possible = true;
                        break;
                    }
                if (any_possible) break;
            }
    }

    StabilizedPresentation out;
    out.presentation = make_presentation(d, std::move(relators));
    out.approximate = any_possible;
    out.conjugator_bound = conjugator_bound;
    return out;
}

StructureReport structure_check(const Presentation& p, const CoveringData& cov, int d, int n,
                                std::optional<std::pair<long, long>> lambda) {
    StructureReport r;
    r.degree_match =
        d >= 1 && n >= 1 && cov.degree == d && cov.sheets == n && p.n_generators == d;
    if (!r.degree_match) return r;

    r.relators_map_to_identity = true;
    for (const FreeWord& rel : p.relators)
        if (!theta_of_word(cov, rel).is_identity()) {
            r.relators_map_to_identity = false;
            break;
        }

    r.exponent_surjects_mod_d = true;
    for (const FreeWord& rel : p.relators) {
        long s = 0;
        for (long e : exponent_vector(rel)) s += e;
        if (((s % d) + d) % d != 0) {
            r.exponent_surjects_mod_d = false;
            break;
        }
    }

    if (n == 1) {
        r.sign_constraint_vacuous = true;
        r.sign_constraint_ok = true;  // the sign character of S_1 is trivial
    } else {
        r.sign_constraint_ok = true;
        for (const Permutation& t : cov.labels)
            if (t.sign() != -1) {
                r.sign_constraint_ok = false;
                break;
            }
    }

    // Index of <(theta(x_i), 1)> in S_N x Z_d by direct closure.
    if (n <= 10) {
        long long ambient = d;
        for (int k = 2; k <= n; ++k) ambient *= k;
        r.ambient_order = ambient;
        std::set<std::pair<Permutation, int>> elems{{Permutation::identity(n), 0}};
        std::vector<std::pair<Permutation, int>> frontier(elems.begin(), elems.end());
        bool capped = false;
        while (!frontier.empty() && !capped) {
            auto [perm, k] = frontier.back();
            frontier.pop_back();
            for (const Permutation& t : cov.labels) {
                std::pair<Permutation, int> nx{perm * t, (k + 1) % d};
                if (!elems.insert(nx).second) continue;
                if (static_cast<long long>(elems.size()) > ambient) {
                    capped = true;  // cannot happen for a subgroup; defensive
                    break;
                }
                frontier.push_back(nx);
            }
        }
        if (!capped) {
            r.image_order = static_cast<long long>(elems.size());
            if (r.image_order > 0 && ambient % r.image_order == 0)
                r.image_index = ambient / r.image_order;
        }
    }
    r.expected_index = (n >= 2 && d % 2 == 0) ? 2 : 1;
    r.index_ok = r.image_index == r.expected_index;

    if (lambda) {
        r.lambda_provided = true;
        r.lambda_rank = (lambda->first != 0 || lambda->second != 0) ? 1 : 0;
        r.lambda_rank_consistent = r.lambda_rank == abelianization(p).free_rank;
    }
    return r;
}

}  // namespace bmc
