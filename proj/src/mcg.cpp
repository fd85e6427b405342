#include "bmcalc/mcg.hpp"

#include <sstream>

namespace bmc {

namespace {

void check_genus(int genus) {
    if (genus < 0) fail(ErrorKind::MalformedInput, "negative genus");
}

void check_class_size(const std::vector<Int>& c, int genus, const char* what) {
    if (c.size() != static_cast<std::size_t>(2 * genus))
        fail(ErrorKind::Mismatch, std::string(what) + ": class has " +
                                      std::to_string(c.size()) + " coordinates, expected " +
                                      std::to_string(2 * genus));
}

}  // namespace

IntMatrix symplectic_form(int genus) {
    check_genus(genus);
    IntMatrix j(2 * genus, 2 * genus);
    for (int i = 0; i < genus; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& m, int genus) {
    check_genus(genus);
    if (m.rows != 2 * genus || m.cols != 2 * genus) return false;
    IntMatrix j = symplectic_form(genus);
    return mul(mul(m.transposed(), j), m) == j;
}

Int intersection_pairing(const std::vector<Int>& u, const std::vector<Int>& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        fail(ErrorKind::Mismatch, "intersection_pairing: incompatible class sizes");
    Int s = 0;
    for (std::size_t i = 0; i + 1 < u.size(); i += 2)
        s += u[i] * v[i + 1] - u[i + 1] * v[i];
    return s;
}

namespace {

// T_c^{+-1} = I +- c * (c^T J0); the rank-one factor row is (c^T J0)_k = <e_k, c>.
IntMatrix transvection_power(const std::vector<Int>& c, int genus, int sign) {
    check_genus(genus);
    check_class_size(c, genus, "transvection");
    long n = 2 * genus;
    std::vector<Int> row(n);
    for (int i = 0; i < genus; ++i) {
        row[2 * i] = -c[2 * i + 1];
        row[2 * i + 1] = c[2 * i];
    }
    IntMatrix t = IntMatrix::identity(n);
    for (long r = 0; r < n; ++r)
        for (long k = 0; k < n; ++k) t.at(r, k) += sign * c[r] * row[k];
    return t;
}

}  // namespace

IntMatrix transvection(const std::vector<Int>& c, int genus) {
    return transvection_power(c, genus, +1);
}

IntMatrix transvection_inverse(const std::vector<Int>& c, int genus) {
    return transvection_power(c, genus, -1);
}

IntMatrix symplectic_basis(const IntMatrix& a) {
    long n = a.rows;
    if (a.cols != n || n % 2 != 0)
        fail(ErrorKind::MalformedInput, "symplectic_basis: matrix is not of even square size");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (a.at(i, j) != -a.at(j, i))
                fail(ErrorKind::MalformedInput, "symplectic_basis: form is not alternating");

    IntMatrix b = IntMatrix::identity(n);
    // Pairing of the current basis columns i and j under the form.
    auto pair_cols = [&](long i, long j) {
        Int s = 0;
        for (long r = 0; r < n; ++r) {
            if (b.at(r, i) == 0) continue;
            for (long k = 0; k < n; ++k) s += b.at(r, i) * a.at(r, k) * b.at(k, j);
        }
        return s;
    };
    auto swap_cols = [&](long i, long j) {
        for (long r = 0; r < n; ++r) std::swap(b.at(r, i), b.at(r, j));
    };
    auto add_col = [&](long dst, long src, const Int& t) {  // col_dst += t * col_src
        for (long r = 0; r < n; ++r) b.at(r, dst) += t * b.at(r, src);
    };

    for (long k = 0; k + 1 < n; k += 2) {
        // Gcd loop on <b_k, b_j> for j > k until a single +-1 sits at j = k+1.
        for (;;) {
            long best = -1;
            Int best_abs = 0;
            for (long j = k + 1; j < n; ++j) {
                Int p = pair_cols(k, j);
                if (p == 0) continue;
                Int ab = p < 0 ? Int(-p) : p;
                if (best < 0 || ab < best_abs) {
                    best = j;
                    best_abs = ab;
                }
            }
            if (best < 0)
                fail(ErrorKind::MalformedInput, "symplectic_basis: form is degenerate");
            if (best != k + 1) swap_cols(best, k + 1);
            Int piv = pair_cols(k, k + 1);
            bool reduced = false;
            for (long j = k + 2; j < n; ++j) {
                Int p = pair_cols(k, j);
                if (p == 0) continue;
                add_col(j, k + 1, -(p / piv));
                if (pair_cols(k, j) != 0) reduced = true;  // remainder survives
            }
            if (!reduced) break;
        }
        Int piv = pair_cols(k, k + 1);
        if (piv < 0) {
            for (long r = 0; r < n; ++r) b.at(r, k + 1) = -b.at(r, k + 1);
            piv = -piv;
        }
        if (piv != 1)
            fail(ErrorKind::MalformedInput, "symplectic_basis: form is not unimodular");
        // Kill the pairings of the later columns with the hyperbolic pair.
        for (long j = k + 2; j < n; ++j) {
            add_col(j, k + 1, -pair_cols(k, j));
            add_col(j, k, pair_cols(k + 1, j));
        }
    }

    IntMatrix check = mul(mul(b.transposed(), a), b);
    if (!(check == symplectic_form(static_cast<int>(n / 2))))
        fail(ErrorKind::Internal, "symplectic_basis: reduction did not reach the standard form");
    return b;
}

ChainSystem make_chain_system(int genus, std::vector<std::vector<Int>> classes) {
    check_genus(genus);
    if (classes.size() != static_cast<std::size_t>(2 * genus + 1))
        fail(ErrorKind::MalformedInput,
             "chain system for genus " + std::to_string(genus) + " needs " +
                 std::to_string(2 * genus + 1) + " classes, got " +
                 std::to_string(classes.size()));
    for (const auto& c : classes) check_class_size(c, genus, "chain system");
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            Int p = intersection_pairing(classes[i], classes[j]);
            if (j == i + 1) {
                if (p != 1 && p != -1)
                    fail(ErrorKind::MalformedInput,
                         "chain system: consecutive classes " + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + " pair to " + p.str() +
                             ", expected +-1");
            } else if (p != 0) {
                fail(ErrorKind::MalformedInput,
                     "chain system: non-consecutive classes " + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + " pair to " + p.str() +
                         ", expected 0");
            }
        }
    ChainSystem s;
    s.genus = genus;
    s.classes = std::move(classes);
    return s;
}

ChainSystem standard_chain(int genus) {
    if (genus < 1) fail(ErrorKind::MalformedInput, "standard_chain needs genus >= 1");
    auto a = [&](int i) {  // a_i, 1-based
        std::vector<Int> v(2 * genus);
        v[2 * (i - 1)] = 1;
        return v;
    };
    auto b = [&](int i) {  // b_i, 1-based
        std::vector<Int> v(2 * genus);
        v[2 * (i - 1) + 1] = 1;
        return v;
    };
    std::vector<std::vector<Int>> classes;
    classes.push_back(a(1));
    for (int i = 1; i <= genus; ++i) {
        classes.push_back(b(i));
        if (i < genus) {
            std::vector<Int> v = a(i);
            std::vector<Int> w = a(i + 1);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
            classes.push_back(v);
        }
    }
    classes.push_back(a(genus));
    return make_chain_system(genus, std::move(classes));
}

IntMatrix sp_word(const std::vector<int>& word, const ChainSystem& system) {
    long n = 2 * system.genus;
    IntMatrix m = IntMatrix::identity(n);
    for (int letter : word) {
        int idx = letter > 0 ? letter : -letter;
        if (letter == 0 || static_cast<std::size_t>(idx) > system.classes.size())
            fail(ErrorKind::MalformedInput,
                 "sp_word: letter " + std::to_string(letter) + " out of range 1.." +
                     std::to_string(system.classes.size()));
        const auto& c = system.classes[static_cast<std::size_t>(idx - 1)];
        m = mul(m, letter > 0 ? transvection(c, system.genus)
                              : transvection_inverse(c, system.genus));
    }
    return m;
}

bool verify_relation(const std::vector<int>& word1, const std::vector<int>& word2,
                     const ChainSystem& system) {
    return sp_word(word1, system) == sp_word(word2, system);
}

std::vector<int> parse_tau_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> word;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
            word.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorKind::MalformedInput,
                 "transvection word: bad letter '" + tok + "' (want nonzero integers)");
        }
    }
    return word;
}

std::string tau_word_to_string(const std::vector<int>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

}  // namespace bmc
