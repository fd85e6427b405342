#pragma once

// Symplectic homological shadow of the mapping class group of a closed
// genus-g surface: the standard symplectic form, transvections along
// integral classes, chain systems of curve classes, and evaluation of
// positive/negative transvection words to Sp(2g, Z) matrices.
//
// Basis convention: H_1 of the genus-g surface is Z^{2g} with ordered basis
// a_1, b_1, a_2, b_2, ..., a_g, b_g and intersection pairing <a_i, b_i> = 1,
// i.e. the form is block-diagonal with 2x2 blocks [[0,1],[-1,0]].

#include "bmcalc/zlinalg.hpp"

#include <string>
#include <vector>

namespace bmc {

// Block-diagonal symplectic form J0 on Z^{2g} (blocks [[0,1],[-1,0]]).
IntMatrix symplectic_form(int genus);

// True iff m is 2g x 2g and m^T * J0 * m == J0.
bool is_symplectic(const IntMatrix& m, int genus);

// Algebraic intersection number u^T * J0 * v of two classes in Z^{2g}.
Int intersection_pairing(const std::vector<Int>& u, const std::vector<Int>& v);

// Transvection along the class c in Z^{2g}:
//   T_c = I + c * (c^T J0),  so  T_c(x) = x + <c, x> c.
// With c = a this is [[1,1],[0,1]] and with c = b it is [[1,0],[-1,1]]
// in the genus-1 basis (a, b).  T_0 is the identity.
IntMatrix transvection(const std::vector<Int>& c, int genus);

// Inverse transvection T_c^{-1} = I - c * (c^T J0).
IntMatrix transvection_inverse(const std::vector<Int>& c, int genus);

// Symplectic basis of an alternating unimodular form: returns B whose
// columns are a basis of Z^{2g} with B^T * A * B = symplectic_form(g).
// Throws MalformedInput when A is not alternating or not unimodular.
IntMatrix symplectic_basis(const IntMatrix& a);

// A chain system: an ordered list of 2g+1 classes c_1, ..., c_{2g+1} in
// Z^{2g} such that consecutive classes pair to +-1 and non-consecutive
// classes pair to 0 (the homological shadow of a chain of curves, each
// meeting the next once and disjoint from the rest).
struct ChainSystem {
    int genus = 0;
    std::vector<std::vector<Int>> classes;  // 2g+1 vectors of length 2g

    std::size_t size() const { return classes.size(); }
};

// Validates the chain conditions; throws MalformedInput when the list is
// not a chain system for the stated genus.
ChainSystem make_chain_system(int genus, std::vector<std::vector<Int>> classes);

// The standard chain for genus g >= 1:
//   c_1 = a_1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1}, c_{2g+1} = a_g.
// Genus 1 gives [a, b, a]; genus 2 gives [a1, b1, a1+a2, b2, a2].
ChainSystem standard_chain(int genus);

// Evaluates a transvection word over a chain system.  Letters are nonzero
// signed 1-based indices into system.classes: letter +i contributes
// transvection(c_i), letter -i its inverse.  The product is taken
// left-to-right (leftmost letter outermost, acting last on column vectors).
// The empty word yields the identity.
IntMatrix sp_word(const std::vector<int>& word, const ChainSystem& system);

// True iff the two transvection words evaluate to the same matrix.
bool verify_relation(const std::vector<int>& word1,
                     const std::vector<int>& word2,
                     const ChainSystem& system);

// Text form of a transvection word: whitespace-separated nonzero signed
// integers, e.g. "1 2 3 4 5 5 4 3 2 1".
std::vector<int> parse_tau_word(const std::string& text);
std::string tau_word_to_string(const std::vector<int>& word);

}  // namespace bmc
