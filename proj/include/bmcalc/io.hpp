#pragma once

/* Line-oriented text formats for the externally visible artifact types.
 *
 * Common lexical rules for every format:
 *   - '#' starts a comment that runs to the end of the line;
 *   - blank lines (after comment stripping) are ignored;
 *   - fields on a line are separated by spaces or tabs.
 *
 * Parse errors are ErrorKind::MalformedInput whose message starts with
 * "<source>:<line>:<column>:" pointing at the offending token.  Semantic
 * errors raised while assembling the parsed values (bad band exponent,
 * non-transposition label, ...) are rewrapped with the same position prefix.
 *
 * Every print_* function emits the canonical form, and parsing it back yields
 * an equal value (byte-identical when printed again). */

#include "bmcalc/cover.hpp"
#include "bmcalc/factor.hpp"
#include "bmcalc/lefschetz.hpp"
#include "bmcalc/vankampen.hpp"

#include <string>

namespace bmc {

/* Factorization format:
 *   degree <d>
 *   factor conj=<c1,c2,...|-> base=<i> exp=<1|2|-2|3>   (one line per factor)
 * The conjugator is a comma-separated list of braid letters, '-' when empty. */
Factorization parse_factorization(const std::string& text,
                                  const std::string& source = "<input>");
std::string print_factorization(const Factorization& f);

/* Covering format:
 *   N <sheets>
 *   labels (a b) (c d) ...    (one 1-indexed transposition per generator)   */
CoveringData parse_covering(const std::string& text, const std::string& source = "<input>");
std::string print_covering(const CoveringData& cov);

/* Fibration format:
 *   genus <g>
 *   cycle <2g ints> sep=<0|1>   (one line per vanishing cycle)              */
LFibration parse_lfibration(const std::string& text, const std::string& source = "<input>");
std::string print_lfibration(const LFibration& lf);

/* Presentation format:
 *   gens <n>
 *   rel <signed ints>           (one line per relator; '-' = empty relator)
 * Relator words are freely reduced on parse.                                */
Presentation parse_presentation(const std::string& text,
                                const std::string& source = "<input>");
std::string print_presentation(const Presentation& p);

/* Target group format: "perm <degree>: (cycles) (cycles) ...".  Generators
 * are separated by spaces; parenthesized cycles written back to back with no
 * space form one generator; "id" is the identity generator.  The result's
 * `description` field is exactly this canonical form, so it re-parses.      */
FiniteGroup parse_hom_target(const std::string& text, long bound = 120,
                             const std::string& source = "<target>");

/* Whole-file slurp; MalformedInput when the file cannot be opened or read. */
std::string read_file(const std::string& path);

} // namespace bmc
