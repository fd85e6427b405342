/* bmcalc: command-line front end for the monodromy-factorization toolkit.
 *
 * Exit codes: 0 = success / property verified, 1 = verified negative
 * (invalid factorization, refuted equivalence, incompatible inputs),
 * 2 = inconclusive (search or enumeration budget exhausted),
 * 3 = input error (parse failures carry file:line:column diagnostics).
 *
 * --format machine emits deterministic line-oriented "key=value" output
 * (no timestamps); artifact payloads (fibersum, stabilize) are printed in
 * their native text formats, preceded by '#' metadata comments, and re-parse
 * to equal values. */

#include "CLI11.hpp"
#include "bmcalc/io.hpp"
#include "bmcalc/mcg.hpp"

#include <iostream>
#include <sstream>

using namespace bmc;

namespace {

bool machine = false;

void kv(const std::string& key, const std::string& value) {
    std::cout << key << "=" << value << "\n";
}
void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }

std::string join_longs(const std::vector<long>& xs) {
    if (xs.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << xs[i];
    }
    return out.str();
}

std::string join_ints(const std::vector<Int>& xs) {
    if (xs.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << xs[i];
    }
    return out.str();
}

std::string join_flags(const std::vector<bool>& xs) {
    if (xs.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << (xs[i] ? 1 : 0);
    }
    return out.str();
}

// "1,0;0,1": rows separated by ';', entries by ','.
std::string matrix_string(const IntMatrix& m) {
    std::ostringstream out;
    for (long r = 0; r < m.rows; ++r) {
        if (r) out << ";";
        for (long c = 0; c < m.cols; ++c) {
            if (c) out << ",";
            out << m.at(r, c);
        }
    }
    return out.str();
}

std::string count_noun(long n, const std::string& singular, const std::string& plural) {
    return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

// "2 tangencies, 1 node, 1 cusp" in fixed order, skipping zero counts except
// that the tangency count is always shown.
std::string factor_census(const ValidationReport& r) {
    std::string out = count_noun(r.tangencies, "tangency", "tangencies");
    if (r.nodes_positive) out += ", " + count_noun(r.nodes_positive, "node", "nodes");
    if (r.nodes_negative)
        out += ", " + count_noun(r.nodes_negative, "negative node", "negative nodes");
    if (r.cusps) out += ", " + count_noun(r.cusps, "cusp", "cusps");
    return out;
}

Factorization load_factorization(const std::string& path) {
    return parse_factorization(read_file(path), path);
}
CoveringData load_covering(const std::string& path) {
    return parse_covering(read_file(path), path);
}
LFibration load_lfibration(const std::string& path) {
    return parse_lfibration(read_file(path), path);
}

int cmd_validate(const std::string& path) {
    Factorization f = load_factorization(path);
    ValidationReport r = validate(f);
    if (machine) {
        kv("valid", r.valid() ? 1 : 0);
        kv("degree", f.degree);
        kv("factors", static_cast<long long>(f.factors.size()));
        kv("tangencies", r.tangencies);
        kv("nodes_positive", r.nodes_positive);
        kv("nodes_negative", r.nodes_negative);
        kv("cusps", r.cusps);
    } else if (r.valid()) {
        std::cout << "product=Δ² OK, " << factor_census(r) << "\n";
    } else {
        std::cout << "product=Δ² FAIL: the factors do not multiply to the full twist ("
                  << factor_census(r) << ")\n";
    }
    return r.valid() ? 0 : 1;
}

int cmd_invariants(const std::string& path) {
    Factorization f = load_factorization(path);
    ValidationReport r = validate(f);
    long long exponent_sum = 0;
    for (const Factor& fac : f.factors) exponent_sum += fac.exponent;
    Permutation perm = braid_perm(product(f));
    std::vector<long> cycle_type;
    for (int part : perm.cycle_type()) cycle_type.push_back(part);
    Fingerprint fp = fingerprint(canonical_key(f));
    std::ostringstream fps;
    fps << std::hex << fp.hi << "-" << fp.lo;

    if (machine) {
        kv("degree", f.degree);
        kv("factors", static_cast<long long>(f.factors.size()));
        kv("exponent_sum", exponent_sum);
        kv("tangencies", r.tangencies);
        kv("nodes_positive", r.nodes_positive);
        kv("nodes_negative", r.nodes_negative);
        kv("cusps", r.cusps);
        kv("product_is_full_twist", r.product_is_full_twist ? 1 : 0);
        kv("product_cycle_type", join_longs(cycle_type));
        kv("fingerprint", fps.str());
    } else {
        std::cout << "degree " << f.degree << " factorization with "
                  << count_noun(static_cast<long>(f.factors.size()), "factor", "factors") << " ("
                  << factor_census(r) << ")\n";
        std::cout << "exponent sum " << exponent_sum << ", product "
                  << (r.product_is_full_twist ? "is" : "is NOT") << " the full twist Δ²\n";
        std::cout << "product permutation cycle type: " << join_longs(cycle_type) << "\n";
        std::cout << "canonical fingerprint: " << fps.str() << "\n";
    }
    return 0;
}

int cmd_hurwitz(const std::string& path_a, const std::string& path_b, std::size_t max_states,
                int threads) {
    Factorization a = load_factorization(path_a);
    Factorization b = load_factorization(path_b);
    SearchOptions opt;
    opt.max_states = max_states;
    opt.threads = threads;
    SearchResult res = hurwitz_equivalent(a, b, opt);
    if (machine) {
        kv("status", res.status == SearchResult::Found      ? "found"
                     : res.status == SearchResult::Refuted ? "refuted"
                                                           : "exhausted");
        kv("states_explored", static_cast<long long>(res.states_explored));
        if (res.status == SearchResult::Found)
            kv("path_length", static_cast<long long>(res.path.size()));
        if (res.status == SearchResult::Refuted) kv("refutation", res.refutation);
    } else if (res.status == SearchResult::Found) {
        std::cout << "equivalent: connected by " << count_noun(static_cast<long>(res.path.size()), "Hurwitz move", "Hurwitz moves")
                  << " (" << res.states_explored << " states explored)\n";
    } else if (res.status == SearchResult::Refuted) {
        std::cout << "not equivalent: " << res.refutation << "\n";
    } else {
        std::cout << "inconclusive: state budget exhausted after " << res.states_explored
                  << " states\n";
    }
    switch (res.status) {
        case SearchResult::Found: return 0;
        case SearchResult::Refuted: return 1;
        default: return 2;
    }
}

int cmd_cover(const std::string& fact_path, const std::string& cov_path) {
    Factorization f = load_factorization(fact_path);
    CoveringData cov = load_covering(cov_path);
    CompatibilityReport rep = check_compatibility(cov, f);
    bool have_fiber = rep.labels_transitive && rep.closed;
    FiberInvariants fib;
    long h1_rank = 0;
    if (have_fiber) {
        fib = fiber_genus(cov);
        h1_rank = surface_h1(build_fiber_surface(cov)).h1.free_rank;
    }
    if (machine) {
        kv("compatible", rep.ok() ? 1 : 0);
        kv("degree_match", rep.degree_match ? 1 : 0);
        kv("transitive", rep.labels_transitive ? 1 : 0);
        kv("closed", rep.closed ? 1 : 0);
        kv("local_ok", join_flags(rep.local_ok));
        kv("global_ok", join_flags(rep.global_ok));
        if (have_fiber) {
            kv("fiber_genus", fib.genus);
            kv("fiber_euler", fib.euler);
            kv("fiber_marked", fib.marked);
            kv("fiber_h1_rank", h1_rank);
        }
    } else {
        std::cout << "compatible: " << (rep.ok() ? "yes" : "no") << "\n";
        if (!rep.degree_match) std::cout << "  label count does not match the braid degree\n";
        if (!rep.labels_transitive) std::cout << "  labels do not act transitively\n";
        if (!rep.closed) std::cout << "  covering is not closed over infinity\n";
        for (std::size_t i = 0; i < rep.local_ok.size(); ++i)
            if (!rep.local_ok[i])
                std::cout << "  factor " << i + 1 << ": label pair does not fit the factor type\n";
        for (std::size_t i = 0; i < rep.global_ok.size(); ++i)
            if (!rep.global_ok[i])
                std::cout << "  factor " << i + 1 << ": braid does not preserve the labels\n";
        if (have_fiber)
            std::cout << "fiber surface: genus " << fib.genus << ", χ=" << fib.euler << ", "
                      << count_noun(fib.marked, "marked point", "marked points") << ", rank H₁ = "
                      << h1_rank << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int cmd_lift(const std::string& fact_path, const std::string& cov_path) {
    Factorization f = load_factorization(fact_path);
    CoveringData cov = load_covering(cov_path);
    CompatibilityReport rep = check_compatibility(cov, f);
    if (!rep.ok())
        fail(ErrorKind::Mismatch,
             "factorization is not compatible with the covering; run 'cover' for the breakdown");
    CoverModel model = build_cover_model(cov);
    std::vector<IntMatrix> lifts;
    for (const Factor& fac : f.factors) lifts.push_back(lift_homology(model, fac.word()));
    if (machine) {
        kv("factors", static_cast<long long>(f.factors.size()));
        kv("h1_rank", model.homology.h1.free_rank);
        for (std::size_t k = 0; k < lifts.size(); ++k)
            kv("lift." + std::to_string(k + 1), matrix_string(lifts[k]));
    } else {
        std::cout << "lifted " << count_noun(static_cast<long>(f.factors.size()), "factor", "factors")
                  << " to H₁ of the genus-" << fiber_genus(cov).genus << " fiber (rank "
                  << model.homology.h1.free_rank << ")\n";
        for (std::size_t k = 0; k < lifts.size(); ++k) {
            std::cout << "factor " << k + 1 << ":";
            if (lifts[k].rows == 0) {
                std::cout << " [] (rank 0)\n";
                continue;
            }
            std::cout << "\n";
            for (long r = 0; r < lifts[k].rows; ++r) {
                std::cout << "  [";
                for (long c = 0; c < lifts[k].cols; ++c) {
                    if (c) std::cout << " ";
                    std::cout << lifts[k].at(r, c);
                }
                std::cout << "]\n";
            }
        }
    }
    return 0;
}

int cmd_lefschetz(const std::string& path) {
    LFibration lf = load_lfibration(path);
    long long euler = euler_characteristic(lf);
    AbelianGroup h1 = total_space_h1(lf);
    SpValidity sp = sp_validity(lf);
    if (machine) {
        kv("genus", lf.genus);
        kv("cycles", static_cast<long long>(lf.count()));
        kv("euler", euler);
        kv("b1", h1.free_rank);
        kv("h1_torsion", join_ints(h1.torsion));
        kv("sp_valid", sp.identity ? 1 : 0);
    } else {
        std::cout << "genus " << lf.genus << " fibration with "
                  << count_noun(static_cast<long>(lf.count()), "vanishing cycle", "vanishing cycles")
                  << "\n";
        std::cout << "χ=" << euler << ", b₁=" << h1.free_rank
                  << ", H₁(total space) = " << h1.to_string() << "\n";
        std::cout << "monodromy product on H₁(fiber) is "
                  << (sp.identity ? "the identity" : "NOT the identity") << "\n";
    }
    return 0;
}

int cmd_fibersum(const std::string& path_a, const std::string& path_b, const std::string& twist) {
    LFibration a = load_lfibration(path_a);
    LFibration b = load_lfibration(path_b);
    std::optional<FibSumTwist> tw;
    if (!twist.empty()) {
        std::vector<int> word = parse_tau_word(twist);
        tw = make_fib_sum_twist(sp_word(word, standard_chain(b.genus)), b.genus);
    }
    LFibration sum = fiber_sum(a, b, tw);
    long long euler = euler_characteristic(sum);
    AbelianGroup h1 = total_space_h1(sum);
    if (machine) {
        std::cout << "# euler=" << euler << "\n# b1=" << h1.free_rank << "\n";
        std::cout << print_lfibration(sum);
    } else {
        std::cout << "fiber sum: genus " << sum.genus << ", "
                  << count_noun(static_cast<long>(sum.count()), "vanishing cycle", "vanishing cycles")
                  << ", χ=" << euler << ", H₁ = " << h1.to_string() << "\n";
        if (!twist.empty()) std::cout << "gluing twisted by τ-word: " << twist << "\n";
    }
    return 0;
}

int cmd_vankampen(const std::string& path, bool affine, const std::string& hom_target,
                  bool tietze, int threads) {
    Factorization f = load_factorization(path);
    Presentation p = presentation(f, !affine);
    AbelianGroup ab = abelianization(p);
    Presentation slim = tietze ? tietze_simplify(p) : p;
    if (machine) {
        kv("projective", affine ? 0 : 1);
        kv("generators", p.n_generators);
        kv("relators", static_cast<long long>(p.relators.size()));
        kv("ab_free_rank", ab.free_rank);
        kv("ab_torsion", join_ints(ab.torsion));
        if (tietze) {
            kv("tietze_generators", slim.n_generators);
            kv("tietze_relators", static_cast<long long>(slim.relators.size()));
        }
    } else {
        std::cout << (affine ? "affine" : "projective") << " presentation: "
                  << count_noun(p.n_generators, "generator", "generators") << ", "
                  << count_noun(static_cast<long>(p.relators.size()), "relator", "relators") << "\n";
        std::cout << "abelianization H₁ = " << ab.to_string() << "\n";
        if (tietze)
            std::cout << "after Tietze simplification: "
                      << count_noun(slim.n_generators, "generator", "generators") << ", "
                      << count_noun(static_cast<long>(slim.relators.size()), "relator", "relators")
                      << "\n";
    }
    if (!hom_target.empty()) {
        FiniteGroup target = parse_hom_target(hom_target);
        HomCount homs = count_homs(p, target, 120, threads);
        if (machine) {
            kv("hom_target", target.description);
            kv("homs", static_cast<long long>(homs.count));
        } else {
            std::cout << "homomorphisms to {" << target.description << "}: " << homs.count << "\n";
        }
    }
    return 0;
}

int cmd_stabilize(const std::string& fact_path, const std::string& cov_path, bool affine,
                  long bound) {
    Factorization f = load_factorization(fact_path);
    CoveringData cov = load_covering(cov_path);
    Presentation p = presentation(f, !affine);
    StabilizedPresentation s = stabilized(p, cov, bound);
    long added = static_cast<long>(s.presentation.relators.size() - p.relators.size());
    if (machine) {
        std::cout << "# approximate=" << (s.approximate ? 1 : 0) << "\n";
        std::cout << "# conjugator_bound=" << s.conjugator_bound << "\n";
        std::cout << "# added_relators=" << added << "\n";
        std::cout << print_presentation(s.presentation);
    } else {
        std::cout << "stabilized quotient: added "
                  << count_noun(added, "commutator relator", "commutator relators")
                  << " at conjugator bound " << s.conjugator_bound << "\n";
        std::cout << "quotient is "
                  << (s.approximate ? "approximate (deeper conjugators may add more relations)"
                                    : "exact (no disjoint-support pair is realizable)")
                  << "\n";
        AbelianGroup ab = abelianization(s.presentation);
        std::cout << "abelianization H₁ = " << ab.to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monodromy factorization calculus for braided plane curves"};
    app.require_subcommand(1);

    std::string format = "human";
    unsigned long seed = 0; // reserved: fixed default keeps randomized paths reproducible
    int threads = 1;
    app.add_option("--format", format, "output format: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--seed", seed, "seed for randomized subroutines (fixed default)");
    app.add_option("--threads", threads, "worker cap for parallel search/enumeration")
        ->check(CLI::PositiveNumber);

    std::string path_a, path_b, twist, hom_target;
    std::size_t max_states = 100000;
    long conjugator_bound = 2;
    bool affine = false, tietze = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a factorization multiplies to the full twist")->fallthrough();
    validate_cmd->add_option("fact", path_a, "factorization file")->required();

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "cheap Hurwitz invariants of a factorization")->fallthrough();
    invariants_cmd->add_option("fact", path_a, "factorization file")->required();

    CLI::App* hurwitz_cmd = app.add_subcommand("hurwitz", "bounded search for Hurwitz equivalence of two factorizations")->fallthrough();
    hurwitz_cmd->add_option("fact_a", path_a, "first factorization file")->required();
    hurwitz_cmd->add_option("fact_b", path_b, "second factorization file")->required();
    hurwitz_cmd->add_option("--max-states", max_states, "BFS state budget");

    CLI::App* cover_cmd = app.add_subcommand("cover", "compatibility of a covering with a factorization, fiber invariants")->fallthrough();
    cover_cmd->add_option("fact", path_a, "factorization file")->required();
    cover_cmd->add_option("cov", path_b, "covering file")->required();

    CLI::App* lift_cmd = app.add_subcommand("lift", "homological lifts of the factors to the covering fiber")->fallthrough();
    lift_cmd->add_option("fact", path_a, "factorization file")->required();
    lift_cmd->add_option("cov", path_b, "covering file")->required();

    CLI::App* lefschetz_cmd = app.add_subcommand("lefschetz", "invariants of a fibration from its vanishing-cycle data")->fallthrough();
    lefschetz_cmd->add_option("lf", path_a, "fibration file")->required();

    CLI::App* fibersum_cmd = app.add_subcommand("fibersum", "fiber sum of two fibrations, optionally twisted")->fallthrough();
    fibersum_cmd->add_option("lf_a", path_a, "first fibration file")->required();
    fibersum_cmd->add_option("lf_b", path_b, "second fibration file")->required();
    fibersum_cmd->add_option("--twist", twist, "τ-word applied to the second fibration's cycles");

    CLI::App* vankampen_cmd = app.add_subcommand("vankampen", "fundamental-group presentation of the curve complement")->fallthrough();
    vankampen_cmd->add_option("fact", path_a, "factorization file")->required();
    vankampen_cmd->add_flag("--affine", affine, "affine complement (skip the projective relator)");
    vankampen_cmd->add_flag("--tietze", tietze, "also report the Tietze-simplified presentation");
    vankampen_cmd->add_option("--hom-target", hom_target, "count homomorphisms into this group, e.g. \"perm 3: (1 2) (1 3)\"");

    CLI::App* stabilize_cmd = app.add_subcommand("stabilize", "stabilized quotient presentation over a covering")->fallthrough();
    stabilize_cmd->add_option("fact", path_a, "factorization file")->required();
    stabilize_cmd->add_option("cov", path_b, "covering file")->required();
    stabilize_cmd->add_flag("--affine", affine, "affine complement (skip the projective relator)");
    stabilize_cmd->add_option("--conjugator-bound", conjugator_bound, "conjugator word length bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    machine = (format == "machine");
    (void)seed;

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(path_a);
        if (app.got_subcommand(invariants_cmd)) return cmd_invariants(path_a);
        if (app.got_subcommand(hurwitz_cmd)) return cmd_hurwitz(path_a, path_b, max_states, threads);
        if (app.got_subcommand(cover_cmd)) return cmd_cover(path_a, path_b);
        if (app.got_subcommand(lift_cmd)) return cmd_lift(path_a, path_b);
        if (app.got_subcommand(lefschetz_cmd)) return cmd_lefschetz(path_a);
        if (app.got_subcommand(fibersum_cmd)) return cmd_fibersum(path_a, path_b, twist);
        if (app.got_subcommand(vankampen_cmd))
            return cmd_vankampen(path_a, affine, hom_target, tietze, threads);
        if (app.got_subcommand(stabilize_cmd))
            return cmd_stabilize(path_a, path_b, affine, conjugator_bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
            case ErrorKind::BoundExceeded: return 2;
            case ErrorKind::Mismatch:
            case ErrorKind::InvalidFactor:
            case ErrorKind::NotCancellingPair: return 1;
            default: return 3; // MalformedInput, NotClosed, Internal
        }
    }
    return 3;
}
