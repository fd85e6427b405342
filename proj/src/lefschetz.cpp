#include "bmcalc/lefschetz.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bmc {

namespace {

bool is_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

LFibration make_lfibration(int genus, std::vector<std::vector<Int>> cycles,
                           std::vector<bool> separating_flags) {
    if (genus < 0) fail(ErrorKind::MalformedInput, "negative genus");
    if (cycles.size() != separating_flags.size())
        fail(ErrorKind::Mismatch, "fibration: " + std::to_string(cycles.size()) +
                                      " cycles but " + std::to_string(separating_flags.size()) +
                                      " separating flags");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].size() != static_cast<std::size_t>(2 * genus))
            fail(ErrorKind::Mismatch,
                 "fibration: cycle " + std::to_string(i + 1) + " has " +
                     std::to_string(cycles[i].size()) + " coordinates, expected " +
                     std::to_string(2 * genus));
        if (separating_flags[i] && !is_zero(cycles[i]))
            fail(ErrorKind::MalformedInput,
                 "fibration: cycle " + std::to_string(i + 1) +
                     " is flagged separating but has a nonzero class");
        if (!separating_flags[i] && is_zero(cycles[i]))
            fail(ErrorKind::MalformedInput,
                 "fibration: cycle " + std::to_string(i + 1) +
                     " is flagged non-separating but its class is zero");
    }
    LFibration l;
    l.genus = genus;
    l.cycles = std::move(cycles);
    l.separating_flags = std::move(separating_flags);
    return l;
}

FibSumTwist make_fib_sum_twist(const IntMatrix& matrix, int genus) {
    if (!is_symplectic(matrix, genus))
        fail(ErrorKind::MalformedInput, "fiber-sum twist is not symplectic for genus " +
                                            std::to_string(genus));
    return FibSumTwist{matrix};
}

long long euler_characteristic(const LFibration& l) {
    return 2LL * (2 - 2 * l.genus) + static_cast<long long>(l.count());
}

AbelianGroup total_space_h1(const LFibration& l) {
    IntMatrix m(2 * l.genus, static_cast<long>(l.count()));
    for (long j = 0; j < m.cols; ++j)
        for (long i = 0; i < m.rows; ++i)
            m.at(i, j) = l.cycles[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return cokernel(m);
}

LFibration fiber_sum(const LFibration& l1, const LFibration& l2,
                     const std::optional<FibSumTwist>& twist) {
    if (l1.genus != l2.genus)
        fail(ErrorKind::Mismatch, "fiber sum: genus " + std::to_string(l1.genus) + " vs " +
                                      std::to_string(l2.genus));
    long n = 2 * l1.genus;
    if (twist && (twist->matrix.rows != n || twist->matrix.cols != n))
        fail(ErrorKind::Mismatch, "fiber sum: twist size does not match genus " +
                                      std::to_string(l1.genus));
    std::vector<std::vector<Int>> cycles = l1.cycles;
    for (const auto& c : l2.cycles) {
        if (!twist) {
            cycles.push_back(c);
            continue;
        }
        std::vector<Int> tc(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            Int s = 0;
            for (long k = 0; k < n; ++k)
                s += twist->matrix.at(i, k) * c[static_cast<std::size_t>(k)];
            tc[static_cast<std::size_t>(i)] = s;
        }
        cycles.push_back(std::move(tc));
    }
    std::vector<bool> flags = l1.separating_flags;
    flags.insert(flags.end(), l2.separating_flags.begin(), l2.separating_flags.end());
    return make_lfibration(l1.genus, std::move(cycles), std::move(flags));
}

SpValidity sp_validity(const LFibration& l) {
    IntMatrix m = IntMatrix::identity(2 * l.genus);
    for (const auto& c : l.cycles) m = mul(m, transvection(c, l.genus));
    SpValidity r;
    r.identity = (m == IntMatrix::identity(2 * l.genus));
    r.product = std::move(m);
    return r;
}

namespace {

std::string report_failures(const CompatibilityReport& rep) {
    std::string why;
    auto note = [&why](const std::string& s) {
        if (!why.empty()) why += ", ";
        why += s;
    };
    if (!rep.degree_match) note("degree mismatch");
    if (!rep.labels_transitive) note("labels not transitive");
    if (!rep.closed) note("covering not closed");
    for (std::size_t i = 0; i < rep.local_ok.size(); ++i)
        if (!rep.local_ok[i]) note("factor " + std::to_string(i + 1) + " fails the local label rule");
    for (std::size_t i = 0; i < rep.global_ok.size(); ++i)
        if (!rep.global_ok[i]) note("factor " + std::to_string(i + 1) + " is not liftable");
    return why;
}

// Generator of the rank-<=1 column lattice of d: all columns must be integer
// multiples of one primitive vector v; the generator is gcd(multiples) * v,
// sign-normalized so its first nonzero coordinate is positive.  Returns
// nullopt when d = 0; throws Internal when the columns have rank > 1.
std::optional<std::vector<Int>> column_lattice_generator(const IntMatrix& d) {
    long pivot_col = -1;
    for (long j = 0; j < d.cols && pivot_col < 0; ++j)
        for (long i = 0; i < d.rows; ++i)
            if (d.at(i, j) != 0) {
                pivot_col = j;
                break;
            }
    if (pivot_col < 0) return std::nullopt;

    std::vector<Int> v(static_cast<std::size_t>(d.rows));
    Int content = 0;
    for (long i = 0; i < d.rows; ++i) {
        v[static_cast<std::size_t>(i)] = d.at(i, pivot_col);
        content = boost::multiprecision::gcd(content, v[static_cast<std::size_t>(i)]);
    }
    for (auto& x : v) x /= content;
    long i0 = 0;
    while (v[static_cast<std::size_t>(i0)] == 0) ++i0;

    Int g = 0;  // gcd of the multipliers column_j = lambda_j * v
    for (long j = 0; j < d.cols; ++j) {
        Int num = d.at(i0, j);
        Int lambda = num / v[static_cast<std::size_t>(i0)];
        if (lambda * v[static_cast<std::size_t>(i0)] != num)
            fail(ErrorKind::Internal, "tangency lift: column lattice has rank > 1");
        for (long i = 0; i < d.rows; ++i)
            if (d.at(i, j) != lambda * v[static_cast<std::size_t>(i)])
                fail(ErrorKind::Internal, "tangency lift: column lattice has rank > 1");
        g = boost::multiprecision::gcd(g, lambda);
    }
    for (auto& x : v) x *= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

}  // namespace

LFibration from_branch_data(const Factorization& f, const CoveringData& cov) {
    CompatibilityReport rep = check_compatibility(cov, f);
    if (!rep.ok())
        fail(ErrorKind::Mismatch,
             "branch data incompatible with the covering: " + report_failures(rep));

    CoverModel model = build_cover_model(cov);
    long n = model.homology.h1.free_rank;
    int genus = static_cast<int>(fiber_genus(cov).genus);
    if (n != 2 * genus)
        fail(ErrorKind::Internal, "fiber H1 rank does not match the genus");

    // Classes are reported in a symplectic basis of the fiber: the cup
    // product orients the fiber so that braid lifts of tangencies act as
    // I - c (c^T J); re-expressing everything with respect to -J turns them
    // into standard positive transvections I + c (c^T J0).
    IntMatrix basis, basis_inv;
    if (n > 0) {
        basis = symplectic_basis(neg(model.homology.intersection_form));
        basis_inv = inverse_unimodular(basis);
    }

    std::vector<std::vector<Int>> cycles;
    std::vector<bool> flags;
    IntMatrix eye = IntMatrix::identity(n);
    for (const Factor& factor : f.factors) {
        IntMatrix m = lift_homology(model, factor.word());
        if (n > 0) m = mul(basis_inv, mul(m, basis));
        if (factor.exponent == 1) {
            std::optional<std::vector<Int>> axis = column_lattice_generator(sub(m, eye));
            if (axis) {
                if (!(transvection(*axis, genus) == m))
                    fail(ErrorKind::Internal,
                         "tangency factor does not lift to a positive transvection");
                cycles.push_back(std::move(*axis));
                flags.push_back(false);
            } else {
                cycles.emplace_back(static_cast<std::size_t>(n), Int(0));
                flags.push_back(true);
            }
        } else if (!(m == eye)) {
            fail(ErrorKind::Internal, "node/cusp factor does not lift to the identity on H1");
        }
    }
    return make_lfibration(genus, std::move(cycles), std::move(flags));
}

}  // namespace bmc
