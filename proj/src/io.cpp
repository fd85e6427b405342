#include "bmcalc/io.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <fstream>
#include <sstream>
#include <vector>

namespace bmc {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

// Comment-stripped, non-blank lines with their original 1-based numbers.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::string cur;
    int number = 1;
    auto flush = [&] {
        std::string body = cur;
        std::size_t hash = body.find('#');
        if (hash != std::string::npos) body.erase(hash);
        bool blank = true;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back({body, number});
        cur.clear();
        ++number;
    };
    for (char c : text) {
        if (c == '\n')
            flush();
        else if (c != '\r')
            cur.push_back(c);
    }
    if (!cur.empty()) flush();
    return out;
}

// Single-line cursor producing "<source>:<line>:<col>:" diagnostics.
class Cursor {
public:
    Cursor(const Line& line, const std::string& source)
        : text_(line.text), line_(line.number), source_(source) {}

    [[noreturn]] void error(std::size_t at, const std::string& msg) const {
        fail(ErrorKind::MalformedInput, source_ + ":" + std::to_string(line_) + ":" +
                                            std::to_string(at + 1) + ": " + msg);
    }
    [[noreturn]] void error_here(const std::string& msg) const { error(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }
    void advance() { ++pos_; }
    std::size_t pos() const { return pos_; }
    int line() const { return line_; }
    const std::string& source() const { return source_; }

    // Reads a bare keyword ([A-Za-z_]+) and checks it.
    void expect_keyword(const std::string& kw) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string got = text_.substr(start, pos_ - start);
        if (got != kw) error(start, "expected '" + kw + "'" + (got.empty() ? "" : ", got '" + got + "'"));
    }

    void expect_char(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            error_here(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Signed decimal integer; does not skip leading whitespace when tight=true
    // (used inside comma lists where spaces are not allowed).  Records the
    // token's start for error anchoring via last_at().
    long read_long(bool tight = false) {
        if (!tight) skip_ws();
        std::size_t start = pos_;
        last_at_ = start;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) error(start, "expected integer");
        long value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_)
            error(start, "integer out of range");
        return value;
    }

    std::size_t last_at() const { return last_at_; }

    void expect_end() {
        if (!at_end()) error_here("unexpected trailing content");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t last_at_ = 0;
    int line_;
    const std::string& source_;
};

[[noreturn]] void rethrow_at(const Cursor& c, std::size_t at, const Error& e) {
    fail(ErrorKind::MalformedInput, c.source() + ":" + std::to_string(c.line()) + ":" +
                                        std::to_string(at + 1) + ": " + e.what());
}

int to_int(Cursor& c, long v) {
    if (v < INT_MIN || v > INT_MAX) c.error(c.last_at(), "integer out of range");
    return static_cast<int>(v);
}

// key=value field openers: "conj=", "base=", ...
void expect_field(Cursor& c, const std::string& key) {
    c.expect_keyword(key);
    c.expect_char('=');
}

// '-' alone, or comma-separated signed integers with no interior spaces.
std::vector<int> read_comma_list(Cursor& c) {
    c.skip_ws();
    std::vector<int> out;
    if (c.peek() == '-' && !std::isdigit(static_cast<unsigned char>(c.peek2()))) {
        c.advance();
        return out;
    }
    out.push_back(to_int(c, c.read_long(true)));
    while (c.peek() == ',') {
        c.advance();
        out.push_back(to_int(c, c.read_long(true)));
    }
    return out;
}

} // namespace

Factorization parse_factorization(const std::string& text, const std::string& source) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        fail(ErrorKind::MalformedInput, source + ":1:1: expected 'degree' header");

    Cursor head(lines[0], source);
    head.expect_keyword("degree");
    int d = to_int(head, head.read_long());
    std::size_t dat = head.last_at();
    head.expect_end();

    std::vector<Factor> factors;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        Cursor c(lines[k], source);
        c.expect_keyword("factor");

        expect_field(c, "conj");
        c.skip_ws();
        std::size_t conj_at = c.pos();
        std::vector<int> conj = read_comma_list(c);

        expect_field(c, "base");
        int base = to_int(c, c.read_long());
        std::size_t base_at = c.last_at();

        expect_field(c, "exp");
        int exp = to_int(c, c.read_long());
        c.expect_end();

        BraidWord q;
        try {
            q = BraidWord(d, conj);
        } catch (const Error& e) {
            rethrow_at(c, conj_at, e);
        }
        try {
            factors.push_back(make_factor(d, q, base, exp));
        } catch (const Error& e) {
            rethrow_at(c, base_at, e);
        }
    }

    try {
        return make_factorization(d, std::move(factors));
    } catch (const Error& e) {
        Cursor c(lines[0], source);
        rethrow_at(c, dat, e);
    }
}

std::string print_factorization(const Factorization& f) {
    std::ostringstream out;
    out << "degree " << f.degree << "\n";
    for (const Factor& fac : f.factors) {
        out << "factor conj=";
        if (fac.conjugator.letters.empty()) {
            out << "-";
        } else {
            for (std::size_t i = 0; i < fac.conjugator.letters.size(); ++i) {
                if (i) out << ",";
                out << fac.conjugator.letters[i];
            }
        }
        out << " base=" << fac.base << " exp=" << fac.exponent << "\n";
    }
    return out.str();
}

CoveringData parse_covering(const std::string& text, const std::string& source) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.size() != 2)
        fail(ErrorKind::MalformedInput,
             source + ":1:1: expected exactly an 'N' line and a 'labels' line");

    Cursor head(lines[0], source);
    head.expect_keyword("N");
    int sheets = to_int(head, head.read_long());
    std::size_t nat = head.last_at();
    head.expect_end();

    Cursor c(lines[1], source);
    c.expect_keyword("labels");
    std::vector<Permutation> labels;
    while (!c.at_end()) {
        std::size_t open_at = c.pos();
        c.expect_char('(');
        int a = to_int(c, c.read_long());
        int b = to_int(c, c.read_long());
        c.expect_char(')');
        try {
            labels.push_back(Permutation::transposition(sheets, a, b));
        } catch (const Error& e) {
            rethrow_at(c, open_at, e);
        }
    }

    try {
        return make_covering(sheets, std::move(labels));
    } catch (const Error& e) {
        rethrow_at(head, nat, e);
    }
}

std::string print_covering(const CoveringData& cov) {
    std::ostringstream out;
    out << "N " << cov.sheets << "\nlabels";
    for (const Permutation& t : cov.labels) out << " " << t.to_string();
    out << "\n";
    return out.str();
}

LFibration parse_lfibration(const std::string& text, const std::string& source) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) fail(ErrorKind::MalformedInput, source + ":1:1: expected 'genus' header");

    Cursor head(lines[0], source);
    head.expect_keyword("genus");
    int genus = to_int(head, head.read_long());
    std::size_t gat = head.last_at();
    head.expect_end();
    if (genus < 0) head.error(gat, "genus must be non-negative");

    std::vector<std::vector<Int>> cycles;
    std::vector<bool> flags;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        Cursor c(lines[k], source);
        c.expect_keyword("cycle");
        std::vector<Int> cls;
        for (int i = 0; i < 2 * genus; ++i) cls.emplace_back(c.read_long());
        expect_field(c, "sep");
        long sep = c.read_long();
        if (sep != 0 && sep != 1) c.error(c.last_at(), "sep must be 0 or 1");
        c.expect_end();
        cycles.push_back(std::move(cls));
        flags.push_back(sep == 1);
    }

    try {
        return make_lfibration(genus, std::move(cycles), std::move(flags));
    } catch (const Error& e) {
        rethrow_at(head, gat, e);
    }
}

std::string print_lfibration(const LFibration& lf) {
    std::ostringstream out;
    out << "genus " << lf.genus << "\n";
    for (std::size_t k = 0; k < lf.count(); ++k) {
        out << "cycle";
        for (const Int& v : lf.cycles[k]) out << " " << v;
        out << " sep=" << (lf.separating_flags[k] ? 1 : 0) << "\n";
    }
    return out.str();
}

Presentation parse_presentation(const std::string& text, const std::string& source) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) fail(ErrorKind::MalformedInput, source + ":1:1: expected 'gens' header");

    Cursor head(lines[0], source);
    head.expect_keyword("gens");
    int n = to_int(head, head.read_long());
    std::size_t nat = head.last_at();
    head.expect_end();

    std::vector<FreeWord> relators;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        Cursor c(lines[k], source);
        c.expect_keyword("rel");
        std::vector<int> letters;
        c.skip_ws();
        std::size_t first_at = c.pos();
        if (!c.at_end() && c.peek() == '-' &&
            !std::isdigit(static_cast<unsigned char>(c.peek2()))) {
            c.advance(); // '-' = explicit empty relator
        } else {
            while (!c.at_end()) letters.push_back(to_int(c, c.read_long()));
        }
        c.expect_end();
        try {
            relators.push_back(reduce(n, letters));
        } catch (const Error& e) {
            rethrow_at(c, first_at, e);
        }
    }

    try {
        return make_presentation(n, std::move(relators));
    } catch (const Error& e) {
        rethrow_at(head, nat, e);
    }
}

std::string print_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "gens " << p.n_generators << "\n";
    for (const FreeWord& r : p.relators) out << "rel " << to_string(r) << "\n";
    return out.str();
}

FiniteGroup parse_hom_target(const std::string& text, long bound, const std::string& source) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.size() != 1)
        fail(ErrorKind::MalformedInput, source + ":1:1: expected a single 'perm' line");

    Cursor c(lines[0], source);
    c.expect_keyword("perm");
    int degree = to_int(c, c.read_long());
    std::size_t dat = c.last_at();
    c.expect_char(':');
    if (degree < 1) c.error(dat, "degree must be positive");

    std::vector<Permutation> gens;
    while (!c.at_end()) {
        if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
            c.expect_keyword("id");
            gens.push_back(Permutation::identity(degree));
            continue;
        }
        // One generator: adjacent cycles with no space in between.
        Permutation g = Permutation::identity(degree);
        for (;;) {
            std::size_t open_at = c.pos();
            c.expect_char('(');
            std::vector<int> entries;
            while (true) {
                c.skip_ws();
                if (c.peek() == ')') {
                    c.advance();
                    break;
                }
                long v = c.read_long();
                if (v < 1 || v > degree) c.error(c.last_at(), "cycle entry out of range");
                entries.push_back(static_cast<int>(v) - 1);
            }
            if (entries.size() < 2) c.error(open_at, "cycle needs at least two entries");
            std::vector<bool> seen(static_cast<std::size_t>(degree), false);
            for (int e : entries) {
                if (seen[static_cast<std::size_t>(e)]) c.error(open_at, "repeated entry in cycle");
                seen[static_cast<std::size_t>(e)] = true;
            }
            Permutation cyc = Permutation::identity(degree);
            for (std::size_t i = 0; i < entries.size(); ++i)
                cyc.map[static_cast<std::size_t>(entries[i])] = entries[(i + 1) % entries.size()];
            g = g * cyc;
            if (c.peek() != '(') break; // space or end: generator finished
        }
        gens.push_back(g);
    }

    return group_from_permutations(degree, gens, bound);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::MalformedInput, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(ErrorKind::MalformedInput, path + ": read error");
    return buf.str();
}

} // namespace bmc
