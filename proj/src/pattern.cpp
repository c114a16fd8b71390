#include "qgc/pattern.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgc {

void Signal::add_term(std::size_t round, std::size_t index) {
    terms.emplace_back(round, index);
}

void Signal::normalize() {
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

std::vector<std::pair<std::size_t, std::size_t>> MeasurementPattern::outputs() const {
    std::vector<std::vector<bool>> used(rows + 1, std::vector<bool>(cols + 1, false));
    for (const auto& rd : rounds)
        for (const auto& m : rd) used[m.r][m.c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 1; r <= rows; ++r)
        for (std::size_t c = 1; c <= cols; ++c)
            if (!used[r][c]) out.emplace_back(r, c);
    return out;
}

void MeasurementPattern::validate() const {
    std::vector<std::vector<int>> seen(rows + 1, std::vector<int>(cols + 1, 0));
    auto check_site = [&](std::size_t r, std::size_t c) {
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw std::runtime_error("pattern: site out of range");
    };
    auto check_signal = [&](const Signal& s, std::size_t current_round) {
        for (const auto& [rd, idx] : s.terms) {
            if (rd < 1 || rd > rounds.size() || (current_round && rd >= current_round))
                throw std::runtime_error("pattern: signal references a non-earlier round");
            if (idx >= rounds[rd - 1].size())
                throw std::runtime_error("pattern: signal index out of range");
        }
    };
    for (std::size_t k = 0; k < rounds.size(); ++k)
        for (const auto& m : rounds[k]) {
            check_site(m.r, m.c);
            if (seen[m.r][m.c]++) throw std::runtime_error("pattern: site measured twice");
            if (m.basis != 'X' && m.basis != 'Y' && m.basis != 'Z')
                throw std::runtime_error("pattern: bad basis");
            check_signal(m.flip, k + 1);
            check_signal(m.sign, k + 1);
        }
    for (const auto& c : corrections) {
        check_site(c.r, c.c);
        if (seen[c.r][c.c]) throw std::runtime_error("pattern: correction on a measured site");
        if (c.pauli != 'X' && c.pauli != 'Y' && c.pauli != 'Z')
            throw std::runtime_error("pattern: bad correction Pauli");
        check_signal(c.signal, 0);
    }
}

PatternMetrics metrics(const MeasurementPattern& p) {
    PatternMetrics m;
    m.area = p.rows * p.cols;
    for (const auto& rd : p.rounds) {
        m.measurements += rd.size();
        if (!rd.empty()) ++m.rounds;
    }
    return m;
}

namespace {

std::string signal_str(const Signal& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [rd, idx] : s.terms) {
        if (!first) os << ',';
        os << 'm' << rd << '.' << idx;
        first = false;
    }
    if (s.constant) {
        if (!first) os << ',';
        os << '1';
    }
    return os.str();
}

struct Cursor {
    const std::string& text;
    std::size_t pos = 0, line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "pattern parse error at line " << line << ", column " << col << ": " << msg;
        throw std::runtime_error(os.str());
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') { ++line; col = 1; } else ++col;
        ++pos;
    }
    void skip_space() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
    void skip_blank_lines() {
        for (;;) {
            skip_space();
            if (done()) return;
            if (peek() == '#') {
                while (!done() && peek() != '\n') advance();
            } else if (peek() == '\n') {
                advance();
            } else {
                return;
            }
        }
    }
    std::string token() {
        skip_space();
        if (done() || peek() == '\n') fail("unexpected end of line");
        std::size_t start = pos;
        while (!done() && peek() != ' ' && peek() != '\t' && peek() != '\r' && peek() != '\n')
            advance();
        return text.substr(start, pos - start);
    }
    bool end_of_line() {
        skip_space();
        return done() || peek() == '\n';
    }
    void expect_eol() {
        if (!end_of_line()) fail("trailing characters");
        if (!done()) advance();
    }
    std::size_t number(const std::string& what) {
        std::string t = token();
        std::size_t v = 0;
        if (t.empty()) fail("expected " + what);
        for (char ch : t) {
            if (ch < '0' || ch > '9') fail("expected " + what + ", got '" + t + "'");
            v = v * 10 + std::size_t(ch - '0');
        }
        return v;
    }
};

Signal parse_signal(Cursor& cur, const std::string& body) {
    Signal s;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) { cur.fail(msg + " in '" + body + "'"); };
    while (i < body.size()) {
        if (body[i] == '1') {
            s.constant = !s.constant;
            ++i;
        } else if (body[i] == 'm') {
            ++i;
            std::size_t rd = 0, idx = 0;
            if (i >= body.size() || !isdigit(body[i])) fail("expected round number");
            while (i < body.size() && isdigit(body[i])) rd = rd * 10 + (body[i++] - '0');
            if (i >= body.size() || body[i] != '.') fail("expected '.'");
            ++i;
            if (i >= body.size() || !isdigit(body[i])) fail("expected outcome index");
            while (i < body.size() && isdigit(body[i])) idx = idx * 10 + (body[i++] - '0');
            s.terms.emplace_back(rd, idx);
        } else {
            fail("bad signal term");
        }
        if (i < body.size()) {
            if (body[i] != ',') fail("expected ','");
            ++i;
            if (i == body.size()) fail("dangling ','");
        }
    }
    s.normalize();
    return s;
}

}  // namespace

std::string serialize_pattern(const MeasurementPattern& p) {
    std::ostringstream os;
    os << "lattice " << p.rows << ' ' << p.cols << '\n';
    for (std::size_t k = 0; k < p.rounds.size(); ++k) {
        os << "round " << (k + 1) << '\n';
        for (const auto& m : p.rounds[k]) {
            os << "M " << m.r << ' ' << m.c << ' ' << m.basis;
            if (!m.flip.trivial()) os << " flip:" << signal_str(m.flip);
            if (!m.sign.trivial()) os << " sign:" << signal_str(m.sign);
            os << '\n';
        }
    }
    for (const auto& c : p.corrections)
        os << "C " << c.r << ' ' << c.c << ' ' << c.pauli << ' ' << signal_str(c.signal) << '\n';
    return os.str();
}

MeasurementPattern parse_pattern(const std::string& text) {
    Cursor cur{text};
    MeasurementPattern p;
    cur.skip_blank_lines();
    if (cur.token() != "lattice") cur.fail("expected 'lattice'");
    p.rows = cur.number("row count");
    p.cols = cur.number("column count");
    cur.expect_eol();

    bool in_corrections = false;
    for (;;) {
        cur.skip_blank_lines();
        if (cur.done()) break;
        std::string kw = cur.token();
        if (kw == "round") {
            if (in_corrections) cur.fail("round after corrections");
            std::size_t k = cur.number("round number");
            if (k != p.rounds.size() + 1) cur.fail("rounds must be numbered consecutively");
            p.rounds.emplace_back();
            cur.expect_eol();
        } else if (kw == "M") {
            if (p.rounds.empty()) cur.fail("measurement before any round");
            if (in_corrections) cur.fail("measurement after corrections");
            MeasurementOp m;
            m.r = cur.number("row");
            m.c = cur.number("column");
            std::string b = cur.token();
            if (b != "X" && b != "Y" && b != "Z") cur.fail("bad basis '" + b + "'");
            m.basis = b[0];
            while (!cur.end_of_line()) {
                std::string t = cur.token();
                if (t.rfind("flip:", 0) == 0) m.flip = parse_signal(cur, t.substr(5));
                else if (t.rfind("sign:", 0) == 0) m.sign = parse_signal(cur, t.substr(5));
                else cur.fail("unknown measurement field '" + t + "'");
            }
            cur.expect_eol();
            p.rounds.back().push_back(m);
        } else if (kw == "C") {
            in_corrections = true;
            Correction c;
            c.r = cur.number("row");
            c.c = cur.number("column");
            std::string b = cur.token();
            if (b != "X" && b != "Y" && b != "Z") cur.fail("bad Pauli '" + b + "'");
            c.pauli = b[0];
            c.signal = parse_signal(cur, cur.token());
            cur.expect_eol();
            p.corrections.push_back(c);
        } else {
            cur.fail("unknown record '" + kw + "'");
        }
    }
    try {
        p.validate();
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string(e.what()) + " (while parsing)");
    }
    return p;
}

}  // namespace qgc
