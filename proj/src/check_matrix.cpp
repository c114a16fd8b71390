#include "qgc/check_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qgc {

BitMatrix CheckMatrix::x_block() const {
    BitMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i) m.row(i) = rows[i].x;
    return m;
}

BitMatrix CheckMatrix::z_block() const {
    BitMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i) m.row(i) = rows[i].z;
    return m;
}

bool is_valid_stabilizer(const CheckMatrix& cm) {
    for (const auto& r : cm.rows)
        if (r.n != cm.n || !r.is_hermitian()) return false;
    for (std::size_t i = 0; i < cm.d; ++i)
        for (std::size_t j = i + 1; j < cm.d; ++j)
            if (symplectic_product(cm.rows[i], cm.rows[j])) return false;
    // independence of the (x|z) rows
    BitMatrix m(cm.d, 2 * cm.n);
    for (std::size_t i = 0; i < cm.d; ++i) {
        for (std::size_t q = 0; q < cm.n; ++q) {
            m.set(i, q, cm.rows[i].x.get(q));
            m.set(i, cm.n + q, cm.rows[i].z.get(q));
        }
    }
    return rank(m) == cm.d;
}

std::optional<int> group_sign_of(const CheckMatrix& cm, const PauliOp& p) {
    if (p.n != cm.n) throw std::invalid_argument("group_sign_of: size mismatch");
    // Solve for the generator combination matching p's bits.
    BitMatrix a(2 * cm.n, cm.d);
    for (std::size_t j = 0; j < cm.d; ++j) {
        for (std::size_t q = 0; q < cm.n; ++q) {
            a.set(q, j, cm.rows[j].x.get(q));
            a.set(cm.n + q, j, cm.rows[j].z.get(q));
        }
    }
    BitVec b(2 * cm.n);
    for (std::size_t q = 0; q < cm.n; ++q) {
        b.set(q, p.x.get(q));
        b.set(cm.n + q, p.z.get(q));
    }
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    PauliOp prod(cm.n);
    for (std::size_t j = 0; j < cm.d; ++j)
        if (sol->get(j)) prod = multiply(prod, cm.rows[j]);
    int diff = ((prod.phase - p.phase) % 4 + 4) % 4;
    if (diff == 0) return 0;
    if (diff == 2) return 1;
    throw std::logic_error("group_sign_of: non-Hermitian phase difference");
}

bool group_equal(const CheckMatrix& a, const CheckMatrix& b) {
    if (a.n != b.n || a.d != b.d) return false;
    for (const auto& r : b.rows) {
        auto s = group_sign_of(a, r);
        if (!s || *s != 0) return false;
    }
    // equal generator counts with independent rows => equal groups, but a may
    // have dependent rows; verify the reverse direction too.
    for (const auto& r : a.rows) {
        auto s = group_sign_of(b, r);
        if (!s || *s != 0) return false;
    }
    return true;
}

namespace {

struct Cursor {
    std::istringstream in;
    explicit Cursor(const std::string& text) : in(text) {}
    // next non-empty line with comments stripped
    std::optional<std::string> next_line() {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = line.find_last_not_of(" \t\r");
            return line.substr(a, b - a + 1);
        }
        return std::nullopt;
    }
};

}  // namespace

CheckMatrix parse_check_matrix(const std::string& text) {
    Cursor cur(text);
    auto header = cur.next_line();
    if (!header) throw std::runtime_error("check matrix: missing header line");
    std::istringstream hs(*header);
    long long n = -1, d = -1;
    if (!(hs >> n >> d) || n < 0 || d < 0 || d > n)
        throw std::runtime_error("check matrix: bad header '" + *header + "'");
    CheckMatrix cm{static_cast<std::size_t>(n), static_cast<std::size_t>(d)};
    for (std::size_t i = 0; i < cm.d; ++i) {
        auto line = cur.next_line();
        if (!line) throw std::runtime_error("check matrix: missing generator row");
        std::istringstream ls(*line);
        std::string body, sign_tok;
        ls >> body;
        int sign = 0;
        if (ls >> sign_tok) {
            if (sign_tok == "+") sign = 0;
            else if (sign_tok == "-") sign = 1;
            else throw std::runtime_error("check matrix: bad sign token '" + sign_tok + "'");
        }
        auto bar = body.find('|');
        if (bar == std::string::npos)
            throw std::runtime_error("check matrix: row missing '|': " + *line);
        std::string xs = body.substr(0, bar), zs = body.substr(bar + 1);
        if (xs.size() != cm.n || zs.size() != cm.n)
            throw std::runtime_error("check matrix: row width mismatch: " + *line);
        PauliOp row(cm.n);
        row.x = BitVec::parse(xs);
        row.z = BitVec::parse(zs);
        row.set_sign(sign);
        cm.rows[i] = row;
    }
    return cm;
}

std::string serialize_check_matrix(const CheckMatrix& cm) {
    std::ostringstream out;
    out << cm.n << ' ' << cm.d << '\n';
    for (const auto& r : cm.rows)
        out << r.x.str() << '|' << r.z.str() << ' ' << (r.sign() ? '-' : '+') << '\n';
    return out.str();
}

}  // namespace qgc
