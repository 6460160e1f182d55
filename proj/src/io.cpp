#include "capforge/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace capforge::io {

namespace {

void write_point(std::ostream& os, const pg::point& p) {
    for (unsigned i = 0; i < p.len; ++i) {
        if (i) os << ',';
        os << p.c[i];
    }
    os << '\n';
}

/// Splits "key=value"; throws parse_error unless the key matches.
std::string expect_kv(const std::string& token, const std::string& key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        throw parse_error("expected '" + key + "=<value>', got '" + token + "'");
    return token.substr(key.size() + 1);
}

unsigned parse_uint(const std::string& s, unsigned base = 10) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos, static_cast<int>(base));
    } catch (const std::exception&) {
        throw parse_error("not a number: '" + s + "'");
    }
    if (pos != s.size() || v > 0xFFFFFFFFul) throw parse_error("not a number: '" + s + "'");
    return static_cast<unsigned>(v);
}

pg::point parse_point_line(const std::string& line, unsigned coords, unsigned q) {
    pg::point p{};
    p.len = static_cast<std::uint8_t>(coords);
    std::stringstream ss(line);
    std::string tok;
    unsigned i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= coords) throw parse_error("too many coordinates in '" + line + "'");
        unsigned v = parse_uint(tok);
        if (v >= q) throw parse_error("coordinate " + tok + " out of range for q=" + std::to_string(q));
        p.c[i++] = static_cast<gf::elem>(v);
    }
    if (i != coords) throw parse_error("expected " + std::to_string(coords) + " coordinates in '" + line + "'");
    return p;
}

std::vector<pg::point> read_point_block(std::istream& is, std::size_t n, unsigned coords, unsigned q) {
    std::vector<pg::point> pts;
    pts.reserve(n);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        pts.push_back(parse_point_line(line, coords, q));
    }
    if (pts.size() != n)
        throw parse_error("header announces n=" + std::to_string(n) + " points but the file has " +
                          std::to_string(pts.size()));
    return pts;
}

std::vector<pg::point> sorted_by_rank(const pg::geometry& g, std::vector<pg::point> pts) {
    std::sort(pts.begin(), pts.end(),
              [&](const pg::point& a, const pg::point& b) { return g.rank(a) < g.rank(b); });
    return pts;
}

}  // namespace

std::string hex_string(unsigned v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

void write_arc(std::ostream& os, const pg::geometry& g, const arcs::plane_arc& K) {
    os << "arc q=" << g.q() << " n=" << K.pts.size() << " modulus=" << hex_string(g.field().modulus())
       << '\n';
    for (const auto& p : sorted_by_rank(g, K.pts)) write_point(os, p);
}

arc_data read_arc(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw parse_error("empty arc file");
    std::stringstream ss(header);
    std::string magic, qt, nt, mt;
    if (!(ss >> magic >> qt >> nt >> mt) || magic != "arc")
        throw parse_error("malformed arc header: '" + header + "'");
    std::string extra;
    if (ss >> extra) throw parse_error("trailing token in arc header: '" + extra + "'");
    arc_data d;
    d.q = parse_uint(expect_kv(qt, "q"));
    std::size_t n = parse_uint(expect_kv(nt, "n"));
    std::string mod = expect_kv(mt, "modulus");
    if (mod.size() < 3 || mod[0] != '0' || mod[1] != 'x') throw parse_error("modulus must be 0x-hex");
    d.modulus = parse_uint(mod.substr(2), 16);
    d.pts = read_point_block(is, n, 3, d.q);
    return d;
}

void write_cap(std::ostream& os, const pg::geometry& g, const caps::cap& C) {
    os << "cap N=" << C.N << " q=" << g.q() << " n=" << C.pts.size() << " provenance=" << C.provenance
       << " modulus=" << hex_string(g.field().modulus()) << '\n';
    for (const auto& p : sorted_by_rank(g, C.pts)) write_point(os, p);
}

cap_data read_cap(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw parse_error("empty cap file");
    std::stringstream ss(header);
    std::string magic, Nt, qt, nt, pt, mt;
    if (!(ss >> magic >> Nt >> qt >> nt >> pt >> mt) || magic != "cap")
        throw parse_error("malformed cap header: '" + header + "'");
    std::string extra;
    if (ss >> extra) throw parse_error("trailing token in cap header: '" + extra + "'");
    cap_data d;
    d.N = parse_uint(expect_kv(Nt, "N"));
    d.q = parse_uint(expect_kv(qt, "q"));
    std::size_t n = parse_uint(expect_kv(nt, "n"));
    d.provenance = expect_kv(pt, "provenance");
    std::string mod = expect_kv(mt, "modulus");
    if (mod.size() < 3 || mod[0] != '0' || mod[1] != 'x') throw parse_error("modulus must be 0x-hex");
    d.modulus = parse_uint(mod.substr(2), 16);
    if (d.N < 1 || d.N + 1 > 12) throw parse_error("unsupported dimension N=" + std::to_string(d.N));
    d.pts = read_point_block(is, n, d.N + 1, d.q);
    return d;
}

void write_code(std::ostream& os, const codes::linear_code_spec& code) {
    os << "code q=" << code.q << " n=" << code.n << " r=" << code.r << '\n';
    for (const auto& c : code.columns) write_point(os, c);
}

codes::linear_code_spec read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw parse_error("empty code file");
    std::stringstream ss(header);
    std::string magic, qt, nt, rt;
    if (!(ss >> magic >> qt >> nt >> rt) || magic != "code")
        throw parse_error("malformed code header: '" + header + "'");
    std::string extra;
    if (ss >> extra) throw parse_error("trailing token in code header: '" + extra + "'");
    codes::linear_code_spec code;
    code.q = parse_uint(expect_kv(qt, "q"));
    code.n = parse_uint(expect_kv(nt, "n"));
    code.r = parse_uint(expect_kv(rt, "r"));
    if (code.r < 1 || code.r > 12) throw parse_error("unsupported redundancy r=" + std::to_string(code.r));
    code.columns = read_point_block(is, code.n, code.r, code.q);
    return code;
}

}  // namespace capforge::io
