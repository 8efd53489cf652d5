#include "ect/mesh_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ect {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Splits into non-empty lines with their 1-based numbers, dropping comments
// (# everywhere, OFF also allows nothing else).
struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Rational parse_coord(const std::string& tok, const Integer& denom_bound, std::size_t line) {
    try {
        return quantize_rational(parse_rational(tok), denom_bound);
    } catch (const std::invalid_argument&) {
        fail(line, "bad coordinate '" + tok + "'");
    }
}

long long parse_index(const std::string& tok, std::size_t line) {
    // OBJ allows v/vt/vn triples; only the vertex index matters here.
    std::string head = tok.substr(0, tok.find('/'));
    try {
        std::size_t used = 0;
        long long idx = std::stoll(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
        return idx;
    } catch (const std::exception&) {
        fail(line, "bad vertex index '" + tok + "'");
    }
}

SimplicialComplex parse_off(const std::vector<Line>& lines, const Integer& denom_bound) {
    std::size_t at = 0;
    if (lines.empty()) throw std::runtime_error("line 1: empty OFF file");
    if (lines[at].tokens.size() == 1 && lines[at].tokens[0] == "OFF") ++at;
    if (at >= lines.size() || lines[at].tokens.size() != 3)
        fail(at < lines.size() ? lines[at].number : lines.back().number,
             "expected OFF header 'nv nf ne'");
    std::size_t nv = 0, nf = 0;
    try {
        nv = std::stoull(lines[at].tokens[0]);
        nf = std::stoull(lines[at].tokens[1]);
    } catch (const std::exception&) {
        fail(lines[at].number, "malformed OFF header");
    }
    ++at;

    std::vector<Point> vertices;
    vertices.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i, ++at) {
        if (at >= lines.size()) fail(lines.back().number, "truncated vertex list");
        const auto& ln = lines[at];
        Point p;
        for (const auto& tok : ln.tokens) p.push_back(parse_coord(tok, denom_bound, ln.number));
        if (!vertices.empty() && p.size() != vertices.front().size())
            fail(ln.number, "inconsistent vertex dimension");
        vertices.push_back(std::move(p));
    }

    std::vector<std::vector<std::size_t>> faces;
    faces.reserve(nf);
    for (std::size_t i = 0; i < nf; ++i, ++at) {
        if (at >= lines.size()) fail(lines.back().number, "truncated face list");
        const auto& ln = lines[at];
        std::size_t count = static_cast<std::size_t>(parse_index(ln.tokens[0], ln.number));
        if (ln.tokens.size() != count + 1) fail(ln.number, "face vertex count mismatch");
        std::vector<std::size_t> face;
        for (std::size_t j = 1; j < ln.tokens.size(); ++j) {
            long long idx = parse_index(ln.tokens[j], ln.number);
            if (idx < 0 || static_cast<std::size_t>(idx) >= nv)
                fail(ln.number, "vertex index out of range");
            face.push_back(static_cast<std::size_t>(idx));
        }
        faces.push_back(std::move(face));
    }
    if (faces.empty()) {
        // Pure point clouds still form a valid 0-complex.
        for (std::size_t i = 0; i < nv; ++i) faces.push_back({i});
    }
    return SimplicialComplex::build(std::move(vertices), faces);
}

SimplicialComplex parse_obj(const std::vector<Line>& lines, const Integer& denom_bound) {
    std::vector<Point> vertices;
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& ln : lines) {
        if (ln.tokens[0] == "v") {
            if (ln.tokens.size() < 3) fail(ln.number, "vertex needs at least 2 coordinates");
            Point p;
            for (std::size_t j = 1; j < ln.tokens.size(); ++j)
                p.push_back(parse_coord(ln.tokens[j], denom_bound, ln.number));
            if (!vertices.empty() && p.size() != vertices.front().size())
                fail(ln.number, "inconsistent vertex dimension");
            vertices.push_back(std::move(p));
        } else if (ln.tokens[0] == "f") {
            if (ln.tokens.size() > 4) fail(ln.number, "triangulate first");
            if (ln.tokens.size() < 2) fail(ln.number, "empty face");
            std::vector<std::size_t> face;
            for (std::size_t j = 1; j < ln.tokens.size(); ++j) {
                long long idx = parse_index(ln.tokens[j], ln.number);
                // OBJ is 1-based; negative indices count from the end.
                if (idx < 0) idx += static_cast<long long>(vertices.size()) + 1;
                if (idx < 1 || static_cast<std::size_t>(idx) > vertices.size())
                    fail(ln.number, "vertex index out of range");
                face.push_back(static_cast<std::size_t>(idx - 1));
            }
            faces.push_back(std::move(face));
        }
        // other record types (vn, vt, o, g, s, mtllib, ...) are ignored
    }
    if (vertices.empty()) throw std::runtime_error("line 1: no vertices");
    if (faces.empty())
        for (std::size_t i = 0; i < vertices.size(); ++i) faces.push_back({i});
    return SimplicialComplex::build(std::move(vertices), faces);
}

}  // namespace

Rational quantize_rational(const Rational& q, const Integer& denom_bound) {
    if (denom_bound <= 0) throw std::invalid_argument("denominator bound must be positive");
    if (denom_bound % den(q) == 0) return q;
    Integer scaled_num = num(q) * denom_bound;
    Integer d = den(q);
    // round half away from zero
    Integer r = scaled_num >= 0 ? floor_div(2 * scaled_num + d, 2 * d)
                                : -floor_div(-2 * scaled_num + d, 2 * d);
    return Rational(r, denom_bound);
}

SimplicialComplex parse_mesh_text(const std::string& text, MeshFormat format,
                                  const Integer& denom_bound) {
    auto lines = tokenize(text);
    return format == MeshFormat::Off ? parse_off(lines, denom_bound)
                                     : parse_obj(lines, denom_bound);
}

SimplicialComplex parse_mesh(const std::string& path, MeshFormat format,
                             const Integer& denom_bound) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mesh_text(buf.str(), format, denom_bound);
}

MeshFormat mesh_format_from_path(const std::string& path) {
    auto dotpos = path.rfind('.');
    std::string ext = dotpos == std::string::npos ? "" : path.substr(dotpos);
    if (ext == ".off") return MeshFormat::Off;
    if (ext == ".obj") return MeshFormat::Obj;
    throw std::runtime_error("unknown mesh extension '" + ext + "'");
}

}  // namespace ect
