#include "ect/image_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ect {

namespace {

// Reads the next whitespace/comment-delimited PGM header token starting at
// `pos`; advances pos past the token.
std::string next_token(const std::string& data, std::size_t& pos) {
    while (pos < data.size()) {
        if (data[pos] == '#') {
            while (pos < data.size() && data[pos] != '\n') ++pos;
        } else if (std::isspace(static_cast<unsigned char>(data[pos]))) {
            ++pos;
        } else {
            break;
        }
    }
    std::size_t start = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
    if (start == pos) throw std::runtime_error("truncated image header");
    return data.substr(start, pos - start);
}

std::size_t to_size(const std::string& tok) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::runtime_error("bad image header token '" + tok + "'");
    }
}

ImageGrid parse_pgm(const std::string& data, bool binary) {
    std::size_t pos = 0;
    std::string magic = next_token(data, pos);
    if (magic != (binary ? "P5" : "P2"))
        throw std::runtime_error("expected " + std::string(binary ? "P5" : "P2") + " magic, got '" +
                                 magic + "'");
    std::size_t w = to_size(next_token(data, pos));
    std::size_t h = to_size(next_token(data, pos));
    std::size_t maxval = to_size(next_token(data, pos));
    if (w == 0 || h == 0 || maxval == 0) throw std::runtime_error("degenerate PGM dimensions");

    ImageGrid grid;
    grid.shape = {h, w};  // rows, then columns; scanline order matches
    grid.values.reserve(w * h);
    if (binary) {
        ++pos;  // the single whitespace byte after maxval
        std::size_t bytes = maxval > 255 ? 2 : 1;
        if (data.size() < pos + bytes * w * h) throw std::runtime_error("truncated PGM payload");
        for (std::size_t i = 0; i < w * h; ++i) {
            std::size_t v = static_cast<unsigned char>(data[pos + bytes * i]);
            if (bytes == 2) v = (v << 8) | static_cast<unsigned char>(data[pos + 2 * i + 1]);
            if (v > maxval) throw std::runtime_error("pixel exceeds maxval");
            grid.values.emplace_back(Integer(v), Integer(maxval));
        }
    } else {
        for (std::size_t i = 0; i < w * h; ++i) {
            std::size_t v;
            try {
                v = to_size(next_token(data, pos));
            } catch (const std::runtime_error&) {
                throw std::runtime_error("truncated PGM payload");
            }
            if (v > maxval) throw std::runtime_error("pixel exceeds maxval");
            grid.values.emplace_back(Integer(v), Integer(maxval));
        }
    }
    return grid;
}

ImageGrid parse_csv(const std::string& data) {
    ImageGrid grid;
    std::istringstream in(data);
    std::string line;
    std::size_t cols = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            auto b = cell.find_first_not_of(" \t\r");
            auto e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw std::runtime_error("empty CSV cell");
            row.push_back(parse_rational(cell.substr(b, e - b + 1)));
        }
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw std::runtime_error("ragged CSV rectangle");
        for (auto& v : row) grid.values.push_back(std::move(v));
        ++rows;
    }
    if (rows == 0) throw std::runtime_error("empty CSV image");
    grid.shape = {rows, cols};
    return grid;
}

}  // namespace

ImageGrid parse_image_text(const std::string& data, ImageFormat format) {
    switch (format) {
        case ImageFormat::PgmP2: return parse_pgm(data, false);
        case ImageFormat::PgmP5: return parse_pgm(data, true);
        case ImageFormat::Csv: return parse_csv(data);
    }
    throw std::logic_error("unreachable");
}

ImageGrid parse_image(const std::string& path, ImageFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_image_text(buf.str(), format);
}

ImageFormat image_format_from_path(const std::string& path, const std::string& data) {
    auto dotpos = path.rfind('.');
    std::string ext = dotpos == std::string::npos ? "" : path.substr(dotpos);
    if (ext == ".csv") return ImageFormat::Csv;
    if (ext == ".pgm") {
        if (data.rfind("P5", 0) == 0) return ImageFormat::PgmP5;
        return ImageFormat::PgmP2;
    }
    throw std::runtime_error("unknown image extension '" + ext + "'");
}

}  // namespace ect
