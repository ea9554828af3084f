#include "modnet/pgm.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "modnet/errors.hpp"

namespace modnet {

namespace {

// Header tokens are separated by whitespace; '#' starts a comment that
// runs to end of line.
std::string next_header_token(std::istream& in, const std::filesystem::path& path) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) return token;
            continue;
        }
        token.push_back(static_cast<char>(c));
    }
    if (token.empty()) throw FormatError("truncated graymap header: " + path.string());
    return token;
}

long parse_header_int(std::istream& in, const std::filesystem::path& path) {
    std::string token = next_header_token(in, path);
    try {
        std::size_t used = 0;
        long value = std::stol(token, &used);
        if (used != token.size() || value < 0) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw FormatError("bad integer '" + token + "' in graymap header: " + path.string());
    }
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    std::string magic = next_header_token(in, path);
    if (magic != "P2" && magic != "P5") throw FormatError("not a P2/P5 graymap: " + path.string());

    long cols = parse_header_int(in, path);
    long rows = parse_header_int(in, path);
    long maxval = parse_header_int(in, path);
    if (cols < 1 || rows < 1) throw FormatError("empty graymap: " + path.string());
    if (maxval < 1 || maxval > 65535) throw FormatError("unsupported maxval in " + path.string());

    GrayImage img;
    img.rows = static_cast<std::size_t>(rows);
    img.cols = static_cast<std::size_t>(cols);
    img.pixels.resize(img.rows * img.cols);

    if (magic == "P2") {
        for (double& px : img.pixels) {
            long v = parse_header_int(in, path);
            if (v > maxval) throw FormatError("sample above maxval in " + path.string());
            px = static_cast<double>(v) / static_cast<double>(maxval);
        }
    } else {
        // Binary raster begins after a single whitespace byte.
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw(img.pixels.size() * bytes_per_sample);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size())
            throw FormatError("truncated raster in " + path.string());
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            long v = bytes_per_sample == 1
                         ? raw[i]
                         : (static_cast<long>(raw[2 * i]) << 8) | raw[2 * i + 1];  // big-endian
            if (v > maxval) throw FormatError("sample above maxval in " + path.string());
            img.pixels[i] = static_cast<double>(v) / static_cast<double>(maxval);
        }
    }
    return img;
}

GrayImage area_resample(const GrayImage& src, std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw ShapeError("target size must be positive");

    GrayImage out;
    out.rows = rows;
    out.cols = cols;
    out.pixels.resize(rows * cols);

    const double row_scale = static_cast<double>(src.rows) / static_cast<double>(rows);
    const double col_scale = static_cast<double>(src.cols) / static_cast<double>(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const double y0 = static_cast<double>(r) * row_scale;
        const double y1 = static_cast<double>(r + 1) * row_scale;
        for (std::size_t c = 0; c < cols; ++c) {
            const double x0 = static_cast<double>(c) * col_scale;
            const double x1 = static_cast<double>(c + 1) * col_scale;
            double acc = 0.0;
            for (std::size_t sy = static_cast<std::size_t>(y0); sy < src.rows && sy < y1; ++sy) {
                const double wy = std::min<double>(sy + 1, y1) - std::max<double>(sy, y0);
                if (wy <= 0.0) continue;
                for (std::size_t sx = static_cast<std::size_t>(x0); sx < src.cols && sx < x1; ++sx) {
                    const double wx = std::min<double>(sx + 1, x1) - std::max<double>(sx, x0);
                    if (wx <= 0.0) continue;
                    acc += wy * wx * src.at(sy, sx);
                }
            }
            out.pixels[r * cols + c] = acc / ((y1 - y0) * (x1 - x0));
        }
    }
    return out;
}

void write_pgm_scaled(const Matrix& values, const std::filesystem::path& path) {
    if (values.size() == 0) throw ShapeError("cannot write an empty graymap");

    double lo = values.data.front(), hi = values.data.front();
    for (double v : values.data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << "P2\n" << values.cols << " " << values.rows << "\n255\n";
    for (std::size_t r = 0; r < values.rows; ++r) {
        for (std::size_t c = 0; c < values.cols; ++c) {
            long gray = hi > lo ? std::lround((values(r, c) - lo) / (hi - lo) * 255.0) : 0;
            out << gray << (c + 1 == values.cols ? "" : " ");
        }
        out << "\n";
    }
    if (!out.flush()) throw IoError("write failed: " + path.string());
}

}  // namespace modnet
