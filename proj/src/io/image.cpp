#include "tttk/io/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "tttk/interpolate.hpp"

namespace tttk::io {

namespace {

void write_sidecar(const std::string& path, double vmin, double vmax, const char* colormap) {
    std::ofstream os(path + ".json");
    if (!os) throw std::invalid_argument("image sidecar: cannot write " + path + ".json");
    os << nlohmann::json{{"vmin", vmin}, {"vmax", vmax}, {"colormap", colormap}}.dump(2) << '\n';
}

std::ofstream open_image(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::invalid_argument("image: cannot write " + path);
    return os;
}

}  // namespace

void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<double>& v) {
    if (v.size() != width * height) throw std::invalid_argument("write_pgm: size mismatch");
    double lo = v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
    double hi = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    const double span = hi > lo ? hi - lo : 1.0;

    auto os = open_image(path);
    os << "P5\n" << width << " " << height << "\n255\n";
    std::vector<unsigned char> row(width);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x)
            row[x] = static_cast<unsigned char>(std::lround(255.0 * (v[y * width + x] - lo) / span));
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(width));
    }
    write_sidecar(path, lo, hi, "gray");
}

void write_ppm_diverging(const std::string& path, std::size_t width, std::size_t height,
                         const std::vector<double>& v, double vmax) {
    if (v.size() != width * height) throw std::invalid_argument("write_ppm_diverging: size mismatch");
    if (vmax <= 0.0)
        for (double x : v) vmax = std::max(vmax, std::abs(x));

    auto os = open_image(path);
    os << "P6\n" << width << " " << height << "\n255\n";
    std::vector<unsigned char> row(3 * width);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const double t = vmax > 0 ? std::clamp(v[y * width + x] / vmax, -1.0, 1.0) : 0.0;
            double r, g, b;
            if (t < 0) {  // toward blue
                r = 1.0 + t * (1.0 - 0.23);
                g = 1.0 + t * (1.0 - 0.30);
                b = 1.0 + t * (1.0 - 0.75);
            } else {  // toward red
                r = 1.0 - t * (1.0 - 0.70);
                g = 1.0 - t * (1.0 - 0.03);
                b = 1.0 - t * (1.0 - 0.15);
            }
            row[3 * x + 0] = static_cast<unsigned char>(std::lround(255.0 * r));
            row[3 * x + 1] = static_cast<unsigned char>(std::lround(255.0 * g));
            row[3 * x + 2] = static_cast<unsigned char>(std::lround(255.0 * b));
        }
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(3 * width));
    }
    write_sidecar(path, -vmax, vmax, "diverging-bwr");
}

std::vector<double> raster_polar(const PolarField& f, std::size_t n) {
    std::vector<double> img(n * n, 0.0);
    for (std::size_t y = 0; y < n; ++y) {
        const double py = 1.0 - 2.0 * static_cast<double>(y) / static_cast<double>(n - 1);
        for (std::size_t x = 0; x < n; ++x) {
            const double px = -1.0 + 2.0 * static_cast<double>(x) / static_cast<double>(n - 1);
            const double r = std::hypot(px, py);
            if (r <= 1.0) img[y * n + x] = bilinear_polar(f, std::atan2(py, px), r);
        }
    }
    return img;
}

std::vector<double> raster_cartesian(const CartesianField& f) {
    const std::size_t n = f.grid.n;
    std::vector<double> img(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) img[y * n + x] = f.at(x, n - 1 - y);
    return img;
}

std::vector<double> side_by_side(const std::vector<double>& left, const std::vector<double>& right,
                                 std::size_t n, std::size_t& out_width) {
    if (left.size() != n * n || right.size() != n * n)
        throw std::invalid_argument("side_by_side: panels must be n x n");
    const std::size_t gap = 4;
    out_width = 2 * n + gap;
    std::vector<double> img(out_width * n, 0.0);
    for (std::size_t y = 0; y < n; ++y) {
        std::copy_n(left.begin() + static_cast<long>(y * n), n, img.begin() + static_cast<long>(y * out_width));
        std::copy_n(right.begin() + static_cast<long>(y * n), n,
                    img.begin() + static_cast<long>(y * out_width + n + gap));
    }
    return img;
}

}  // namespace tttk::io
