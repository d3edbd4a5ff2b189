#include "tttk/io/tensor_file.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace tttk::io {

namespace {
constexpr char kMagic[4] = {'T', 'T', 'T', 'K'};
constexpr std::uint32_t kVersion = 1;

// payload is little-endian on disk; this toolkit targets little-endian hosts
static_assert(sizeof(float) == 4 && sizeof(double) == 8);

template <typename T>
void write_raw(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& is, const std::string& path) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::invalid_argument("tensor file truncated: " + path);
    return v;
}
}  // namespace

std::size_t TensorData::element_count() const {
    std::size_t n = 1;
    for (auto d : dims) n *= static_cast<std::size_t>(d);
    return dims.empty() ? 0 : n;
}

void write_tensor(const std::string& path, const TensorData& t) {
    if (t.dtype != 1 && t.dtype != 2) throw std::invalid_argument("write_tensor: bad dtype");
    const std::size_t n = t.element_count();
    if ((t.dtype == 1 && t.f32.size() != n) || (t.dtype == 2 && t.f64.size() != n))
        throw std::invalid_argument("write_tensor: payload size does not match dims");

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::invalid_argument("write_tensor: cannot open " + path);
    os.write(kMagic, 4);
    write_raw(os, kVersion);
    write_raw(os, t.dtype);
    write_raw(os, static_cast<std::uint32_t>(t.dims.size()));
    for (auto d : t.dims) write_raw(os, d);
    if (t.dtype == 1)
        os.write(reinterpret_cast<const char*>(t.f32.data()), static_cast<std::streamsize>(n * 4));
    else
        os.write(reinterpret_cast<const char*>(t.f64.data()), static_cast<std::streamsize>(n * 8));
    if (!os) throw std::runtime_error("write_tensor: short write to " + path);
}

TensorData read_tensor(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("read_tensor: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::invalid_argument("read_tensor: " + path + " is not a TTTK tensor file");
    const auto version = read_raw<std::uint32_t>(is, path);
    if (version != kVersion)
        throw std::invalid_argument("read_tensor: unsupported version in " + path);
    TensorData t;
    t.dtype = read_raw<std::uint32_t>(is, path);
    if (t.dtype != 1 && t.dtype != 2)
        throw std::invalid_argument("read_tensor: bad dtype in " + path);
    const auto rank = read_raw<std::uint32_t>(is, path);
    if (rank > 8) throw std::invalid_argument("read_tensor: implausible rank in " + path);
    t.dims.resize(rank);
    for (auto& d : t.dims) d = read_raw<std::uint64_t>(is, path);
    const std::size_t n = t.element_count();
    if (t.dtype == 1) {
        t.f32.resize(n);
        is.read(reinterpret_cast<char*>(t.f32.data()), static_cast<std::streamsize>(n * 4));
    } else {
        t.f64.resize(n);
        is.read(reinterpret_cast<char*>(t.f64.data()), static_cast<std::streamsize>(n * 8));
    }
    if (!is) throw std::invalid_argument("read_tensor: " + path + " truncated payload");
    return t;
}

TensorData make_f64(std::vector<std::uint64_t> dims, std::vector<double> values) {
    TensorData t;
    t.dtype = 2;
    t.dims = std::move(dims);
    t.f64 = std::move(values);
    return t;
}

TensorData make_f32(std::vector<std::uint64_t> dims, std::vector<float> values) {
    TensorData t;
    t.dtype = 1;
    t.dims = std::move(dims);
    t.f32 = std::move(values);
    return t;
}

}  // namespace tttk::io
