#ifndef TTTK_IO_TENSOR_FILE_HPP
#define TTTK_IO_TENSOR_FILE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tttk::io {

// Binary tensor container:
//   magic "TTTK" | version u32 | dtype u32 (1 = f32, 2 = f64) | rank u32 |
//   dims u64[rank] | payload, row-major little-endian.
struct TensorData {
    std::uint32_t dtype = 2;
    std::vector<std::uint64_t> dims;
    std::vector<float> f32;
    std::vector<double> f64;

    std::size_t element_count() const;
};

void write_tensor(const std::string& path, const TensorData& t);
TensorData read_tensor(const std::string& path);

TensorData make_f64(std::vector<std::uint64_t> dims, std::vector<double> values);
TensorData make_f32(std::vector<std::uint64_t> dims, std::vector<float> values);

}  // namespace tttk::io

#endif
