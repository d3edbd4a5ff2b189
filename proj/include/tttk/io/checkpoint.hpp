#ifndef TTTK_IO_CHECKPOINT_HPP
#define TTTK_IO_CHECKPOINT_HPP

#include <string>
#include <vector>

namespace tttk::io {

// Checkpoint container: magic "TTCK" | u64 header length | JSON header |
// f32 parameter payload (count recorded in the header).
struct Checkpoint {
    std::string header_json;
    std::vector<float> params;
};

void save_checkpoint(const std::string& path, const Checkpoint& ck);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace tttk::io

#endif
