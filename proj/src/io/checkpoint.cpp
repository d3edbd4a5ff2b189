#include "tttk/io/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace tttk::io {

namespace {
constexpr char kMagic[4] = {'T', 'T', 'C', 'K'};
}

void save_checkpoint(const std::string& path, const Checkpoint& ck) {
    // param_count inside the header keeps the payload self-describing
    auto j = nlohmann::json::parse(ck.header_json);
    j["param_count"] = ck.params.size();
    const std::string header = j.dump(2);

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::invalid_argument("save_checkpoint: cannot open " + path);
    os.write(kMagic, 4);
    const std::uint64_t len = header.size();
    os.write(reinterpret_cast<const char*>(&len), 8);
    os.write(header.data(), static_cast<std::streamsize>(header.size()));
    os.write(reinterpret_cast<const char*>(ck.params.data()),
             static_cast<std::streamsize>(ck.params.size() * sizeof(float)));
    if (!os) throw std::runtime_error("save_checkpoint: short write to " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("load_checkpoint: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::invalid_argument("load_checkpoint: " + path + " is not a TTCK checkpoint");
    std::uint64_t len = 0;
    is.read(reinterpret_cast<char*>(&len), 8);
    if (!is || len > (1ULL << 30)) throw std::invalid_argument("load_checkpoint: bad header in " + path);
    Checkpoint ck;
    ck.header_json.resize(len);
    is.read(ck.header_json.data(), static_cast<std::streamsize>(len));
    if (!is) throw std::invalid_argument("load_checkpoint: truncated header in " + path);

    std::uint64_t count = 0;
    try {
        count = nlohmann::json::parse(ck.header_json).at("param_count").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("load_checkpoint: bad header JSON in " + path + ": " + e.what());
    }
    ck.params.resize(count);
    is.read(reinterpret_cast<char*>(ck.params.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    if (!is) throw std::invalid_argument("load_checkpoint: truncated payload in " + path);
    return ck;
}

}  // namespace tttk::io
