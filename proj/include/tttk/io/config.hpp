#ifndef TTTK_IO_CONFIG_HPP
#define TTTK_IO_CONFIG_HPP

#include <cstdint>
#include <string>

#include "tttk/dataset.hpp"
#include "tttk/fbp.hpp"

namespace tttk::io {

struct NetConfig {
    std::size_t c = 16;
    std::size_t c2 = 0;           // 0: use c
    std::size_t window2d = 3;
    std::size_t n_cnn = 6;
    std::size_t n_cnn2 = 5;
    std::size_t levels = 0;       // 0: deepest level count the grid admits
    std::size_t local_window = 5;
    std::uint64_t init_seed = 0;
};

struct TrainScheduleConfig {
    std::size_t initial_batch = 32;
    std::size_t max_batch = 128;
    double initial_lr = 1e-3;
    double final_lr = 1e-4;
    std::size_t epochs_first_stage = 20;
    std::size_t epochs_per_stage = 20;
    std::uint64_t seed = 0;
};

/// Whole-experiment configuration; a single JSON document with one section
/// per module.  Unknown keys are rejected so typos cannot silently fall
/// back to defaults.
struct RunConfig {
    PipelineConfig pipeline;
    std::size_t kernel_n_quad = 0;  // 0: adaptive default
    DatasetSpec dataset;
    double train_frac = 0.75;
    FbpConfig fbp;
    NetConfig net;
    TrainScheduleConfig train;
    std::size_t threads = 0;
};

RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);
std::string default_config_text();

}  // namespace tttk::io

#endif
