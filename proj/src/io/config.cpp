#include "tttk/io/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tttk::io {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw std::invalid_argument("config: unknown key '" + where + key + "'");
}

template <typename T>
void get_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument("config: cannot parse " + origin + ": " + e.what());
    }

    RunConfig cfg;
    reject_unknown(j, {"grid", "eikonal", "kernel", "dataset", "fbp", "net", "train", "threads"}, "");

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        reject_unknown(g, {"n_cart", "n_theta", "n_rho", "n_s"}, "grid.");
        get_if(g, "n_cart", cfg.pipeline.n_cart);
        get_if(g, "n_theta", cfg.pipeline.n_theta);
        get_if(g, "n_rho", cfg.pipeline.n_rho);
        get_if(g, "n_s", cfg.pipeline.n_s);
    }
    if (j.contains("eikonal")) {
        const auto& e = j.at("eikonal");
        reject_unknown(e, {"tol", "max_sweeps", "outside_slowness", "m0"}, "eikonal.");
        get_if(e, "tol", cfg.pipeline.sweep.tol);
        get_if(e, "max_sweeps", cfg.pipeline.sweep.max_sweeps);
        get_if(e, "outside_slowness", cfg.pipeline.outside_slowness);
        get_if(e, "m0", cfg.pipeline.m0);
    }
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        reject_unknown(k, {"n_quad"}, "kernel.");
        get_if(k, "n_quad", cfg.kernel_n_quad);
    }
    if (j.contains("dataset")) {
        const auto& d = j.at("dataset");
        reject_unknown(d, {"kind", "n_e", "n_samples", "delta", "seed", "train_frac", "debug_zero_mtilde"},
                       "dataset.");
        if (d.contains("kind")) cfg.dataset.kind = inclusion_kind_from_string(d.at("kind").get<std::string>());
        get_if(d, "n_e", cfg.dataset.n_e);
        get_if(d, "n_samples", cfg.dataset.n_samples);
        get_if(d, "delta", cfg.dataset.delta);
        get_if(d, "seed", cfg.dataset.seed);
        get_if(d, "train_frac", cfg.train_frac);
        get_if(d, "debug_zero_mtilde", cfg.dataset.debug_zero_mtilde);
    }
    if (j.contains("fbp")) {
        const auto& f = j.at("fbp");
        reject_unknown(f, {"epsilon", "epsilon_rel", "cg_tol", "cg_max_iter"}, "fbp.");
        get_if(f, "epsilon", cfg.fbp.epsilon);
        get_if(f, "epsilon_rel", cfg.fbp.epsilon_rel);
        get_if(f, "cg_tol", cfg.fbp.cg_tol);
        get_if(f, "cg_max_iter", cfg.fbp.cg_max_iter);
    }
    if (j.contains("net")) {
        const auto& n = j.at("net");
        reject_unknown(n, {"c", "c2", "window2d", "n_cnn", "n_cnn2", "levels", "local_window", "init_seed"},
                       "net.");
        get_if(n, "c", cfg.net.c);
        get_if(n, "c2", cfg.net.c2);
        get_if(n, "window2d", cfg.net.window2d);
        get_if(n, "n_cnn", cfg.net.n_cnn);
        get_if(n, "n_cnn2", cfg.net.n_cnn2);
        get_if(n, "levels", cfg.net.levels);
        get_if(n, "local_window", cfg.net.local_window);
        get_if(n, "init_seed", cfg.net.init_seed);
    }
    if (j.contains("train")) {
        const auto& t = j.at("train");
        reject_unknown(t,
                       {"initial_batch", "max_batch", "initial_lr", "final_lr", "epochs_first_stage",
                        "epochs_per_stage", "seed"},
                       "train.");
        get_if(t, "initial_batch", cfg.train.initial_batch);
        get_if(t, "max_batch", cfg.train.max_batch);
        get_if(t, "initial_lr", cfg.train.initial_lr);
        get_if(t, "final_lr", cfg.train.final_lr);
        get_if(t, "epochs_first_stage", cfg.train.epochs_first_stage);
        get_if(t, "epochs_per_stage", cfg.train.epochs_per_stage);
        get_if(t, "seed", cfg.train.seed);
    }
    get_if(j, "threads", cfg.threads);

    cfg.pipeline.n_threads = cfg.threads;
    cfg.fbp.n_threads = cfg.threads;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str(), path);
}

std::string default_config_text() {
    const json j = {
        {"grid", {{"n_cart", 96}, {"n_theta", 64}, {"n_rho", 32}, {"n_s", 64}}},
        {"eikonal",
         {{"tol", 1e-8}, {"max_sweeps", 1000}, {"outside_slowness", 100.0}, {"m0", 1.0}}},
        {"kernel", {{"n_quad", 0}}},
        {"dataset",
         {{"kind", "negative"},
          {"n_e", 2},
          {"n_samples", 2048},
          {"delta", 0.0},
          {"seed", 1},
          {"train_frac", 0.75},
          {"debug_zero_mtilde", false}}},
        {"fbp", {{"epsilon", 0.0}, {"epsilon_rel", 1e-4}, {"cg_tol", 1e-10}, {"cg_max_iter", 2000}}},
        {"net",
         {{"c", 16},
          {"c2", 0},
          {"window2d", 3},
          {"n_cnn", 6},
          {"n_cnn2", 5},
          {"levels", 0},
          {"local_window", 5},
          {"init_seed", 0}}},
        {"train",
         {{"initial_batch", 32},
          {"max_batch", 128},
          {"initial_lr", 1e-3},
          {"final_lr", 1e-4},
          {"epochs_first_stage", 20},
          {"epochs_per_stage", 20},
          {"seed", 0}}},
        {"threads", 0},
    };
    return j.dump(2) + "\n";
}

}  // namespace tttk::io
