#include "tttk/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "tttk/io/tensor_file.hpp"
#include "tttk/parallel.hpp"
#include "tttk/rng.hpp"

namespace tttk {

using nlohmann::json;

std::vector<float> polar_to_theta_major(const PolarField& f) {
    const std::size_t nt = f.grid.n_theta, nr = f.grid.n_rho;
    std::vector<float> out(nt * nr);
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t k = 0; k < nr; ++k) out[j * nr + k] = static_cast<float>(f.at(j, k));
    return out;
}

Mat background_sheared_times(const PipelineConfig& cfg) {
    SlownessField m0(cfg.cart_grid(), cfg.m0);
    const SlownessField masked = outside_mask_apply(m0, cfg.outside_slowness);
    return shear(forward_measurement(masked, cfg.ring(), cfg.sweep, cfg.n_threads));
}

Mat sample_measurement(const std::vector<Ellipse>& ellipses, const PipelineConfig& cfg,
                       const Mat& u0_sheared) {
    SlownessField m(cfg.cart_grid(), cfg.m0);
    const CartesianField mt = rasterize_cartesian(ellipses, m.grid);
    for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] += mt.values[i];
    const SlownessField masked = outside_mask_apply(m, cfg.outside_slowness);
    const Mat u = shear(forward_measurement(masked, cfg.ring(), cfg.sweep, cfg.n_threads));
    return differential(u, u0_sheared);
}

Dataset generate_dataset(const DatasetSpec& spec, const PipelineConfig& cfg, double train_frac) {
    if (spec.n_samples == 0) throw std::invalid_argument("generate_dataset: n_samples must be > 0");
    if (cfg.n_s != cfg.n_theta)
        throw std::invalid_argument("generate_dataset: network layout expects n_s == n_theta");

    Dataset ds;
    ds.spec = spec;
    ds.pipeline = cfg;
    ds.n_train = static_cast<std::size_t>(train_frac * static_cast<double>(spec.n_samples));
    ds.d.assign(spec.n_samples * ds.d_stride(), 0.0f);
    ds.m.assign(spec.n_samples * ds.m_stride(), 0.0f);
    ds.ellipses.resize(spec.n_samples);

    const Mat u0 = background_sheared_times(cfg);
    ds.u0 = u0.v;

    const PolarGrid pg = cfg.polar_grid();
    parallel_for(
        spec.n_samples,
        [&](std::size_t i) {
            std::vector<Ellipse> es;
            try {
                es = sample_ellipses(spec, i);
                if (spec.debug_zero_mtilde)
                    for (auto& e : es) e.amplitude = 0.0;

                const PolarField label = rasterize(es, pg);
                const auto lab = polar_to_theta_major(label);
                std::copy(lab.begin(), lab.end(), ds.m.begin() + i * ds.m_stride());

                Measurement meas;
                meas.d = sample_measurement(es, cfg, u0);
                meas.u0 = u0;
                meas.sheared = true;
                if (spec.delta > 0)
                    meas = add_noise(meas, spec.delta, u0, mix64(spec.seed) ^ mix64(i + 1));

                float* out = ds.d.data() + i * ds.d_stride();
                for (std::size_t t = 0; t < meas.d.v.size(); ++t)
                    out[t] = static_cast<float>(meas.d.v[t]);
            } catch (const std::exception& e) {
                throw std::runtime_error("sample " + std::to_string(i) + ": " + e.what());
            }
            ds.ellipses[i] = std::move(es);
        },
        cfg.n_threads);
    return ds;
}

namespace {

json pipeline_to_json(const PipelineConfig& p) {
    return json{{"n_cart", p.n_cart},
                {"n_theta", p.n_theta},
                {"n_rho", p.n_rho},
                {"n_s", p.n_s},
                {"outside_slowness", p.outside_slowness},
                {"m0", p.m0},
                {"sweep_tol", p.sweep.tol},
                {"max_sweeps", p.sweep.max_sweeps}};
}

PipelineConfig pipeline_from_json(const json& j) {
    PipelineConfig p;
    p.n_cart = j.at("n_cart").get<std::size_t>();
    p.n_theta = j.at("n_theta").get<std::size_t>();
    p.n_rho = j.at("n_rho").get<std::size_t>();
    p.n_s = j.at("n_s").get<std::size_t>();
    p.outside_slowness = j.at("outside_slowness").get<double>();
    p.m0 = j.at("m0").get<double>();
    p.sweep.tol = j.at("sweep_tol").get<double>();
    p.sweep.max_sweeps = j.at("max_sweeps").get<std::size_t>();
    return p;
}

}  // namespace

void save_dataset(const Dataset& ds, const std::string& dir) {
    std::filesystem::create_directories(dir);

    json ellipses = json::array();
    for (const auto& sample : ds.ellipses) {
        json row = json::array();
        for (const auto& e : sample)
            row.push_back(json{{"cx", e.cx},
                               {"cy", e.cy},
                               {"a", e.a},
                               {"b", e.b},
                               {"angle", e.angle},
                               {"amplitude", e.amplitude}});
        ellipses.push_back(std::move(row));
    }
    const json manifest = {
        {"format", "tttk-dataset"},
        {"format_version", 1},
        {"kind", to_string(ds.spec.kind)},
        {"n_e", ds.spec.n_e},
        {"n_samples", ds.spec.n_samples},
        {"n_train", ds.n_train},
        {"delta", ds.spec.delta},
        {"seed", ds.spec.seed},
        {"debug_zero_mtilde", ds.spec.debug_zero_mtilde},
        {"amplitude_negative", -0.5},
        {"amplitude_positive", 2.0},
        {"pipeline", pipeline_to_json(ds.pipeline)},
        {"files", {{"d", "d.tttk"}, {"m", "m.tttk"}, {"u0", "u0.tttk"}}},
        {"ellipses", std::move(ellipses)},
    };
    std::ofstream os(dir + "/manifest.json");
    if (!os) throw std::invalid_argument("save_dataset: cannot write manifest in " + dir);
    os << manifest.dump(2) << '\n';

    const auto n = static_cast<std::uint64_t>(ds.spec.n_samples);
    io::write_tensor(dir + "/d.tttk",
                     io::make_f32({n, ds.pipeline.n_s, ds.pipeline.n_s}, ds.d));
    io::write_tensor(dir + "/m.tttk",
                     io::make_f32({n, ds.pipeline.n_theta, ds.pipeline.n_rho}, ds.m));
    io::write_tensor(dir + "/u0.tttk",
                     io::make_f64({ds.pipeline.n_s, ds.pipeline.n_s}, ds.u0));
}

Dataset load_dataset(const std::string& dir) {
    std::ifstream is(dir + "/manifest.json");
    if (!is) throw std::invalid_argument("load_dataset: cannot open manifest in " + dir);
    json manifest;
    try {
        is >> manifest;
    } catch (const json::exception& e) {
        throw std::invalid_argument("load_dataset: bad manifest in " + dir + ": " + e.what());
    }

    Dataset ds;
    ds.spec.kind = inclusion_kind_from_string(manifest.at("kind").get<std::string>());
    ds.spec.n_e = manifest.at("n_e").get<std::size_t>();
    ds.spec.n_samples = manifest.at("n_samples").get<std::size_t>();
    ds.spec.delta = manifest.at("delta").get<double>();
    ds.spec.seed = manifest.at("seed").get<std::uint64_t>();
    ds.spec.debug_zero_mtilde = manifest.at("debug_zero_mtilde").get<bool>();
    ds.n_train = manifest.at("n_train").get<std::size_t>();
    ds.pipeline = pipeline_from_json(manifest.at("pipeline"));

    for (const auto& row : manifest.at("ellipses")) {
        std::vector<Ellipse> sample;
        for (const auto& je : row) {
            Ellipse e;
            e.cx = je.at("cx").get<double>();
            e.cy = je.at("cy").get<double>();
            e.a = je.at("a").get<double>();
            e.b = je.at("b").get<double>();
            e.angle = je.at("angle").get<double>();
            e.amplitude = je.at("amplitude").get<double>();
            sample.push_back(e);
        }
        ds.ellipses.push_back(std::move(sample));
    }

    const auto d = io::read_tensor(dir + "/" + manifest.at("files").at("d").get<std::string>());
    const auto m = io::read_tensor(dir + "/" + manifest.at("files").at("m").get<std::string>());
    const auto u0 = io::read_tensor(dir + "/" + manifest.at("files").at("u0").get<std::string>());
    if (d.dtype != 1 || m.dtype != 1 || u0.dtype != 2)
        throw std::invalid_argument("load_dataset: unexpected dtypes in " + dir);
    ds.d = d.f32;
    ds.m = m.f32;
    ds.u0 = u0.f64;
    if (ds.d.size() != ds.spec.n_samples * ds.d_stride() ||
        ds.m.size() != ds.spec.n_samples * ds.m_stride())
        throw std::invalid_argument("load_dataset: tensor shapes disagree with manifest in " + dir);
    return ds;
}

}  // namespace tttk
