#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dfrc/errors.hpp"
#include "dfrc/experiment.hpp"

namespace dfrc {

namespace {

using nlohmann::json;

// Scalar-or-array grid values.
template <typename T>
std::vector<T> grid_values(const json& j, const char* key, std::vector<T> fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    std::vector<T> out;
    if (v.is_array()) {
        for (const auto& item : v) out.push_back(item.get<T>());
    } else {
        out.push_back(v.get<T>());
    }
    if (out.empty()) throw ConfigError(std::string("grid '") + key + "' is empty");
    return out;
}

void parse_task(const json& j, TaskSpec& task) {
    task.name = j.value("name", task.name);
    task.length = j.value("length", task.length);
    task.train_len = j.value("train_len", task.train_len);
    task.test_len = j.value("test_len", task.test_len);
    task.santa_fe_path = j.value("santa_fe_path", task.santa_fe_path);
    if (j.contains("snr_db")) task.snr_grid_db = grid_values<double>(j, "snr_db", {});
}

void parse_node(const json& j, ExperimentConfig& config) {
    NodeSpec& node = config.node;
    node.kind = j.value("kind", node.kind);
    node.gamma = j.value("gamma", node.gamma);
    config.tau_ph_ps_grid = grid_values<double>(j, "tau_ph_ps", config.tau_ph_ps_grid);
    if (j.contains("mr")) {
        const json& mr = j.at("mr");
        if (mr.contains("variant")) {
            node.mr_variant = mr_variant_from_name(mr.at("variant").get<std::string>());
        } else if (mr.value("symmetric_decay", false)) {
            node.mr_variant = MrVariant::SymmetricDecay;
        }
    }
    if (j.contains("mg")) {
        const json& mg = j.at("mg");
        node.mg.eta = mg.value("eta", node.mg.eta);
        node.mg.gamma_in = mg.value("gamma_in", node.mg.gamma_in);
        node.mg.exponent_p = mg.value("exponent_p", node.mg.exponent_p);
        node.mg.theta_over_t = mg.value("theta_over_t", node.mg.theta_over_t);
    }
    if (j.contains("mzi")) {
        const json& mzi = j.at("mzi");
        node.mzi.phase_bias = mzi.value("phase_bias", node.mzi.phase_bias);
        node.mzi.gain = mzi.value("gain", node.mzi.gain);
        node.mzi.gamma = mzi.value("gamma", node.mzi.gamma);
    }
}

ComponentPower parse_component(const json& j) {
    ComponentPower c;
    c.name = j.value("name", std::string("component"));
    c.energy_j_per_bit = j.value("energy_j_per_bit", 0.0);
    c.fixed_power_w = j.value("fixed_power_w", 0.0);
    c.rate_bits_per_s = j.value("rate_bits_per_s", 0.0);
    return c;
}

PowerParams parse_power(const json& j) {
    PowerParams p;
    if (j.contains("preset")) {
        const auto name = j.at("preset").get<std::string>();
        if (name == "silicon_mr") {
            p = silicon_mr_power_preset();
        } else if (name == "all_optical_mzi") {
            p = all_optical_mzi_power_preset();
        } else {
            throw ConfigError("unknown power preset '" + name + "'");
        }
    }
    p.insertion_loss_db = j.value("insertion_loss_db", p.insertion_loss_db);
    p.coupling_loss_db = j.value("coupling_loss_db", p.coupling_loss_db);
    p.splitter_loss_db = j.value("splitter_loss_db", p.splitter_loss_db);
    p.dynamic_range_db = j.value("dynamic_range_db", p.dynamic_range_db);
    p.pd_sensitivity_dbm = j.value("pd_sensitivity_dbm", p.pd_sensitivity_dbm);
    p.laser_wallplug_efficiency =
        j.value("laser_wallplug_efficiency", p.laser_wallplug_efficiency);
    p.signal_rate_bits_per_s = j.value("signal_rate_bits_per_s", p.signal_rate_bits_per_s);
    p.fsr_nm = j.value("fsr_nm", p.fsr_nm);
    if (j.contains("reference_total_mw")) {
        p.reference_total_mw = j.at("reference_total_mw").get<double>();
    }
    if (j.contains("components")) {
        p.components.clear();
        for (const auto& item : j.at("components")) p.components.push_back(parse_component(item));
    }
    return p;
}

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig config;
    if (j.contains("task")) parse_task(j.at("task"), config.task);
    if (j.contains("reservoir")) {
        const json& r = j.at("reservoir");
        config.n_grid = grid_values<std::size_t>(r, "n_virtual", config.n_grid);
        config.theta_ps = r.value("theta_ps", config.theta_ps);
        config.washout = r.value("washout", config.washout);
    }
    if (j.contains("node")) parse_node(j.at("node"), config);
    if (j.contains("mask")) {
        const json& m = j.at("mask");
        config.mask.order = m.value("order", config.mask.order);
        config.mask.amplitude = m.value("amplitude", config.mask.amplitude);
        config.mask.seed = m.value("seed", config.mask.seed);
        if (m.contains("alphabet")) {
            config.mask.alphabet = mask_alphabet_from_name(m.at("alphabet").get<std::string>());
        }
    }
    if (j.contains("input")) {
        const json& i = j.at("input");
        config.input.gain = i.value("gain", config.input.gain);
        if (i.contains("normalize")) {
            config.input.normalize =
                input_normalize_from_name(i.at("normalize").get<std::string>());
        }
    }
    if (j.contains("readout")) {
        const json& r = j.at("readout");
        config.readout.ridge = r.value("ridge", config.readout.ridge);
        config.readout.with_bias = r.value("with_bias", config.readout.with_bias);
    }
    config.seeds = grid_values<std::uint64_t>(j, "seeds", config.seeds);
    if (j.contains("timing")) {
        config.regression_time_s =
            j.at("timing").value("regression_time_s", config.regression_time_s);
    }
    if (j.contains("power")) config.power = parse_power(j.at("power"));
    if (j.contains("output")) {
        const json& o = j.at("output");
        config.out_dir = o.value("dir", config.out_dir);
        config.export_dir = o.value("export_dir", config.export_dir);
    }
    config.jobs = j.value("jobs", config.jobs);
    return config;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return parse_config(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str());
}

}  // namespace dfrc
