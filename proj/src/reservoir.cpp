#include "dfrc/reservoir.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "dfrc/errors.hpp"

namespace dfrc {

DelayLine::DelayLine(std::size_t length) : buffer_(length, 0.0) {
    if (length == 0) throw ConfigError("delay line length must be at least 1");
}

DelayLine reset(const ReservoirConfig& config) {
    if (config.n_virtual == 0) throw ConfigError("n_virtual must be at least 1");
    return DelayLine(config.n_virtual);
}

namespace {

void check_node_timing(const ReservoirConfig& config) {
    if (const auto* mr = std::get_if<SiliconMRParams>(&config.node)) {
        if (mr->theta_s != config.theta_s) {
            throw ConfigError("node slot width does not match reservoir theta");
        }
        if (!(mr->tau_ph_s > 0.0) || !(mr->theta_s > 0.0)) {
            throw ConfigError("microring time constants must be positive");
        }
        if (mr->gamma < 0.0 || mr->gamma > 1.0) {
            throw ConfigError("loop attenuation gamma must lie in [0, 1]");
        }
    }
}

double step_one(double u, double sf, double sp, const SiliconMRParams& p) {
    return mr_step(u, sf, sp, p);
}
double step_one(double u, double sf, double sp, const MackeyGlassParams& p) {
    return mg_step(u, sf, sp, p);
}
double step_one(double u, double sf, double sp, const MZIParams& p) {
    return mzi_step(u, sf, sp, p);
}

}  // namespace

StateMatrix run_reservoir(const MaskedStream& stream, const ReservoirConfig& config) {
    const std::size_t n = config.n_virtual;
    if (n == 0) throw ConfigError("n_virtual must be at least 1");
    if (stream.n_virtual != n) {
        throw ConfigError("masked stream was built for n_virtual " +
                          std::to_string(stream.n_virtual) + ", reservoir expects " +
                          std::to_string(n));
    }
    if (stream.values.empty() || stream.values.size() % n != 0) {
        throw ConfigError("masked stream length must be a nonzero multiple of n_virtual");
    }
    const std::size_t samples = stream.values.size() / n;
    if (config.washout >= samples) {
        throw ConfigError("washout " + std::to_string(config.washout) +
                          " leaves no rows from " + std::to_string(samples) + " samples");
    }
    check_node_timing(config);

    StateMatrix out;
    out.rows = samples - config.washout;
    out.cols = n;
    out.data.resize(out.rows * out.cols);

    std::visit([&](const auto& params) {
        const std::size_t skip = config.washout * n;
        DelayLine feedback = reset(config);
        double s_prev = 0.0;
        std::size_t write = 0;
        for (std::size_t j = 0; j < stream.values.size(); ++j) {
            const double s_fb = feedback.read();
            const double s = step_one(stream.values[j], s_fb, s_prev, params);
            if (!std::isfinite(s)) throw StateDivergenceError(j, s_prev);
            feedback.push(s);
            s_prev = s;
            if (j >= skip) out.data[write++] = s;
        }
    }, config.node);

    return out;
}

void write_state_csv(const StateMatrix& states, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (std::size_t c = 0; c < states.cols; ++c) {
        if (c) out.put(',');
        out << 's' << c;
    }
    out.put('\n');
    char buf[32];
    for (std::size_t r = 0; r < states.rows; ++r) {
        for (std::size_t c = 0; c < states.cols; ++c) {
            if (c) out.put(',');
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), states.at(r, c));
            out.write(buf, end - buf);
        }
        out.put('\n');
    }
    if (!out) throw IoError("failed writing " + path.string());
}

StateMatrix read_state_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header in " + path.string(), 1);

    StateMatrix m;
    m.cols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t col = 0;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p <= end && col < m.cols) {
            const char* comma = std::find(p, end, ',');
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(p, comma, v);
            if (ec != std::errc{}) {
                throw ParseError("bad number in " + path.string(), lineno);
            }
            m.data.push_back(v);
            ++col;
            p = comma + 1;
        }
        if (col != m.cols) throw ParseError("wrong column count in " + path.string(), lineno);
        ++m.rows;
    }
    return m;
}

}  // namespace dfrc
