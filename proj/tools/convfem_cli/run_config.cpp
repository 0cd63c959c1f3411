#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace convfem::cli {

namespace {

double parse_number(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw ConfigError(std::string("cannot parse ") + what + " from '" + text + "'");
    }
}

}  // namespace

std::optional<SineSpec> parse_forcing(const std::string& text) {
    if (text.empty() || text == "none") {
        return std::nullopt;
    }
    const std::string prefix = "sin:";
    if (text.rfind(prefix, 0) != 0) {
        throw ConfigError("forcing must be 'none' or 'sin:F0,OMEGA', got '" + text + "'");
    }
    const std::string body = text.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
        throw ConfigError("forcing must be 'sin:F0,OMEGA', got '" + text + "'");
    }
    SineSpec spec;
    spec.f0 = parse_number(body.substr(0, comma), "forcing amplitude");
    spec.omega = parse_number(body.substr(comma + 1), "forcing frequency");
    if (!(spec.omega > 0.0)) {
        throw ConfigError("forcing frequency must be positive");
    }
    return spec;
}

SchemeChoice parse_scheme(const std::string& text) {
    if (text == "fem") return SchemeChoice::fem;
    if (text == "onestep") return SchemeChoice::onestep;
    if (text == "both") return SchemeChoice::both;
    throw ConfigError("scheme must be fem, onestep or both, got '" + text + "'");
}

RunConfig load_config_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("JSON config must be an object");
    }
    RunConfig cfg;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "m") cfg.m = value.get<double>();
            else if (key == "k") cfg.k = value.get<double>();
            else if (key == "u0") cfg.u0 = value.get<double>();
            else if (key == "v0") cfg.v0 = value.get<double>();
            else if (key == "horizon") cfg.horizon = value.get<double>();
            else if (key == "tau") cfg.tau = value.get<double>();
            else if (key == "n") cfg.n = value.get<long long>();
            else if (key == "scheme") cfg.scheme = parse_scheme(value.get<std::string>());
            else if (key == "output") cfg.output = value.get<std::string>();
            else if (key == "emit_exact") cfg.emit_exact = value.get<bool>();
            else if (key == "forcing") {
                if (value.is_null()) {
                    cfg.forcing.reset();
                } else if (value.is_string()) {
                    cfg.forcing = parse_forcing(value.get<std::string>());
                } else if (value.is_object()) {
                    SineSpec spec{value.at("f0").get<double>(), value.at("omega").get<double>()};
                    if (!(spec.omega > 0.0)) {
                        throw ConfigError("forcing frequency must be positive");
                    }
                    cfg.forcing = spec;
                } else {
                    throw ConfigError("forcing must be a string or an {f0, omega} object");
                }
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad value in JSON config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_json(buf.str());
}

std::size_t resolve_element_count(const RunConfig& config) {
    if (!(config.horizon > 0.0) || !std::isfinite(config.horizon)) {
        throw ConfigError("horizon (--t-end) must be positive");
    }
    if (config.tau.has_value() == config.n.has_value()) {
        throw ConfigError("give exactly one of tau and n");
    }
    if (config.n) {
        if (*config.n < 1) {
            throw ConfigError("n must be at least 1");
        }
        return static_cast<std::size_t>(*config.n);
    }
    const double tau = *config.tau;
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw ConfigError("tau must be positive");
    }
    const double ratio = config.horizon / tau;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(rounded * tau - config.horizon) > 1e-9 * config.horizon) {
        throw ConfigError("tau must divide the horizon into a whole number of steps");
    }
    return static_cast<std::size_t>(rounded);
}

OscillatorProblem make_problem(const RunConfig& config) {
    try {
        Forcing forcing = config.forcing ? Forcing::sinusoid(config.forcing->f0, config.forcing->omega)
                                         : Forcing::zero();
        return OscillatorProblem(config.m, config.k, config.u0, config.v0, config.horizon,
                                 std::move(forcing));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace convfem::cli
