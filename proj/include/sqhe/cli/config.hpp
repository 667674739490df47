#pragma once

// Flat key = value scenario configuration. Every key has a default; a file
// and command-line overrides are layered on top, later layers winning.

#include "sqhe/core.hpp"
#include "sqhe/emp.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqhe::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KeySpec {
    const char* name;
    const char* fallback;
    const char* help;
};

inline const std::vector<KeySpec>& config_keys() {
    static const std::vector<KeySpec> keys{
        {"E1", "0.1", "energy of level 1 (= E2)"},
        {"E2", "0.1", "energy of level 2"},
        {"Eb", "0.4", "energy of level b"},
        {"Ea", "1.5", "energy of level a"},
        {"g", "1", "system-cavity coupling"},
        {"r", "0.7", "system-bath coupling"},
        {"tau", "0.5", "dephasing rate"},
        {"Th", "2", "hot bath temperature"},
        {"Tc", "0.5", "cold bath temperature"},
        {"Tl", "0.9", "cavity temperature"},
        {"x", "0", "cavity squeezing (x = 10 stands in for x -> infinity)"},
        {"xh", "0", "hot bath squeezing"},
        {"xc", "0", "cold bath squeezing"},
        {"ph", "0", "hot coherence parameter in [0, 1]"},
        {"pc", "0", "cold coherence parameter in [0, 1]"},
        {"t_final", "0", "steady: integration time (0 = 200/r)"},
        {"dt", "0", "steady: RK4 step (0 = 0.01/max(r, g^2 (Nl + 1)))"},
        {"stride", "100", "steady: record every stride-th step"},
        {"variable", "x", "emp: optimised parameter (x, xh, xc, Ea, ph)"},
        {"lower", "auto", "emp: lower bound (auto = variable default)"},
        {"upper", "auto", "emp: upper bound (auto = variable default)"},
        {"grid_points", "256", "emp: coarse scan points (>= 16)"},
        {"refine_tol", "1e-7", "emp: absolute tolerance on the argmax"},
        {"etaC_min", "0.05", "emp: first Carnot efficiency"},
        {"etaC_max", "0.6", "emp: last Carnot efficiency"},
        {"etaC_points", "12", "emp: number of Carnot efficiencies (0 = empty grid)"},
        {"eta_l_form", "standard", "emp: eta_L denominator (standard or intro)"},
        {"fit", "none", "emp: fit of emp vs etaC (none, linear, quadratic, sech)"},
        {"sweep_var", "x", "sweep: swept parameter (any engine or squeeze key)"},
        {"sweep_from", "0", "sweep: first value"},
        {"sweep_to", "5", "sweep: last value"},
        {"sweep_points", "51", "sweep: number of values"},
    };
    return keys;
}

inline bool is_config_key(const std::string& k) {
    for (const auto& s : config_keys()) {
        if (k == s.name) return true;
    }
    return false;
}

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

class Config {
public:
    Config() {
        for (const auto& k : config_keys()) values_[k.name] = k.fallback;
    }

    void set(const std::string& key, const std::string& value) {
        if (!is_config_key(key)) throw ConfigError("unknown configuration key '" + key + "'");
        values_[key] = trim(value);
        explicit_.insert(key);
    }

    /// "key=value"
    void set_assignment(const std::string& kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + kv + "'");
        set(trim(kv.substr(0, eq)), kv.substr(eq + 1));
    }

    /// Lines of `key = value`; blank lines and lines starting with '#' are skipped.
    void load_stream(std::istream& in, const std::string& origin) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            try {
                set_assignment(t);
            } catch (const ConfigError& e) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        load_stream(in, path);
    }

    const std::string& raw(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw ConfigError("unknown configuration key '" + key + "'");
        return it->second;
    }

    bool is_explicit(const std::string& key) const { return explicit_.count(key) > 0; }

    double number(const std::string& key) const {
        const auto& s = raw(key);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw ConfigError("key '" + key + "' expects a number, got '" + s + "'");
        }
        return v;
    }

    int integer(const std::string& key) const {
        const auto& s = raw(key);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw ConfigError("key '" + key + "' expects an integer, got '" + s + "'");
        }
        return v;
    }

    /// Copies explicitly set keys of `other` over this configuration.
    void overlay(const Config& other) {
        for (const auto& k : other.explicit_) set(k, other.raw(k));
    }

    const std::map<std::string, std::string>& values() const { return values_; }

    EngineParameters engine() const {
        EngineParameters p;
        p.E1 = number("E1");
        p.E2 = number("E2");
        p.Eb = number("Eb");
        p.Ea = number("Ea");
        p.g = number("g");
        p.r = number("r");
        p.tau = number("tau");
        p.Th = number("Th");
        p.Tc = number("Tc");
        p.Tl = number("Tl");
        try {
            p.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        return p;
    }

    SqueezeSet squeeze() const {
        SqueezeSet s{number("x"), number("xh"), number("xc"), number("ph"), number("pc")};
        try {
            s.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        return s;
    }

    OptimizationSpec optimization(const EngineParameters& params) const {
        SweepVariable v{};
        try {
            v = parse_sweep_variable(raw("variable"));
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        auto spec = OptimizationSpec::defaults_for(v, params);
        if (raw("lower") != "auto") spec.lower = number("lower");
        if (raw("upper") != "auto") spec.upper = number("upper");
        spec.grid_points = integer("grid_points");
        spec.refine_tol = number("refine_tol");
        try {
            spec.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        return spec;
    }

    std::vector<double> etaC_grid() const {
        const int n = integer("etaC_points");
        if (n <= 0) throw ConfigError("etaC grid is empty (etaC_points must be positive)");
        const double lo = number("etaC_min");
        const double hi = number("etaC_max");
        if (!(lo > 0.0 && hi < 1.0 && lo <= hi)) {
            throw ConfigError("etaC range must satisfy 0 < etaC_min <= etaC_max < 1");
        }
        return linspace(lo, hi, n);
    }

    EtaLForm eta_l_form() const {
        const auto& s = raw("eta_l_form");
        if (s == "standard") return EtaLForm::standard;
        if (s == "intro") return EtaLForm::intro;
        throw ConfigError("eta_l_form must be 'standard' or 'intro'");
    }

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> explicit_;
};

}  // namespace sqhe::cli
