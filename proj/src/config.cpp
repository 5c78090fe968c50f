#include "skytour/config.hpp"

#include "skytour/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace skytour {

void PlanConfig::validate() const {
    if (!(los.h_u_m > los.h_v_m) || los.h_v_m < 0.0)
        throw InputError("config: need h_u_m > h_v_m >= 0");
    if (los.w_bv_m <= 0.0) throw InputError("config: w_bv_m must be positive");
    if (los.r_max_m <= 0.0) throw InputError("config: r_max_m must be positive");
    if (default_h_max_m <= 0.0) throw InputError("config: default_h_max_m must be positive");
    if (rho < 1) throw InputError("config: rho must be >= 1");
    if (poi_spacing_m <= 0.0) throw InputError("config: poi_spacing_m must be positive");
    if (fleet.v_kmh <= 0.0 || fleet.t_min <= 0.0)
        throw InputError("config: v_kmh and t_min must be positive");
    if (road_classes.empty()) throw InputError("config: road_classes must be non-empty");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct TomlValue {
    std::string raw;
    std::vector<std::string> array;
    bool is_array = false;
};

std::string strip_quotes(const std::string& s, int line_no) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    if (!s.empty() && s.front() == '"')
        throw InputError("config line " + std::to_string(line_no) + ": unterminated string");
    return s;
}

std::map<std::string, TomlValue> parse_toml_subset(const std::string& text) {
    std::map<std::string, TomlValue> kv;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            // Keep '#' inside quoted strings.
            bool in_str = false;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (line[i] == '"') in_str = !in_str;
                if (line[i] == '#' && !in_str) {
                    line = line.substr(0, i);
                    break;
                }
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw InputError("config line " + std::to_string(line_no) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        TomlValue tv;
        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']')
                throw InputError("config line " + std::to_string(line_no) + ": malformed array");
            tv.is_array = true;
            std::string inner = value.substr(1, value.size() - 2);
            std::string item;
            std::istringstream items(inner);
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) tv.array.push_back(strip_quotes(item, line_no));
            }
        } else {
            tv.raw = strip_quotes(value, line_no);
        }
        kv[key] = std::move(tv);
    }
    return kv;
}

double as_double(const std::map<std::string, TomlValue>& kv, const std::string& key, double dflt) {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    try {
        return std::stod(it->second.raw);
    } catch (const std::exception&) {
        throw InputError("config: key \"" + key + "\" is not a number");
    }
}

std::string as_string(const std::map<std::string, TomlValue>& kv, const std::string& key,
                      const std::string& dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second.raw;
}

}  // namespace

PlanConfig parse_config(const std::string& text) {
    const auto kv = parse_toml_subset(text);
    PlanConfig cfg;
    cfg.los.h_v_m = as_double(kv, "los.h_v_m", cfg.los.h_v_m);
    cfg.los.h_u_m = as_double(kv, "los.h_u_m", cfg.los.h_u_m);
    cfg.los.w_bv_m = as_double(kv, "los.w_bv_m", cfg.los.w_bv_m);
    cfg.los.r_max_m = as_double(kv, "los.r_max_m", cfg.los.r_max_m);
    cfg.default_h_max_m = as_double(kv, "los.default_h_max_m", cfg.default_h_max_m);
    cfg.rho = static_cast<int>(as_double(kv, "grid.rho", cfg.rho));
    cfg.poi_spacing_m = as_double(kv, "grid.poi_spacing_m", cfg.poi_spacing_m);
    cfg.fleet.v_kmh = as_double(kv, "fleet.v_kmh", cfg.fleet.v_kmh);
    cfg.fleet.t_min = as_double(kv, "fleet.t_min", cfg.fleet.t_min);
    cfg.seed = static_cast<std::uint64_t>(as_double(kv, "run.seed", 1.0));
    const std::string solver = as_string(kv, "run.solver", "greedy");
    if (solver == "greedy") {
        cfg.solver = CoverMethod::greedy;
    } else if (solver == "exact") {
        cfg.solver = CoverMethod::exact;
    } else {
        throw InputError("config: run.solver must be \"greedy\" or \"exact\"");
    }
    if (auto it = kv.find("run.road_classes"); it != kv.end()) {
        if (!it->second.is_array) throw InputError("config: run.road_classes must be an array");
        cfg.road_classes.clear();
        for (const auto& s : it->second.array) cfg.road_classes.insert(road_class_from_string(s));
    }
    cfg.validate();
    return cfg;
}

PlanConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace skytour
