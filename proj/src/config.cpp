#include "lilrs/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace lilrs {

namespace {

struct RawConfig {
    // (section, key) -> values in file order, each with its line number
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, int>>> entries;

    bool has(const std::string& sec, const std::string& key) const {
        return entries.count({sec, key}) > 0;
    }
    const std::pair<std::string, int>& single(const std::string& sec, const std::string& key) const {
        const auto it = entries.find({sec, key});
        if (it == entries.end()) throw ConfigError("missing required key '" + key + "' in section [" + sec + "]");
        if (it->second.size() > 1)
            throw ConfigError("key '" + key + "' in section [" + sec + "] given more than once (line " +
                              std::to_string(it->second.back().second) + ")");
        return it->second.front();
    }
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

RawConfig tokenize(const std::string& text) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        raw.entries[{section, key}].push_back({value, lineno});
    }
    return raw;
}

int64_t parse_int(const std::string& v, const std::string& what, int line) {
    try {
        size_t pos = 0;
        const int64_t r = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": '" + what + "' expects an integer, got '" + v + "'");
    }
}

std::vector<int64_t> parse_int_list(const std::string& v, const std::string& what, int line) {
    std::vector<int64_t> out;
    std::istringstream in(v);
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        out.push_back(parse_int(tok, what, line));
    }
    return out;
}

uint64_t get_u64(const RawConfig& raw, const std::string& sec, const std::string& key, uint64_t fallback,
                 bool required = false) {
    if (!raw.has(sec, key)) {
        if (required) throw ConfigError("missing required key '" + key + "' in section [" + sec + "]");
        return fallback;
    }
    const auto& [v, line] = raw.single(sec, key);
    const int64_t r = parse_int(v, key, line);
    if (r < 0) throw ConfigError("line " + std::to_string(line) + ": '" + key + "' must be nonnegative");
    return static_cast<uint64_t>(r);
}

std::vector<FieldElement> elements_from_coeff_list(const ExtField& F, const std::vector<int64_t>& flat,
                                                   size_t count, const std::string& what, int line) {
    const uint32_t m = F.m();
    if (flat.size() != count * m)
        throw ConfigError("line " + std::to_string(line) + ": '" + what + "' expects " +
                          std::to_string(count * m) + " coefficients (" + std::to_string(count) +
                          " elements x " + std::to_string(m) + " little-endian coordinates), got " +
                          std::to_string(flat.size()));
    std::vector<FieldElement> out;
    out.reserve(count);
    for (size_t e = 0; e < count; ++e) {
        std::vector<uint32_t> coords(m);
        for (uint32_t i = 0; i < m; ++i) {
            const int64_t c = flat[e * m + i];
            if (c < 0 || c >= F.q())
                throw ConfigError("line " + std::to_string(line) + ": '" + what +
                                  "' coordinate out of range [0, q)");
            coords[i] = static_cast<uint32_t>(c);
        }
        out.push_back(F.from_coords(coords));
    }
    return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    const RawConfig raw = tokenize(text);

    const uint64_t q = get_u64(raw, "field", "q", 0, true);
    const uint64_t m = get_u64(raw, "field", "m", 0, true);

    std::shared_ptr<const ExtField> field;
    try {
        if (raw.has("field", "modulus")) {
            const auto& [v, line] = raw.single("field", "modulus");
            const auto coeffs = parse_int_list(v, "modulus", line);
            std::vector<uint32_t> mod;
            for (int64_t c : coeffs) {
                if (c < 0) throw ConfigError("line " + std::to_string(line) + ": negative modulus coefficient");
                mod.push_back(static_cast<uint32_t>(c));
            }
            field = std::make_shared<const ExtField>(static_cast<uint32_t>(q), static_cast<uint32_t>(m), mod);
        } else {
            field = std::make_shared<const ExtField>(static_cast<uint32_t>(q), static_cast<uint32_t>(m));
        }
    } catch (const Error& e) {
        throw ConfigError("section [field]: " + std::string(e.what()));
    }

    const uint64_t ell = get_u64(raw, "code", "ell", 0, true);
    const uint64_t s = get_u64(raw, "code", "s", 0, true);
    const uint64_t k = get_u64(raw, "code", "k", 0, true);
    const auto& [bl_str, bl_line] = raw.single("code", "block_lengths");
    const auto bl = parse_int_list(bl_str, "block_lengths", bl_line);
    std::vector<uint32_t> block_lengths;
    for (int64_t b : bl) {
        if (b < 1) throw ConfigError("line " + std::to_string(bl_line) + ": block lengths must be positive");
        block_lengths.push_back(static_cast<uint32_t>(b));
    }

    std::optional<CodeParams> params;
    try {
        if (raw.has("code", "a") || raw.has("code", "beta")) {
            std::vector<FieldElement> a;
            if (raw.has("code", "a")) {
                const auto& [v, line] = raw.single("code", "a");
                a = elements_from_coeff_list(*field, parse_int_list(v, "a", line), ell, "a", line);
            } else {
                a = conjugacy_representatives(*field, static_cast<uint32_t>(ell));
            }
            std::vector<std::vector<FieldElement>> beta;
            if (raw.has("code", "beta")) {
                const auto& [v, line] = raw.single("code", "beta");
                size_t n_t = 0;
                for (uint32_t b : block_lengths) n_t += b;
                auto flat = elements_from_coeff_list(*field, parse_int_list(v, "beta", line), n_t, "beta", line);
                size_t pos = 0;
                for (uint32_t b : block_lengths) {
                    beta.emplace_back(flat.begin() + pos, flat.begin() + pos + b);
                    pos += b;
                }
            } else {
                for (uint32_t b : block_lengths) {
                    std::vector<FieldElement> blk;
                    FieldElement cur = field->one();
                    for (uint32_t j = 0; j < b; ++j) {
                        blk.push_back(cur);
                        cur = cur * field->alpha();
                    }
                    beta.push_back(std::move(blk));
                }
            }
            params = CodeParams::make(field, static_cast<uint32_t>(ell), static_cast<uint32_t>(s),
                                      block_lengths, static_cast<uint32_t>(k), std::move(a), std::move(beta));
        } else {
            params = CodeParams::make(field, static_cast<uint32_t>(ell), static_cast<uint32_t>(s),
                                      block_lengths, static_cast<uint32_t>(k));
        }
    } catch (const Error& e) {
        throw ConfigError("section [code]: " + std::string(e.what()));
    }
    ExperimentConfig cfg(std::move(*params));

    const auto pts = raw.entries.find({"sweep", "point"});
    if (pts != raw.entries.end()) {
        for (const auto& [v, line] : pts->second) {
            const auto gd = parse_int_list(v, "point", line);
            if (gd.size() != 2 || gd[0] < 0 || gd[1] < 0)
                throw ConfigError("line " + std::to_string(line) + ": 'point' expects 'gamma delta'");
            cfg.sweep.emplace_back(static_cast<uint32_t>(gd[0]), static_cast<uint32_t>(gd[1]));
        }
    }
    cfg.trials = get_u64(raw, "sweep", "trials", cfg.trials);
    if (cfg.trials < 1) throw ConfigError("'trials' must be at least 1");
    cfg.seed = get_u64(raw, "sweep", "seed", cfg.seed);
    cfg.workers = static_cast<uint32_t>(get_u64(raw, "sweep", "workers", cfg.workers));
    cfg.stop_after_failures = get_u64(raw, "sweep", "stop_after_failures", 0);
    cfg.list_cap = get_u64(raw, "sweep", "list_cap", cfg.list_cap);
    if (raw.has("sweep", "mode")) {
        const auto& [v, line] = raw.single("sweep", "mode");
        if (v == "list")
            cfg.mode = DecodeMode::kList;
        else if (v == "unique")
            cfg.mode = DecodeMode::kUnique;
        else
            throw ConfigError("line " + std::to_string(line) + ": mode must be 'list' or 'unique'");
    }
    if (raw.has("sweep", "out")) cfg.out_path = raw.single("sweep", "out").first;

    // every swept point must admit at least one allocation
    for (const auto& [gamma, delta] : cfg.sweep) {
        uint32_t max_delta = cfg.params.n_t();
        uint32_t max_gamma = 0;
        for (size_t i = 0; i < cfg.params.ell(); ++i)
            max_gamma += cfg.params.ambient(i) - cfg.params.block_length(i);
        if (delta > max_delta || gamma > max_gamma)
            throw ConfigError("sweep point (" + std::to_string(gamma) + ", " + std::to_string(delta) +
                              ") is infeasible for this code");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace lilrs
