#ifndef LILRS_CONFIG_HPP
#define LILRS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lilrs/code.hpp"
#include "lilrs/decoder.hpp"

namespace lilrs {

/// Full description of a Monte Carlo campaign: code parameters, the swept
/// (gamma, delta) points, trial budget and reproducibility knobs.
struct ExperimentConfig {
    explicit ExperimentConfig(CodeParams p) : params(std::move(p)) {}

    CodeParams params;
    std::vector<std::pair<uint32_t, uint32_t>> sweep;  // (gamma, delta)
    uint64_t trials = 1000;
    uint64_t seed = 1;
    DecodeMode mode = DecodeMode::kUnique;
    uint32_t workers = 1;
    std::string out_path;
    uint64_t stop_after_failures = 0;  // 0 = run the full trial budget
    uint64_t list_cap = 4096;
};

/// Parses the INI-style key-value format with sections [field], [code] and
/// [sweep]. Field elements (modulus, a, beta) are little-endian integer
/// coefficient lists. Throws ConfigError with line/field context.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace lilrs

#endif
