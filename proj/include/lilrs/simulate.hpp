#ifndef LILRS_SIMULATE_HPP
#define LILRS_SIMULATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "lilrs/config.hpp"

namespace lilrs {

/// Everything observable about one channel trial.
struct TrialRecord {
    uint64_t seed = 0;
    uint32_t gamma = 0, delta = 0;
    ChannelSpec allocation;
    uint32_t D = 0;
    size_t d_I = 0;
    DecodeStatus status = DecodeStatus::kFailure;
    FailureReason reason = FailureReason::kNone;
    size_t list_length = 0;
    bool success = false;  // transmitted message recovered (unique) / in list
    double elapsed_ms = 0.0;
};

/// Draw a uniform message, lift, transmit over a uniform channel realization
/// with the given totals, decode, and compare against the transmitted
/// message. Deterministic given the seed.
TrialRecord run_trial(const CodeParams& params, uint32_t gamma, uint32_t delta, uint64_t seed, DecodeMode mode,
                      const DecodeOptions& opts = {});

struct PointResult {
    uint32_t gamma = 0, delta = 0;
    uint64_t trials = 0, failures = 0;
    double observed_rate = 0, wilson_lo = 0, wilson_hi = 0, bound = 0;
    bool in_region_list = false, in_region_unique = false;
};

struct ExperimentResult {
    std::vector<PointResult> points;
    std::string csv;  // byte-identical for a given config and seed, independent of workers
};

/// 95% Wilson score interval for failures/trials.
std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string info_report(const CodeParams& params);
std::string roundtrip_report(const CodeParams& params, uint32_t gamma, uint32_t delta, uint64_t seed,
                             DecodeMode mode, const DecodeOptions& opts = {});

}  // namespace lilrs

#endif
