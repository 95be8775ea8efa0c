#include "lilrs/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace lilrs {

namespace {

bool trial_success(const MessageTuple& sent, const DecodeOutcome& outcome, DecodeMode mode) {
    if (mode == DecodeMode::kUnique)
        return outcome.status == DecodeStatus::kUnique && outcome.messages.size() == 1 &&
               outcome.messages[0] == sent;
    if (outcome.status == DecodeStatus::kList)
        return std::find(outcome.messages.begin(), outcome.messages.end(), sent) != outcome.messages.end();
    // an overflowed list still has an exact membership test
    if (outcome.status == DecodeStatus::kFailure && outcome.reason == FailureReason::kListOverflow)
        return outcome.candidate_set_contains(sent);
    return false;
}

template <class Fn>
void parallel_for(uint64_t n, uint32_t workers, Fn&& fn) {
    if (workers <= 1 || n < 2) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    const uint32_t count = std::min<uint64_t>(workers, n);
    pool.reserve(count);
    for (uint32_t w = 0; w < count; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const uint64_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

TrialRecord run_trial(const CodeParams& params, uint32_t gamma, uint32_t delta, uint64_t seed, DecodeMode mode,
                      const DecodeOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);

    TrialRecord rec;
    rec.seed = seed;
    rec.gamma = gamma;
    rec.delta = delta;

    const MessageTuple msg = random_message(params, rng);
    const SubspaceTuple V = lift(params, msg);
    rec.allocation = sample_channel_spec(params, gamma, delta, rng);
    const SubspaceTuple U = transmit(params, V, rec.allocation, rng);
    const DecodeOutcome outcome = decode(params, U, mode, opts);

    rec.D = outcome.diag.D;
    rec.d_I = outcome.diag.d_I;
    rec.status = outcome.status;
    rec.reason = outcome.reason;
    rec.list_length = outcome.messages.size();
    rec.success = trial_success(msg, outcome, mode);
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95%
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    const double lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = failures == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const CodeParams& params = cfg.params;
    DecodeOptions opts;
    opts.list_cap = cfg.list_cap;

    std::vector<std::pair<uint32_t, uint32_t>> sweep = cfg.sweep;
    std::sort(sweep.begin(), sweep.end());
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());

    ExperimentResult result;
    std::ostringstream csv;
    csv << "gamma,delta,trials,failures,observed_rate,wilson_lo,wilson_hi,bound,"
           "d_min_region_list,d_min_region_unique,seed\n";

    for (size_t point_idx = 0; point_idx < sweep.size(); ++point_idx) {
        const auto [gamma, delta] = sweep[point_idx];

        uint64_t trials_used = 0, failures = 0;
        if (cfg.stop_after_failures == 0) {
            std::vector<uint8_t> fail(cfg.trials, 0);
            parallel_for(cfg.trials, cfg.workers, [&](uint64_t t) {
                const uint64_t seed = derive_seed(cfg.seed, point_idx, t);
                fail[t] = run_trial(params, gamma, delta, seed, cfg.mode, opts).success ? 0 : 1;
            });
            trials_used = cfg.trials;
            for (uint8_t f : fail) failures += f;
        } else {
            // scan trials in index order, stopping at the exact trial where the
            // failure budget is reached; chunked so workers stay busy but the
            // cutoff is independent of the worker count
            const uint64_t chunk_size = std::max<uint64_t>(64, static_cast<uint64_t>(cfg.workers) * 32);
            bool stopped = false;
            while (trials_used < cfg.trials && !stopped) {
                const uint64_t chunk = std::min(chunk_size, cfg.trials - trials_used);
                std::vector<uint8_t> fail(chunk, 0);
                const uint64_t base = trials_used;
                parallel_for(chunk, cfg.workers, [&](uint64_t t) {
                    const uint64_t seed = derive_seed(cfg.seed, point_idx, base + t);
                    fail[t] = run_trial(params, gamma, delta, seed, cfg.mode, opts).success ? 0 : 1;
                });
                for (uint64_t t = 0; t < chunk && !stopped; ++t) {
                    ++trials_used;
                    failures += fail[t];
                    if (failures >= cfg.stop_after_failures) stopped = true;
                }
            }
        }

        PointResult pr;
        pr.gamma = gamma;
        pr.delta = delta;
        pr.trials = trials_used;
        pr.failures = failures;
        pr.observed_rate = trials_used > 0 ? static_cast<double>(failures) / trials_used : 0.0;
        std::tie(pr.wilson_lo, pr.wilson_hi) = wilson_interval(failures, trials_used);
        const uint32_t n_r = params.n_t() + gamma - delta;
        pr.bound = failure_bound(params, gamma, n_r);
        pr.in_region_list = region_list(params, gamma, delta);
        pr.in_region_unique = region_unique(params, gamma, delta);
        result.points.push_back(pr);

        csv << pr.gamma << ',' << pr.delta << ',' << pr.trials << ',' << pr.failures << ','
            << fmt_double(pr.observed_rate) << ',' << fmt_double(pr.wilson_lo) << ',' << fmt_double(pr.wilson_hi)
            << ',' << fmt_double(pr.bound) << ',' << (pr.in_region_list ? 1 : 0) << ','
            << (pr.in_region_unique ? 1 : 0) << ',' << cfg.seed << '\n';
    }
    result.csv = csv.str();
    return result;
}

std::string info_report(const CodeParams& params) {
    const ExtField& F = params.field();
    std::ostringstream os;
    os << "field: q=" << F.q() << " m=" << F.m() << " order=" << F.order() << " modulus=[";
    for (size_t i = 0; i < F.modulus().size(); ++i) os << (i ? " " : "") << F.modulus()[i];
    os << "] (little-endian)\n";
    os << "code: ell=" << params.ell() << " s=" << params.s() << " k=" << params.k() << " n_t=" << params.n_t()
       << " block_lengths=[";
    for (size_t i = 0; i < params.ell(); ++i) os << (i ? " " : "") << params.block_length(i);
    os << "]\n";
    os << "packet dimensions N_i:";
    for (size_t i = 0; i < params.ell(); ++i) os << ' ' << params.ambient(i);
    os << '\n';
    const BigRational rate = code_rate(params);
    uint64_t den = 0;
    for (size_t i = 0; i < params.ell(); ++i)
        den += static_cast<uint64_t>(params.block_length(i)) * params.ambient(i);
    os << "code rate: " << static_cast<uint64_t>(params.s()) * F.m() * params.k() << '/' << den << " = "
       << rate.convert_to<double>() << '\n';
    os << "minimum sum-subspace distance: " << min_sum_subspace_distance(params) << '\n';
    const int64_t s = params.s(), nt = params.n_t(), k = params.k();
    os << "list-decoding region: gamma + " << s << "*delta < " << s * (nt - k + 1) << '\n';
    os << "unique-decoding region: gamma + " << s << "*delta <= " << s * (nt - k) << '\n';
    os << "worst-case list size: " << worst_case_list_size(params) << '\n';
    return os.str();
}

std::string roundtrip_report(const CodeParams& params, uint32_t gamma, uint32_t delta, uint64_t seed,
                             DecodeMode mode, const DecodeOptions& opts) {
    std::ostringstream os;
    Rng rng(seed);
    const MessageTuple msg = random_message(params, rng);
    os << "seed " << seed << ", gamma=" << gamma << ", delta=" << delta << ", mode "
       << (mode == DecodeMode::kUnique ? "unique" : "list") << '\n';
    for (uint32_t l = 0; l < params.s(); ++l) os << "  f^(" << l + 1 << ") = " << msg.polys[l] << '\n';

    const SubspaceTuple V = lift(params, msg);
    const ChannelSpec spec = sample_channel_spec(params, gamma, delta, rng);
    os << "  allocation:";
    for (size_t i = 0; i < params.ell(); ++i)
        os << " shot" << i + 1 << "=(gamma=" << spec.insertions[i] << ",delta=" << spec.deletions[i] << ")";
    os << '\n';

    const SubspaceTuple U = transmit(params, V, spec, rng);
    os << "  received dims:";
    for (size_t i = 0; i < params.ell(); ++i) os << ' ' << U.shots[i].dim();
    os << " (n_r=" << params.n_t() + gamma - delta << ")\n";

    const DecodeOutcome outcome = decode(params, U, mode, opts);
    os << "  D=" << outcome.diag.D << " d_I=" << outcome.diag.d_I << " nullity=" << outcome.diag.nullity
       << " candidates=" << outcome.diag.candidate_count << '\n';
    os << "  outcome: " << to_string(outcome.status);
    if (outcome.status == DecodeStatus::kFailure) os << " (" << to_string(outcome.reason) << ")";
    if (outcome.status == DecodeStatus::kList) os << ", " << outcome.messages.size() << " verified candidate(s)";
    os << '\n';

    bool success = trial_success(msg, outcome, mode);
    os << "  transmitted message " << (success ? "recovered" : "NOT recovered") << '\n';
    if (region_unique(params, gamma, delta))
        os << "  failure bound: " << failure_bound(params, gamma, params.n_t() + gamma - delta) << '\n';
    return os.str();
}

}  // namespace lilrs
