#ifndef LILRS_CHANNEL_HPP
#define LILRS_CHANNEL_HPP

#include <utility>
#include <vector>

#include "lilrs/code.hpp"

namespace lilrs {

/// Per-shot deletion/insertion counts of one multishot operator channel
/// realization.
struct ChannelSpec {
    std::vector<uint32_t> deletions;   // delta^{(i)} <= n_t^{(i)}
    std::vector<uint32_t> insertions;  // gamma^{(i)} <= N_i - n_t^{(i)}

    uint32_t total_deletions() const {
        uint32_t t = 0;
        for (uint32_t d : deletions) t += d;
        return t;
    }
    uint32_t total_insertions() const {
        uint32_t t = 0;
        for (uint32_t g : insertions) t += g;
        return t;
    }
};

void validate_spec(const CodeParams& params, const ChannelSpec& spec);

/// One channel use per shot: keep a uniform (n_t^{(i)} - delta^{(i)})-dim
/// subspace of V_i and add a uniform gamma^{(i)}-dim error space disjoint
/// from V_i. dim U_i = n_t^{(i)} + gamma^{(i)} - delta^{(i)} on every draw.
SubspaceTuple transmit(const CodeParams& params, const SubspaceTuple& V, const ChannelSpec& spec, Rng& rng);

/// Per-shot allocation of the given totals, drawn with probability
/// proportional to the number of channel realizations it admits, so that
/// together with transmit() the realization is uniform over all realizations
/// with exactly these totals. Throws Infeasible when none exists.
ChannelSpec sample_channel_spec(const CodeParams& params, uint32_t gamma_total, uint32_t delta_total, Rng& rng);

/// Number of realizations of shot i with the given insertion/deletion pair:
/// [n choose delta]_q * q^{n gamma} * [(N - n) choose gamma]_q.
BigInt shot_realization_count(const CodeParams& params, size_t shot, uint32_t gamma, uint32_t delta);

uint32_t sum_subspace_distance(const SubspaceTuple& U, const SubspaceTuple& V);

/// The unique per-shot minimal (gamma, delta) for which U is reachable from
/// V (keep U_i intersect V_i); returns the totals (gamma, delta).
std::pair<uint32_t, uint32_t> min_gamma_delta(const SubspaceTuple& U, const SubspaceTuple& V);

/// Basis row of a received shot pulled back to F_{q^m} coordinates.
struct ReceivedRow {
    FieldElement xi;
    std::vector<FieldElement> u;  // u^{(1)}, ..., u^{(s)}
};

struct ReceivedShot {
    std::vector<ReceivedRow> rows;
};

/// Lossless pullback of each RREF basis row of U_i to (xi, u^{(1..s)}):
/// xi = sum_j c_j beta_j^{(i)} from the first n_t^{(i)} coordinates, u^{(l)}
/// from the l-th m-coordinate block via the expansion basis.
std::vector<ReceivedShot> pull_back(const CodeParams& params, const SubspaceTuple& U);

}  // namespace lilrs

#endif
