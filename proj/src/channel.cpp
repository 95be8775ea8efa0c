#include "lilrs/channel.hpp"

#include <string>

namespace lilrs {

void validate_spec(const CodeParams& params, const ChannelSpec& spec) {
    if (spec.deletions.size() != params.ell() || spec.insertions.size() != params.ell())
        throw SpecInvalid("channel spec must list one (gamma, delta) pair per shot");
    for (size_t i = 0; i < params.ell(); ++i) {
        if (spec.deletions[i] > params.block_length(i))
            throw SpecInvalid("shot " + std::to_string(i + 1) + " deletes more dimensions than transmitted");
        if (spec.insertions[i] > params.ambient(i) - params.block_length(i))
            throw SpecInvalid("shot " + std::to_string(i + 1) + " inserts more dimensions than the ambient allows");
    }
}

SubspaceTuple transmit(const CodeParams& params, const SubspaceTuple& V, const ChannelSpec& spec, Rng& rng) {
    validate_spec(params, spec);
    if (V.shots.size() != params.ell()) throw ShapeMismatch("transmitted tuple has wrong shot count");
    SubspaceTuple U;
    U.shots.reserve(params.ell());
    for (size_t i = 0; i < params.ell(); ++i) {
        const Subspace& Vi = V.shots[i];
        if (Vi.dim() != params.block_length(i)) throw ShapeMismatch("transmitted shot dimension mismatch");
        const Subspace kept = random_subspace_of(Vi, Vi.dim() - spec.deletions[i], rng);
        const Subspace error = random_disjoint_subspace(Vi, spec.insertions[i], rng);
        Subspace Ui = subspace_sum(kept, error);
        if (Ui.dim() != params.block_length(i) + spec.insertions[i] - spec.deletions[i])
            throw Error("received shot dimension law violated");
        U.shots.push_back(std::move(Ui));
    }
    return U;
}

BigInt shot_realization_count(const CodeParams& params, size_t shot, uint32_t gamma, uint32_t delta) {
    const uint64_t q = params.field().q();
    const int64_t n = params.block_length(shot);
    const int64_t free_dims = params.ambient(shot) - n;
    if (delta > n || gamma > free_dims) return 0;
    return gaussian_binomial(n, delta, q) *
           boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * gamma)) *
           gaussian_binomial(free_dims, gamma, q);
}

ChannelSpec sample_channel_spec(const CodeParams& params, uint32_t gamma_total, uint32_t delta_total, Rng& rng) {
    const size_t ell = params.ell();
    // weights[i][g][d] = number of realizations of shot i with (g, d)
    // partial[i][g][d] = realizations of shots 1..i with partial totals (g, d)
    auto at = [&](std::vector<BigInt>& tab, uint32_t g, uint32_t d) -> BigInt& {
        return tab[g * (delta_total + 1) + d];
    };

    std::vector<std::vector<BigInt>> partial(ell + 1,
                                             std::vector<BigInt>((gamma_total + 1) * (delta_total + 1), 0));
    at(partial[0], 0, 0) = 1;
    for (size_t i = 0; i < ell; ++i) {
        for (uint32_t g = 0; g <= gamma_total; ++g)
            for (uint32_t d = 0; d <= delta_total; ++d) {
                const BigInt& prev = at(partial[i], g, d);
                if (prev == 0) continue;
                for (uint32_t gi = 0; g + gi <= gamma_total; ++gi)
                    for (uint32_t di = 0; d + di <= delta_total; ++di) {
                        const BigInt w = shot_realization_count(params, i, gi, di);
                        if (w == 0) continue;
                        at(partial[i + 1], g + gi, d + di) += prev * w;
                    }
            }
    }
    if (at(partial[ell], gamma_total, delta_total) == 0)
        throw Infeasible("no channel realization with gamma = " + std::to_string(gamma_total) +
                         ", delta = " + std::to_string(delta_total) + " exists for these parameters");

    ChannelSpec spec;
    spec.insertions.assign(ell, 0);
    spec.deletions.assign(ell, 0);
    uint32_t g_rem = gamma_total, d_rem = delta_total;
    for (size_t i = ell; i-- > 0;) {
        // draw shot i's share proportional to weight(i) * partial(i, rest)
        BigInt r = big_below(at(partial[i + 1], g_rem, d_rem), rng);
        bool picked = false;
        for (uint32_t gi = 0; gi <= g_rem && !picked; ++gi)
            for (uint32_t di = 0; di <= d_rem && !picked; ++di) {
                const BigInt w = shot_realization_count(params, i, gi, di);
                if (w == 0) continue;
                const BigInt mass = w * at(partial[i], g_rem - gi, d_rem - di);
                if (r < mass) {
                    spec.insertions[i] = gi;
                    spec.deletions[i] = di;
                    g_rem -= gi;
                    d_rem -= di;
                    picked = true;
                } else {
                    r -= mass;
                }
            }
        if (!picked) throw Error("channel allocation sampling walked past the total mass");
    }
    return spec;
}

uint32_t sum_subspace_distance(const SubspaceTuple& U, const SubspaceTuple& V) {
    if (U.shots.size() != V.shots.size()) throw ShapeMismatch("tuples have different shot counts");
    uint32_t d = 0;
    for (size_t i = 0; i < U.shots.size(); ++i) {
        const size_t sum = subspace_sum_dim(U.shots[i], V.shots[i]);
        const size_t inter = U.shots[i].dim() + V.shots[i].dim() - sum;
        d += static_cast<uint32_t>(sum - inter);
    }
    return d;
}

std::pair<uint32_t, uint32_t> min_gamma_delta(const SubspaceTuple& U, const SubspaceTuple& V) {
    if (U.shots.size() != V.shots.size()) throw ShapeMismatch("tuples have different shot counts");
    uint32_t gamma = 0, delta = 0;
    for (size_t i = 0; i < U.shots.size(); ++i) {
        const size_t inter = subspace_intersection_dim(U.shots[i], V.shots[i]);
        gamma += static_cast<uint32_t>(U.shots[i].dim() - inter);
        delta += static_cast<uint32_t>(V.shots[i].dim() - inter);
    }
    return {gamma, delta};
}

std::vector<ReceivedShot> pull_back(const CodeParams& params, const SubspaceTuple& U) {
    if (U.shots.size() != params.ell()) throw ShapeMismatch("received tuple has wrong shot count");
    const ExtField& F = params.field();
    const uint32_t m = F.m();

    std::vector<ReceivedShot> shots(params.ell());
    for (size_t i = 0; i < params.ell(); ++i) {
        const uint32_t n_i = params.block_length(i);
        if (U.shots[i].ambient() != params.ambient(i)) throw ShapeMismatch("received shot ambient mismatch");
        const Matrix<FieldElement>& B = U.shots[i].basis();
        shots[i].rows.reserve(B.rows());
        for (size_t r = 0; r < B.rows(); ++r) {
            ReceivedRow row;
            row.xi = F.zero();
            for (uint32_t j = 0; j < n_i; ++j)
                row.xi += F.embed_residue(B(r, j).coord(0)) * params.beta()[i][j];
            row.u.reserve(params.s());
            for (uint32_t l = 0; l < params.s(); ++l) {
                std::vector<uint32_t> coords(m);
                for (uint32_t t = 0; t < m; ++t) coords[t] = B(r, n_i + l * m + t).coord(0);
                FieldElement u = F.zero();
                for (uint32_t t = 0; t < m; ++t)
                    u += F.embed_residue(coords[t]) * params.expansion_basis()[t];
                row.u.push_back(u);
            }
            shots[i].rows.push_back(std::move(row));
        }
    }
    return shots;
}

}  // namespace lilrs
