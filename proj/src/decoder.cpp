#include "lilrs/decoder.hpp"

#include <functional>
#include <string>

namespace lilrs {

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::kUnique: return "unique";
        case DecodeStatus::kList: return "list";
        case DecodeStatus::kFailure: return "failure";
    }
    return "?";
}

const char* to_string(FailureReason r) {
    switch (r) {
        case FailureReason::kNone: return "none";
        case FailureReason::kNoSolution: return "no-solution";
        case FailureReason::kInconsistent: return "inconsistent";
        case FailureReason::kRankDeficient: return "rank-deficient";
        case FailureReason::kListOverflow: return "list-overflow";
        case FailureReason::kVerificationFailed: return "verification-failed";
    }
    return "?";
}

InterpolationConfig InterpolationConfig::make(const CodeParams& params, uint32_t n_r, DecodeMode mode) {
    InterpolationConfig cfg;
    cfg.mode = mode;
    const uint64_t s = params.s(), k = params.k();
    if (mode == DecodeMode::kUnique)
        cfg.D = static_cast<uint32_t>((n_r + s * k + s) / (s + 1));
    else
        cfg.D = static_cast<uint32_t>((n_r + s * (k - 1) + 1 + s) / (s + 1));
    cfg.weights.assign(s + 1, static_cast<int64_t>(k) - 1);
    cfg.weights[0] = 0;
    return cfg;
}

InterpolationBasis build_interpolation_points(const CodeParams& params,
                                              const std::vector<InterpolationPoint>& points,
                                              const InterpolationConfig& cfg) {
    const ExtField& F = params.field();
    const uint32_t D = cfg.D;
    const uint32_t s = params.s();
    const int64_t y_coeffs = std::max<int64_t>(0, static_cast<int64_t>(D) - params.k() + 1);
    const size_t cols = D + s * static_cast<size_t>(y_coeffs);
    const size_t n_r = points.size();

    // columns: Q_0 coefficients by degree, then Q_1, ..., Q_s
    Matrix<FieldElement> A(n_r, cols, F.zero());
    for (size_t t = 0; t < n_r; ++t) {
        const InterpolationPoint& p = points[t];
        const FieldElement& a = params.a()[p.cls];
        FieldElement v = p.xi;  // D_a^i(xi), advanced by v <- sigma(v) a
        for (uint32_t i = 0; i < D; ++i) {
            A(t, i) = v;
            v = frobenius(v) * a;
        }
        for (uint32_t l = 0; l < s; ++l) {
            v = p.u[l];
            for (int64_t i = 0; i < y_coeffs; ++i) {
                A(t, D + l * y_coeffs + i) = v;
                v = frobenius(v) * a;
            }
        }
    }

    auto null_basis = nullspace_basis(A, F.zero(), F.one());

    InterpolationBasis out;
    out.D = D;
    out.elements.reserve(null_basis.size());
    for (const auto& vec : null_basis) {
        MultivariateSkewPolynomial Q;
        Q.comps.reserve(s + 1);
        Q.comps.emplace_back(&F, std::vector<FieldElement>(vec.begin(), vec.begin() + D));
        for (uint32_t l = 0; l < s; ++l) {
            auto first = vec.begin() + D + l * y_coeffs;
            Q.comps.emplace_back(&F, std::vector<FieldElement>(first, first + y_coeffs));
        }
        out.elements.push_back(std::move(Q));
    }
    return out;
}

namespace {

std::vector<InterpolationPoint> points_from_received(const CodeParams& params,
                                                     const std::vector<ReceivedShot>& received) {
    if (received.size() != params.ell()) throw ShapeMismatch("received shot count mismatch");
    std::vector<InterpolationPoint> points;
    for (size_t i = 0; i < received.size(); ++i)
        for (const auto& row : received[i].rows) {
            if (row.u.size() != params.s()) throw ShapeMismatch("received row has wrong interleaving order");
            points.push_back({i, row.xi, row.u});
        }
    return points;
}

std::vector<InterpolationPoint> points_from_matrix(const CodeParams& params, const Matrix<FieldElement>& R) {
    if (R.rows() != params.s() || R.cols() != params.n_t())
        throw ShapeMismatch("received matrix must be s x n_t");
    std::vector<InterpolationPoint> points;
    size_t col = 0;
    for (size_t i = 0; i < params.ell(); ++i)
        for (size_t j = 0; j < params.block_length(i); ++j, ++col) {
            InterpolationPoint p;
            p.cls = i;
            p.xi = params.beta()[i][j];
            p.u.reserve(params.s());
            for (uint32_t l = 0; l < params.s(); ++l) p.u.push_back(R(l, col));
            points.push_back(std::move(p));
        }
    return points;
}

/// Unknown vector layout of the root-finding system: column j*s + (l-1)
/// holds sigma^{-j}(f_j^{(l)}).
MessageTuple untwist(const CodeParams& params, const std::vector<FieldElement>& g) {
    const ExtField& F = params.field();
    const uint32_t s = params.s(), k = params.k();
    MessageTuple msg;
    msg.polys.reserve(s);
    for (uint32_t l = 0; l < s; ++l) {
        std::vector<FieldElement> coeffs(k, F.zero());
        for (uint32_t j = 0; j < k; ++j) coeffs[j] = frobenius(g[static_cast<size_t>(j) * s + l], j);
        msg.polys.emplace_back(&F, std::move(coeffs));
    }
    return msg;
}

using VerifyFn = std::function<bool(const MessageTuple&)>;

DecodeOutcome decode_core(const CodeParams& params, const std::vector<InterpolationPoint>& points,
                          DecodeMode mode, const DecodeOptions& opts, const VerifyFn& verify) {
    const ExtField& F = params.field();
    const uint32_t n_r = static_cast<uint32_t>(points.size());

    DecodeOutcome out;
    out.diag.n_r = n_r;
    out.diag.worst_case_bound = worst_case_list_size(params);

    const auto cfg = InterpolationConfig::make(params, n_r, mode);
    out.diag.D = cfg.D;
    out.interpolation = build_interpolation_points(params, points, cfg);
    out.diag.d_I = out.interpolation.d_I();
    if (out.interpolation.d_I() == 0) {
        out.status = DecodeStatus::kFailure;
        out.reason = FailureReason::kNoSolution;
        return out;
    }

    const RootFindingSystem sys = build_root_finding(out.interpolation, params);
    const auto sol = solve_linear(sys.mat, sys.rhs, F.zero(), F.one());
    if (!sol.consistent) {
        out.status = DecodeStatus::kFailure;
        out.reason = FailureReason::kInconsistent;
        return out;
    }
    out.diag.nullity = sol.nullspace.size();
    out.diag.candidate_count = boost::multiprecision::pow(BigInt(F.order()),
                                                          static_cast<unsigned>(sol.nullspace.size()));

    if (mode == DecodeMode::kUnique) {
        if (!sol.nullspace.empty()) {
            out.status = DecodeStatus::kFailure;
            out.reason = FailureReason::kRankDeficient;
            return out;
        }
        MessageTuple msg = untwist(params, sol.particular);
        if (!verify(msg)) {
            out.status = DecodeStatus::kFailure;
            out.reason = FailureReason::kVerificationFailed;
            return out;
        }
        out.status = DecodeStatus::kUnique;
        out.messages.push_back(std::move(msg));
        return out;
    }

    if (out.diag.candidate_count > BigInt(opts.list_cap)) {
        out.status = DecodeStatus::kFailure;
        out.reason = FailureReason::kListOverflow;
        return out;
    }

    // enumerate the affine solution set in lexicographic coefficient order
    const size_t nu = sol.nullspace.size();
    std::vector<uint64_t> digits(nu, 0);
    const uint64_t order = F.order();
    for (;;) {
        std::vector<FieldElement> x = sol.particular;
        for (size_t t = 0; t < nu; ++t) {
            if (digits[t] == 0) continue;
            const FieldElement c = F.element(digits[t]);
            for (size_t j = 0; j < x.size(); ++j) x[j] += c * sol.nullspace[t][j];
        }
        MessageTuple msg = untwist(params, x);
        if (verify(msg)) out.messages.push_back(std::move(msg));

        size_t t = 0;
        while (t < nu && ++digits[t] == order) digits[t++] = 0;
        if (t == nu) break;
    }
    out.status = DecodeStatus::kList;
    return out;
}

}  // namespace

InterpolationBasis build_interpolation(const CodeParams& params, const std::vector<ReceivedShot>& received,
                                       const InterpolationConfig& cfg) {
    return build_interpolation_points(params, points_from_received(params, received), cfg);
}

RootFindingSystem build_root_finding(const InterpolationBasis& basis, const CodeParams& params) {
    const ExtField& F = params.field();
    const uint32_t D = basis.D;
    const uint32_t s = params.s(), k = params.k();
    const size_t d_I = basis.d_I();
    const int64_t y_deg_max = static_cast<int64_t>(D) - k;  // deg Q_l <= D - k

    RootFindingSystem sys;
    sys.mat = Matrix<FieldElement>(d_I * D, static_cast<size_t>(s) * k, F.zero());
    sys.rhs.assign(d_I * D, F.zero());
    for (size_t r = 0; r < d_I; ++r) {
        const MultivariateSkewPolynomial& Q = basis.elements[r];
        for (uint32_t d = 0; d < D; ++d) {
            const size_t row = r * D + d;
            const int64_t twist = -static_cast<int64_t>(d);
            sys.rhs[row] = -frobenius(Q.comps[0].coeff(d), twist);
            for (uint32_t j = 0; j < k; ++j) {
                const int64_t i = static_cast<int64_t>(d) - j;
                if (i < 0 || i > y_deg_max) continue;
                for (uint32_t l = 1; l <= s; ++l)
                    sys.mat(row, static_cast<size_t>(j) * s + (l - 1)) =
                        frobenius(Q.comps[l].coeff(static_cast<size_t>(i)), twist);
            }
        }
    }
    return sys;
}

bool DecodeOutcome::candidate_set_contains(const MessageTuple& msg) const {
    for (const auto& Q : interpolation.elements) {
        SkewPolynomial P = Q.comps[0];
        for (size_t l = 0; l < msg.polys.size(); ++l) P = P + Q.comps[l + 1] * msg.polys[l];
        if (!P.is_zero()) return false;
    }
    return !interpolation.elements.empty();
}

DecodeOutcome decode(const CodeParams& params, const SubspaceTuple& U, DecodeMode mode,
                     const DecodeOptions& opts) {
    const auto points = points_from_received(params, pull_back(params, U));
    const VerifyFn verify = [&](const MessageTuple& msg) {
        const auto [gamma, delta] = min_gamma_delta(U, lift(params, msg));
        return mode == DecodeMode::kUnique ? region_unique(params, gamma, delta)
                                           : region_list(params, gamma, delta);
    };
    return decode_core(params, points, mode, opts, verify);
}

DecodeOutcome decode_ilrs(const CodeParams& params, const Matrix<FieldElement>& R, DecodeMode mode,
                          const DecodeOptions& opts) {
    const auto points = points_from_matrix(params, R);
    const int64_t s = params.s(), n = params.n_t(), k = params.k();
    const VerifyFn verify = [&, s, n, k](const MessageTuple& msg) {
        const int64_t t = sum_rank_weight(params, R - encode_ilrs(params, msg));
        // weight-t errors touch t dimensions on both sides, so the subspace
        // regions specialize to (s+1) t < s (n - k + 1) and <= s (n - k)
        return mode == DecodeMode::kUnique ? (s + 1) * t <= s * (n - k) : (s + 1) * t < s * (n - k + 1);
    };
    return decode_core(params, points, mode, opts, verify);
}

DecodeOutcome decode_isrs(const CodeParams& params, const Matrix<FieldElement>& R_skew, DecodeMode mode,
                          const DecodeOptions& opts) {
    return decode_ilrs(params, isrs_untransform(params, R_skew), mode, opts);
}

bool region_list(const CodeParams& params, uint32_t gamma, uint32_t delta) {
    const int64_t s = params.s();
    return gamma + s * static_cast<int64_t>(delta) < s * (static_cast<int64_t>(params.n_t()) - params.k() + 1);
}

bool region_unique(const CodeParams& params, uint32_t gamma, uint32_t delta) {
    const int64_t s = params.s();
    return gamma + s * static_cast<int64_t>(delta) <= s * (static_cast<int64_t>(params.n_t()) - params.k());
}

double failure_bound(const CodeParams& params, uint32_t gamma, uint32_t n_r) {
    const int64_t s = params.s(), k = params.k(), m = params.field().m();
    const int64_t D = (n_r + s * k + s) / (s + 1);
    const int64_t e = m * (s * (D - k) - gamma + 1);
    const BigInt qe = boost::multiprecision::pow(BigInt(params.field().q()),
                                                 static_cast<unsigned>(e >= 0 ? e : -e));
    return e >= 0 ? 4.0 / qe.convert_to<double>() : 4.0 * qe.convert_to<double>();
}

uint32_t sum_rank_weight(const CodeParams& params, const Matrix<FieldElement>& E) {
    if (E.rows() != params.s() || E.cols() != params.n_t())
        throw ShapeMismatch("error matrix must be s x n_t");
    const ExtField& F = params.field();
    const ExtField& sub = F.prime_subfield();
    const uint32_t m = F.m();
    uint32_t w = 0;
    size_t col = 0;
    for (size_t i = 0; i < params.ell(); ++i) {
        const uint32_t n_i = params.block_length(i);
        // columns of block i as vectors in F_q^{s m}
        Matrix<FieldElement> block(n_i, params.s() * m, sub.zero());
        for (uint32_t j = 0; j < n_i; ++j)
            for (uint32_t l = 0; l < params.s(); ++l) {
                if (E(l, col + j).is_zero()) continue;
                auto c = E(l, col + j).coords();
                for (uint32_t t = 0; t < m; ++t) block(j, l * m + t) = sub.embed_residue(c[t]);
            }
        w += static_cast<uint32_t>(rank(block));
        col += n_i;
    }
    return w;
}

}  // namespace lilrs
