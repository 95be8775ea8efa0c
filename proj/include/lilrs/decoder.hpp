#ifndef LILRS_DECODER_HPP
#define LILRS_DECODER_HPP

#include <vector>

#include "lilrs/channel.hpp"
#include "lilrs/code.hpp"

namespace lilrs {

enum class DecodeMode { kList, kUnique };

enum class DecodeStatus { kUnique, kList, kFailure };

enum class FailureReason {
    kNone,
    kNoSolution,          // interpolation produced no nonzero polynomial
    kInconsistent,        // root-finding system has no solution
    kRankDeficient,       // unique mode: root-finding matrix not full column rank
    kListOverflow,        // list mode: affine solution set larger than the cap
    kVerificationFailed,  // unique mode: solution did not re-encode into the region
};

const char* to_string(DecodeStatus s);
const char* to_string(FailureReason r);

/// Degree bound and weight vector of the interpolation problem. List mode
/// uses the smallest D guaranteeing a nonzero solution,
/// D = ceil((n_r + s(k-1) + 1)/(s+1)); unique mode uses
/// D = ceil((n_r + s k)/(s+1)).
struct InterpolationConfig {
    uint32_t D = 0;
    std::vector<int64_t> weights;  // (0, k-1, ..., k-1)
    DecodeMode mode = DecodeMode::kList;

    static InterpolationConfig make(const CodeParams& params, uint32_t n_r, DecodeMode mode);
};

/// Basis of the solution space of the interpolation problem: d_I multivariate
/// skew polynomials, each with deg Q_0 < D, deg Q_l <= D - k and all n_r
/// evaluation constraints satisfied.
struct InterpolationBasis {
    uint32_t D = 0;
    std::vector<MultivariateSkewPolynomial> elements;

    size_t d_I() const { return elements.size(); }
};

/// One evaluation constraint: class index (shot) plus the pulled-back row.
struct InterpolationPoint {
    size_t cls = 0;
    FieldElement xi;
    std::vector<FieldElement> u;
};

InterpolationBasis build_interpolation(const CodeParams& params, const std::vector<ReceivedShot>& received,
                                       const InterpolationConfig& cfg);
InterpolationBasis build_interpolation_points(const CodeParams& params,
                                              const std::vector<InterpolationPoint>& points,
                                              const InterpolationConfig& cfg);

/// The sigma-twisted block system whose solutions are the candidate message
/// coefficient vectors: row block d (coefficient of x^d in P, twisted by
/// sigma^{-d}), unknown block j holding sigma^{-j}(f_j^{(l)}), l = 1..s.
struct RootFindingSystem {
    Matrix<FieldElement> mat;        // (d_I * D) x (s k)
    std::vector<FieldElement> rhs;   // -sigma^{-d}(q_{0,d}^{(r)})
};

RootFindingSystem build_root_finding(const InterpolationBasis& basis, const CodeParams& params);

struct DecodeDiagnostics {
    uint32_t n_r = 0;
    uint32_t D = 0;
    size_t d_I = 0;
    size_t nullity = 0;            // of the root-finding system
    BigInt candidate_count = 0;    // affine solution set size (0 if inconsistent)
    BigInt worst_case_bound = 0;   // q^{m k (s-1)}
};

struct DecodeOptions {
    uint64_t list_cap = 4096;  // max affine set size that is enumerated
};

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::kFailure;
    FailureReason reason = FailureReason::kNone;
    std::vector<MessageTuple> messages;  // unique: exactly one; list: verified candidates
    DecodeDiagnostics diag;
    /// Retained interpolation basis: the candidate set is exactly the set of
    /// message tuples m with Q_0 + sum_l Q_l m^{(l)} = 0 for every basis
    /// element, checkable without enumeration.
    InterpolationBasis interpolation;

    bool candidate_set_contains(const MessageTuple& msg) const;
};

/// Interpolation-based decoding of a received subspace tuple. List mode
/// enumerates and verifies the affine candidate set when its size is at most
/// opts.list_cap, otherwise reports kListOverflow (membership stays checkable
/// through candidate_set_contains). Unique mode requires a full-column-rank
/// consistent system and verifies the single solution by re-encoding.
DecodeOutcome decode(const CodeParams& params, const SubspaceTuple& U, DecodeMode mode,
                     const DecodeOptions& opts = {});

/// Same pipeline for unlifted ILRS codewords in the sum-rank metric
/// (square case n_r^{(i)} = n_t^{(i)}, interpolation points (beta, received
/// columns)).
DecodeOutcome decode_ilrs(const CodeParams& params, const Matrix<FieldElement>& R, DecodeMode mode,
                          const DecodeOptions& opts = {});

/// Interleaved skew Reed-Solomon decoding: undo the diag(beta^{-1}) isometry
/// and delegate to decode_ilrs.
DecodeOutcome decode_isrs(const CodeParams& params, const Matrix<FieldElement>& R_skew, DecodeMode mode,
                          const DecodeOptions& opts = {});

/// gamma + s delta < s (n_t - k + 1).
bool region_list(const CodeParams& params, uint32_t gamma, uint32_t delta);
/// gamma + s delta <= s (n_t - k).
bool region_unique(const CodeParams& params, uint32_t gamma, uint32_t delta);

/// Heuristic failure probability bound of the probabilistic-unique decoder,
/// 4 q^{-m (s (ceil((n_r + s k)/(s+1)) - k) - gamma + 1)}, evaluated exactly
/// and returned as a double.
double failure_bound(const CodeParams& params, uint32_t gamma, uint32_t n_r);

/// Sum over blocks of the F_q-rank of the block (columns read as vectors in
/// F_q^{s m}).
uint32_t sum_rank_weight(const CodeParams& params, const Matrix<FieldElement>& E);

}  // namespace lilrs

#endif
