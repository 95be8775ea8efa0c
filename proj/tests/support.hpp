#ifndef LILRS_TESTS_SUPPORT_HPP
#define LILRS_TESTS_SUPPORT_HPP

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lilrs/channel.hpp"
#include "lilrs/code.hpp"
#include "lilrs/decoder.hpp"
#include "lilrs/rng.hpp"
#include "lilrs/subspace.hpp"

namespace lilrs::testing {

// Shared field instances: elements keep raw pointers to their field, so the
// tests reuse one instance per (q, m).
inline std::shared_ptr<const ExtField> field(uint32_t q, uint32_t m) {
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const ExtField>> cache;
    auto& f = cache[{q, m}];
    if (!f) f = std::make_shared<const ExtField>(q, m);
    return f;
}

inline FieldElement random_element(const ExtField& F, Rng& rng) { return F.element(rng.below(F.order())); }

inline SkewPolynomial random_poly(const ExtField& F, int64_t max_deg, Rng& rng) {
    std::vector<FieldElement> c(static_cast<size_t>(max_deg) + 1, F.zero());
    for (auto& x : c) x = random_element(F, rng);
    return SkewPolynomial(&F, std::move(c));
}

// The Monte Carlo code of the simulation section: q=3, m=3, ell=2, s=3,
// n_t = (3, 3), k = 3.
inline CodeParams sim_params() {
    return CodeParams::make(field(3, 3), 2, 3, {3, 3}, 3);
}

inline std::string subspace_key(const Subspace& S) {
    std::ostringstream os;
    os << S.ambient() << ':' << S.dim() << ':';
    for (size_t i = 0; i < S.dim(); ++i)
        for (size_t j = 0; j < S.ambient(); ++j) os << S.basis()(i, j).index() << ',';
    return os.str();
}

// Brute-force enumeration of all dim-dimensional subspaces of F_q^ambient,
// by collecting distinct row spaces of all dim x ambient matrices. Exponential;
// toy sizes only.
inline std::vector<Subspace> all_subspaces(const ExtField& Fq, size_t ambient, size_t dim) {
    std::vector<Subspace> out;
    std::set<std::string> seen;
    if (dim == 0) {
        out.emplace_back(&Fq, ambient);
        return out;
    }
    const uint64_t q = Fq.q();
    uint64_t total = 1;
    for (size_t i = 0; i < dim * ambient; ++i) total *= q;
    for (uint64_t code = 0; code < total; ++code) {
        Matrix<FieldElement> M(dim, ambient, Fq.zero());
        uint64_t v = code;
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < ambient; ++j) {
                M(i, j) = Fq.element(v % q);
                v /= q;
            }
        Subspace S = Subspace::row_space(&Fq, M);
        if (S.dim() != dim) continue;
        if (seen.insert(subspace_key(S)).second) out.push_back(std::move(S));
    }
    return out;
}

// All message tuples of a (tiny) code, in packed order.
inline std::vector<MessageTuple> all_messages(const CodeParams& params) {
    const ExtField& F = params.field();
    const uint64_t per_poly = [&] {
        uint64_t t = 1;
        for (uint32_t i = 0; i < params.k(); ++i) t *= F.order();
        return t;
    }();
    uint64_t total = 1;
    for (uint32_t l = 0; l < params.s(); ++l) total *= per_poly;
    std::vector<MessageTuple> out;
    out.reserve(total);
    for (uint64_t code = 0; code < total; ++code) {
        MessageTuple msg;
        uint64_t v = code;
        for (uint32_t l = 0; l < params.s(); ++l) {
            std::vector<FieldElement> coeffs(params.k(), F.zero());
            for (uint32_t j = 0; j < params.k(); ++j) {
                coeffs[j] = F.element(v % F.order());
                v /= F.order();
            }
            msg.polys.emplace_back(&F, std::move(coeffs));
        }
        out.push_back(std::move(msg));
    }
    return out;
}

inline MessageTuple add_messages(const MessageTuple& a, const MessageTuple& b) {
    MessageTuple r;
    for (size_t l = 0; l < a.polys.size(); ++l) r.polys.push_back(a.polys[l] + b.polys[l]);
    return r;
}

// Success semantics shared with the harness: unique mode must return exactly
// the sent message; list mode must contain it, with the membership test
// standing in when the affine candidate set was too large to enumerate.
inline bool decode_recovers(const MessageTuple& sent, const DecodeOutcome& outcome, DecodeMode mode) {
    if (mode == DecodeMode::kUnique)
        return outcome.status == DecodeStatus::kUnique && outcome.messages.size() == 1 &&
               outcome.messages[0] == sent;
    if (outcome.status == DecodeStatus::kList) {
        for (const auto& m : outcome.messages)
            if (m == sent) return true;
        return false;
    }
    return outcome.status == DecodeStatus::kFailure && outcome.reason == FailureReason::kListOverflow &&
           outcome.candidate_set_contains(sent);
}

}  // namespace lilrs::testing

#endif
