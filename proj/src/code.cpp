#include "lilrs/code.hpp"

#include <string>

namespace lilrs {

namespace {

void validate_independent(const ExtField& F, const std::vector<FieldElement>& beta, size_t shot) {
    const ExtField& sub = F.prime_subfield();
    Matrix<FieldElement> M(beta.size(), F.m(), sub.zero());
    for (size_t j = 0; j < beta.size(); ++j) {
        auto c = beta[j].coords();
        for (uint32_t i = 0; i < F.m(); ++i) M(j, i) = sub.embed_residue(c[i]);
    }
    if (rank(M) != beta.size())
        throw ParamMismatch("beta block " + std::to_string(shot + 1) + " is not F_q-linearly independent");
}

}  // namespace

CodeParams CodeParams::make(std::shared_ptr<const ExtField> field, uint32_t ell, uint32_t s,
                            std::vector<uint32_t> block_lengths, uint32_t k) {
    auto a = conjugacy_representatives(*field, ell);
    std::vector<std::vector<FieldElement>> beta(block_lengths.size());
    for (size_t i = 0; i < block_lengths.size(); ++i) {
        FieldElement cur = field->one();
        for (uint32_t j = 0; j < block_lengths[i]; ++j) {
            beta[i].push_back(cur);
            cur = cur * field->alpha();
        }
    }
    return make(std::move(field), ell, s, std::move(block_lengths), k, std::move(a), std::move(beta));
}

CodeParams CodeParams::make(std::shared_ptr<const ExtField> field, uint32_t ell, uint32_t s,
                            std::vector<uint32_t> block_lengths, uint32_t k, std::vector<FieldElement> a,
                            std::vector<std::vector<FieldElement>> beta) {
    if (ell < 1 || s < 1 || k < 1) throw ParamMismatch("ell, s and k must be positive");
    if (block_lengths.size() != ell) throw ParamMismatch("need one block length per shot");
    if (a.size() != ell) throw ParamMismatch("need one conjugacy representative per shot");
    if (beta.size() != ell) throw ParamMismatch("need one beta block per shot");
    if (ell > field->q() - 1)
        throw TooManyClasses("ell = " + std::to_string(ell) + " exceeds the q-1 = " +
                             std::to_string(field->q() - 1) + " available conjugacy classes");

    CodeParams p;
    p.field_ = std::move(field);
    p.ell_ = ell;
    p.s_ = s;
    p.k_ = k;
    p.block_lengths_ = std::move(block_lengths);
    p.a_ = std::move(a);
    p.beta_ = std::move(beta);
    p.expansion_basis_ = p.field_->power_basis();

    p.n_t_ = 0;
    for (size_t i = 0; i < p.ell_; ++i) {
        if (p.block_lengths_[i] < 1) throw ParamMismatch("block lengths must be positive");
        if (p.block_lengths_[i] > p.field_->m())
            throw ParamMismatch("block length exceeds m, no independent beta block exists");
        if (p.beta_[i].size() != p.block_lengths_[i]) throw ParamMismatch("beta block length mismatch");
        validate_independent(*p.field_, p.beta_[i], i);
        p.n_t_ += p.block_lengths_[i];
    }
    if (p.k_ > p.n_t_) throw ParamMismatch("k must not exceed n_t");

    for (size_t i = 0; i < p.ell_; ++i) {
        if (p.a_[i].is_zero()) throw ParamMismatch("conjugacy representatives must be nonzero");
        for (size_t j = i + 1; j < p.ell_; ++j)
            if (are_conjugate(p.a_[i], p.a_[j]))
                throw ParamMismatch("conjugacy representatives " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " are conjugate");
    }
    return p;
}

MessageTuple random_message(const CodeParams& params, Rng& rng) {
    const ExtField& F = params.field();
    MessageTuple msg;
    msg.polys.reserve(params.s());
    for (uint32_t l = 0; l < params.s(); ++l) {
        std::vector<FieldElement> coeffs(params.k(), F.zero());
        for (uint32_t j = 0; j < params.k(); ++j) coeffs[j] = F.element(rng.below(F.order()));
        msg.polys.emplace_back(&F, std::move(coeffs));
    }
    return msg;
}

void validate_message(const CodeParams& params, const MessageTuple& msg) {
    if (msg.polys.size() != params.s()) throw ParamMismatch("message must have s polynomials");
    for (const auto& f : msg.polys) {
        if (!f.is_zero() && f.field() != &params.field()) throw ParamMismatch("message polynomial field mismatch");
        if (f.degree() != kNegInfDegree && f.degree() >= static_cast<int64_t>(params.k()))
            throw ParamMismatch("message polynomial degree must be < k");
    }
}

Matrix<FieldElement> encode_ilrs(const CodeParams& params, const MessageTuple& msg) {
    validate_message(params, msg);
    const ExtField& F = params.field();
    Matrix<FieldElement> C(params.s(), params.n_t(), F.zero());
    size_t col = 0;
    for (size_t i = 0; i < params.ell(); ++i) {
        for (size_t j = 0; j < params.block_length(i); ++j, ++col)
            for (uint32_t l = 0; l < params.s(); ++l)
                C(l, col) = op_evaluate(msg.polys[l], params.beta()[i][j], params.a()[i]);
    }
    return C;
}

SubspaceTuple lift(const CodeParams& params, const MessageTuple& msg) {
    validate_message(params, msg);
    const ExtField& F = params.field();
    const ExtField& sub = F.prime_subfield();
    const uint32_t m = F.m();

    SubspaceTuple V;
    V.shots.reserve(params.ell());
    for (size_t i = 0; i < params.ell(); ++i) {
        const uint32_t n_i = params.block_length(i);
        Matrix<FieldElement> rows(n_i, params.ambient(i), sub.zero());
        for (uint32_t j = 0; j < n_i; ++j) {
            rows(j, j) = sub.one();  // beta_j in (beta_1, ..., beta_{n_i}) coordinates
            for (uint32_t l = 0; l < params.s(); ++l) {
                const FieldElement e = op_evaluate(msg.polys[l], params.beta()[i][j], params.a()[i]);
                auto coords = coords_in_basis(e, params.expansion_basis());
                for (uint32_t t = 0; t < m; ++t) rows(j, n_i + l * m + t) = coords[t];
            }
        }
        Subspace shot = Subspace::row_space(&sub, rows);
        if (shot.dim() != n_i) throw Error("lifted shot lost rank");  // impossible for independent beta
        V.shots.push_back(std::move(shot));
    }
    return V;
}

BigRational code_rate(const CodeParams& params) {
    const uint64_t m = params.field().m();
    BigInt num = BigInt(params.s()) * m * params.k();
    BigInt den = 0;
    for (size_t i = 0; i < params.ell(); ++i) {
        den += BigInt(params.block_length(i)) * (params.block_length(i) + params.s() * m);
    }
    return BigRational(num, den);
}

uint32_t min_sum_subspace_distance(const CodeParams& params) { return 2 * (params.n_t() - params.k() + 1); }

BigInt worst_case_list_size(const CodeParams& params) {
    const unsigned e = params.field().m() * params.k() * (params.s() - 1);
    return boost::multiprecision::pow(BigInt(params.field().q()), e);
}

Matrix<FieldElement> isrs_transform(const CodeParams& params, const Matrix<FieldElement>& C) {
    if (C.cols() != params.n_t()) throw ParamMismatch("codeword width mismatch");
    Matrix<FieldElement> out = C;
    size_t col = 0;
    for (size_t i = 0; i < params.ell(); ++i)
        for (size_t j = 0; j < params.block_length(i); ++j, ++col) {
            const FieldElement inv = params.beta()[i][j].inverse();
            for (size_t r = 0; r < C.rows(); ++r) out(r, col) = out(r, col) * inv;
        }
    return out;
}

Matrix<FieldElement> isrs_untransform(const CodeParams& params, const Matrix<FieldElement>& C) {
    if (C.cols() != params.n_t()) throw ParamMismatch("codeword width mismatch");
    Matrix<FieldElement> out = C;
    size_t col = 0;
    for (size_t i = 0; i < params.ell(); ++i)
        for (size_t j = 0; j < params.block_length(i); ++j, ++col)
            for (size_t r = 0; r < C.rows(); ++r) out(r, col) = out(r, col) * params.beta()[i][j];
    return out;
}

std::vector<FieldElement> isrs_params(const CodeParams& params) {
    std::vector<FieldElement> b;
    b.reserve(params.n_t());
    for (size_t i = 0; i < params.ell(); ++i)
        for (size_t j = 0; j < params.block_length(i); ++j)
            b.push_back(conjugate(params.a()[i], params.beta()[i][j]));
    return b;
}

}  // namespace lilrs
