#ifndef LILRS_CODE_HPP
#define LILRS_CODE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <vector>

#include "lilrs/matrix.hpp"
#include "lilrs/rng.hpp"
#include "lilrs/skew.hpp"
#include "lilrs/subspace.hpp"

namespace lilrs {

using BigRational = boost::multiprecision::cpp_rational;

/// Validated parameter set of a lifted s-interleaved linearized Reed-Solomon
/// code: ell shots, block lengths n_t^{(i)}, dimension k, conjugacy class
/// representatives a_i and per-shot evaluation points beta^{(i)}. Construction
/// checks everything eagerly: beta^{(i)} F_q-independent, a_i nonzero and
/// pairwise non-conjugate, k <= n_t, ell <= q-1.
class CodeParams {
   public:
    /// Default a = (1, alpha, ..., alpha^{ell-1}), default beta^{(i)} =
    /// (1, alpha, ..., alpha^{n_t^{(i)}-1}).
    static CodeParams make(std::shared_ptr<const ExtField> field, uint32_t ell, uint32_t s,
                           std::vector<uint32_t> block_lengths, uint32_t k);
    static CodeParams make(std::shared_ptr<const ExtField> field, uint32_t ell, uint32_t s,
                           std::vector<uint32_t> block_lengths, uint32_t k, std::vector<FieldElement> a,
                           std::vector<std::vector<FieldElement>> beta);

    const ExtField& field() const { return *field_; }
    std::shared_ptr<const ExtField> field_ptr() const { return field_; }
    uint32_t ell() const { return ell_; }
    uint32_t s() const { return s_; }
    uint32_t k() const { return k_; }
    const std::vector<uint32_t>& block_lengths() const { return block_lengths_; }
    uint32_t block_length(size_t i) const { return block_lengths_[i]; }
    uint32_t n_t() const { return n_t_; }
    /// Ambient dimension N_i = n_t^{(i)} + s m of shot i.
    uint32_t ambient(size_t i) const { return block_lengths_[i] + s_ * field_->m(); }
    const std::vector<FieldElement>& a() const { return a_; }
    const std::vector<std::vector<FieldElement>>& beta() const { return beta_; }
    /// Fixed F_q-expansion basis of F_{q^m} (the power basis of the modulus
    /// root); encode and decode agree on it.
    const std::vector<FieldElement>& expansion_basis() const { return expansion_basis_; }

   private:
    CodeParams() = default;

    std::shared_ptr<const ExtField> field_;
    uint32_t ell_ = 0, s_ = 0, k_ = 0, n_t_ = 0;
    std::vector<uint32_t> block_lengths_;
    std::vector<FieldElement> a_;
    std::vector<std::vector<FieldElement>> beta_;
    std::vector<FieldElement> expansion_basis_;
};

/// The s message polynomials, each of degree < k.
struct MessageTuple {
    std::vector<SkewPolynomial> polys;

    friend bool operator==(const MessageTuple& a, const MessageTuple& b) { return a.polys == b.polys; }
    friend bool operator!=(const MessageTuple& a, const MessageTuple& b) { return !(a == b); }
};

/// Tuple of per-shot row spaces, shot i living in F_q^{N_i}.
struct SubspaceTuple {
    std::vector<Subspace> shots;

    friend bool operator==(const SubspaceTuple& a, const SubspaceTuple& b) { return a.shots == b.shots; }
    friend bool operator!=(const SubspaceTuple& a, const SubspaceTuple& b) { return !(a == b); }
};

MessageTuple random_message(const CodeParams& params, Rng& rng);
void validate_message(const CodeParams& params, const MessageTuple& msg);

/// Unlifted ILRS codeword: s x n_t matrix with row l, block i, column j equal
/// to the generalized operator evaluation of f^{(l)} at beta_j^{(i)} w.r.t.
/// a_i.
Matrix<FieldElement> encode_ilrs(const CodeParams& params, const MessageTuple& msg);

/// Lifted codeword: shot i is the F_q row space of the rows
/// (beta_j^{(i)} | f^{(1)}(beta_j^{(i)}) | ... | f^{(s)}(beta_j^{(i)})), the
/// beta column expressed in coordinates w.r.t. (beta_1^{(i)}, ...), i.e. an
/// identity block, and each evaluation expanded over the expansion basis.
SubspaceTuple lift(const CodeParams& params, const MessageTuple& msg);

/// R = s m k / sum_i n_t^{(i)} (n_t^{(i)} + s m), exact.
BigRational code_rate(const CodeParams& params);

/// Minimum sum-subspace distance 2 (n_t - k + 1).
uint32_t min_sum_subspace_distance(const CodeParams& params);

/// Worst-case list size q^{m k (s-1)} of the decoder.
BigInt worst_case_list_size(const CodeParams& params);

/// Right-multiplication by diag(beta^{-1}) mapping ILRS codewords to
/// interleaved skew Reed-Solomon codewords, and its inverse.
Matrix<FieldElement> isrs_transform(const CodeParams& params, const Matrix<FieldElement>& C);
Matrix<FieldElement> isrs_untransform(const CodeParams& params, const Matrix<FieldElement>& C);
/// The b vector of the skew code: entrywise conjugate of a_i by beta_j^{(i)}.
std::vector<FieldElement> isrs_params(const CodeParams& params);

}  // namespace lilrs

#endif
