#ifndef LILRS_SUBSPACE_HPP
#define LILRS_SUBSPACE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lilrs/gf.hpp"
#include "lilrs/matrix.hpp"
#include "lilrs/rng.hpp"

namespace lilrs {

using BigInt = boost::multiprecision::cpp_int;

/// F_q-subspace of F_q^ambient, canonically represented by an RREF basis
/// with full row rank, so equality is structural equality.
class Subspace {
   public:
    /// Zero subspace.
    Subspace(const ExtField* field, size_t ambient);
    /// Row space of an arbitrary generator matrix (reduced internally).
    static Subspace row_space(const ExtField* field, Matrix<FieldElement> rows);

    const ExtField* field() const { return field_; }
    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix<FieldElement>& basis() const { return basis_; }

    bool contains(const std::vector<FieldElement>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

   private:
    const ExtField* field_;
    size_t ambient_;
    Matrix<FieldElement> basis_;
};

Subspace rowspace(const ExtField* field, const Matrix<FieldElement>& M);

/// Row-wise expansion of a matrix over F_{q^m} to an M x (N m) matrix over
/// F_q, entry coordinates taken w.r.t. the given basis of F_{q^m} over F_q.
Matrix<FieldElement> expand_rows(const Matrix<FieldElement>& M, const std::vector<FieldElement>& basis);

/// Coordinates of e w.r.t. an F_q-basis of F_{q^m} (throws BadBasis if the
/// basis is dependent). Power-basis fast path included.
std::vector<FieldElement> coords_in_basis(const FieldElement& e, const std::vector<FieldElement>& basis);

size_t subspace_sum_dim(const Subspace& U, const Subspace& V);
size_t subspace_intersection_dim(const Subspace& U, const Subspace& V);
Subspace subspace_sum(const Subspace& U, const Subspace& V);

/// Number of k-dimensional subspaces of F_q^n (0 when out of range).
BigInt gaussian_binomial(int64_t n, int64_t k, uint64_t q);

/// Uniform over the Grassmannian G_q(ambient, dim).
Subspace random_subspace(const ExtField* field, size_t ambient, size_t dim, Rng& rng);

/// Uniform over dim-dimensional subspaces of V.
Subspace random_subspace_of(const Subspace& V, size_t dim, Rng& rng);

/// Uniform over dim-dimensional E with E intersect V = 0.
Subspace random_disjoint_subspace(const Subspace& V, size_t dim, Rng& rng);

/// Uniform in [0, n).
BigInt big_below(const BigInt& n, Rng& rng);

}  // namespace lilrs

#endif
