#include "lilrs/subspace.hpp"

#include <algorithm>

namespace lilrs {

Subspace::Subspace(const ExtField* field, size_t ambient)
    : field_(field), ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const ExtField* field, Matrix<FieldElement> rows) {
    Subspace s(field, rows.cols());
    const size_t r = rref(rows);
    Matrix<FieldElement> basis(r, rows.cols(), field->zero());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < rows.cols(); ++j) basis(i, j) = rows(i, j);
    s.basis_ = std::move(basis);
    return s;
}

Subspace rowspace(const ExtField* field, const Matrix<FieldElement>& M) {
    return Subspace::row_space(field, M);
}

bool Subspace::contains(const std::vector<FieldElement>& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
    std::vector<FieldElement> w = v;
    for (size_t r = 0; r < dim(); ++r) {
        size_t p = 0;
        while (p < ambient_ && basis_(r, p).is_zero()) ++p;
        if (p == ambient_ || w[p].is_zero()) continue;
        const FieldElement f = w[p];
        for (size_t j = p; j < ambient_; ++j) w[j] = w[j] - f * basis_(r, j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("ambient dimensions differ");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<FieldElement> coords_in_basis(const FieldElement& e, const std::vector<FieldElement>& basis) {
    const ExtField* F = nullptr;
    for (const auto& b : basis)
        if (b.field() != nullptr) F = b.field();
    if (F == nullptr) throw BadBasis("empty expansion basis");
    const uint32_t m = F->m();
    const size_t n = basis.size();
    if (n > m) throw BadBasis("expansion basis has more than m elements");
    const ExtField& sub = F->prime_subfield();

    // fast path: the full power basis has packed indices 1, q, q^2, ...
    if (n == m) {
        bool power = true;
        uint64_t idx = 1;
        for (uint32_t i = 0; i < m; ++i) {
            if (basis[i].index() != idx) power = false;
            idx *= F->q();
        }
        if (power) {
            std::vector<FieldElement> out(m, sub.zero());
            auto c = e.coords();
            for (uint32_t i = 0; i < m; ++i) out[i] = sub.embed_residue(c[i]);
            return out;
        }
    }

    // solve x * B = coords(e) where row t of B holds the power-basis
    // coordinates of basis[t]; an independent set of n <= m elements is fine
    // as long as e lies in its span
    Matrix<FieldElement> A(n, m, sub.zero());
    for (size_t t = 0; t < n; ++t) {
        auto c = basis[t].coords();
        for (uint32_t i = 0; i < m; ++i) A(t, i) = sub.embed_residue(c[i]);
    }
    if (rank(A) != n) throw BadBasis("expansion basis is linearly dependent");
    std::vector<FieldElement> rhs(m, sub.zero());
    auto ce = e.coords();
    for (uint32_t i = 0; i < m; ++i) rhs[i] = sub.embed_residue(ce[i]);
    auto sol = solve_linear(A.transposed(), rhs, sub.zero(), sub.one());
    if (!sol.consistent) throw Error("element outside the span of the basis");
    return sol.particular;
}

Matrix<FieldElement> expand_rows(const Matrix<FieldElement>& M, const std::vector<FieldElement>& basis) {
    const ExtField* F = nullptr;
    for (const auto& b : basis)
        if (b.field() != nullptr) F = b.field();
    if (F == nullptr) throw BadBasis("empty expansion basis");
    const uint32_t m = F->m();
    const ExtField& sub = F->prime_subfield();
    Matrix<FieldElement> out(M.rows(), M.cols() * m, sub.zero());
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) {
            auto coords = coords_in_basis(M(r, c), basis);
            for (uint32_t i = 0; i < m; ++i) out(r, c * m + i) = coords[i];
        }
    return out;
}

size_t subspace_sum_dim(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw AmbientMismatch("ambient dimensions differ");
    return rank(vstack(U.basis(), V.basis()));
}

size_t subspace_intersection_dim(const Subspace& U, const Subspace& V) {
    return U.dim() + V.dim() - subspace_sum_dim(U, V);
}

Subspace subspace_sum(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw AmbientMismatch("ambient dimensions differ");
    return Subspace::row_space(U.field(), vstack(U.basis(), V.basis()));
}

BigInt gaussian_binomial(int64_t n, int64_t k, uint64_t q) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int64_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

Subspace random_subspace(const ExtField* field, size_t ambient, size_t dim, Rng& rng) {
    if (dim > ambient) throw BadDim("subspace dimension exceeds ambient dimension");
    if (dim == 0) return Subspace(field, ambient);
    const uint64_t q = field->q();
    for (;;) {
        Matrix<FieldElement> M(dim, ambient, field->zero());
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < ambient; ++j) M(i, j) = field->element(rng.below(q));
        Matrix<FieldElement> copy = M;
        if (rref(copy) == dim) return Subspace::row_space(field, M);
    }
}

Subspace random_subspace_of(const Subspace& V, size_t dim, Rng& rng) {
    if (dim > V.dim()) throw BadDim("requested dimension exceeds dim V");
    if (dim == 0) return Subspace(V.field(), V.ambient());
    if (dim == V.dim()) return V;
    const ExtField* F = V.field();
    const uint64_t q = F->q();
    for (;;) {
        Matrix<FieldElement> C(dim, V.dim(), F->zero());
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < V.dim(); ++j) C(i, j) = F->element(rng.below(q));
        Matrix<FieldElement> copy = C;
        if (rref(copy) != dim) continue;
        return Subspace::row_space(F, C * V.basis());
    }
}

Subspace random_disjoint_subspace(const Subspace& V, size_t dim, Rng& rng) {
    if (dim > V.ambient() - V.dim()) throw BadDim("no disjoint subspace of that dimension exists");
    const ExtField* F = V.field();
    if (dim == 0) return Subspace(F, V.ambient());
    const uint64_t q = F->q();
    // draw rows one at a time, rejecting rows inside span(V + rows so far);
    // uniform over ordered bases, hence uniform over subspaces after RREF
    Matrix<FieldElement> rows(0, V.ambient());
    Subspace span = V;
    while (rows.rows() < dim) {
        std::vector<FieldElement> v(V.ambient(), F->zero());
        for (size_t j = 0; j < V.ambient(); ++j) v[j] = F->element(rng.below(q));
        if (span.contains(v)) continue;
        Matrix<FieldElement> one_row(1, V.ambient(), F->zero());
        one_row.set_row(0, v);
        rows = vstack(rows, one_row);
        span = subspace_sum(span, Subspace::row_space(F, one_row));
    }
    Subspace E = Subspace::row_space(F, rows);
    // every accepted row was outside the running span, so these hold by
    // construction
    if (E.dim() != dim || subspace_intersection_dim(E, V) != 0) throw Error("disjoint sampler invariant violated");
    return E;
}

BigInt big_below(const BigInt& n, Rng& rng) {
    if (n <= 0) throw Error("big_below needs n > 0");
    const size_t bits = boost::multiprecision::msb(n) + 1;
    for (;;) {
        BigInt v = 0;
        size_t got = 0;
        while (got < bits) {
            v <<= 64;
            v += rng.next();
            got += 64;
        }
        v >>= (got - bits);
        if (v < n) return v;
    }
}

}  // namespace lilrs
