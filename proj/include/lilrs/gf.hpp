#ifndef LILRS_GF_HPP
#define LILRS_GF_HPP

#include <cassert>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "lilrs/errors.hpp"

namespace lilrs {

class ExtField;

/// Prime field descriptor F_q. Mostly a validated carrier of q; element
/// arithmetic lives in ExtField (an F_q is an ExtField with m = 1).
class PrimeField {
   public:
    explicit PrimeField(uint32_t q);
    uint32_t q() const { return q_; }

   private:
    uint32_t q_;
};

/// Element of F_{q^m}, stored as the packed index sum_i c_i q^i of its
/// power-basis coordinates (c_0, ..., c_{m-1}). A default-constructed
/// element is an unattached zero: it compares equal to any zero and is
/// absorbed by + and *, so value containers can be resized freely.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const ExtField* field, uint64_t index) : field_(field), idx_(static_cast<uint32_t>(index)) {}

    const ExtField* field() const { return field_; }
    uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return field_ != nullptr && idx_ == 1; }

    uint32_t coord(uint32_t i) const;
    std::vector<uint32_t> coords() const;

    FieldElement inverse() const;
    FieldElement pow(int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.field_ == nullptr || b.field_ == nullptr) return a.idx_ == 0 && b.idx_ == 0;
        assert(a.field_ == b.field_);
        return a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e);

   private:
    const ExtField* field_ = nullptr;
    uint32_t idx_ = 0;
};

/// The tower F_q < F_{q^m} with a fixed monic irreducible modulus, a cached
/// primitive element alpha and log/exp tables. Immutable after construction
/// and safe to share across threads. Elements hold a raw pointer to their
/// field, so the field must outlive them.
class ExtField {
   public:
    /// Picks the lexicographically smallest monic irreducible modulus
    /// (smallest packed coefficient value first).
    ExtField(uint32_t q, uint32_t m);
    /// Explicit modulus: little-endian coefficients, length m+1, monic.
    ExtField(uint32_t q, uint32_t m, const std::vector<uint32_t>& modulus_le);

    ExtField(const ExtField&) = delete;
    ExtField& operator=(const ExtField&) = delete;

    uint32_t q() const { return q_; }
    uint32_t m() const { return m_; }
    uint64_t order() const { return order_; }  // q^m
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// F_q as a field in its own right; returns *this when m == 1.
    /// Lifetime is tied to this object.
    const ExtField& prime_subfield() const { return m_ == 1 ? *this : *sub_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement alpha() const { return FieldElement(this, alpha_idx_); }
    FieldElement element(uint64_t index) const;
    FieldElement from_coords(const std::vector<uint32_t>& coords) const;
    /// Embeds a residue c in [0, q) as c * 1.
    FieldElement embed_residue(uint32_t c) const;

    std::vector<FieldElement> power_basis() const;  // (1, x, ..., x^{m-1})

    // Index-level arithmetic. All inputs/outputs are packed indices.
    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;
    uint32_t sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t inv_idx(uint32_t a) const;
    uint32_t pow_idx(uint32_t a, int64_t e) const;
    /// sigma^i with sigma : a -> a^q; i may be negative (reduced mod m).
    uint32_t frobenius_idx(uint32_t a, int64_t i) const;
    int64_t log_idx(uint32_t a) const;  // a != 0; discrete log base alpha

    std::string to_string(const FieldElement& e) const;

   private:
    void init(const std::vector<uint32_t>* modulus_le);
    uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free, used during setup
    uint32_t raw_pow(uint32_t a, uint64_t e) const;

    uint32_t q_ = 0;
    uint32_t m_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;      // little-endian, size m+1, monic
    std::vector<uint32_t> exp_;          // alpha^j, j in [0, order-1)
    std::vector<int64_t> log_;           // inverse of exp_, log_[0] = -1
    std::vector<uint64_t> qpow_mod_;     // q^i mod (order-1), i in [0, m)
    std::vector<uint32_t> add_table_;    // optional, order <= kAddTableLimit
    uint32_t alpha_idx_ = 0;
    std::unique_ptr<const ExtField> sub_;

    static constexpr uint64_t kMaxOrder = 1ULL << 20;
    static constexpr uint64_t kAddTableLimit = 512;
};

// ---- galois operations -----------------------------------------------------

/// sigma^i(e) with sigma(a) = a^q; sigma^m = id, negative i reduce mod m.
FieldElement frobenius(const FieldElement& e, int64_t i = 1);

/// Generalized power N_i(a) = sigma^{i-1}(a) ... sigma(a) a, N_0(a) = 1.
FieldElement generalized_power(const FieldElement& a, uint32_t i);

/// Iterated operator D_a^i(b) = sigma^i(b) N_i(a); i = 1 is sigma(b) a.
FieldElement op_apply(const FieldElement& a, const FieldElement& b, uint32_t i = 1);

/// Conjugate a^c = sigma(c) a c^{-1}; throws ZeroConjugator for c = 0.
FieldElement conjugate(const FieldElement& a, const FieldElement& c);

/// Whether b = a^c for some nonzero c. For the q-Frobenius this reduces to
/// b/a being a (q-1)-th power, i.e. log(b) = log(a) (mod q-1).
bool are_conjugate(const FieldElement& a, const FieldElement& b);

/// Representatives (1, alpha, ..., alpha^{ell-1}) of ell pairwise distinct
/// conjugacy classes; requires 1 <= ell <= q-1.
std::vector<FieldElement> conjugacy_representatives(const ExtField& field, uint32_t ell);

// ---- inline FieldElement ops ----------------------------------------------

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == nullptr) return b;
    if (b.field_ == nullptr) return a;
    assert(a.field_ == b.field_);
    return FieldElement(a.field_, a.field_->add_idx(a.idx_, b.idx_));
}

inline FieldElement operator-(const FieldElement& a) {
    if (a.field_ == nullptr) return a;
    return FieldElement(a.field_, a.field_->neg_idx(a.idx_));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == nullptr || b.field_ == nullptr) return FieldElement();
    assert(a.field_ == b.field_);
    return FieldElement(a.field_, a.field_->mul_idx(a.idx_, b.idx_));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (b.field_ == nullptr || b.is_zero()) throw Error("division by zero");
    if (a.field_ == nullptr) return b.field_->zero();
    assert(a.field_ == b.field_);
    return FieldElement(a.field_, a.field_->mul_idx(a.idx_, b.field_->inv_idx(b.idx_)));
}

inline FieldElement FieldElement::inverse() const {
    if (field_ == nullptr || idx_ == 0) throw Error("inverse of zero");
    return FieldElement(field_, field_->inv_idx(idx_));
}

inline FieldElement FieldElement::pow(int64_t e) const {
    assert(field_ != nullptr);
    return FieldElement(field_, field_->pow_idx(idx_, e));
}

inline uint32_t FieldElement::coord(uint32_t i) const {
    assert(field_ != nullptr);
    uint64_t v = idx_;
    for (uint32_t t = 0; t < i; ++t) v /= field_->q();
    return static_cast<uint32_t>(v % field_->q());
}

inline std::vector<uint32_t> FieldElement::coords() const {
    assert(field_ != nullptr);
    std::vector<uint32_t> c(field_->m());
    uint64_t v = idx_;
    for (uint32_t i = 0; i < field_->m(); ++i) {
        c[i] = static_cast<uint32_t>(v % field_->q());
        v /= field_->q();
    }
    return c;
}

}  // namespace lilrs

#endif
