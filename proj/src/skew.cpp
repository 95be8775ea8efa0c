#include "lilrs/skew.hpp"

#include <cassert>

namespace lilrs {

SkewPolynomial SkewPolynomial::monomial(const ExtField* field, size_t degree, const FieldElement& c) {
    std::vector<FieldElement> coeffs(degree + 1, field->zero());
    coeffs[degree] = c;
    return SkewPolynomial(field, std::move(coeffs));
}

SkewPolynomial SkewPolynomial::constant(const ExtField* field, const FieldElement& c) {
    return SkewPolynomial(field, {c});
}

FieldElement SkewPolynomial::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

SkewPolynomial SkewPolynomial::monic() const {
    if (is_zero()) throw Error("cannot normalize zero polynomial");
    return leading().inverse() * *this;
}

SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
    const ExtField* F = f.field_ != nullptr ? f.field_ : g.field_;
    std::vector<FieldElement> c(std::max(f.coeffs_.size(), g.coeffs_.size()),
                                F != nullptr ? F->zero() : FieldElement());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return SkewPolynomial(F, std::move(c));
}

SkewPolynomial operator-(const SkewPolynomial& f) {
    std::vector<FieldElement> c(f.coeffs_);
    for (auto& x : c) x = -x;
    return SkewPolynomial(f.field_, std::move(c));
}

SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) { return f + (-g); }

SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
    const ExtField* F = f.field_ != nullptr ? f.field_ : g.field_;
    if (f.is_zero() || g.is_zero()) return SkewPolynomial(F);
    std::vector<FieldElement> c(f.coeffs_.size() + g.coeffs_.size() - 1, F->zero());
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] += f.coeffs_[i] * frobenius(g.coeffs_[j], static_cast<int64_t>(i));
    }
    return SkewPolynomial(F, std::move(c));
}

SkewPolynomial operator*(const FieldElement& c, const SkewPolynomial& f) {
    std::vector<FieldElement> out(f.coeffs_);
    for (auto& x : out) x = c * x;
    return SkewPolynomial(f.field_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const SkewPolynomial& f) {
    if (f.is_zero()) return os << "0";
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << f.coeffs_[i] << " x^" << i;
    }
    return os;
}

FieldElement op_evaluate(const SkewPolynomial& f, const FieldElement& b, const FieldElement& a) {
    assert(a.field() != nullptr);
    const ExtField* F = a.field();
    FieldElement acc = F->zero();
    // running v_i = sigma^i(b) N_i(a), advanced via v_{i+1} = sigma(v_i) a
    FieldElement v = b;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        acc += f.coeffs()[i] * v;
        v = frobenius(v) * a;
    }
    return acc;
}

bool product_rule_holds(const SkewPolynomial& f, const SkewPolynomial& g, const FieldElement& b,
                        const FieldElement& a) {
    return op_evaluate(f * g, b, a) == op_evaluate(f, op_evaluate(g, b, a), a);
}

SkewPolynomial annihilator(const std::vector<std::pair<FieldElement, size_t>>& points,
                           const std::vector<FieldElement>& reps) {
    const ExtField* F = nullptr;
    for (const auto& r : reps)
        if (r.field() != nullptr) F = r.field();
    for (const auto& p : points)
        if (p.first.field() != nullptr) F = p.first.field();
    if (F == nullptr) throw Error("annihilator needs a field context");

    SkewPolynomial f = SkewPolynomial::constant(F, F->one());
    for (const auto& [b, cls] : points) {
        if (cls >= reps.size()) throw Error("point references an unknown conjugacy class");
        const FieldElement& a = reps[cls];
        const FieldElement c = op_evaluate(f, b, a);
        if (c.is_zero()) continue;  // already a root, degree unchanged
        // (x - a^c) kills the new point and keeps all previous roots
        SkewPolynomial factor =
            SkewPolynomial(F, {-conjugate(a, c), F->one()});
        f = factor * f;
    }
    return f.monic();
}

int64_t weighted_degree(const MultivariateSkewPolynomial& Q, const std::vector<int64_t>& w) {
    if (w.size() != Q.comps.size()) throw Error("weight vector length mismatch");
    int64_t best = kNegInfDegree;
    for (size_t j = 0; j < Q.comps.size(); ++j) {
        if (Q.comps[j].is_zero()) continue;
        best = std::max(best, Q.comps[j].degree() + w[j]);
    }
    return best;
}

}  // namespace lilrs
