#ifndef LILRS_SKEW_HPP
#define LILRS_SKEW_HPP

#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "lilrs/gf.hpp"

namespace lilrs {

/// Degree of the zero polynomial. A dedicated sentinel (not -1) so that
/// weighted degrees stay total.
constexpr int64_t kNegInfDegree = std::numeric_limits<int64_t>::min();

/// Element of the Ore ring F_{q^m}[x, sigma] with x a = sigma(a) x.
class SkewPolynomial {
   public:
    SkewPolynomial() = default;
    explicit SkewPolynomial(const ExtField* field) : field_(field) {}
    SkewPolynomial(const ExtField* field, std::vector<FieldElement> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static SkewPolynomial monomial(const ExtField* field, size_t degree, const FieldElement& c);
    static SkewPolynomial constant(const ExtField* field, const FieldElement& c);

    const ExtField* field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int64_t degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int64_t>(coeffs_.size()) - 1; }
    FieldElement coeff(size_t i) const {
        if (i < coeffs_.size()) return coeffs_[i];
        return field_ != nullptr ? field_->zero() : FieldElement();
    }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading() const;

    SkewPolynomial monic() const;

    friend SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g);
    friend SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g);
    friend SkewPolynomial operator-(const SkewPolynomial& f);
    /// Ore product: (f g)_k = sum_{i+j=k} f_i sigma^i(g_j).
    friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g);
    friend SkewPolynomial operator*(const FieldElement& c, const SkewPolynomial& f);

    friend bool operator==(const SkewPolynomial& f, const SkewPolynomial& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const SkewPolynomial& f, const SkewPolynomial& g) { return !(f == g); }

    friend std::ostream& operator<<(std::ostream& os, const SkewPolynomial& f);

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    const ExtField* field_ = nullptr;
    std::vector<FieldElement> coeffs_;
};

/// Generalized operator evaluation: sum_i f_i sigma^i(b) N_i(a).
FieldElement op_evaluate(const SkewPolynomial& f, const FieldElement& b, const FieldElement& a);

/// Product rule check (evaluation of f*g at b equals evaluation of f at the
/// evaluation of g), exposed for property testing.
bool product_rule_holds(const SkewPolynomial& f, const SkewPolynomial& g, const FieldElement& b,
                        const FieldElement& a);

/// Monic minimal-degree polynomial vanishing (in the generalized operator
/// sense) on every (b, class) point; reps[i] is the class representative a_i.
/// Degree equals the point count exactly when each class's points are
/// F_q-linearly independent.
SkewPolynomial annihilator(const std::vector<std::pair<FieldElement, size_t>>& points,
                           const std::vector<FieldElement>& reps);

/// Q(x, y_1, ..., y_s) = Q_0(x) + Q_1(x) y_1 + ... + Q_s(x) y_s.
struct MultivariateSkewPolynomial {
    std::vector<SkewPolynomial> comps;  // s+1 components

    size_t y_count() const { return comps.empty() ? 0 : comps.size() - 1; }
    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// max_j deg(Q_j) + w_j, or kNegInfDegree for the zero polynomial.
int64_t weighted_degree(const MultivariateSkewPolynomial& Q, const std::vector<int64_t>& w);

}  // namespace lilrs

#endif
