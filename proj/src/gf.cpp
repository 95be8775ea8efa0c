#include "lilrs/gf.hpp"

#include <algorithm>
#include <sstream>

namespace lilrs {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Dense little-endian polynomials over F_q, used only during field setup
// (irreducibility of the modulus).
using FqPoly = std::vector<uint32_t>;

void fq_trim(FqPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

FqPoly fq_mod(FqPoly a, const FqPoly& f, uint32_t q) {
    // f monic
    fq_trim(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i <= df; ++i) {
                uint64_t v = a[shift + i] + static_cast<uint64_t>(q - 1) * lead % q * f[i];
                a[shift + i] = static_cast<uint32_t>(v % q);
            }
        }
        a.pop_back();
        fq_trim(a);
        if (a.size() <= df) break;
    }
    fq_trim(a);
    return a;
}

FqPoly fq_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& f, uint32_t q) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % q);
    }
    return fq_mod(std::move(c), f, q);
}

FqPoly fq_powmod(FqPoly base, uint64_t e, const FqPoly& f, uint32_t q) {
    FqPoly r{1};
    base = fq_mod(std::move(base), f, q);
    while (e > 0) {
        if (e & 1) r = fq_mulmod(r, base, f, q);
        base = fq_mulmod(base, base, f, q);
        e >>= 1;
    }
    return r;
}

FqPoly fq_gcd(FqPoly a, FqPoly b, uint32_t q) {
    fq_trim(a);
    fq_trim(b);
    while (!b.empty()) {
        // make b monic so fq_mod applies
        uint32_t lead = b.back();
        if (lead != 1) {
            // lead^{-1} by Fermat
            uint32_t inv = 1;
            uint32_t base = lead, e = q - 2;
            while (e) {
                if (e & 1) inv = static_cast<uint32_t>(static_cast<uint64_t>(inv) * base % q);
                base = static_cast<uint32_t>(static_cast<uint64_t>(base) * base % q);
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % q);
        }
        FqPoly r = fq_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree m is irreducible iff it shares no factor with
// x^{q^d} - x for any d <= m/2.
bool fq_irreducible(const FqPoly& f, uint32_t q) {
    const size_t m = f.size() - 1;
    FqPoly t{0, 1};  // x
    for (size_t d = 1; d <= m / 2; ++d) {
        t = fq_powmod(t, q, f, q);  // x^{q^d} mod f
        FqPoly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint32_t>((diff[1] + q - 1) % q);
        FqPoly g = fq_gcd(f, diff, q);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(uint32_t q) : q_(q) {
    if (!is_prime(q)) throw Error("q = " + std::to_string(q) + " is not prime");
}

ExtField::ExtField(uint32_t q, uint32_t m) : q_(q), m_(m) { init(nullptr); }

ExtField::ExtField(uint32_t q, uint32_t m, const std::vector<uint32_t>& modulus_le) : q_(q), m_(m) {
    init(&modulus_le);
}

void ExtField::init(const std::vector<uint32_t>* modulus_le) {
    PrimeField base(q_);
    if (m_ < 1) throw Error("extension degree must be >= 1");
    order_ = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        order_ *= q_;
        if (order_ > kMaxOrder) throw Error("field order exceeds supported desk-scale limit");
    }

    if (modulus_le != nullptr) {
        modulus_ = *modulus_le;
        if (modulus_.size() != m_ + 1) throw Error("modulus must have m+1 coefficients");
        if (modulus_.back() != 1) throw Error("modulus must be monic");
        for (uint32_t c : modulus_)
            if (c >= q_) throw Error("modulus coefficient out of range");
        if (!fq_irreducible(modulus_, q_)) throw Error("modulus is not irreducible over F_q");
    } else {
        // smallest packed non-leading coefficient vector that is irreducible
        uint64_t packed = 0;
        for (;; ++packed) {
            if (packed >= order_) throw Error("no irreducible modulus found");  // unreachable
            FqPoly f(m_ + 1, 0);
            uint64_t v = packed;
            for (uint32_t i = 0; i < m_; ++i) {
                f[i] = static_cast<uint32_t>(v % q_);
                v /= q_;
            }
            f[m_] = 1;
            if (fq_irreducible(f, q_)) {
                modulus_ = std::move(f);
                break;
            }
        }
    }

    // primitive element: first element in packed order whose multiplicative
    // order is q^m - 1
    const uint64_t group = order_ - 1;
    const auto factors = prime_factors(group);
    alpha_idx_ = 0;
    for (uint32_t cand = 1; cand < order_; ++cand) {
        bool primitive = true;
        for (uint64_t p : factors) {
            if (raw_pow(cand, group / p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha_idx_ = cand;
            break;
        }
    }
    if (alpha_idx_ == 0) throw Error("no primitive element found");  // unreachable for a field

    exp_.assign(group, 0);
    log_.assign(order_, -1);
    uint32_t cur = 1;
    for (uint64_t j = 0; j < group; ++j) {
        exp_[j] = cur;
        if (log_[cur] != -1) throw Error("alpha is not primitive");  // defensive, unreachable
        log_[cur] = static_cast<int64_t>(j);
        cur = raw_mul(cur, alpha_idx_);
    }
    if (cur != 1) throw Error("primitive element order mismatch");

    qpow_mod_.assign(m_, 0);
    uint64_t qp = 1 % group;
    for (uint32_t i = 0; i < m_; ++i) {
        qpow_mod_[i] = qp;
        qp = (qp * q_) % group;
    }

    if (order_ <= kAddTableLimit) {
        add_table_.assign(order_ * order_, 0);
        for (uint64_t a = 0; a < order_; ++a)
            for (uint64_t b = 0; b < order_; ++b) {
                uint64_t r = 0, mul = 1, x = a, y = b;
                for (uint32_t i = 0; i < m_; ++i) {
                    r += ((x + y) % q_) * mul;
                    x /= q_;
                    y /= q_;
                    mul *= q_;
                }
                add_table_[a * order_ + b] = static_cast<uint32_t>(r);
            }
    }

    if (m_ > 1) sub_ = std::make_unique<const ExtField>(q_, 1);
}

uint32_t ExtField::raw_mul(uint32_t a, uint32_t b) const {
    // schoolbook product of coordinate vectors, reduced by the modulus
    std::vector<uint32_t> da(m_), db(m_);
    uint64_t v = a;
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = static_cast<uint32_t>(v % q_);
        v /= q_;
    }
    v = b;
    for (uint32_t i = 0; i < m_; ++i) {
        db[i] = static_cast<uint32_t>(v % q_);
        v /= q_;
    }
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % q_);
    }
    for (uint32_t d = 2 * m_ - 2; d >= m_ && d < prod.size(); --d) {
        const uint32_t c = prod[d];
        if (c != 0) {
            // x^d = x^{d-m} * x^m = -x^{d-m} * (f_0 + ... + f_{m-1} x^{m-1})
            for (uint32_t i = 0; i < m_; ++i) {
                uint64_t sub = static_cast<uint64_t>(c) * modulus_[i] % q_;
                prod[d - m_ + i] = static_cast<uint32_t>((prod[d - m_ + i] + q_ - sub) % q_);
            }
            prod[d] = 0;
        }
        if (d == m_) break;
    }
    uint64_t packed = 0, mul = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        packed += prod[i] * mul;
        mul *= q_;
    }
    return static_cast<uint32_t>(packed);
}

uint32_t ExtField::raw_pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = raw_mul(r, a);
        a = raw_mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement ExtField::element(uint64_t index) const {
    if (index >= order_) throw Error("element index out of range");
    return FieldElement(this, index);
}

FieldElement ExtField::from_coords(const std::vector<uint32_t>& coords) const {
    if (coords.size() != m_) throw Error("coordinate vector must have length m");
    uint64_t packed = 0, mul = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (coords[i] >= q_) throw Error("coordinate out of range");
        packed += coords[i] * mul;
        mul *= q_;
    }
    return FieldElement(this, packed);
}

FieldElement ExtField::embed_residue(uint32_t c) const {
    if (c >= q_) throw Error("residue out of range");
    return FieldElement(this, c);
}

std::vector<FieldElement> ExtField::power_basis() const {
    std::vector<FieldElement> b;
    b.reserve(m_);
    uint64_t idx = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        b.emplace_back(this, idx);
        idx *= q_;
    }
    return b;
}

uint32_t ExtField::add_idx(uint32_t a, uint32_t b) const {
    if (!add_table_.empty()) return add_table_[static_cast<uint64_t>(a) * order_ + b];
    uint64_t r = 0, mul = 1, x = a, y = b;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((x + y) % q_) * mul;
        x /= q_;
        y /= q_;
        mul *= q_;
    }
    return static_cast<uint32_t>(r);
}

uint32_t ExtField::neg_idx(uint32_t a) const {
    uint64_t r = 0, mul = 1, x = a;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((q_ - x % q_) % q_) * mul;
        x /= q_;
        mul *= q_;
    }
    return static_cast<uint32_t>(r);
}

uint32_t ExtField::mul_idx(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const uint64_t group = order_ - 1;
    return exp_[(static_cast<uint64_t>(log_[a]) + static_cast<uint64_t>(log_[b])) % group];
}

uint32_t ExtField::inv_idx(uint32_t a) const {
    if (a == 0) throw Error("inverse of zero");
    const uint64_t group = order_ - 1;
    return exp_[(group - static_cast<uint64_t>(log_[a])) % group];
}

uint32_t ExtField::pow_idx(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error("inverse of zero");
        return 0;
    }
    const int64_t group = static_cast<int64_t>(order_ - 1);
    int64_t le = ((log_[a] * (e % group)) % group + group) % group;
    return exp_[le];
}

uint32_t ExtField::frobenius_idx(uint32_t a, int64_t i) const {
    if (a == 0) return 0;
    const uint64_t group = order_ - 1;
    if (group == 1) return a;
    const int64_t im = ((i % m_) + m_) % m_;
    return exp_[(static_cast<uint64_t>(log_[a]) * qpow_mod_[im]) % group];
}

int64_t ExtField::log_idx(uint32_t a) const {
    if (a == 0) throw Error("log of zero");
    return log_[a];
}

std::string ExtField::to_string(const FieldElement& e) const {
    std::ostringstream os;
    os << "[";
    auto c = e.coords();
    for (uint32_t i = 0; i < m_; ++i) os << (i ? " " : "") << c[i];
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    if (e.field() == nullptr) return os << "[0]";
    return os << e.field()->to_string(e);
}

// ---- galois operations -----------------------------------------------------

FieldElement frobenius(const FieldElement& e, int64_t i) {
    if (e.field() == nullptr) return e;
    return FieldElement(e.field(), e.field()->frobenius_idx(e.index(), i));
}

FieldElement generalized_power(const FieldElement& a, uint32_t i) {
    assert(a.field() != nullptr);
    FieldElement r = a.field()->one();
    FieldElement at = a;  // sigma^t(a)
    for (uint32_t t = 0; t < i; ++t) {
        r = at * r;
        at = frobenius(at);
    }
    return r;
}

FieldElement op_apply(const FieldElement& a, const FieldElement& b, uint32_t i) {
    assert(a.field() != nullptr);
    return frobenius(b, i) * generalized_power(a, i);
}

FieldElement conjugate(const FieldElement& a, const FieldElement& c) {
    if (c.field() == nullptr || c.is_zero()) throw ZeroConjugator();
    return frobenius(c) * a * c.inverse();
}

bool are_conjugate(const FieldElement& a, const FieldElement& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const ExtField* F = a.field();
    assert(F != nullptr && F == b.field());
    const int64_t d = F->log_idx(a.index()) - F->log_idx(b.index());
    return d % static_cast<int64_t>(F->q() - 1) == 0;
}

std::vector<FieldElement> conjugacy_representatives(const ExtField& field, uint32_t ell) {
    if (ell < 1) throw Error("ell must be >= 1");
    if (ell > field.q() - 1)
        throw TooManyClasses("requested " + std::to_string(ell) + " conjugacy classes, field has at most " +
                             std::to_string(field.q() - 1));
    std::vector<FieldElement> reps;
    reps.reserve(ell);
    FieldElement cur = field.one();
    for (uint32_t i = 0; i < ell; ++i) {
        reps.push_back(cur);
        cur = cur * field.alpha();
    }
    return reps;
}

}  // namespace lilrs
