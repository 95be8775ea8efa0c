#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace lilrs;
using lilrs::testing::all_messages;
using lilrs::testing::field;
using lilrs::testing::random_element;
using lilrs::testing::sim_params;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(sim_params());
    // ell > q - 1
    CHECK_THROWS_AS(CodeParams::make(field(2, 2), 2, 1, {1, 1}, 1), TooManyClasses);
    // k > n_t
    CHECK_THROWS_AS(CodeParams::make(field(3, 3), 1, 1, {3}, 4), ParamMismatch);
    // block longer than m cannot be independent
    CHECK_THROWS_AS(CodeParams::make(field(3, 2), 1, 1, {3}, 1), ParamMismatch);

    // dependent beta block
    auto F = field(3, 2);
    std::vector<std::vector<FieldElement>> beta = {{F->one(), F->one() + F->one()}};
    CHECK_THROWS_AS(CodeParams::make(F, 1, 1, {2}, 1, {F->one()}, beta), ParamMismatch);

    // conjugate representatives: alpha and alpha^3 are conjugate in F_9
    // (their logs agree mod q-1 = 2)
    std::vector<std::vector<FieldElement>> beta2 = {{F->one()}, {F->alpha()}};
    CHECK_THROWS_AS(
        CodeParams::make(F, 2, 1, {1, 1}, 1, {F->alpha(), F->alpha().pow(3)}, beta2), ParamMismatch);

    // zero representative
    CHECK_THROWS_AS(CodeParams::make(F, 1, 1, {1}, 1, {F->zero()}, {{F->one()}}), ParamMismatch);
}

TEST_CASE("defaults: representatives and evaluation points") {
    const CodeParams p = sim_params();
    const ExtField& F = p.field();
    CHECK(p.a()[0] == F.one());
    CHECK(p.a()[1] == F.alpha());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(p.beta()[i][j] == F.alpha().pow(static_cast<int64_t>(j)));
    CHECK(p.n_t() == 6);
    CHECK(p.ambient(0) == 12);  // n_t^{(i)} + s m = 3 + 9
}

TEST_CASE("encode: zero message and F_4 example") {
    auto F = field(2, 2);
    const CodeParams p = CodeParams::make(F, 1, 1, {2}, 2);

    MessageTuple zero;
    zero.polys.emplace_back(F.get());
    const auto Z = encode_ilrs(p, zero);
    for (size_t j = 0; j < 2; ++j) CHECK(Z(0, j) == F->zero());

    // f = x over beta = (1, omega), a = 1: row (sigma(1), sigma(omega)) = (1, omega+1)
    MessageTuple msg;
    msg.polys.push_back(SkewPolynomial::monomial(F.get(), 1, F->one()));
    const auto C = encode_ilrs(p, msg);
    CHECK(C(0, 0) == F->one());
    CHECK(C(0, 1) == F->from_coords({1, 1}));
}

TEST_CASE("encode rejects malformed messages") {
    const CodeParams p = sim_params();
    MessageTuple bad;
    bad.polys.emplace_back(&p.field());
    CHECK_THROWS_AS(encode_ilrs(p, bad), ParamMismatch);  // s mismatch

    MessageTuple deg;
    for (int l = 0; l < 3; ++l) deg.polys.push_back(SkewPolynomial::monomial(&p.field(), 3, p.field().one()));
    CHECK_THROWS_AS(encode_ilrs(p, deg), ParamMismatch);  // degree k not < k
}

TEST_CASE("encoding is additive in the message") {
    const CodeParams p = sim_params();
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const MessageTuple f = random_message(p, rng), g = random_message(p, rng);
        CHECK(encode_ilrs(p, lilrs::testing::add_messages(f, g)) == encode_ilrs(p, f) + encode_ilrs(p, g));
    }
}

TEST_CASE("k = n_t: any target matrix is hit (annihilator-based interpolation oracle)") {
    auto F = field(3, 2);
    const CodeParams p = CodeParams::make(F, 2, 2, {2, 2}, 4);  // k = n_t = 4
    Rng rng(5);

    // flatten evaluation points with their classes
    std::vector<std::pair<FieldElement, size_t>> pts;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) pts.push_back({p.beta()[i][j], i});

    for (int t = 0; t < 10; ++t) {
        Matrix<FieldElement> target(p.s(), p.n_t(), F->zero());
        for (size_t r = 0; r < target.rows(); ++r)
            for (size_t c = 0; c < target.cols(); ++c) target(r, c) = random_element(*F, rng);

        MessageTuple msg;
        for (uint32_t l = 0; l < p.s(); ++l) {
            SkewPolynomial f(F.get());
            for (size_t j = 0; j < pts.size(); ++j) {
                std::vector<std::pair<FieldElement, size_t>> others;
                for (size_t o = 0; o < pts.size(); ++o)
                    if (o != j) others.push_back(pts[o]);
                const SkewPolynomial h = annihilator(others, p.a());
                const FieldElement cj = op_evaluate(h, pts[j].first, p.a()[pts[j].second]);
                REQUIRE(!cj.is_zero());
                f = f + (target(l, j) * cj.inverse()) * h;
            }
            msg.polys.push_back(f);
        }
        CHECK(encode_ilrs(p, msg) == target);
    }
}

TEST_CASE("lift: shot dimensions, zero message shape, pullback structure") {
    const CodeParams p = sim_params();
    const ExtField& F = p.field();
    Rng rng(7);

    for (int t = 0; t < 20; ++t) {
        const MessageTuple msg = random_message(p, rng);
        const SubspaceTuple V = lift(p, msg);
        REQUIRE(V.shots.size() == 2);
        for (size_t i = 0; i < 2; ++i) {
            CHECK(V.shots[i].dim() == p.block_length(i));
            CHECK(V.shots[i].ambient() == p.ambient(i));
        }
    }

    MessageTuple zero;
    for (uint32_t l = 0; l < p.s(); ++l) zero.polys.emplace_back(&F);
    const SubspaceTuple Z = lift(p, zero);
    for (size_t i = 0; i < 2; ++i) {
        const auto& B = Z.shots[i].basis();
        for (size_t r = 0; r < B.rows(); ++r)
            for (size_t c = 0; c < B.cols(); ++c) {
                if (c < p.block_length(i))
                    CHECK(B(r, c).is_zero() == (r != c));
                else
                    CHECK(B(r, c).is_zero());
            }
    }
}

TEST_CASE("lift is injective (exhaustive, q=2 m=2 ell=1 s=1 n_t=2 k=1)") {
    const CodeParams p = CodeParams::make(field(2, 2), 1, 1, {2}, 1);
    const auto msgs = all_messages(p);
    REQUIRE(msgs.size() == 4);
    std::set<std::string> keys;
    for (const auto& m : msgs) {
        const SubspaceTuple V = lift(p, m);
        keys.insert(lilrs::testing::subspace_key(V.shots[0]));
    }
    CHECK(keys.size() == msgs.size());
}

TEST_CASE("code rate") {
    // symmetric case: s=1, ell=1, n_t = m = k gives 1/2
    const CodeParams sym = CodeParams::make(field(2, 2), 1, 1, {2}, 2);
    CHECK(code_rate(sym) == BigRational(1, 2));

    const CodeParams p = sim_params();
    CHECK(code_rate(p) == BigRational(27, 72));
    CHECK(code_rate(p).convert_to<double>() == doctest::Approx(0.375));

    // s = 1 reduces to the non-interleaved rate m k / sum n_i (n_i + m)
    const CodeParams s1 = CodeParams::make(field(3, 3), 2, 1, {3, 3}, 3);
    CHECK(code_rate(s1) == BigRational(3 * 3, 3 * (3 + 3) + 3 * (3 + 3)));
}

TEST_CASE("minimum sum-subspace distance formula") {
    CHECK(min_sum_subspace_distance(CodeParams::make(field(2, 2), 1, 1, {2}, 2)) == 2);  // n_t = k
    CHECK(min_sum_subspace_distance(sim_params()) == 8);                                 // 2(6-3+1)
}

TEST_CASE("minimum distance brute force (q=2 m=2 ell=1 s=1 n_t=2 k=1)") {
    const CodeParams p = CodeParams::make(field(2, 2), 1, 1, {2}, 1);
    const auto msgs = all_messages(p);
    std::vector<SubspaceTuple> words;
    for (const auto& m : msgs) words.push_back(lift(p, m));
    uint32_t min_d = UINT32_MAX;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            min_d = std::min(min_d, sum_subspace_distance(words[i], words[j]));
    CHECK(min_d == min_sum_subspace_distance(p));
    CHECK(min_d == 4);
}

TEST_CASE("s=1, ell=1, a=1 reduces to sigma-power evaluation") {
    auto F = field(2, 3);
    const CodeParams p = CodeParams::make(F, 1, 1, {3}, 2);
    REQUIRE(p.a()[0] == F->one());
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const MessageTuple msg = random_message(p, rng);
        const auto C = encode_ilrs(p, msg);
        for (size_t j = 0; j < 3; ++j) {
            FieldElement expect = F->zero();
            for (size_t i = 0; i < msg.polys[0].coeffs().size(); ++i)
                expect += msg.polys[0].coeff(i) * frobenius(p.beta()[0][j], static_cast<int64_t>(i));
            CHECK(C(0, j) == expect);
        }
    }
}

TEST_CASE("skew-isometry transform") {
    const CodeParams p = sim_params();
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        const auto C = encode_ilrs(p, random_message(p, rng));
        CHECK(isrs_untransform(p, isrs_transform(p, C)) == C);
    }

    // all beta = 1: transform is the identity
    auto F = field(3, 2);
    const CodeParams ones = CodeParams::make(F, 1, 1, {1}, 1, {F->one()}, {{F->one()}});
    Matrix<FieldElement> M(1, 1, F->alpha());
    CHECK(isrs_transform(ones, M) == M);

    // F_4, beta = (1, omega): diag(beta^{-1}) = diag(1, omega^2)
    auto F4 = field(2, 2);
    const CodeParams p4 = CodeParams::make(F4, 1, 1, {2}, 1);
    Matrix<FieldElement> I2(1, 2, F4->one());
    const auto T = isrs_transform(p4, I2);
    CHECK(T(0, 0) == F4->one());
    CHECK(T(0, 1) == F4->alpha() * F4->alpha());

    // b vector entries are conjugates of a_i by beta_j
    const auto b = isrs_params(p);
    size_t pos = 0;
    for (size_t i = 0; i < p.ell(); ++i)
        for (size_t j = 0; j < p.block_length(i); ++j, ++pos)
            CHECK(b[pos] == frobenius(p.beta()[i][j]) * p.a()[i] * p.beta()[i][j].inverse());
}

TEST_CASE("worst-case list size") {
    CHECK(worst_case_list_size(sim_params()) == BigInt(387420489));  // 3^18
    CHECK(worst_case_list_size(CodeParams::make(field(3, 3), 2, 1, {3, 3}, 3)) == 1);
}
