#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "support.hpp"

using namespace lilrs;
using lilrs::testing::all_subspaces;
using lilrs::testing::field;
using lilrs::testing::random_element;
using lilrs::testing::subspace_key;

namespace {

Matrix<FieldElement> from_rows(const ExtField& F, const std::vector<std::vector<uint32_t>>& rows) {
    Matrix<FieldElement> M(rows.size(), rows.empty() ? 0 : rows[0].size(), F.zero());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) M(i, j) = F.element(rows[i][j]);
    return M;
}

}  // namespace

TEST_CASE("expand_rows power-basis examples over F_4") {
    auto F = field(2, 2);
    const auto basis = F->power_basis();

    Matrix<FieldElement> one(1, 1, F->one());
    auto e1 = expand_rows(one, basis);
    REQUIRE(e1.cols() == 2);
    CHECK(e1(0, 0).index() == 1);
    CHECK(e1(0, 1).index() == 0);

    Matrix<FieldElement> om(1, 1, F->alpha());
    auto e2 = expand_rows(om, basis);
    CHECK(e2(0, 0).index() == 0);
    CHECK(e2(0, 1).index() == 1);
}

TEST_CASE("expand_rows with a general basis and BadBasis detection") {
    auto F = field(3, 2);
    // (1, alpha) is a basis; coordinates must reconstruct the element
    const std::vector<FieldElement> basis = {F->one(), F->alpha()};
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const FieldElement e = random_element(*F, rng);
        const auto c = coords_in_basis(e, basis);
        FieldElement back = F->zero();
        for (size_t i = 0; i < basis.size(); ++i) back += F->embed_residue(c[i].coord(0)) * basis[i];
        CHECK(back == e);
    }
    const std::vector<FieldElement> dependent = {F->one(), F->one() + F->one()};
    CHECK_THROWS_AS(coords_in_basis(F->alpha(), dependent), BadBasis);
}

TEST_CASE("rank of expansion equals F_q-span size (brute force) for random 3x2 over F_9") {
    auto F = field(3, 2);
    const ExtField& sub = F->prime_subfield();
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Matrix<FieldElement> M(3, 2, F->zero());
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 2; ++j) M(i, j) = random_element(*F, rng);
        const auto E = expand_rows(M, F->power_basis());
        const size_t r = rank(E);

        // enumerate all F_q-combinations of the expanded rows
        std::set<std::string> span;
        for (uint32_t c0 = 0; c0 < 3; ++c0)
            for (uint32_t c1 = 0; c1 < 3; ++c1)
                for (uint32_t c2 = 0; c2 < 3; ++c2) {
                    std::ostringstream os;
                    for (size_t j = 0; j < E.cols(); ++j) {
                        const FieldElement v = sub.embed_residue(c0) * E(0, j) +
                                               sub.embed_residue(c1) * E(1, j) +
                                               sub.embed_residue(c2) * E(2, j);
                        os << v.index() << ',';
                    }
                    span.insert(os.str());
                }
        CHECK(span.size() == static_cast<size_t>(std::pow(3.0, static_cast<double>(r)) + 0.5));
    }
}

TEST_CASE("rowspace: zero, identity, dependent rows over F_2") {
    auto F2 = field(2, 1);
    CHECK(rowspace(F2.get(), Matrix<FieldElement>(2, 3, F2->zero())).dim() == 0);

    auto I3 = from_rows(*F2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rowspace(F2.get(), I3).dim() == 3);

    auto D = from_rows(*F2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rowspace(F2.get(), D).dim() == 2);
}

TEST_CASE("subspace sum and intersection dimensions") {
    auto F2 = field(2, 1);
    const auto U = rowspace(F2.get(), from_rows(*F2, {{1, 0}}));
    const auto V = rowspace(F2.get(), from_rows(*F2, {{0, 1}}));
    CHECK(subspace_sum_dim(U, U) == 1);
    CHECK(subspace_intersection_dim(U, U) == 1);
    CHECK(subspace_sum_dim(U, V) == 2);
    CHECK(subspace_intersection_dim(U, V) == 0);

    const auto P1 = rowspace(F2.get(), from_rows(*F2, {{1, 0, 0}, {0, 1, 0}}));
    const auto P2 = rowspace(F2.get(), from_rows(*F2, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(subspace_sum_dim(P1, P2) == 3);
    CHECK(subspace_intersection_dim(P1, P2) == 1);

    const auto W = rowspace(F2.get(), from_rows(*F2, {{1, 0, 0, 0}}));
    CHECK_THROWS_AS(subspace_sum_dim(U, W), AmbientMismatch);
}

TEST_CASE("dimension law dim(U+V) + dim(UnV) = dim U + dim V on random pairs") {
    auto F3 = field(3, 1);
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto U = random_subspace(F3.get(), 4, rng.below(5), rng);
        const auto V = random_subspace(F3.get(), 4, rng.below(5), rng);
        CHECK(subspace_sum_dim(U, V) + subspace_intersection_dim(U, V) == U.dim() + V.dim());
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
    CHECK(gaussian_binomial(3, -1, 2) == 0);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2));
            CHECK(gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3));
        }
    // cross-check against enumeration
    auto F2 = field(2, 1);
    CHECK(BigInt(all_subspaces(*F2, 2, 1).size()) == gaussian_binomial(2, 1, 2));
    CHECK(BigInt(all_subspaces(*F2, 4, 2).size()) == gaussian_binomial(4, 2, 2));
}

TEST_CASE("random_subspace: degenerate dims and uniformity over G_2(2,1)") {
    auto F2 = field(2, 1);
    Rng rng(29);
    CHECK(random_subspace(F2.get(), 3, 0, rng).dim() == 0);
    const auto full = random_subspace(F2.get(), 3, 3, rng);
    CHECK(full.dim() == 3);

    std::map<std::string, int> freq;
    const int draws = 30000;
    for (int t = 0; t < draws; ++t) freq[subspace_key(random_subspace(F2.get(), 2, 1, rng))]++;
    REQUIRE(freq.size() == 3);  // [2 choose 1]_2 = 3 lines
    const double expect = draws / 3.0;
    const double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
    for (const auto& [key, count] : freq) CHECK(std::abs(count - expect) < 5 * sigma);

    CHECK_THROWS_AS(random_subspace(F2.get(), 2, 3, rng), BadDim);
}

TEST_CASE("random_subspace_of: contract holds on every draw") {
    auto F3 = field(3, 1);
    Rng rng(31);
    const auto V = random_subspace(F3.get(), 5, 3, rng);
    CHECK(random_subspace_of(V, 3, rng) == V);
    CHECK(random_subspace_of(V, 0, rng).dim() == 0);
    for (int t = 0; t < 200; ++t) {
        const auto W = random_subspace_of(V, 2, rng);
        CHECK(W.dim() == 2);
        CHECK(V.contains(W));
    }
    CHECK_THROWS_AS(random_subspace_of(V, 4, rng), BadDim);
}

TEST_CASE("random_disjoint_subspace: counts and uniformity in F_2^2") {
    auto F2 = field(2, 1);
    Rng rng(37);
    const auto V = rowspace(F2.get(), from_rows(*F2, {{1, 0}}));

    // q^{v*gamma} [N-v choose gamma]_q = 2^1 * [1 choose 1]_2 = 2 candidates
    std::map<std::string, int> freq;
    const int draws = 30000;
    for (int t = 0; t < draws; ++t) {
        const auto E = random_disjoint_subspace(V, 1, rng);
        CHECK(E.dim() == 1);
        CHECK(subspace_intersection_dim(E, V) == 0);
        freq[subspace_key(E)]++;
    }
    REQUIRE(freq.size() == 2);
    const double sigma = std::sqrt(draws * 0.25);
    for (const auto& [key, count] : freq) CHECK(std::abs(count - draws / 2.0) < 5 * sigma);

    CHECK_THROWS_AS(random_disjoint_subspace(V, 2, rng), BadDim);
}

TEST_CASE("random_disjoint_subspace contract on larger random instances") {
    auto F3 = field(3, 1);
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        const auto V = random_subspace(F3.get(), 5, 2, rng);
        const auto E = random_disjoint_subspace(V, 2, rng);
        CHECK(E.dim() == 2);
        CHECK(subspace_intersection_dim(E, V) == 0);
    }
}

TEST_CASE("solve_linear: identity, zero, and brute-force cross-check over F_9") {
    auto F = field(3, 2);
    Rng rng(43);

    // A = I
    Matrix<FieldElement> I(3, 3, F->zero());
    for (int i = 0; i < 3; ++i) I(i, i) = F->one();
    std::vector<FieldElement> b = {random_element(*F, rng), random_element(*F, rng), random_element(*F, rng)};
    auto sol = solve_linear(I, b, F->zero(), F->one());
    CHECK(sol.consistent);
    CHECK(sol.particular == b);
    CHECK(sol.nullspace.empty());

    // A = 0, b = 0: nullspace is everything
    Matrix<FieldElement> Z(2, 3, F->zero());
    auto sol0 = solve_linear(Z, {F->zero(), F->zero()}, F->zero(), F->one());
    CHECK(sol0.consistent);
    CHECK(sol0.nullspace.size() == 3);

    // A = 0, b != 0: inconsistent
    auto bad = solve_linear(Z, {F->one(), F->zero()}, F->zero(), F->one());
    CHECK(!bad.consistent);

    // random 5x7 with a 2-dim nullspace: the affine set from the solver must
    // reproduce the brute-force solution set exactly
    for (;;) {
        Matrix<FieldElement> A(5, 7, F->zero());
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 7; ++j) A(i, j) = random_element(*F, rng);
        if (rank(A) != 5) continue;
        std::vector<FieldElement> rhs(5, F->zero());
        for (auto& x : rhs) x = random_element(*F, rng);
        auto s2 = solve_linear(A, rhs, F->zero(), F->one());
        REQUIRE(s2.consistent);
        REQUIRE(s2.nullspace.size() == 2);

        std::set<std::string> from_solver;
        for (uint64_t c0 = 0; c0 < F->order(); ++c0)
            for (uint64_t c1 = 0; c1 < F->order(); ++c1) {
                std::ostringstream os;
                for (size_t j = 0; j < 7; ++j) {
                    const FieldElement v = s2.particular[j] + F->element(c0) * s2.nullspace[0][j] +
                                           F->element(c1) * s2.nullspace[1][j];
                    os << v.index() << ',';
                }
                from_solver.insert(os.str());
            }
        REQUIRE(from_solver.size() == F->order() * F->order());

        std::set<std::string> brute;
        std::vector<uint64_t> digits(7, 0);
        for (;;) {
            std::vector<FieldElement> x(7, F->zero());
            for (size_t j = 0; j < 7; ++j) x[j] = F->element(digits[j]);
            bool ok = true;
            for (size_t i = 0; i < 5 && ok; ++i) {
                FieldElement acc = F->zero();
                for (size_t j = 0; j < 7; ++j) acc += A(i, j) * x[j];
                ok = acc == rhs[i];
            }
            if (ok) {
                std::ostringstream os;
                for (size_t j = 0; j < 7; ++j) os << x[j].index() << ',';
                brute.insert(os.str());
            }
            size_t t = 0;
            while (t < 7 && ++digits[t] == F->order()) digits[t++] = 0;
            if (t == 7) break;
        }
        CHECK(brute == from_solver);
        break;
    }
}

TEST_CASE("solve_linear solutions satisfy the system exactly") {
    auto F = field(2, 3);
    Rng rng(47);
    for (int t = 0; t < 25; ++t) {
        Matrix<FieldElement> A(4, 6, F->zero());
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 6; ++j) A(i, j) = random_element(*F, rng);
        std::vector<FieldElement> b(4, F->zero());
        for (auto& x : b) x = random_element(*F, rng);
        const auto sol = solve_linear(A, b, F->zero(), F->one());
        if (!sol.consistent) continue;
        for (size_t i = 0; i < 4; ++i) {
            FieldElement acc = F->zero();
            for (size_t j = 0; j < 6; ++j) acc += A(i, j) * sol.particular[j];
            CHECK(acc == b[i]);
        }
        for (const auto& n : sol.nullspace)
            for (size_t i = 0; i < 4; ++i) {
                FieldElement acc = F->zero();
                for (size_t j = 0; j < 6; ++j) acc += A(i, j) * n[j];
                CHECK(acc == F->zero());
            }
    }
}

TEST_CASE("rref is idempotent and pivot layout is canonical") {
    auto F = field(3, 1);
    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
        Matrix<FieldElement> M(3, 5, F->zero());
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 5; ++j) M(i, j) = random_element(*F, rng);
        Matrix<FieldElement> R = M;
        std::vector<size_t> pivots;
        const size_t r = rref(R, &pivots);
        Matrix<FieldElement> R2 = R;
        CHECK(rref(R2) == r);
        CHECK(R2 == R);
        for (size_t i = 0; i < pivots.size(); ++i) {
            CHECK(R(i, pivots[i]).is_one());
            for (size_t other = 0; other < 3; ++other)
                if (other != i) CHECK(R(other, pivots[i]).is_zero());
        }
    }
}
