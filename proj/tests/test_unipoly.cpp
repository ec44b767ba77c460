#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include <matdioph/unipoly.hpp>

#include "random_support.hpp"

using namespace matdioph;
using matdioph::testing::Gen;

namespace {

// Leibniz expansion of det(t·I − A): the permutation-sum oracle for χ_A(t).
Rational det_leibniz(const ExactMatrix& m) {
    const std::size_t n = m.n();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Rational chi_oracle(const ExactMatrix& a, const Rational& t) {
    return det_leibniz(ExactMatrix::scalar(a.n(), t) - a);
}

// Rank by fraction-free (Bareiss-style) integer elimination, independent of
// the rational solver inside min_poly.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            for (std::size_t k = c + 1; k < cols; ++k)
                rows[r][k] = (rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]) / prev;
            rows[r][c] = 0;
        }
        prev = rows[rank][c];
        ++rank;
    }
    return rank;
}

// Degree of the minimal polynomial: least d with rank{I, A, …, A^d} = d.
std::size_t min_degree_oracle(const IntMatrix& a) {
    std::vector<std::vector<BigInt>> rows;
    IntMatrix power = IntMatrix::identity(a.n());
    for (std::size_t d = 0;; ++d) {
        rows.push_back(power.entries());
        if (integer_rank(rows) == d) return d;
        power = power * a;
    }
}

UniPoly U(std::initializer_list<Rational> c) { return UniPoly(c); }

}  // namespace

TEST(UniPolyBasics, TrimAndDegree) {
    EXPECT_EQ(U({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(UniPoly{}.degree(), -1);
    EXPECT_TRUE(U({0, 0}).is_zero());
    EXPECT_TRUE(xn_minus_2(3).is_monic());
    EXPECT_EQ(xn_minus_2(3), U({-2, 0, 0, 1}));
    EXPECT_EQ(to_string(U({-11, -10, 1})), "X^2 - 10*X - 11");
    EXPECT_EQ(to_string(U({Rational(1, 2), 0, -3})), "-3*X^2 + 1/2");
}

TEST(UniPolyBasics, DivisionWithRemainder) {
    const UniPoly a = U({-1, 0, 0, 1});  // X^3 - 1
    const UniPoly b = U({-1, 1});        // X - 1
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, U({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    auto [q2, r2] = divmod(U({1, 0, 1}), U({0, 2}));
    EXPECT_EQ(q2, U({0, Rational(1, 2)}));
    EXPECT_EQ(r2, U({1}));
    EXPECT_THROW(divmod(a, UniPoly{}), Error);
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(identity(2)), U({1, -2, 1}));
    EXPECT_EQ(char_poly(zero(3)), U({0, 0, 0, 1}));
    // tr = 10, det = 21 - 32 = -11
    EXPECT_EQ(char_poly(ExactMatrix{{3, 4}, {8, 7}}), U({-11, -10, 1}));
}

TEST(CharPoly, CompanionFamily) {
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(char_poly(companion_xn_minus_2(n)), xn_minus_2(n)) << n;
}

TEST(CharPoly, MatchesLeibnizOracle) {
    Gen gen(100);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + gen.index(5);
        const ExactMatrix a = gen.matrix(n, -9, 9);
        const UniPoly chi = char_poly(a);
        ASSERT_EQ(chi.degree(), static_cast<int>(n));
        ASSERT_TRUE(chi.is_monic());
        ASSERT_TRUE(chi.has_integer_coeffs());
        for (int t = -3; t <= static_cast<int>(n); ++t) EXPECT_EQ(chi(Rational(t)), chi_oracle(a, Rational(t)));
    }
}

TEST(CharPoly, RationalEntries) {
    const ExactMatrix a{{Rational(1, 2), 1}, {0, Rational(1, 3)}};
    EXPECT_EQ(char_poly(a), U({Rational(1, 6), Rational(-5, 6), 1}));
}

TEST(CharPoly, CayleyHamilton) {
    Gen gen(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + gen.index(5);
        const ExactMatrix a = gen.matrix(n, -9, 9);
        EXPECT_TRUE(eval_at(char_poly(a), a).is_zero());
    }
}

TEST(MinPoly, Examples) {
    EXPECT_EQ(min_poly(identity(3)), U({-1, 1}));
    EXPECT_EQ(min_poly(companion_xn_minus_2(3)), xn_minus_2(3));
    EXPECT_EQ(min_poly(elementary(2, 1, 1)), U({0, -1, 1}));
    EXPECT_EQ(min_poly(zero(2)), U({0, 1}));
    EXPECT_EQ(min_poly(ExactMatrix::scalar(3, 4)), U({-4, 1}));
}

TEST(MinPoly, DeltaEmbeddingKeepsMinimalPolynomial) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k) {
            const ExactMatrix d = delta_embed(companion_xn_minus_2(n), k);
            EXPECT_EQ(min_poly(d), xn_minus_2(n));
            UniPoly power = UniPoly{Rational(1)};
            for (std::size_t j = 0; j < k; ++j) power = power * xn_minus_2(n);
            EXPECT_EQ(char_poly(d), power);
        }
}

TEST(MinPoly, AnnihilatesDividesAndHasMinimalDegree) {
    Gen gen(202);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + gen.index(5);
        ExactMatrix a = gen.matrix(n, -9, 9);
        // Mix in low-rank and repeated-eigenvalue matrices so deg μ < n shows up.
        if (trial % 4 == 1) a = ExactMatrix::scalar(n, gen.integer(-3, 3)) + gen.matrix_in({SubstructureKind::Diag, 0}, n, 0, 1);
        if (trial % 4 == 2) a = delta_embed(gen.matrix(1 + gen.index(2), -3, 3), 2);
        const UniPoly mu = min_poly(a);
        const UniPoly chi = char_poly(a);
        EXPECT_TRUE(mu.is_monic());
        EXPECT_TRUE(eval_at(mu, a).is_zero());
        EXPECT_TRUE(divides(mu, chi));
        EXPECT_EQ(static_cast<std::size_t>(mu.degree()), min_degree_oracle(to_int_matrix(a)));
        // Same rational roots as χ_A (proxy for sharing irreducible factors).
        EXPECT_EQ(rational_roots(mu), rational_roots(chi));
    }
}

TEST(RationalRoots, Examples) {
    EXPECT_EQ(rational_roots(U({-2, 0, 1})), std::vector<Rational>{});
    EXPECT_EQ(rational_roots(U({0, -1, 1})), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(rational_roots(U({-1, 0, 4})), (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
    EXPECT_EQ(rational_roots(U({Rational(-1, 3), 1})), (std::vector<Rational>{Rational(1, 3)}));
}

TEST(Eisenstein, XnMinus2AtTwo) {
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(eisenstein_check(xn_minus_2(n), 2)) << n;
}

TEST(Eisenstein, Failures) {
    EXPECT_FALSE(eisenstein_check(U({-1, 0, 1}), 2));   // 2 ∤ a_0
    EXPECT_FALSE(eisenstein_check(U({1, 1, 1}), 2));    // 2 ∤ a_1
    EXPECT_FALSE(eisenstein_check(U({-4, 0, 1}), 2));   // 4 | a_0
    EXPECT_FALSE(eisenstein_check(U({2, 0, 2}), 2));    // 2 | a_n
}

TEST(Eisenstein, CubicAtThree) {
    // 3 ∤ 1, 3 | 6, 3 | 0, 3 | 6, 9 ∤ 6
    EXPECT_TRUE(eisenstein_check(U({6, 6, 0, 1}), 3));
}

TEST(Eisenstein, RejectsBadInput) {
    EXPECT_THROW(eisenstein_check(xn_minus_2(2), 4), Error);
    EXPECT_THROW(eisenstein_check(xn_minus_2(2), 1), Error);
    EXPECT_THROW(eisenstein_check(U({5}), 2), Error);
    EXPECT_THROW(eisenstein_check(U({Rational(1, 2), 1}), 2), Error);
}

TEST(Primes, TrialDivision) {
    std::vector<int> primes;
    for (int p = 0; p < 40; ++p)
        if (is_prime(p)) primes.push_back(p);
    EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}));
}

TEST(EvalAt, MatrixPolynomial) {
    const ExactMatrix c = companion_xn_minus_2(4);
    EXPECT_TRUE(eval_at(xn_minus_2(4), c).is_zero());
    EXPECT_EQ(eval_at(U({3}), c), ExactMatrix::scalar(4, 3));
}
