#include <gtest/gtest.h>

#include <matdioph/matrix.hpp>

#include "random_support.hpp"

using namespace matdioph;
using matdioph::testing::all_matrices;
using matdioph::testing::Gen;

TEST(MatrixArithmetic, DigitProduct) {
    const ExactMatrix a{{3, 4}, {8, 7}}, b{{7, 2}, {4, 9}};
    EXPECT_EQ(mat_mul(a, b), (ExactMatrix{{37, 42}, {84, 79}}));
    EXPECT_EQ(mat_mul(a, b), mat_add(mat_scale(a, Rational(10)), b));
}

TEST(MatrixArithmetic, IdentityIsNeutral) {
    Gen gen(1);
    for (std::size_t n = 1; n <= 5; ++n) {
        const ExactMatrix a = gen.matrix(n, -9, 9);
        EXPECT_EQ(a * identity(n), a);
        EXPECT_EQ(identity(n) * a, a);
        EXPECT_EQ(a + zero(n), a);
        EXPECT_TRUE((a * zero(n)).is_zero());
    }
}

TEST(MatrixArithmetic, ElementaryProducts) {
    EXPECT_EQ(elementary(2, 1, 2) * elementary(2, 2, 1), elementary(2, 1, 1));
    EXPECT_TRUE((elementary(2, 2, 1) * elementary(2, 2, 1)).is_zero());
}

TEST(MatrixArithmetic, DimensionMismatch) {
    EXPECT_THROW(identity(2) * identity(3), DimensionError);
    EXPECT_THROW(identity(2) + identity(3), DimensionError);
    EXPECT_THROW(ExactMatrix(0), DimensionError);
    EXPECT_THROW((ExactMatrix{{1, 2}, {3}}), DimensionError);
}

TEST(MatrixArithmetic, ExactBeyondMachineWords) {
    ExactMatrix a = ExactMatrix::scalar(2, Rational(BigInt(1) << 40));
    const ExactMatrix p = mat_pow(a, 4);
    EXPECT_EQ(p.at(0, 0), Rational(BigInt(1) << 160));
    const ExactMatrix q{{Rational(1, 3), 0}, {0, Rational(2, 5)}};
    EXPECT_EQ((q * q).at(1, 1), Rational(4, 25));
}

TEST(Domains, MembershipPredicates) {
    const ExactMatrix nat{{0, 1}, {2, 3}}, integer{{0, -1}, {2, 3}}, rat{{Rational(1, 2), 0}, {0, 0}};
    EXPECT_TRUE(in_domain(nat, Domain::Nat));
    EXPECT_FALSE(in_domain(integer, Domain::Nat));
    EXPECT_TRUE(in_domain(integer, Domain::Int));
    EXPECT_FALSE(in_domain(rat, Domain::Int));
    EXPECT_TRUE(in_domain(rat, Domain::Rat));
    EXPECT_EQ(parse_domain("int"), Domain::Int);
    EXPECT_THROW(parse_domain("real"), Error);
}

TEST(Elementary, ShapeAndSum) {
    EXPECT_EQ(elementary(2, 2, 2), (ExactMatrix{{0, 0}, {0, 1}}));
    EXPECT_EQ(elementary(1, 1, 1), (ExactMatrix{{1}}));
    ExactMatrix sum(3);
    for (std::size_t i = 1; i <= 3; ++i) sum += elementary(3, i, i);
    EXPECT_EQ(sum, identity(3));
    EXPECT_THROW(elementary(2, 3, 1), DimensionError);
    EXPECT_THROW(elementary(2, 0, 1), DimensionError);
}

TEST(Transposition, PairSwap) {
    EXPECT_EQ(transposition_matrix(2, 1, 2), (ExactMatrix{{0, 1}, {1, 0}}));
    EXPECT_THROW(transposition_matrix(3, 2, 2), Error);
}

TEST(Transposition, ConjugatesDiagonalIdempotentsAndSquaresToOne) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                const ExactMatrix p = transposition_matrix(n, i, j);
                EXPECT_EQ(p * elementary(n, i, i) * p, elementary(n, j, j));
                EXPECT_EQ(p * p, identity(n));
                // P·e_i = e_j, P·e_j = e_i, P·e_k = e_k: column action on E_{k,k}.
                for (std::size_t k = 1; k <= n; ++k) {
                    const std::size_t image = k == i ? j : (k == j ? i : k);
                    EXPECT_EQ(p * elementary(n, k, 1), elementary(n, image, 1));
                }
            }
}

TEST(Companion, SmallCases) {
    EXPECT_EQ(companion_xn_minus_2(1), (ExactMatrix{{2}}));
    const ExactMatrix c3 = companion_xn_minus_2(3);
    EXPECT_EQ(c3, (ExactMatrix{{0, 1, 0}, {0, 0, 1}, {2, 0, 0}}));
    EXPECT_EQ(mat_pow(c3, 3), ExactMatrix::scalar(3, 2));
    EXPECT_TRUE(in_domain(c3, Domain::Nat));
}

TEST(Companion, PowerIsTwiceIdentity) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const ExactMatrix c = companion_xn_minus_2(n);
        EXPECT_EQ(mat_pow(c, static_cast<unsigned>(n)), ExactMatrix::scalar(n, 2)) << n;
        for (unsigned k = 1; k < n; ++k) EXPECT_NE(mat_pow(c, k), ExactMatrix::scalar(n, 2));
    }
}

TEST(Lattice, DivisibilityCharacterization) {
    EXPECT_TRUE(xn2_solvable(2, 4));
    EXPECT_FALSE(xn2_solvable(3, 2));
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(xn2_solvable(n, n));
    EXPECT_THROW(xn2_solvable(0, 1), Error);
}

TEST(Lattice, WitnessesSolveEquation) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 8; ++m) {
            auto w = xn2_witness(n, m);
            ASSERT_EQ(w.has_value(), m % n == 0);
            if (!w) continue;
            EXPECT_EQ(w->n(), m);
            EXPECT_EQ(mat_pow(*w, static_cast<unsigned>(n)), ExactMatrix::scalar(m, 2));
        }
}

// ---------------------------------------------------------------------------
// Substructures

TEST(Substructure, Examples) {
    const SubstructureSpec sigma1{SubstructureKind::Sigma, 1};
    for (std::size_t i = 1; i <= 3; ++i)
        EXPECT_TRUE(in_substructure(elementary(3, i, i), SubstructureSpec{SubstructureKind::Sigma, i}));
    EXPECT_FALSE(in_substructure(ExactMatrix{{1, 0}, {5, 1}}, sigma1));
    EXPECT_TRUE(in_substructure(ExactMatrix{{1, 0}, {0, 7}}, sigma1));
    EXPECT_THROW(in_substructure(identity(2), SubstructureSpec{SubstructureKind::Sigma, 3}), DimensionError);
}

TEST(Substructure, PatternsMatchDefinitions) {
    // Zero patterns in M_4 for index 2, marked 1 where forced zero.
    auto pattern = [](SubstructureSpec s) {
        std::string out;
        for (std::size_t r = 1; r <= 4; ++r) {
            for (std::size_t c = 1; c <= 4; ++c) out += forced_zero(s, 4, r, c) ? '1' : '0';
            out += '/';
        }
        return out;
    };
    EXPECT_EQ(pattern({SubstructureKind::Diag, 0}), "0111/1011/1101/1110/");
    EXPECT_EQ(pattern({SubstructureKind::UpperTri, 0}), "0000/1000/1100/1110/");
    EXPECT_EQ(pattern({SubstructureKind::Sigma, 2}), "0100/1011/0100/0100/");
    EXPECT_EQ(pattern({SubstructureKind::Gamma, 2}), "0100/0000/0100/0100/");
    EXPECT_EQ(pattern({SubstructureKind::Lambda, 2}), "0000/1011/0000/0000/");
    EXPECT_EQ(pattern({SubstructureKind::Rect, 2}), "0000/1000/1100/1100/");
    EXPECT_EQ(pattern({SubstructureKind::DoubleRect, 2}), "0111/1011/1100/1100/");
}

TEST(Substructure, SigmaIsTheCentralizerOfEii) {
    for (const auto& a : all_matrices(2, 0, 2))
        for (std::size_t i = 1; i <= 2; ++i)
            EXPECT_EQ(in_substructure(a, SubstructureSpec{SubstructureKind::Sigma, i}),
                      commutes(a, elementary(2, i, i)));
    Gen gen(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t i = 1 + gen.index(3);
        const ExactMatrix a = gen.coin() ? gen.matrix_in({SubstructureKind::Sigma, i}, 3, 0, 3) : gen.matrix(3, 0, 3);
        EXPECT_EQ(in_substructure(a, {SubstructureKind::Sigma, i}), commutes(a, elementary(3, i, i)));
    }
}

namespace {

std::vector<SubstructureSpec> all_specs(std::size_t n) {
    std::vector<SubstructureSpec> specs{{SubstructureKind::Diag, 0}, {SubstructureKind::UpperTri, 0}};
    for (auto kind : {SubstructureKind::Sigma, SubstructureKind::Gamma, SubstructureKind::Lambda, SubstructureKind::Rect,
                      SubstructureKind::DoubleRect})
        for (std::size_t i = 1; i <= n; ++i) specs.push_back({kind, i});
    return specs;
}

}  // namespace

TEST(Substructure, ClosedUnderRingOperationsExhaustiveM2) {
    const auto mats = all_matrices(2, 0, 1);
    for (const auto& s : all_specs(2)) {
        EXPECT_TRUE(in_substructure(zero(2), s)) << to_string(s);
        EXPECT_TRUE(in_substructure(identity(2), s)) << to_string(s);
        std::vector<ExactMatrix> members;
        for (const auto& a : mats)
            if (in_substructure(a, s)) members.push_back(a);
        for (const auto& a : members)
            for (const auto& b : members) {
                EXPECT_TRUE(in_substructure(a + b, s));
                EXPECT_TRUE(in_substructure(a * b, s));
            }
    }
}

TEST(Substructure, ClosedUnderRingOperationsRandomM3) {
    Gen gen(17);
    for (const auto& s : all_specs(3)) {
        EXPECT_TRUE(in_substructure(identity(3), s));
        for (int trial = 0; trial < 100; ++trial) {
            const ExactMatrix a = gen.matrix_in(s, 3, -5, 5), b = gen.matrix_in(s, 3, -5, 5);
            ASSERT_TRUE(in_substructure(a, s));
            EXPECT_TRUE(in_substructure(a + b, s)) << to_string(s);
            EXPECT_TRUE(in_substructure(a * b, s)) << to_string(s);
        }
    }
}

TEST(Substructure, ParseAndPrint) {
    EXPECT_EQ(parse_substructure("sigma:2"), (SubstructureSpec{SubstructureKind::Sigma, 2}));
    EXPECT_EQ(parse_substructure("diag"), (SubstructureSpec{SubstructureKind::Diag, 0}));
    EXPECT_EQ(to_string(parse_substructure("rrect:3")), "rrect:3");
    EXPECT_THROW(parse_substructure("sigma"), Error);
    EXPECT_THROW(parse_substructure("upper:1"), Error);
    EXPECT_THROW(parse_substructure("blob:1"), Error);
}

// ---------------------------------------------------------------------------
// Projection and the scalar embedding α(a) = a·I_n

TEST(Projection, ScalarAndZero) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t i = 1; i <= n; ++i) {
            EXPECT_EQ(project_ii(ExactMatrix::scalar(n, 17), i), 17);
            EXPECT_EQ(project_ii(zero(n), i), 0);
        }
}

TEST(Projection, HomomorphismOnSigma) {
    Gen gen(77);
    const SubstructureSpec sigma2{SubstructureKind::Sigma, 2};
    for (int trial = 0; trial < 200; ++trial) {
        const ExactMatrix a = gen.matrix_in(sigma2, 3, 0, 99), b = gen.matrix_in(sigma2, 3, 0, 99);
        EXPECT_EQ(project_ii(a * b, 2), project_ii(a, 2) * project_ii(b, 2));
        EXPECT_EQ(project_ii(a + b, 2), project_ii(a, 2) + project_ii(b, 2));
    }
    EXPECT_EQ(project_ii(identity(3), 2), 1);
}

TEST(Projection, ScalarEmbeddingIsInjectiveHomomorphism) {
    Gen gen(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = gen.integer(0, 50), b = gen.integer(0, 50);
        const std::size_t n = 1 + gen.index(4);
        EXPECT_EQ(ExactMatrix::scalar(n, a + b), ExactMatrix::scalar(n, a) + ExactMatrix::scalar(n, b));
        EXPECT_EQ(ExactMatrix::scalar(n, a * b), ExactMatrix::scalar(n, a) * ExactMatrix::scalar(n, b));
        EXPECT_EQ(ExactMatrix::scalar(n, a) == ExactMatrix::scalar(n, b), a == b);
    }
    EXPECT_EQ(ExactMatrix::scalar(3, 0), zero(3));
    EXPECT_EQ(ExactMatrix::scalar(3, 1), identity(3));
}

TEST(ScalarViaCommutation, Examples) {
    EXPECT_TRUE(is_scalar_via_commutation(ExactMatrix::scalar(3, 5)));
    EXPECT_FALSE(is_scalar_via_commutation(elementary(3, 1, 2)));
    // diag(1, 2) commutes with each E_{i,i} but not with the all-ones matrix.
    const ExactMatrix d{{1, 0}, {0, 2}};
    EXPECT_TRUE(commutes(d, elementary(2, 1, 1)));
    EXPECT_TRUE(commutes(d, elementary(2, 2, 2)));
    EXPECT_EQ(d * all_ones(2), (ExactMatrix{{1, 1}, {2, 2}}));
    EXPECT_EQ(all_ones(2) * d, (ExactMatrix{{1, 2}, {1, 2}}));
    EXPECT_FALSE(is_scalar_via_commutation(d));
}

TEST(ScalarViaCommutation, AgreesWithDirectTest) {
    for (const auto& a : all_matrices(2, 0, 2)) EXPECT_EQ(is_scalar_via_commutation(a), is_scalar_direct(a));
    Gen gen(12);
    for (int trial = 0; trial < 300; ++trial) {
        ExactMatrix a = gen.matrix(3, -4, 4);
        if (trial % 3 == 0) a = ExactMatrix::scalar(3, gen.integer(-9, 9));
        if (trial % 3 == 1) a = gen.matrix_in({SubstructureKind::Diag, 0}, 3, 0, 2);
        EXPECT_EQ(is_scalar_via_commutation(a), is_scalar_direct(a));
    }
}

// ---------------------------------------------------------------------------
// Embeddings

TEST(Delta, BlockDiagonal) {
    EXPECT_EQ(delta_embed(identity(2), 2), identity(4));
    const ExactMatrix d = delta_embed(companion_xn_minus_2(2), 2);
    EXPECT_EQ(d * d, ExactMatrix::scalar(4, 2));
    EXPECT_EQ(delta_embed(ExactMatrix{{7}}, 3), ExactMatrix::scalar(3, 7));
    EXPECT_THROW(delta_embed(identity(2), 0), Error);
}

TEST(Delta, InjectiveUnitalHomomorphism) {
    Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix a = gen.matrix(2, 0, 9), b = gen.matrix(2, 0, 9);
        const std::size_t k = 1 + gen.index(3);
        EXPECT_EQ(delta_embed(a * b, k), delta_embed(a, k) * delta_embed(b, k));
        EXPECT_EQ(delta_embed(a + b, k), delta_embed(a, k) + delta_embed(b, k));
        EXPECT_EQ(delta_embed(a, k) == delta_embed(b, k), a == b);
    }
}

TEST(Gamma, CornerEmbedding) {
    const ExactMatrix a{{1, 2}, {3, 4}};
    EXPECT_EQ(gamma_embed(a, 2), a);
    EXPECT_EQ(gamma_embed(identity(2), 3), (ExactMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    EXPECT_NE(gamma_embed(identity(2), 3), identity(3));
    EXPECT_THROW(gamma_embed(a, 1), DimensionError);
}

TEST(Gamma, InjectiveNonUnitalHomomorphism) {
    Gen gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix a = gen.matrix(2, -9, 9), b = gen.matrix(2, -9, 9);
        const std::size_t m = 2 + gen.index(3);
        EXPECT_EQ(gamma_embed(a * b, m), gamma_embed(a, m) * gamma_embed(b, m));
        EXPECT_EQ(gamma_embed(a + b, m), gamma_embed(a, m) + gamma_embed(b, m));
        EXPECT_EQ(gamma_embed(a, m) == gamma_embed(b, m), a == b);
    }
    EXPECT_TRUE(gamma_embed(zero(2), 4).is_zero());
}
