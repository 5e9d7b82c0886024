#include <gtest/gtest.h>

#include <random>

#include "focal/homog_poly.hpp"
#include "focal/prime_field.hpp"
#include "focal/rational.hpp"

using namespace focal;

namespace {

using QPoly = HomogPoly<Rational>;
using FPoly = HomogPoly<Residue>;

QPoly qpoly(std::initializer_list<std::int64_t> c) {
    std::vector<Rational> v;
    for (auto x : c) v.emplace_back(x);
    return QPoly(static_cast<int>(v.size()) - 1, v);
}

FPoly random_fpoly(const PrimeField& f, int k, std::mt19937_64& rng) {
    auto p = FPoly::zero(f, k);
    for (auto& c : p.coeffs) c = Residue{static_cast<std::uint32_t>(rng() % f.modulus())};
    return p;
}

QPoly random_qpoly(int k, std::mt19937_64& rng) {
    std::vector<Rational> v;
    for (int a = 0; a <= k; ++a) v.emplace_back(static_cast<std::int64_t>(rng() % 21) - 10, 1 + rng() % 4);
    return QPoly(k, v);
}

}  // namespace

TEST(HomogPoly, Multiply) {
    RationalField q;
    EXPECT_EQ(multiply(q, qpoly({1, 1}), qpoly({1, -1})), qpoly({1, 0, -1}));
    EXPECT_EQ(multiply(q, qpoly({1, 0, 1}), qpoly({1, 0, 1})), qpoly({1, 0, 2, 0, 1}));
    EXPECT_EQ(multiply(q, qpoly({4, 5, 6}), QPoly::zero(q, 3)), QPoly::zero(q, 5));
}

TEST(HomogPoly, Derivatives) {
    RationalField q;
    EXPECT_EQ(diff_x(q, qpoly({1, 0, 1})), qpoly({2, 0}));
    EXPECT_EQ(diff_y(q, qpoly({1, 0, 1})), qpoly({0, 2}));
    EXPECT_EQ(diff_x(q, qpoly({0, 1, 0, 0})), qpoly({0, 2, 0}));  // d/dx x^2 y = 2xy
    EXPECT_EQ(diff_x(q, qpoly({7})), QPoly::zero(q, 0));
    EXPECT_EQ(diff_y(q, qpoly({7})), QPoly::zero(q, 0));
}

TEST(HomogPoly, LeibnizRule) {
    PrimeField f(1000003);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        auto a = random_fpoly(f, 1 + rng() % 8, rng), b = random_fpoly(f, 1 + rng() % 8, rng);
        EXPECT_EQ(diff_x(f, multiply(f, a, b)), add(f, multiply(f, diff_x(f, a), b), multiply(f, a, diff_x(f, b))));
        EXPECT_EQ(diff_y(f, multiply(f, a, b)), add(f, multiply(f, diff_y(f, a), b), multiply(f, a, diff_y(f, b))));
    }
}

TEST(Rotation, Examples) {
    RationalField q;
    EXPECT_EQ(rotation_apply(q, qpoly({1, 0, 1})), QPoly::zero(q, 2));
    EXPECT_EQ(rotation_apply(q, qpoly({0, 1, 0, 0})), qpoly({-1, 0, 2, 0}));  // R(x^2 y) = 2xy^2 - x^3
}

TEST(Rotation, MatchesExplicitMatrix) {
    // Matrix of y d/dx - x d/dy on degree 5, built from monomial images:
    // y d/dx x^(k-a) y^a = (k-a) x^(k-a-1) y^(a+1), -x d/dy x^(k-a) y^a = -a x^(k-a+1) y^(a-1).
    RationalField q;
    std::mt19937_64 rng(3);
    const int k = 5;
    std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 1));
    for (int a = 0; a <= k; ++a) {
        if (a + 1 <= k) m[a + 1][a] = Rational{k - a};
        if (a >= 1) m[a - 1][a] = Rational{-a};
    }
    for (int t = 0; t < 50; ++t) {
        auto f = random_qpoly(k, rng);
        auto expected = QPoly::zero(q, k);
        for (int b = 0; b <= k; ++b)
            for (int a = 0; a <= k; ++a) expected[b] = expected[b] + m[b][a] * f[a];
        EXPECT_EQ(rotation_apply(q, f), expected);
    }
}

TEST(Rotation, KernelIsCirclePowers) {
    RationalField q;
    PrimeField f(29);
    for (int m = 0; m <= 13; ++m) {
        EXPECT_EQ(rotation_apply(q, QPoly::circle_power(q, m)), QPoly::zero(q, 2 * m));
        EXPECT_EQ(rotation_apply(f, FPoly::circle_power(f, m)), FPoly::zero(f, 2 * m));
    }
}

TEST(RotationSolve, Examples) {
    RationalField q;
    auto odd = rotation_solve(q, QPoly::zero(q, 5));
    EXPECT_EQ(odd.f, QPoly::zero(q, 5));
    EXPECT_FALSE(odd.s.has_value());

    for (auto conv : {Convention::N1, Convention::N2}) {
        auto even = rotation_solve(q, QPoly::pure_powers(q, 4), conv);
        ASSERT_TRUE(even.s.has_value());
        EXPECT_EQ(*even.s, Rational{1});
        EXPECT_EQ(rotation_apply(q, even.f), QPoly::zero(q, 4));
        EXPECT_EQ(even.f, QPoly::zero(q, 4));
    }
}

TEST(RotationSolve, RequiresInvertibleDivisors) {
    PrimeField f(7);
    EXPECT_THROW(rotation_solve(f, FPoly::zero(f, 7)), RingError);
    EXPECT_NO_THROW(rotation_solve(f, FPoly::zero(f, 6)));
}

TEST(RotationSolve, RoundTripPrimeField) {
    PrimeField f(29);
    std::mt19937_64 rng(17);
    for (int k = 1; k <= 26; ++k) {
        for (int t = 0; t < 40; ++t) {
            auto g = random_fpoly(f, k, rng);
            for (auto conv : {Convention::N1, Convention::N2}) {
                auto sol = rotation_solve(f, g, conv);
                ASSERT_EQ(sol.s.has_value(), k % 2 == 0);
                auto back = rotation_apply(f, sol.f);
                if (sol.s) back = add(f, back, scale(f, *sol.s, FPoly::pure_powers(f, k)));
                ASSERT_EQ(back, g) << "k=" << k;
                if (k % 2 == 0) ASSERT_EQ((conv == Convention::N1 ? sol.f.coeffs.back() : sol.f.coeffs.front()), f.zero());
            }
        }
    }
}

TEST(RotationSolve, RoundTripRationals) {
    RationalField q;
    std::mt19937_64 rng(23);
    for (int k = 1; k <= 26; ++k) {
        for (int t = 0; t < 5; ++t) {
            auto g = random_qpoly(k, rng);
            auto sol = rotation_solve(q, g, Convention::N1);
            auto back = rotation_apply(q, sol.f);
            if (sol.s) back = add(q, back, scale(q, *sol.s, QPoly::pure_powers(q, k)));
            ASSERT_EQ(back, g) << "k=" << k;
        }
    }
}

TEST(RotationSolve, ConventionsDifferByKernelElement) {
    RationalField q;
    std::mt19937_64 rng(29);
    for (int k = 2; k <= 26; k += 2) {
        auto g = random_qpoly(k, rng);
        auto n1 = rotation_solve(q, g, Convention::N1);
        auto n2 = rotation_solve(q, g, Convention::N2);
        EXPECT_EQ(*n1.s, *n2.s);
        // n2 - n1 = c (x^2+y^2)^(k/2); the kernel element has unit end coefficients.
        auto diff = sub(q, n2.f, n1.f);
        auto kernel = QPoly::circle_power(q, k / 2);
        EXPECT_EQ(diff, scale(q, diff.coeffs.back(), kernel));
        EXPECT_EQ(diff.coeffs.back(), n2.f.coeffs.back());
    }
}
