#include <gtest/gtest.h>

#include <random>
#include <set>

#include "focal/prime_field.hpp"
#include "focal/univariate.hpp"

using namespace focal;

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(28), RingError);
    EXPECT_THROW(PrimeField(1), RingError);
    EXPECT_NO_THROW(PrimeField(2147483647u));
    EXPECT_THROW(PrimeField(2147483648u), RingError);
}

TEST(PrimeField, PrimalityMatchesTrialDivision) {
    auto slow = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow(n)) << n;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() % (1ull << 31);
        ASSERT_EQ(is_prime(n), slow(n)) << n;
    }
}

TEST(PrimeField, Invert) {
    PrimeField f(29);
    EXPECT_EQ(mod_invert(Residue{1}, f), Residue{1});
    EXPECT_EQ(mod_invert(Residue{3}, f), Residue{10});
    EXPECT_THROW(mod_invert(Residue{0}, f), RingError);
    for (std::uint32_t a = 1; a < 29; ++a) EXPECT_EQ(f.mul(Residue{a}, f.inv(Residue{a})), Residue{1});
}

TEST(PrimeField, SquareRoots) {
    PrimeField f(29);
    EXPECT_EQ(mod_sqrt(Residue{0}, f), (std::vector<Residue>{Residue{0}}));
    EXPECT_EQ(mod_sqrt(Residue{4}, f), (std::vector<Residue>{Residue{2}, Residue{27}}));

    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 0; x < 29; ++x) squares.insert(x * x % 29);
    for (std::uint32_t a = 0; a < 29; ++a) {
        auto roots = mod_sqrt(Residue{a}, f);
        if (!squares.count(a)) {
            EXPECT_TRUE(roots.empty()) << a;
            continue;
        }
        ASSERT_FALSE(roots.empty()) << a;
        for (auto r : roots) EXPECT_EQ(f.mul(r, r), Residue{a});
        EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    }
    // 2 is the least non-residue mod 29 (squares: 0 1 4 5 6 7 9 13 16 20 22 23 24 25 28).
    EXPECT_FALSE(squares.count(2));
    EXPECT_TRUE(mod_sqrt(Residue{2}, f).empty());
}

TEST(PrimeField, SquareRootsLargePrimeWithHighTwoAdicity) {
    PrimeField f(998244353);  // p - 1 = 119 * 2^23
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Residue x{static_cast<std::uint32_t>(rng() % f.modulus())};
        Residue a = f.mul(x, x);
        auto roots = f.sqrt(a);
        ASSERT_FALSE(roots.empty());
        EXPECT_TRUE(roots.front() == x || roots.back() == x);
    }
}

TEST(PrimeField, FieldAxiomsAndFermat) {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {29u, 1000003u, 2147483629u}) {
        PrimeField f(p);
        auto draw = [&] { return Residue{static_cast<std::uint32_t>(rng() % p)}; };
        for (int i = 0; i < 1000; ++i) {
            Residue a = draw(), b = draw(), c = draw();
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
            ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
            ASSERT_LT(f.mul(a, b).value, p);
            if (a.value != 0) ASSERT_EQ(f.pow(a, p - 1), f.one());
        }
    }
}

TEST(PrimeField, ReductionMatchesPlainRemainder) {
    std::mt19937_64 rng(5);
    PrimeField f(2147483629u);
    for (int i = 0; i < 100000; ++i) {
        std::uint32_t a = rng() % f.modulus(), b = rng() % f.modulus();
        ASSERT_EQ(f.mul(Residue{a}, Residue{b}).value, static_cast<std::uint64_t>(a) * b % f.modulus());
    }
    EXPECT_EQ(f.from_int(-1).value, f.modulus() - 1);
}

TEST(Univariate, InterpolationRecoversPolynomial) {
    PrimeField f(29);
    std::vector<Residue> poly{Residue{3}, Residue{0}, Residue{7}, Residue{11}};
    std::vector<Residue> samples;
    for (std::uint32_t t = 0; t < 4; ++t) samples.push_back(evaluate_univariate(f, poly, Residue{t}));
    EXPECT_EQ(interpolate_at_integers(f, samples), poly);
}

TEST(Univariate, RootsMatchBruteForce) {
    PrimeField f(29);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Residue> poly(1 + rng() % 4);
        for (auto& c : poly) c = Residue{static_cast<std::uint32_t>(rng() % 29)};
        if (std::all_of(poly.begin(), poly.end(), [](Residue r) { return r.value == 0; })) continue;
        std::vector<Residue> expected;
        for (std::uint32_t x = 0; x < 29; ++x)
            if (evaluate_univariate(f, poly, Residue{x}).value == 0) expected.push_back(Residue{x});
        EXPECT_EQ(univariate_roots(f, poly), expected);
    }
}
