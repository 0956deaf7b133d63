#include "arrfactor/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arrfactor;

namespace {

// product of Phi_d over the divisors d of n
IntPoly divisor_product(unsigned n)
{
    IntPoly p{1};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) {
            p = p * cyclotomic_poly(d);
        }
    }
    return p;
}

CycNum random_element(const CycField& f, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> c;
    for (std::size_t k = 0; k < f.degree(); ++k) {
        c.emplace_back(num(rng), den(rng));
    }
    return CycNum(f, c);
}

} // namespace

TEST(Cyclotomic, Phi15TimesDivisorsIsXPow15MinusOne)
{
    const auto p15 = cyclotomic_poly(15);
    EXPECT_EQ(p15.degree(), 8);
    EXPECT_EQ(p15.leading(), 1);
    EXPECT_EQ(p15 * cyclotomic_poly(5) * cyclotomic_poly(3) * cyclotomic_poly(1), IntPoly::x_pow_minus_one(15));
}

TEST(Cyclotomic, SmallCasesByHand)
{
    EXPECT_EQ(cyclotomic_poly(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), (IntPoly{1, 1}));
    EXPECT_EQ(cyclotomic_poly(3), (IntPoly{1, 1, 1}));
    EXPECT_EQ(cyclotomic_poly(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), (IntPoly{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, DivisorProductIsXPowNMinusOne)
{
    for (unsigned n = 1; n <= 30; ++n) {
        EXPECT_EQ(divisor_product(n), IntPoly::x_pow_minus_one(n)) << "n = " << n;
        EXPECT_EQ(cyclotomic_poly(n).degree(), static_cast<long>(euler_phi(n))) << "n = " << n;
        EXPECT_TRUE(IntPoly::x_pow_minus_one(n).divmod(cyclotomic_poly(n)).second.is_zero()) << "n = " << n;
    }
}

TEST(Cyclotomic, ZetaHasExactOrderN)
{
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 12u, 15u}) {
        const auto& f = CycField::get(n);
        const CycNum z = CycNum::zeta(f);
        CycNum p(f, Rat(1));
        for (unsigned k = 1; k <= n; ++k) {
            p = p * z;
            EXPECT_EQ(p.is_one(), k == n) << "n = " << n << ", k = " << k;
        }
    }
}

TEST(Cyclotomic, InverseOfOnePlusZeta)
{
    const auto& f = CycField::get(3);
    const CycNum a = CycNum(f, Rat(1)) + CycNum::zeta(f);
    EXPECT_TRUE((a * a.inverse()).is_one());
    // 1 + zeta = -zeta^2 over n = 3, so its inverse is -zeta
    EXPECT_EQ(a.inverse(), CycNum(f, Rat(0)) - CycNum::zeta(f));
}

TEST(Cyclotomic, InverseOfZeroThrows)
{
    const auto& f = CycField::get(5);
    EXPECT_THROW(CycNum(f).inverse(), std::domain_error);
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements)
{
    std::mt19937 rng(7);
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 15u}) {
        const auto& f = CycField::get(n);
        const CycNum zero(f);
        const CycNum one(f, Rat(1));
        for (int trial = 0; trial < 20; ++trial) {
            const CycNum a = random_element(f, rng);
            const CycNum b = random_element(f, rng);
            const CycNum c = random_element(f, rng);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + zero, a);
            EXPECT_EQ(a * one, a);
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one()) << "n = " << n << ", a = " << a;
                EXPECT_EQ(b / a * a, b);
            }
        }
    }
}

TEST(Cyclotomic, EmbedZeta3IntoConductor15)
{
    const auto& f3 = CycField::get(3);
    const auto& f15 = CycField::get(15);
    const CycNum z = embed(CycNum::zeta(f3), 15);
    EXPECT_EQ(&z.field(), &f15);
    EXPECT_EQ(z, CycNum::zeta_pow(f15, 5));
    EXPECT_TRUE((z * z * z).is_one());
    EXPECT_FALSE(z.is_one());
}

TEST(Cyclotomic, EmbedIsARingMap)
{
    std::mt19937 rng(11);
    const auto& f4 = CycField::get(4);
    for (int trial = 0; trial < 20; ++trial) {
        const CycNum a = random_element(f4, rng);
        const CycNum b = random_element(f4, rng);
        EXPECT_EQ(embed(a * b, 12), embed(a, 12) * embed(b, 12));
        EXPECT_EQ(embed(a + b, 12), embed(a, 12) + embed(b, 12));
    }
}

TEST(Cyclotomic, EmbedRejectsNonMultiple)
{
    EXPECT_THROW(embed(CycNum::zeta(CycField::get(3)), 4), std::invalid_argument);
}

TEST(Cyclotomic, CanonicalFormMakesEqualityStructural)
{
    const auto& f = CycField::get(5);
    // 1 + zeta + ... + zeta^4 = 0
    CycNum s(f);
    for (long k = 0; k < 5; ++k) {
        s += CycNum::zeta_pow(f, k);
    }
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(CycNum::zeta_pow(f, -1), CycNum::zeta_pow(f, 4));
}
