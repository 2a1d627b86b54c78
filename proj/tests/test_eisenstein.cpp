#include "scf/eisenstein.hpp"
#include "scf/errors.hpp"
#include "scf/invariants.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace scf;

namespace {

std::set<std::pair<long, long>> as_set(std::array<Pair, 6> const& ps)
{
    std::set<std::pair<long, long>> s;
    for (auto const& p : ps) s.insert({p.a0.get_si(), p.a1.get_si()});
    return s;
}

Eisenstein random_element(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    return {d(rng), d(rng)};
}

}  // namespace

TEST(Eisenstein, RingBasics)
{
    Eisenstein zeta(0, 1);
    EXPECT_EQ(zeta * zeta * zeta, Eisenstein(1));
    EXPECT_EQ(zeta * zeta + zeta + Eisenstein(1), Eisenstein(0));
    EXPECT_EQ(Eisenstein(8, 3).norm(), 49);
    EXPECT_EQ(shanks_eisenstein(286).norm(), delta(286));
    EXPECT_EQ(Eisenstein(2, 3).conj(), Eisenstein(-1, -3));
    EXPECT_EQ(Eisenstein(2, 3) * Eisenstein(2, 3).conj(), Eisenstein(7));
}

TEST(Eisenstein, NormIsMultiplicative)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto a = random_element(rng, 100000);
        auto b = random_element(rng, 100000);
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
}

TEST(Eisenstein, DivmodShrinksNorm)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        auto a = random_element(rng, 1000);
        auto b = random_element(rng, 1000);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.norm(), b.norm());
    }
}

TEST(Eisenstein, GcdDividesAndIsGreatest)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        auto c = random_element(rng, 30);
        auto a = random_element(rng, 30) * c;
        auto b = random_element(rng, 30) * c;
        if (a.is_zero() && b.is_zero()) continue;
        auto g = gcd(a, b);
        ASSERT_LE(g.norm(), 1000000);
        EXPECT_TRUE(g.divides(a));
        EXPECT_TRUE(g.divides(b));
        if (!c.is_zero()) EXPECT_TRUE(c.divides(g));
    }
    EXPECT_THROW(gcd(Eisenstein(0), Eisenstein(0)), std::invalid_argument);
}

TEST(UnitOrbit, Examples)
{
    auto o = unit_orbit({2, 3});
    std::array<Pair, 6> expect{Pair{2, 3}, Pair{-2, -3}, Pair{3, 1}, Pair{-3, -1}, Pair{-1, 2}, Pair{1, -2}};
    EXPECT_EQ(o, expect);
    EXPECT_EQ(as_set(unit_orbit({1, 0})),
              (std::set<std::pair<long, long>>{{1, 0}, {-1, 0}, {0, -1}, {0, 1}, {1, 1}, {-1, -1}}));
    auto s = as_set(unit_orbit({5, 7}));
    EXPECT_TRUE(s.count({7, 2}));
    EXPECT_TRUE(s.count({-2, 5}));
}

TEST(UnitOrbit, SharesNormAndMatchesUnitMultiples)
{
    std::mt19937_64 rng(17);
    std::array<Eisenstein, 6> units{Eisenstein(1), Eisenstein(-1), Eisenstein(0, 1),
                                    Eisenstein(0, -1), Eisenstein(-1, -1), Eisenstein(1, 1)};
    for (int i = 0; i < 500; ++i) {
        auto a = random_element(rng, 50);
        if (a.is_zero()) continue;
        Pair p{a.x(), a.y()};
        std::set<std::pair<long, long>> by_units;
        for (auto const& u : units) by_units.insert({(u * a).x().get_si(), (u * a).y().get_si()});
        EXPECT_EQ(as_set(unit_orbit(p)), by_units);
        for (auto const& q : unit_orbit(p)) EXPECT_EQ(pair_norm(q), pair_norm(p));
        EXPECT_EQ(rotate(p).as_eisenstein(), Eisenstein(0, 1) * a);
    }
}

TEST(CanonicalAssociate, Sector)
{
    EXPECT_EQ(canonical_associate({1, -2}), (Pair{2, 3}));
    EXPECT_EQ(canonical_associate({-7, -2}), (Pair{5, 7}));
    EXPECT_EQ(canonical_associate({-1, 0}), (Pair{0, 1}));
}

TEST(FindPair, Examples)
{
    auto ps = find_pair(286, 7);
    EXPECT_EQ(ps.canonical, (Pair{2, 3}));
    EXPECT_EQ(as_set(ps.all_six), as_set(unit_orbit({2, 3})));
    ps = find_pair(66, 39);
    EXPECT_EQ(ps.canonical, (Pair{5, 7}));
    EXPECT_TRUE(as_set(ps.all_six).count({7, 2}));
    EXPECT_TRUE(as_set(ps.all_six).count({-2, 5}));
    EXPECT_TRUE(as_set(find_pair(5, 7).all_six).count({1, 3}));
}

TEST(FindPair, RejectsBadNorms)
{
    EXPECT_THROW(find_pair(286, 5), std::invalid_argument);    // does not divide Delta
    EXPECT_THROW(find_pair(66, 27), std::invalid_argument);    // 9 | s
    EXPECT_THROW(find_pair(286, 0), std::invalid_argument);
    EXPECT_THROW(find_pair(286, -7), std::invalid_argument);
}

TEST(FindPair, MatchesBruteForceDivisorSearch)
{
    for (long n = -400; n <= 400; ++n) {
        if (!is_tame(n)) continue;
        auto d = decompose(n);
        long s = mpz_class(d.e * d.c).get_si();
        auto ps = find_pair(n, s);
        auto brute = oracle::eisenstein_divisors(n, s);
        ASSERT_EQ(as_set(ps.all_six), brute) << "n=" << n;
    }
}

TEST(FindPair, EveryTameNUpTo2000)
{
    for (long n = -2000; n <= 2000; ++n) {
        if (!is_tame(n)) continue;
        auto d = decompose(n);
        auto ps = find_pair(n, d.e * d.c);
        auto A = shanks_eisenstein(n);
        for (auto const& p : ps.all_six) {
            ASSERT_EQ(pair_norm(p), d.e * d.c);
            ASSERT_TRUE(p.as_eisenstein().divides(A)) << n;
        }
        if (n % 3 == 0) {
            auto const& p = ps.canonical;
            EXPECT_NE(p.a0 % 3, 0) << n;
            EXPECT_NE(p.a1 % 3, 0) << n;
            EXPECT_EQ((p.a0 + p.a1) % 3, 0) << n;
        }
    }
}
