#include <gtest/gtest.h>

#include <hooklab/elliptic.hpp>
#include <hooklab/identities.hpp>

using namespace hooklab;

TEST(Theta, TruncatedSeriesMatchesExample)
{
    auto table = VarTable::Builder().truncated("p", 1).exact("z", true).build();
    const auto th = theta_series(table, 1, {{"z", 1}}, "p");
    // 1 - z + p (z^2 - z^{-1})
    const auto z = MultiSeries::var(table, "z");
    const auto p = MultiSeries::var(table, "p");
    const auto want = 1 - z + p * (z * z - MultiSeries::term(table, table->monomial({{"z", -1}})));
    EXPECT_EQ(th, want);
    EXPECT_THROW(theta_series(table, 0, {{"z", 1}}, "p"), SeriesError);
}

TEST(Theta, IndicesAreExactlyTheContributingTerms)
{
    for (int cap = 0; cap <= 6; ++cap) {
        for (int n : theta_indices(0, cap)) {
            EXPECT_LE(n * (n - 1) / 2, cap);
        }
        int count = 0;
        for (int n = -50; n <= 50; ++n) {
            count += n * (n - 1) / 2 <= cap;
        }
        EXPECT_EQ(static_cast<int>(theta_indices(0, cap).size()), count);
    }
}

TEST(Theta, ReflectionAndShift)
{
    const int prec = 8;
    for (const auto &x : {make_rational(2, 3), make_rational(-5, 7), make_rational(11, 2)}) {
        // theta(1/x) = -x^{-1} theta(x)
        EXPECT_TRUE(same_through(theta_p(1 / x, 0, prec), (-1 / x) * theta_p(x, 0, prec), prec));
        // theta(p x) = -x^{-1} theta(x)
        EXPECT_TRUE(same_through(theta_p(x, 1, prec), (-1 / x) * theta_p(x, 0, prec), prec));
    }
    EXPECT_TRUE(theta_p(1, 0, prec).is_zero());
    EXPECT_THROW(theta_p(0, 0, prec), std::invalid_argument);
}

TEST(Theta, ProductFormOracle)
{
    // (p;p)(x;p)(p/x;p) computed factor by factor.
    const int prec = 7;
    const Rational x = make_rational(3, 7);
    PSeries prod = PSeries::constant(1, prec);
    for (int j = 1; j <= prec; ++j) {
        prod = prod * (PSeries::constant(1, prec) - PSeries::monomial(1, j, prec));
        prod = prod * (PSeries::constant(1, prec) - PSeries::monomial(x, j, prec));
        prod = prod * (PSeries::constant(1, prec) - PSeries::monomial(1 / x, j, prec));
    }
    prod = prod * (PSeries::constant(1, prec) - PSeries::monomial(x, 0, prec));
    EXPECT_TRUE(same_through(theta_p(x, 0, prec), prod, prec));
}

TEST(Theta, AdditionFormula)
{
    EXPECT_TRUE(theta_addition_check(make_rational(2, 3), make_rational(5, 7), make_rational(3, 11), make_rational(13, 2), 6).ok);
    EXPECT_TRUE(theta_addition_check(make_rational(-1, 2), make_rational(7, 5), make_rational(2, 1), make_rational(3, 4), 6).ok);
}

TEST(CTable, KnownEntriesAndInvariants)
{
    const auto ct = c_table(4);
    EXPECT_TRUE(ct.invariant_failures().empty());
    // p^1 coefficient of the defining ratio: the numerator and denominator
    // factors at j = 1 only.
    EXPECT_EQ(ct.at(1, 1, -1, 0), -1);
    EXPECT_EQ(ct.at(1, 0, -1, 0), 1);
    EXPECT_EQ(ct.at(1, 0, 0, 1), 1);
    EXPECT_EQ(ct.at(1, -1, 1, 0), -1);
    long total = 0;
    for (const auto &[k, c] : ct.entries()) {
        if (k[0] == 1) {
            total += std::abs(c);
        }
    }
    EXPECT_EQ(total, 8);
}

TEST(CTable, MatchesDirectProductAtRationalPoint)
{
    // Evaluate both the C-table and the defining ratio at u,q,t rational.
    const int cap = 3;
    const auto ct = c_table(cap);
    const Rational u = make_rational(5, 7), q = make_rational(2, 3), t = make_rational(3, 5);
    PSeries want = PSeries::constant(0, cap);
    want.add_term(1, 0);
    for (const auto &[k, c] : ct.entries()) {
        want.add_term(c * rational_pow(u, k[1]) * rational_pow(q, -k[2]) * rational_pow(t, k[3]), k[0]);
    }
    PSeries got = PSeries::constant(1, cap);
    auto one = PSeries::constant(1, cap);
    for (int j = 1; j <= cap; ++j) {
        for (const auto &x : std::vector<Rational>{u * q, 1 / (u * q), u / t, t / u}) {
            got = got * (one - PSeries::monomial(x, j, cap));
        }
        for (const auto &x : std::vector<Rational>{q, 1 / q, 1 / t, t}) {
            got = got / (one - PSeries::monomial(x, j, cap));
        }
    }
    EXPECT_TRUE(same_through(got, want, cap));
}

TEST(RationalPoint, SeedZeroAndRedraw)
{
    const auto pt = RationalPoint::from_seed(0);
    EXPECT_EQ(pt.q, make_rational(2, 3));
    EXPECT_EQ(pt.t, make_rational(3, 5));
    EXPECT_EQ(pt.u, make_rational(5, 7));
    const auto a = RationalPoint::from_seed(42), b = RationalPoint::from_seed(42);
    EXPECT_EQ(a.to_string(), b.to_string());
    EXPECT_NE(a.redraw().to_string(), a.to_string());
}

TEST(Elliptic, OmegaIndependenceSmall)
{
    const int p_cap = 2;
    for (int r : {2, 3}) {
        for (int n = 1; n <= 2; ++n) {
            const auto pt = RationalPoint::from_seed(0);
            const auto base = f_omega_rn(Partition(), r, n, pt, p_cap);
            for (const auto &omega : {Partition({1}), Partition({2}), Partition({1, 1})}) {
                if (!is_r_core(omega, r)) {
                    continue;
                }
                EXPECT_TRUE(same_through(f_omega_rn(omega, r, n, pt, p_cap), base, p_cap)) << r << " " << n << " " << omega.to_string();
            }
        }
    }
}

TEST(Elliptic, QuasiPeriodicity)
{
    const auto pt = RationalPoint::from_seed(7);
    for (int r : {1, 2, 3}) {
        for (int n = 1; n <= 2; ++n) {
            auto res = quasi_periodicity_check(Partition(), r, n, pt, 2);
            EXPECT_TRUE(res.ok) << r << " " << n << " " << res.detail;
        }
    }
    auto res = quasi_periodicity_check(Partition({1}), 2, 2, pt, 2);
    EXPECT_TRUE(res.ok) << res.detail;
}

TEST(Elliptic, NTwoCancellation)
{
    const int p_cap = 2;
    for (int r : {2, 3, 4}) {
        const auto pt = RationalPoint::from_seed(0);
        const auto t = n_two_terms(r, pt, p_cap);
        EXPECT_TRUE(same_through(t.t1 + t.t2 + t.t3, PSeries::constant(0, p_cap), p_cap)) << r;
        EXPECT_TRUE(same_through(t.t1, t.diff1, p_cap)) << r << " " << t.t1 << " vs " << t.diff1;
        EXPECT_TRUE(same_through(t.t2, t.diff2, p_cap)) << r;
        EXPECT_TRUE(same_through(t.t3, t.diff3, p_cap)) << r;
    }
}

TEST(Theta, UnsignedSeriesBreaksReflection)
{
    // Without (-1)^n the reflection theta(1/x) = -x^{-1} theta(x) fails.
    const int prec = 4;
    auto unsigned_theta = [&](const Rational &x) {
        PSeries s = PSeries::constant(0, prec);
        for (int n : theta_indices(0, prec)) {
            s.add_term(rational_pow(x, n), n * (n - 1) / 2);
        }
        return s;
    };
    const Rational x = make_rational(2, 3);
    EXPECT_FALSE(same_through(unsigned_theta(1 / x), (-1 / x) * unsigned_theta(x), prec));
}

TEST(Theta, DegeneratesAtZeroNome)
{
    const auto th = theta_p(make_rational(3, 7), 0, 0);
    EXPECT_EQ(th.coeff(0), make_rational(4, 7));
    for (const char *id : {"ENO", "PQ_NO"}) {
        VerificationConfig cfg;
        cfg.id = id;
        cfg.caps = {{"p", 0}};
        EXPECT_EQ(verify(cfg).status, Status::PASS) << id;
    }
}
