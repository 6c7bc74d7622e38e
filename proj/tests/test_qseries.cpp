#include <gtest/gtest.h>

#include <iterator>
#include <map>

#include <hooklab/enumerate.hpp>
#include <hooklab/pseries.hpp>
#include <hooklab/qseries.hpp>
#include <hooklab/series_json.hpp>

using namespace hooklab;

namespace
{

VarTablePtr t_table(int cap)
{
    return VarTable::Builder().truncated("T", cap).build();
}

// (T;T)_inf = sum_k (-1)^k T^{k(3k-1)/2}
MultiSeries pentagonal(const VarTablePtr &table, int cap)
{
    MultiSeries::Accumulator acc(table);
    for (int k = -cap; k <= cap; ++k) {
        const int e = k * (3 * k - 1) / 2;
        if (e <= cap) {
            acc.add(table->monomial({{"T", e}}), k % 2 ? -1 : 1);
        }
    }
    return acc.finish();
}

long sigma(int n)
{
    long s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

} // namespace

TEST(QSeries, EulerProductMatchesPentagonalNumbers)
{
    constexpr int cap = 30;
    auto table = t_table(cap);
    const auto direct = pochhammer_inf(MultiSeries::var(table, "T"), {"T"});
    EXPECT_EQ(direct, pentagonal(table, cap));
    EXPECT_EQ(eta_power(table, "T", 1), direct);
}

TEST(QSeries, InverseEulerProductCountsPartitions)
{
    constexpr int cap = 20;
    auto table = t_table(cap);
    const auto inv = eta_power(table, "T", -1);
    for (int n = 0; n <= cap; ++n) {
        EXPECT_EQ(inv.coefficient({{"T", n}}), static_cast<long>(std::distance(PartitionsOf(n).begin(), PartitionsOf(n).end()))) << n;
    }
    EXPECT_EQ(inv * pentagonal(table, cap), MultiSeries::one(table));
}

TEST(QSeries, LogOfInverseEulerIsDivisorSum)
{
    constexpr int cap = 12;
    auto table = t_table(cap);
    const auto l = log_series(eta_power(table, "T", -1));
    for (int n = 1; n <= cap; ++n) {
        EXPECT_EQ(l.coefficient({{"T", n}}), make_rational(sigma(n), n)) << n;
    }
}

TEST(QSeries, LengthGeneratingFunction)
{
    constexpr int cap = 12;
    auto table = VarTable::Builder().truncated("T", cap).exact("z").build();
    ProductBuilder b(table);
    b.pochhammer(table->monomial({{"z", 1}, {"T", 1}}), {"T"}, -1);
    const auto rhs = b.build();
    MultiSeries::Accumulator acc(table);
    for (int n = 0; n <= cap; ++n) {
        for (const auto &lam : PartitionsOf(n)) {
            acc.add(table->monomial({{"T", n}, {"z", static_cast<int>(lam.length())}}), 1);
        }
    }
    EXPECT_EQ(acc.finish(), rhs);
}

TEST(QSeries, DArcaisSeries)
{
    // (T;T)^{-z} at z = 1 and z = 2 against direct integer powers.
    constexpr int cap = 10;
    auto table = VarTable::Builder().truncated("T", cap).exact("z").build();
    const auto sym = eta_power(table, "T", -MultiSeries::var(table, "z"));
    EXPECT_EQ(specialize(sym, "z", 1), eta_power(table, "T", -1));
    EXPECT_EQ(specialize(sym, "z", 2), pow(eta_power(table, "T", -1), 2));
    EXPECT_EQ(specialize(sym, "z", -3), pow(pentagonal(table, cap), 3));
    // Coefficient of T^1 is z, of T^2 is z(z+3)/2.
    EXPECT_EQ(sym.coefficient({{"T", 1}, {"z", 1}}), 1);
    EXPECT_EQ(sym.coefficient({{"T", 2}, {"z", 2}}), make_rational(1, 2));
    EXPECT_EQ(sym.coefficient({{"T", 2}, {"z", 1}}), make_rational(3, 2));
}

TEST(QSeries, SubstitutionIntoProduct)
{
    auto table = VarTable::Builder().truncated("T", 12).truncated("S", 4).build();
    const auto f = eta_power(table, "T", -1);
    const auto sub = substitute(f, "T", {{"S", 1}, {"T", 3}});
    ProductBuilder b(table);
    const auto st3 = table->monomial({{"S", 1}, {"T", 3}});
    const std::array<Monomial, 1> base{st3};
    b.pochhammer(1, st3, base, -1);
    EXPECT_EQ(sub, b.build());
}

TEST(QSeries, BuilderMatchesDirectMultiplication)
{
    auto table = VarTable::Builder().truncated("T", 6).truncated("q", 6).exact("u", true).build();
    const auto uqT = MultiSeries::term(table, table->monomial({{"u", 1}, {"q", 1}, {"T", 1}}));
    const auto qT = MultiSeries::term(table, table->monomial({{"q", 2}, {"T", 1}}));
    const auto direct = pochhammer_inf(uqT, {"q", "T"}) * inverse(pochhammer_inf(qT, {"q", "T"}));
    ProductBuilder b(table);
    b.pochhammer(table->monomial({{"u", 1}, {"q", 1}, {"T", 1}}), {"q", "T"}, 1);
    b.pochhammer(table->monomial({{"q", 2}, {"T", 1}}), {"q", "T"}, -1);
    EXPECT_EQ(b.build(), direct);
}

TEST(QSeries, ExpAndZeroDegreeFactors)
{
    auto table = VarTable::Builder().truncated("T", 8).exact("z").build();
    ProductBuilder b(table);
    b.exp_of(MultiSeries::var(table, "T") * MultiSeries::var(table, "z"));
    b.factor(1, table->monomial({{"z", 1}}), 2);
    const auto got = b.build();
    const auto want = exp_series(MultiSeries::var(table, "T") * MultiSeries::var(table, "z")) *
                      pow(1 - MultiSeries::var(table, "z"), 2);
    EXPECT_EQ(got, want);
}

TEST(QSeries, NonterminatingProductIsRejected)
{
    auto table = VarTable::Builder().truncated("T", 4).exact("z").build();
    ProductBuilder b(table);
    const std::array<Monomial, 1> base{table->monomial({{"z", 1}})};
    EXPECT_THROW(b.pochhammer(1, table->monomial({{"T", 1}}), base, 1), SeriesError);
    EXPECT_THROW(pochhammer_inf(MultiSeries::var(table, "T"), {"z"}), SeriesError);
}

TEST(SeriesJson, RoundTrip)
{
    auto table = VarTable::Builder().truncated("T", 6).exact("z").exact("u", true).build();
    ProductBuilder b(table);
    b.pochhammer(table->monomial({{"u", -1}, {"z", 1}, {"T", 1}}), {"T"}, -1);
    const auto s = b.build();
    const auto j = series_to_json(s);
    EXPECT_EQ(series_from_json(j, table), s);
    auto other = VarTable::Builder().truncated("T", 6).exact("z").build();
    EXPECT_THROW(series_from_json(j, other), SeriesError);
    EXPECT_EQ(monomial_to_json(*table, table->monomial({{"u", -2}, {"T", 3}})).dump(), R"({"T":3,"u":-2})");
}

TEST(PSeries, ArithmeticAndPrecision)
{
    const auto one = PSeries::constant(1, 5);
    const auto x = one - PSeries::monomial(make_rational(1, 2), 1, 5); // 1 - p/2
    const auto inv = x.inverse();
    for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(inv.coeff(k), rational_pow(make_rational(1, 2), k));
    }
    EXPECT_TRUE(same_through(inv * x, one, 5));

    // p^{-1} factors cost precision: (p^{-1} + 1) has valuation -1.
    auto y = PSeries::monomial(1, -1, 5) + PSeries::constant(1, 5);
    EXPECT_EQ(y.valuation(), -1);
    auto yi = y.inverse();
    EXPECT_EQ(yi.valuation(), 1);
    EXPECT_EQ(yi.prec(), 7);
    EXPECT_TRUE(same_through(y * yi, PSeries::constant(1, 5), 5));
    EXPECT_THROW(PSeries::constant(0, 4).inverse(), DenominatorVanishes);
    EXPECT_THROW(x.coeff(6), std::out_of_range);
}
