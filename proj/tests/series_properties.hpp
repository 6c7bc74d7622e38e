// Randomised algebraic laws for MultiSeries, shared by the unit tests and the
// acceptance runner.
#ifndef HOOKLAB_TESTS_SERIES_PROPERTIES_HPP
#define HOOKLAB_TESTS_SERIES_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>

#include <hooklab/series.hpp>

namespace hooklab::proptest
{

struct PropertyTally {
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

class SeriesProperties
{
public:
    explicit SeriesProperties(std::uint64_t seed)
        : rng_(seed),
          big_(VarTable::Builder().truncated("T", 5).truncated("q", 3).exact("z").exact("u", true).build()),
          small_(VarTable::Builder().truncated("T", 3).truncated("q", 2).exact("z").exact("u", true).build())
    {
    }

    // Each round checks eight laws.
    PropertyTally run(int rounds)
    {
        PropertyTally t;
        for (int i = 0; i < rounds; ++i) {
            const auto a = random_series(big_, 5), b = random_series(big_, 5), c = random_series(big_, 4);
            check(t, "addition associates", (a + b) + c == a + (b + c));
            check(t, "multiplication commutes", a * b == b * a);
            check(t, "multiplication associates", (a * b) * c == a * (b * c));
            check(t, "distributive law", a * (b + c) == a * b + a * c);

            const auto unit = random_unit(big_);
            check(t, "inverse", unit * inverse(unit) == MultiSeries::one(big_));

            const auto x = positive_part(random_series(big_, 5));
            const auto y = positive_part(random_series(big_, 4));
            check(t, "exp/log round trip", log_series(exp_series(x)) == x && exp_series(log_series(1 + x)) == 1 + x &&
                                                  exp_series(x + y) == exp_series(x) * exp_series(y));

            check(t, "truncation commutes with products", retruncate(a * b, small_) == retruncate(a, small_) * retruncate(b, small_));

            const auto f = 1 + positive_part(random_series(big_, 4, false));
            const int k = static_cast<int>(rng_() % 5);
            check(t, "symbolic power specialises", specialize(pow_symbolic(f, "z"), "z", k) == pow(f, k));
        }
        return t;
    }

private:
    void check(PropertyTally &t, const char *what, bool ok)
    {
        ++t.cases;
        if (!ok) {
            ++t.failures;
            if (t.first_failure.empty()) {
                t.first_failure = what;
            }
        }
    }

    Rational coeff()
    {
        long num = static_cast<long>(rng_() % 11) - 5;
        if (num == 0) {
            num = 1;
        }
        return make_rational(num, 1 + static_cast<long>(rng_() % 4));
    }

    MultiSeries random_series(const VarTablePtr &tb, int terms, bool with_z = true)
    {
        MultiSeries::Accumulator acc(tb);
        for (int i = 0; i < terms; ++i) {
            const int e_t = static_cast<int>(rng_() % 5), e_q = static_cast<int>(rng_() % 3);
            const int e_z = with_z ? static_cast<int>(rng_() % 3) : 0;
            const int e_u = static_cast<int>(rng_() % 5) - 2;
            acc.add(tb->monomial({{"T", e_t}, {"q", e_q}, {"z", e_z}, {"u", e_u}}), coeff());
        }
        return acc.finish();
    }

    // A series whose lowest-degree part is c * u^k.
    MultiSeries random_unit(const VarTablePtr &tb)
    {
        const auto lead = MultiSeries::term(tb, tb->monomial({{"u", static_cast<int>(rng_() % 3) - 1}}), coeff());
        return lead + positive_part(random_series(tb, 5));
    }

    static MultiSeries positive_part(const MultiSeries &s)
    {
        return s - s.degree_part(0);
    }

    std::mt19937_64 rng_;
    VarTablePtr big_, small_;
};

} // namespace hooklab::proptest

#endif
