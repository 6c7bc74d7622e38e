#ifndef HOOKLAB_QSERIES_HPP
#define HOOKLAB_QSERIES_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <hooklab/series.hpp>

namespace hooklab
{

namespace detail
{

inline std::vector<Monomial> base_monomials(const VarTable &table, const std::vector<std::string> &bases)
{
    std::vector<Monomial> out;
    for (const auto &b : bases) {
        out.push_back(table.monomial({{b, 1}}));
    }
    return out;
}

inline void check_bases(const VarTable &table, std::span<const Monomial> bases)
{
    for (const auto &b : bases) {
        table.validate(b);
        if (table.degree(b) <= 0) {
            throw SeriesError("nonterminating-product: base " + table.describe(b) + " has no positive truncated degree");
        }
    }
}

// Calls f(monomial) for every a * q_1^{j_1} ... q_m^{j_m} within the caps.
inline void for_each_shift(const VarTable &table, const Monomial &a, std::span<const Monomial> bases,
                           const std::function<void(const Monomial &)> &f)
{
    std::function<void(std::size_t, Monomial)> rec = [&](std::size_t k, Monomial cur) {
        if (k == bases.size()) {
            f(cur);
            return;
        }
        while (table.within_caps(cur)) {
            rec(k + 1, cur);
            cur *= bases[k];
        }
    };
    if (table.within_caps(a)) {
        rec(0, a);
    }
}

} // namespace detail

// (a; q_1, ..., q_m)_inf by direct multiplication of the factors.
inline MultiSeries pochhammer_inf(const MultiSeries &a, const std::vector<std::string> &qs)
{
    const auto &table = a.table();
    const auto bases = detail::base_monomials(*table, qs);
    detail::check_bases(*table, bases);
    MultiSeries result = MultiSeries::one(table);
    if (bases.empty()) {
        return result - a;
    }
    std::vector<Monomial> shifts;
    detail::for_each_shift(*table, Monomial{}, bases, [&](const Monomial &m) { shifts.push_back(m); });
    for (const auto &s : shifts) {
        const auto x = a.mul_term(s);
        if (x.is_zero()) {
            continue;
        }
        if (x.size() == 1) {
            result -= result.mul_term(x.terms()[0].first, x.terms()[0].second);
        } else {
            result -= result * x;
        }
    }
    return result;
}

// Accumulates a product of Pochhammer factors, powers and exponentials as a
// single logarithm, exponentiated once at the end. Factors whose monomial has
// zero truncated degree are multiplied directly.
class ProductBuilder
{
public:
    explicit ProductBuilder(VarTablePtr table) : table_(std::move(table)), log_(table_), direct_(MultiSeries::one(table_)) {}

    // (1 - c*m)^e
    ProductBuilder &factor(const Rational &c, const Monomial &m, long e = 1)
    {
        table_->validate(m);
        if (c == 0 || e == 0 || !table_->within_caps(m)) {
            return *this;
        }
        if (table_->degree(m) == 0) {
            MultiSeries f = 1 - MultiSeries::term(table_, m, c);
            direct_ *= pow(f, e);
            return *this;
        }
        add_log_factor(log_, c, m, Rational(e));
        return *this;
    }

    // (c*a; q_1, ..., q_m)_inf^e
    ProductBuilder &pochhammer(const Rational &c, const Monomial &a, std::span<const Monomial> bases, long e = 1)
    {
        detail::check_bases(*table_, bases);
        detail::for_each_shift(*table_, a, bases, [&](const Monomial &m) { factor(c, m, e); });
        return *this;
    }

    ProductBuilder &pochhammer(const Monomial &a, std::initializer_list<std::string_view> bases, long e = 1)
    {
        return pochhammer(1, a, monomials(bases), e);
    }

    // (c*a; q...)_inf^E with E an exponent series (e.g. z - 1).
    ProductBuilder &pochhammer(const Rational &c, const Monomial &a, std::span<const Monomial> bases, const MultiSeries &e)
    {
        detail::check_bases(*table_, bases);
        MultiSeries::Accumulator part(table_);
        detail::for_each_shift(*table_, a, bases, [&](const Monomial &m) {
            if (table_->degree(m) == 0) {
                throw SeriesError("symbolic power of a factor without positive truncated degree");
            }
            add_log_factor(part, c, m, Rational(1));
        });
        log_.add(part.finish() * e);
        return *this;
    }

    ProductBuilder &pochhammer(const Monomial &a, std::initializer_list<std::string_view> bases, const MultiSeries &e)
    {
        return pochhammer(1, a, monomials(bases), e);
    }

    // exp(x) for x without zero-degree terms.
    ProductBuilder &exp_of(const MultiSeries &x)
    {
        if (!x.degree_part(0).is_zero()) {
            throw SeriesError("bad-constant-term: exp needs a series without zero-degree terms");
        }
        log_.add(x);
        return *this;
    }

    ProductBuilder &times(const MultiSeries &f)
    {
        direct_ *= f;
        return *this;
    }

    MultiSeries build()
    {
        MultiSeries l = log_.finish();
        log_.add(l);
        return exp_series(l) * direct_;
    }

    std::vector<Monomial> monomials(std::initializer_list<std::string_view> names) const
    {
        std::vector<Monomial> out;
        for (auto n : names) {
            out.push_back(table_->monomial({{n, 1}}));
        }
        return out;
    }

private:
    // e * log(1 - c*m) = -e * sum_k c^k m^k / k
    void add_log_factor(MultiSeries::Accumulator &acc, const Rational &c, const Monomial &m, const Rational &e)
    {
        Monomial mk = m;
        Rational ck = c;
        for (long k = 1; table_->within_caps(mk); ++k) {
            table_->validate(mk);
            acc.add(mk, -e * ck / k);
            mk *= m;
            ck *= c;
        }
    }

    VarTablePtr table_;
    MultiSeries::Accumulator log_;
    MultiSeries direct_;
};

// (T; T)_inf^e for an integer exponent.
inline MultiSeries eta_power(const VarTablePtr &table, std::string_view var, long e)
{
    ProductBuilder b(table);
    const auto v = table->monomial({{var, 1}});
    const std::array<Monomial, 1> bases{v};
    b.pochhammer(1, v, bases, e);
    return b.build();
}

// (T; T)_inf^E for an exponent series E (e.g. -z gives the D'Arcais series).
inline MultiSeries eta_power(const VarTablePtr &table, std::string_view var, const MultiSeries &e)
{
    ProductBuilder b(table);
    const auto v = table->monomial({{var, 1}});
    const std::array<Monomial, 1> bases{v};
    b.pochhammer(1, v, bases, e);
    return b.build();
}

} // namespace hooklab

#endif
