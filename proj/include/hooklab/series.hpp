#ifndef HOOKLAB_SERIES_HPP
#define HOOKLAB_SERIES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hooklab
{

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational &base, long e)
{
    if (e < 0) {
        if (base == 0) {
            throw std::domain_error("negative power of zero");
        }
        return rational_pow(Rational(1) / base, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

class SeriesError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxVars = 8;
inline constexpr int kLaurentBound = 64;

// Exponent vector aligned with a VarTable. Truncated variables store their
// effective (graded) exponent; see VarTable.
struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;

    Monomial &operator*=(const Monomial &o) noexcept
    {
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        }
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial &b) noexcept
    {
        return a *= b;
    }
    Monomial inverse() const noexcept
    {
        Monomial out;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            out.e[i] = static_cast<std::int16_t>(-e[i]);
        }
        return out;
    }
    Monomial pow(int k) const noexcept
    {
        Monomial out;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            out.e[i] = static_cast<std::int16_t>(e[i] * k);
        }
        return out;
    }
    bool is_one() const noexcept
    {
        return *this == Monomial{};
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : m.e) {
            h ^= static_cast<std::uint16_t>(x);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Variables of a series ring. Truncated variables (T, S, q, t, p, ...) carry
// a cap; exact variables (z, u, ...) are polynomial or Laurent and never
// truncated.
//
// A truncated variable v may be graded by another truncated variable w with
// shift K: monomials are stored with effective exponent e_v + K*e_w, which
// must lie in [0, cap_v + K*cap_w]. This admits negative natural powers of v
// alongside positive powers of w (theta functions in p with q^{-1} terms)
// while keeping truncation an ideal quotient: every coefficient of w^m v^n
// with n <= cap_v + K*(cap_w - m) is exact.
class VarTable
{
public:
    struct TruncatedVar {
        std::string name;
        int cap;
        int graded_by = -1;
        int shift = 0;
    };
    struct ExactVar {
        std::string name;
        bool laurent;
    };

    class Builder;

    std::size_t size() const noexcept
    {
        return trunc_.size() + exact_.size();
    }
    std::size_t truncated_count() const noexcept
    {
        return trunc_.size();
    }
    std::span<const TruncatedVar> truncated_vars() const noexcept
    {
        return trunc_;
    }
    std::span<const ExactVar> exact_vars() const noexcept
    {
        return exact_;
    }

    std::optional<std::size_t> index_of(std::string_view name) const noexcept
    {
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            if (trunc_[i].name == name) {
                return i;
            }
        }
        for (std::size_t i = 0; i < exact_.size(); ++i) {
            if (exact_[i].name == name) {
                return trunc_.size() + i;
            }
        }
        return std::nullopt;
    }
    std::size_t require(std::string_view name) const
    {
        auto i = index_of(name);
        if (!i) {
            throw SeriesError("unknown variable '" + std::string(name) + "'");
        }
        return *i;
    }
    bool has(std::string_view name) const noexcept
    {
        return index_of(name).has_value();
    }
    bool is_truncated(std::size_t idx) const noexcept
    {
        return idx < trunc_.size();
    }
    bool is_laurent(std::size_t idx) const noexcept
    {
        return idx >= trunc_.size() && exact_[idx - trunc_.size()].laurent;
    }
    const std::string &name(std::size_t idx) const
    {
        return idx < trunc_.size() ? trunc_[idx].name : exact_[idx - trunc_.size()].name;
    }
    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) {
            out.push_back(name(i));
        }
        return out;
    }
    // Natural cap (the one the table was built with).
    int cap(std::size_t idx) const
    {
        return trunc_.at(idx).cap;
    }
    int effective_cap(std::size_t idx) const noexcept
    {
        return eff_cap_[idx];
    }
    int max_degree() const noexcept
    {
        int d = 0;
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            d += eff_cap_[i];
        }
        return d;
    }

    // Sum of effective truncated exponents.
    int degree(const Monomial &m) const noexcept
    {
        int d = 0;
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            d += m.e[i];
        }
        return d;
    }

    bool within_caps(const Monomial &m) const noexcept
    {
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            if (m.e[i] > eff_cap_[i]) {
                return false;
            }
        }
        return true;
    }

    // Throws when the monomial does not belong to the ring (beyond-cap
    // monomials do belong; they are zero after truncation).
    void validate(const Monomial &m) const
    {
        for (std::size_t i = 0; i < size(); ++i) {
            if (i < trunc_.size()) {
                if (m.e[i] < 0) {
                    throw SeriesError("cap-violation: negative effective exponent of truncated variable '" + name(i) + "'");
                }
            } else if (is_laurent(i)) {
                if (m.e[i] > kLaurentBound || m.e[i] < -kLaurentBound) {
                    throw SeriesError("Laurent exponent of '" + name(i) + "' exceeds bound " + std::to_string(kLaurentBound));
                }
            } else if (m.e[i] < 0) {
                throw SeriesError("negative exponent of polynomial variable '" + name(i) + "'");
            }
        }
    }

    // Monomial from natural exponents, e.g. {{"q", -1}, {"p", 1}}.
    Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> powers) const
    {
        std::vector<int> nat(size(), 0);
        for (auto [n, k] : powers) {
            nat[require(n)] += k;
        }
        return from_natural(nat);
    }

    Monomial from_natural(std::span<const int> nat) const
    {
        if (nat.size() != size()) {
            throw SeriesError("exponent vector length does not match variable table");
        }
        Monomial m;
        for (std::size_t i = 0; i < size(); ++i) {
            long v = nat[i];
            if (i < trunc_.size() && trunc_[i].graded_by >= 0) {
                v += static_cast<long>(trunc_[i].shift) * nat[static_cast<std::size_t>(trunc_[i].graded_by)];
            }
            if (v > 30000 || v < -30000) {
                throw SeriesError("exponent out of range");
            }
            m.e[i] = static_cast<std::int16_t>(v);
        }
        validate(m);
        return m;
    }

    std::vector<int> natural(const Monomial &m) const
    {
        std::vector<int> nat(size());
        for (std::size_t i = 0; i < size(); ++i) {
            nat[i] = m.e[i];
            if (i < trunc_.size() && trunc_[i].graded_by >= 0) {
                nat[i] -= trunc_[i].shift * m.e[static_cast<std::size_t>(trunc_[i].graded_by)];
            }
        }
        return nat;
    }

    std::string describe(const Monomial &m) const
    {
        const auto nat = natural(m);
        std::string out;
        for (std::size_t i = 0; i < size(); ++i) {
            if (nat[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += name(i);
            if (nat[i] != 1) {
                out += '^' + std::to_string(nat[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

    // Same variables, kinds and grading; caps may differ.
    bool same_shape(const VarTable &o) const
    {
        if (trunc_.size() != o.trunc_.size() || exact_.size() != o.exact_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            if (trunc_[i].name != o.trunc_[i].name || trunc_[i].graded_by != o.trunc_[i].graded_by ||
                trunc_[i].shift != o.trunc_[i].shift) {
                return false;
            }
        }
        for (std::size_t i = 0; i < exact_.size(); ++i) {
            if (exact_[i].name != o.exact_[i].name || exact_[i].laurent != o.exact_[i].laurent) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const VarTable &a, const VarTable &b)
    {
        if (!a.same_shape(b)) {
            return false;
        }
        for (std::size_t i = 0; i < a.trunc_.size(); ++i) {
            if (a.trunc_[i].cap != b.trunc_[i].cap) {
                return false;
            }
        }
        return true;
    }

    const std::vector<std::size_t> &laurent_indices() const noexcept
    {
        return laurent_idx_;
    }

private:
    template <typename G>
    void finalise(const std::vector<G> &grades)
    {
        if (size() > kMaxVars) {
            throw SeriesError("at most " + std::to_string(kMaxVars) + " variables are supported");
        }
        auto names_ = names();
        std::sort(names_.begin(), names_.end());
        if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
            throw SeriesError("variable names must be unique");
        }
        for (const auto &g : grades) {
            auto v = index_of(g.var), w = index_of(g.by);
            if (!v || !w || !is_truncated(*v) || !is_truncated(*w) || *v == *w) {
                throw SeriesError("grading needs two distinct truncated variables");
            }
            if (g.shift < 0) {
                throw SeriesError("grading shift must be nonnegative");
            }
            trunc_[*v].graded_by = static_cast<int>(*w);
            trunc_[*v].shift = g.shift;
        }
        for (const auto &tv : trunc_) {
            if (tv.graded_by >= 0 && trunc_[static_cast<std::size_t>(tv.graded_by)].graded_by >= 0) {
                throw SeriesError("nested gradings are not supported");
            }
        }
        eff_cap_.assign(trunc_.size(), 0);
        for (std::size_t i = 0; i < trunc_.size(); ++i) {
            eff_cap_[i] = trunc_[i].cap;
            if (trunc_[i].graded_by >= 0) {
                eff_cap_[i] += trunc_[i].shift * trunc_[static_cast<std::size_t>(trunc_[i].graded_by)].cap;
            }
        }
        laurent_idx_.clear();
        for (std::size_t i = 0; i < exact_.size(); ++i) {
            if (exact_[i].laurent) {
                laurent_idx_.push_back(trunc_.size() + i);
            }
        }
    }

    std::vector<TruncatedVar> trunc_;
    std::vector<ExactVar> exact_;
    std::vector<int> eff_cap_;
    std::vector<std::size_t> laurent_idx_;
};

class VarTable::Builder
{
public:
    Builder &truncated(std::string name, int cap)
    {
        if (cap < 0) {
            throw std::invalid_argument("truncation cap must be nonnegative");
        }
        table_.trunc_.push_back({std::move(name), cap});
        return *this;
    }
    Builder &exact(std::string name, bool laurent = false)
    {
        table_.exact_.push_back({std::move(name), laurent});
        return *this;
    }
    // Store `var` with effective exponent e_var + shift * e_by.
    Builder &grade(const std::string &var, const std::string &by, int shift)
    {
        grades_.push_back({var, by, shift});
        return *this;
    }
    std::shared_ptr<const VarTable> build()
    {
        table_.finalise(grades_);
        return std::make_shared<const VarTable>(std::move(table_));
    }

private:
    struct Grade {
        std::string var, by;
        int shift;
    };
    VarTable table_;
    std::vector<Grade> grades_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class MultiSeries;

struct Mismatch {
    Monomial monomial;
    Rational lhs;
    Rational rhs;
};

// Truncated multivariate power/Laurent series with exact rational
// coefficients. Terms are kept sorted by monomial, nonzero and within caps.
class MultiSeries
{
public:
    using Term = std::pair<Monomial, Rational>;

    MultiSeries() = default;
    explicit MultiSeries(VarTablePtr table) : table_(std::move(table)) {}

    MultiSeries(VarTablePtr table, std::vector<Term> terms) : table_(std::move(table)), terms_(std::move(terms))
    {
        normalise();
    }

    static MultiSeries constant(VarTablePtr table, const Rational &c)
    {
        MultiSeries s(std::move(table));
        if (c != 0) {
            s.terms_.emplace_back(Monomial{}, c);
        }
        return s;
    }
    static MultiSeries one(VarTablePtr table)
    {
        return constant(std::move(table), 1);
    }
    static MultiSeries term(VarTablePtr table, const Monomial &m, const Rational &c = 1)
    {
        table->validate(m);
        MultiSeries s(table);
        if (c != 0 && table->within_caps(m)) {
            s.terms_.emplace_back(m, c);
        }
        return s;
    }
    static MultiSeries var(VarTablePtr table, std::string_view name, int power = 1)
    {
        const auto m = table->monomial({{name, power}});
        return term(std::move(table), m);
    }

    const VarTablePtr &table() const noexcept
    {
        return table_;
    }
    std::span<const Term> terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    Rational coefficient(const Monomial &m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term &t, const Monomial &k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) {
            return it->second;
        }
        return 0;
    }
    Rational coefficient(std::initializer_list<std::pair<std::string_view, int>> powers) const
    {
        return coefficient(table_->monomial(powers));
    }

    // Coefficient of the zero-degree part, which is a series in exact vars.
    MultiSeries degree_part(int d) const
    {
        MultiSeries out(table_);
        for (const auto &t : terms_) {
            if (table_->degree(t.first) == d) {
                out.terms_.push_back(t);
            }
        }
        return out;
    }

    MultiSeries operator-() const
    {
        MultiSeries out = *this;
        for (auto &t : out.terms_) {
            t.second = -t.second;
        }
        return out;
    }

    MultiSeries &operator+=(const MultiSeries &o)
    {
        *this = merge(*this, o, 1);
        return *this;
    }
    MultiSeries &operator-=(const MultiSeries &o)
    {
        *this = merge(*this, o, -1);
        return *this;
    }
    MultiSeries &operator*=(const MultiSeries &o)
    {
        *this = multiply(*this, o);
        return *this;
    }
    MultiSeries &operator+=(const Rational &c)
    {
        return *this += constant(table_, c);
    }
    MultiSeries &operator-=(const Rational &c)
    {
        return *this -= constant(table_, c);
    }
    MultiSeries &operator*=(const Rational &c)
    {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto &t : terms_) {
                t.second *= c;
            }
        }
        return *this;
    }
    MultiSeries &operator/=(const Rational &c)
    {
        if (c == 0) {
            throw std::domain_error("division by zero");
        }
        return *this *= Rational(1) / c;
    }

    friend MultiSeries operator+(MultiSeries a, const MultiSeries &b)
    {
        return a += b;
    }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries &b)
    {
        return a -= b;
    }
    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
    {
        return multiply(a, b);
    }
    friend MultiSeries operator*(MultiSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend MultiSeries operator*(const Rational &c, MultiSeries a)
    {
        return a *= c;
    }
    friend MultiSeries operator/(MultiSeries a, const Rational &c)
    {
        return a /= c;
    }
    friend MultiSeries operator+(MultiSeries a, const Rational &c)
    {
        return a += constant(a.table_, c);
    }
    friend MultiSeries operator+(const Rational &c, MultiSeries a)
    {
        return a += constant(a.table_, c);
    }
    friend MultiSeries operator-(MultiSeries a, const Rational &c)
    {
        return a -= constant(a.table_, c);
    }
    friend MultiSeries operator-(const Rational &c, const MultiSeries &a)
    {
        return constant(a.table_, c) - a;
    }

    // this * c * m, dropping terms beyond the caps.
    MultiSeries mul_term(const Monomial &m, const Rational &c = 1) const
    {
        MultiSeries out(table_);
        if (c == 0) {
            return out;
        }
        for (const auto &t : terms_) {
            Monomial p = t.first * m;
            if (table_->within_caps(p)) {
                table_->validate(p);
                out.terms_.emplace_back(p, t.second * c);
            }
        }
        // Multiplication by a monomial preserves the lexicographic order.
        return out;
    }

    friend bool operator==(const MultiSeries &a, const MultiSeries &b)
    {
        a.check_table(b);
        return a.terms_ == b.terms_;
    }

    // Lexicographically first monomial where a and b differ.
    friend std::optional<Mismatch> first_mismatch(const MultiSeries &a, const MultiSeries &b)
    {
        a.check_table(b);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                return Mismatch{a.terms_[i].first, a.terms_[i].second, 0};
            }
            if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                return Mismatch{b.terms_[j].first, 0, b.terms_[j].second};
            }
            if (a.terms_[i].second != b.terms_[j].second) {
                return Mismatch{a.terms_[i].first, a.terms_[i].second, b.terms_[j].second};
            }
            ++i;
            ++j;
        }
        return std::nullopt;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            if (!first) {
                os << (c < 0 ? " - " : " + ");
            } else if (c < 0) {
                os << '-';
            }
            first = false;
            const Rational a = abs(c);
            const bool unit = m.is_one();
            if (a != 1 || unit) {
                os << a.get_str();
                if (!unit) {
                    os << '*';
                }
            }
            if (!unit) {
                os << table_->describe(m);
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const MultiSeries &s)
    {
        return os << s.to_string();
    }

    // Accumulates terms in a hash map; used for sums with many contributions.
    class Accumulator
    {
    public:
        explicit Accumulator(VarTablePtr table) : table_(std::move(table)) {}

        void add(const Monomial &m, const Rational &c)
        {
            if (!table_->within_caps(m)) {
                return;
            }
            auto [it, fresh] = map_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
            }
        }
        void add(const MultiSeries &s)
        {
            for (const auto &[m, c] : s.terms()) {
                add(m, c);
            }
        }
        // += s * c * m
        void add_scaled(const MultiSeries &s, const Monomial &m, const Rational &c)
        {
            for (const auto &[sm, sc] : s.terms()) {
                add(sm * m, sc * c);
            }
        }
        MultiSeries finish()
        {
            std::vector<Term> terms;
            terms.reserve(map_.size());
            for (auto &kv : map_) {
                if (kv.second != 0) {
                    terms.emplace_back(kv.first, std::move(kv.second));
                }
            }
            map_.clear();
            std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
            MultiSeries out(table_);
            out.terms_ = std::move(terms);
            return out;
        }

    private:
        VarTablePtr table_;
        std::unordered_map<Monomial, Rational, MonomialHash> map_;
    };

    void check_table(const MultiSeries &o) const
    {
        if (!table_ || !o.table_) {
            throw SeriesError("var-table-mismatch: series without a variable table");
        }
        if (table_ != o.table_ && !(*table_ == *o.table_)) {
            throw SeriesError("var-table-mismatch");
        }
    }

private:
    friend class SeriesOps;

    void normalise()
    {
        Accumulator acc(table_);
        for (const auto &[m, c] : terms_) {
            table_->validate(m);
            acc.add(m, c);
        }
        *this = acc.finish();
    }

    static MultiSeries merge(const MultiSeries &a, const MultiSeries &b, int sign)
    {
        a.check_table(b);
        MultiSeries out(a.table_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.emplace_back(b.terms_[j].first, sign > 0 ? b.terms_[j].second : Rational(-b.terms_[j].second));
                ++j;
            } else {
                Rational c = sign > 0 ? Rational(a.terms_[i].second + b.terms_[j].second) : Rational(a.terms_[i].second - b.terms_[j].second);
                if (c != 0) {
                    out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    // Products of term lists into an accumulator, skipping pairs beyond caps.
    // Terms are sorted lexicographically, so the first truncated exponent is
    // nondecreasing along `b` and the inner loop can stop early.
    static void multiply_into(const VarTable &table, std::span<const Term> a, std::span<const Term> b,
                              std::unordered_map<Monomial, Rational, MonomialHash> &acc, const Rational *scale = nullptr)
    {
        const std::size_t nt = table.truncated_count();
        const auto &laurent = table.laurent_indices();
        Rational prod;
        for (const auto &[ma, ca] : a) {
            const int budget0 = nt ? table.effective_cap(0) - ma.e[0] : 0;
            for (const auto &[mb, cb] : b) {
                if (nt && mb.e[0] > budget0) {
                    break;
                }
                Monomial m = ma * mb;
                bool ok = true;
                for (std::size_t i = 1; i < nt; ++i) {
                    if (m.e[i] > table.effective_cap(i)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                for (auto li : laurent) {
                    if (m.e[li] > kLaurentBound || m.e[li] < -kLaurentBound) {
                        throw SeriesError("Laurent exponent of '" + table.name(li) + "' exceeds bound " + std::to_string(kLaurentBound));
                    }
                }
                mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                if (scale) {
                    prod *= *scale;
                }
                auto [it, fresh] = acc.try_emplace(m, prod);
                if (!fresh) {
                    it->second += prod;
                }
            }
        }
    }

    static MultiSeries from_map(const VarTablePtr &table, std::unordered_map<Monomial, Rational, MonomialHash> &map)
    {
        MultiSeries out(table);
        out.terms_.reserve(map.size());
        for (auto &kv : map) {
            if (kv.second != 0) {
                out.terms_.emplace_back(kv.first, std::move(kv.second));
            }
        }
        std::sort(out.terms_.begin(), out.terms_.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
        return out;
    }

    static MultiSeries multiply(const MultiSeries &a, const MultiSeries &b)
    {
        a.check_table(b);
        if (a.is_zero() || b.is_zero()) {
            return MultiSeries(a.table_);
        }
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(std::max(a.size(), b.size()) * 2);
        multiply_into(*a.table_, a.terms_, b.terms_, acc);
        return from_map(a.table_, acc);
    }

    VarTablePtr table_;
    std::vector<Term> terms_;
};

// Operations that need access to the term storage of MultiSeries.
class SeriesOps
{
public:
    using Term = MultiSeries::Term;
    using Map = std::unordered_map<Monomial, Rational, MonomialHash>;

    // Split into homogeneous components of the truncated degree.
    static std::vector<std::vector<Term>> components(const MultiSeries &a)
    {
        const auto &table = *a.table();
        std::vector<std::vector<Term>> out(static_cast<std::size_t>(table.max_degree()) + 1);
        for (const auto &t : a.terms()) {
            out[static_cast<std::size_t>(table.degree(t.first))].push_back(t);
        }
        return out;
    }

    static MultiSeries assemble(const VarTablePtr &table, std::vector<std::vector<Term>> &comps)
    {
        MultiSeries out(table);
        for (auto &c : comps) {
            for (auto &t : c) {
                out.terms_.push_back(std::move(t));
            }
        }
        std::sort(out.terms_.begin(), out.terms_.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
        return out;
    }

    static std::vector<Term> sorted_terms(Map &map)
    {
        std::vector<Term> out;
        out.reserve(map.size());
        for (auto &kv : map) {
            if (kv.second != 0) {
                out.emplace_back(kv.first, std::move(kv.second));
            }
        }
        std::sort(out.begin(), out.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
        return out;
    }

    static void multiply_into(const VarTable &table, std::span<const Term> a, std::span<const Term> b, Map &acc,
                              const Rational *scale = nullptr)
    {
        MultiSeries::multiply_into(table, a, b, acc, scale);
    }
};

// 1/a. The zero-degree part of a must be a single term c*m with c != 0 and m
// a monomial in Laurent variables only (a unit of the ring).
inline MultiSeries inverse(const MultiSeries &a)
{
    using Term = MultiSeries::Term;
    const auto &table = a.table();
    auto comps = SeriesOps::components(a);
    if (comps.empty() || comps[0].size() != 1) {
        throw SeriesError("non-invertible-leading-term: zero-degree part must be a single monomial");
    }
    const auto [m0, c0] = comps[0][0];
    for (std::size_t i = 0; i < table->size(); ++i) {
        if (m0.e[i] != 0 && !table->is_laurent(i)) {
            throw SeriesError("non-invertible-leading-term: leading monomial " + table->describe(m0) + " is not a unit");
        }
    }
    const Monomial m0inv = m0.inverse();
    const Rational c0inv = Rational(1) / c0;

    // b = a / (c0 m0) = 1 + b_+; inverse I_n = -sum_{k=1}^n b_k I_{n-k}.
    std::vector<std::vector<Term>> b(comps.size());
    for (std::size_t d = 1; d < comps.size(); ++d) {
        for (const auto &[m, c] : comps[d]) {
            b[d].emplace_back(m * m0inv, c * c0inv);
        }
        std::sort(b[d].begin(), b[d].end(), [](const Term &x, const Term &y) { return x.first < y.first; });
    }
    std::vector<std::vector<Term>> inv(comps.size());
    inv[0].emplace_back(Monomial{}, Rational(1));
    const Rational minus_one(-1);
    for (std::size_t n = 1; n < comps.size(); ++n) {
        SeriesOps::Map acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!b[k].empty() && !inv[n - k].empty()) {
                SeriesOps::multiply_into(*table, b[k], inv[n - k], acc, &minus_one);
            }
        }
        inv[n] = SeriesOps::sorted_terms(acc);
    }
    MultiSeries out = SeriesOps::assemble(table, inv);
    return out.mul_term(m0inv, c0inv);
}

// exp(a) for a without zero-degree terms: E_n = (1/n) sum_{k=1}^n k a_k E_{n-k}.
inline MultiSeries exp_series(const MultiSeries &a)
{
    using Term = MultiSeries::Term;
    const auto &table = a.table();
    auto comps = SeriesOps::components(a);
    if (!comps.empty() && !comps[0].empty()) {
        throw SeriesError("bad-constant-term: exp needs a series without zero-degree terms");
    }
    for (std::size_t k = 1; k < comps.size(); ++k) {
        for (auto &t : comps[k]) {
            t.second *= static_cast<long>(k);
        }
    }
    std::vector<std::vector<Term>> e(comps.size());
    e[0].emplace_back(Monomial{}, Rational(1));
    for (std::size_t n = 1; n < comps.size(); ++n) {
        SeriesOps::Map acc;
        const Rational inv_n = make_rational(1, static_cast<long>(n));
        for (std::size_t k = 1; k <= n; ++k) {
            if (!comps[k].empty() && !e[n - k].empty()) {
                SeriesOps::multiply_into(*table, comps[k], e[n - k], acc, &inv_n);
            }
        }
        e[n] = SeriesOps::sorted_terms(acc);
    }
    return SeriesOps::assemble(table, e);
}

// log(a) for a whose zero-degree part is exactly 1:
// n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
inline MultiSeries log_series(const MultiSeries &a)
{
    using Term = MultiSeries::Term;
    const auto &table = a.table();
    auto comps = SeriesOps::components(a);
    if (comps.empty() || comps[0].size() != 1 || !comps[0][0].first.is_one() || comps[0][0].second != 1) {
        throw SeriesError("bad-constant-term: log needs zero-degree part exactly 1");
    }
    std::vector<std::vector<Term>> l(comps.size());
    std::vector<std::vector<Term>> kl(comps.size()); // k * L_k
    for (std::size_t n = 1; n < comps.size(); ++n) {
        SeriesOps::Map acc;
        for (const auto &[m, c] : comps[n]) {
            acc.emplace(m, c);
        }
        const Rational scale = make_rational(-1, static_cast<long>(n));
        for (std::size_t k = 1; k < n; ++k) {
            if (!kl[k].empty() && !comps[n - k].empty()) {
                SeriesOps::multiply_into(*table, kl[k], comps[n - k], acc, &scale);
            }
        }
        l[n] = SeriesOps::sorted_terms(acc);
        kl[n] = l[n];
        for (auto &t : kl[n]) {
            t.second *= static_cast<long>(n);
        }
    }
    return SeriesOps::assemble(table, l);
}

// a^n for integer n (negative powers go through inverse).
inline MultiSeries pow(const MultiSeries &a, long n)
{
    if (n < 0) {
        return pow(inverse(a), -n);
    }
    MultiSeries result = MultiSeries::one(a.table());
    MultiSeries base = a;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n) {
            base *= base;
        }
    }
    return result;
}

// a^e := exp(e * log a) for a with zero-degree part 1 and e of any degree.
inline MultiSeries pow_series(const MultiSeries &a, const MultiSeries &e)
{
    return exp_series(e * log_series(a));
}

// a^z for an exact (non-Laurent) variable z, or a^m for an integer m.
inline MultiSeries pow_symbolic(const MultiSeries &a, std::string_view var)
{
    const auto &table = a.table();
    const auto idx = table->require(var);
    if (table->is_truncated(idx) || table->is_laurent(idx)) {
        throw SeriesError("symbolic exponent must be a polynomial exact variable");
    }
    return pow_series(a, MultiSeries::var(table, var));
}

inline MultiSeries pow_symbolic(const MultiSeries &a, long m)
{
    return pow_series(a, MultiSeries::constant(a.table(), m));
}

// Replace `var` by image (a monomial given in natural exponents), then
// re-truncate. A truncated var needs an image of positive truncated degree.
inline MultiSeries substitute(const MultiSeries &a, std::string_view var, std::span<const int> image_natural,
                              const Rational &image_coeff = 1)
{
    const auto &table = a.table();
    const auto idx = table->require(var);
    if (image_natural.size() != table->size()) {
        throw SeriesError("substitution image has the wrong number of exponents");
    }
    if (table->is_truncated(idx)) {
        const Monomial im = table->from_natural(image_natural);
        if (table->degree(im) <= 0) {
            throw SeriesError("cap-violation: image of a truncated variable must have positive truncated degree");
        }
    }
    MultiSeries::Accumulator acc(table);
    for (const auto &[m, c] : a.terms()) {
        auto nat = table->natural(m);
        const int k = nat[idx];
        nat[idx] = 0;
        for (std::size_t i = 0; i < nat.size(); ++i) {
            nat[i] += k * image_natural[i];
        }
        const Monomial nm = table->from_natural(nat);
        acc.add(nm, c * rational_pow(image_coeff, k));
    }
    return acc.finish();
}

inline MultiSeries substitute(const MultiSeries &a, std::string_view var,
                              std::initializer_list<std::pair<std::string_view, int>> image, const Rational &image_coeff = 1)
{
    const auto &table = a.table();
    std::vector<int> nat(table->size(), 0);
    for (auto [n, k] : image) {
        nat[table->require(n)] += k;
    }
    return substitute(a, var, nat, image_coeff);
}

// Set var := value (nonzero for Laurent variables).
inline MultiSeries specialize(const MultiSeries &a, std::string_view var, const Rational &value)
{
    std::vector<int> none(a.table()->size(), 0);
    if (value == 0) {
        // Only nonnegative powers survive; 0^0 = 1.
        const auto idx = a.table()->require(var);
        MultiSeries::Accumulator acc(a.table());
        for (const auto &[m, c] : a.terms()) {
            const int k = a.table()->natural(m)[idx];
            if (k < 0) {
                throw std::domain_error("cannot specialise a Laurent variable to zero");
            }
            if (k == 0) {
                acc.add(m, c);
            }
        }
        return acc.finish();
    }
    const auto idx = a.table()->require(var);
    if (a.table()->is_truncated(idx)) {
        MultiSeries::Accumulator acc(a.table());
        for (const auto &[m, c] : a.terms()) {
            auto nat = a.table()->natural(m);
            const int k = nat[idx];
            nat[idx] = 0;
            acc.add(a.table()->from_natural(nat), c * rational_pow(value, k));
        }
        return acc.finish();
    }
    return substitute(a, var, none, value);
}

// Move a series to a table with the same variables and smaller or equal caps.
inline MultiSeries retruncate(const MultiSeries &a, VarTablePtr target)
{
    if (!a.table()->same_shape(*target)) {
        throw SeriesError("var-table-mismatch: retruncation needs the same variables");
    }
    for (std::size_t i = 0; i < target->truncated_count(); ++i) {
        if (target->effective_cap(i) > a.table()->effective_cap(i)) {
            throw SeriesError("cap-violation: cannot raise a cap by retruncation");
        }
    }
    MultiSeries::Accumulator acc(target);
    for (const auto &[m, c] : a.terms()) {
        acc.add(m, c);
    }
    return acc.finish();
}

inline Rational coefficient(const MultiSeries &a, const Monomial &m)
{
    return a.coefficient(m);
}

struct SeriesComparison {
    bool equal;
    std::optional<Mismatch> mismatch;
    explicit operator bool() const noexcept
    {
        return equal;
    }
};

inline SeriesComparison compare(const MultiSeries &a, const MultiSeries &b)
{
    auto mm = first_mismatch(a, b);
    return {!mm.has_value(), mm};
}

} // namespace hooklab

#endif
