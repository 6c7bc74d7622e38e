#ifndef HOOKLAB_PSERIES_HPP
#define HOOKLAB_PSERIES_HPP

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <hooklab/series.hpp>

namespace hooklab
{

class DenominatorVanishes : public std::runtime_error
{
public:
    DenominatorVanishes() : std::runtime_error("denominator-vanishes-at-point") {}
};

// Univariate Laurent series in p with rational coefficients, known exactly
// through p^prec. coeff(k) is meaningful for k <= prec.
class PSeries
{
public:
    PSeries() = default;

    // c * p^k + O(p^{prec+1})
    static PSeries monomial(const Rational &c, int k, int prec)
    {
        PSeries s;
        s.prec_ = prec;
        s.low_ = k;
        if (k <= prec) {
            s.c_.push_back(c);
        }
        s.trim();
        return s;
    }
    static PSeries constant(const Rational &c, int prec)
    {
        return monomial(c, 0, prec);
    }

    int prec() const noexcept
    {
        return prec_;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    // Lowest exponent with a nonzero coefficient; prec+1 for zero.
    int valuation() const noexcept
    {
        return c_.empty() ? prec_ + 1 : low_;
    }
    Rational coeff(int k) const
    {
        if (k > prec_) {
            throw std::out_of_range("coefficient beyond precision");
        }
        if (c_.empty() || k < low_ || k >= low_ + static_cast<int>(c_.size())) {
            return 0;
        }
        return c_[static_cast<std::size_t>(k - low_)];
    }

    void add_term(const Rational &c, int k)
    {
        if (k > prec_ || c == 0) {
            return;
        }
        if (c_.empty()) {
            low_ = k;
            c_.push_back(c);
            return;
        }
        if (k < low_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(low_ - k), Rational(0));
            low_ = k;
        }
        const auto idx = static_cast<std::size_t>(k - low_);
        if (idx >= c_.size()) {
            c_.resize(idx + 1);
        }
        c_[idx] += c;
        trim();
    }

    PSeries &truncate(int prec)
    {
        if (prec < prec_) {
            prec_ = prec;
            if (!c_.empty()) {
                const long keep = static_cast<long>(prec_) - low_ + 1;
                c_.resize(static_cast<std::size_t>(std::max<long>(0, std::min<long>(keep, static_cast<long>(c_.size())))));
            }
            trim();
        }
        return *this;
    }

    friend PSeries operator+(const PSeries &a, const PSeries &b)
    {
        PSeries out;
        out.prec_ = std::min(a.prec_, b.prec_);
        for (const PSeries *s : {&a, &b}) {
            for (std::size_t i = 0; i < s->c_.size(); ++i) {
                out.add_term(s->c_[i], s->low_ + static_cast<int>(i));
            }
        }
        return out;
    }
    friend PSeries operator-(const PSeries &a)
    {
        PSeries out = a;
        for (auto &c : out.c_) {
            c = -c;
        }
        return out;
    }
    friend PSeries operator-(const PSeries &a, const PSeries &b)
    {
        return a + (-b);
    }
    friend PSeries operator*(const PSeries &a, const PSeries &b)
    {
        PSeries out;
        out.prec_ = std::min(a.prec_ + b.valuation(), b.prec_ + a.valuation());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out.add_term(a.c_[i] * b.c_[j], a.low_ + b.low_ + static_cast<int>(i + j));
            }
        }
        return out;
    }
    friend PSeries operator*(const Rational &c, const PSeries &a)
    {
        PSeries out = a;
        for (auto &x : out.c_) {
            x *= c;
        }
        out.trim();
        return out;
    }

    // Requires a nonzero leading coefficient within the known precision.
    PSeries inverse() const
    {
        if (c_.empty()) {
            throw DenominatorVanishes();
        }
        const int v = low_;
        const int rel = prec_ - v; // relative precision
        PSeries out;
        out.prec_ = rel - v;
        out.low_ = -v;
        const Rational inv0 = Rational(1) / c_[0];
        std::vector<Rational> d(static_cast<std::size_t>(rel + 1));
        for (int n = 0; n <= rel; ++n) {
            Rational acc = n == 0 ? Rational(1) : Rational(0);
            for (int k = 1; k <= n; ++k) {
                if (static_cast<std::size_t>(k) < c_.size()) {
                    acc -= c_[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
                }
            }
            d[static_cast<std::size_t>(n)] = acc * inv0;
        }
        out.c_ = std::move(d);
        out.trim();
        return out;
    }
    friend PSeries operator/(const PSeries &a, const PSeries &b)
    {
        return a * b.inverse();
    }

    // Agreement on every exponent both sides know.
    friend bool same_through(const PSeries &a, const PSeries &b, int prec)
    {
        if (prec > a.prec_ || prec > b.prec_) {
            return false;
        }
        const int lo = std::min(a.valuation(), b.valuation());
        for (int k = lo; k <= prec; ++k) {
            if (a.coeff(k) != b.coeff(k)) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c_[i].get_str() + ")*p^" + std::to_string(low_ + static_cast<int>(i));
        }
        return (out.empty() ? std::string("0") : out) + " + O(p^" + std::to_string(prec_ + 1) + ")";
    }
    friend std::ostream &operator<<(std::ostream &os, const PSeries &s)
    {
        return os << s.to_string();
    }

private:
    void trim()
    {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) {
            ++lead;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            low_ += static_cast<int>(lead);
        }
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
        while (!c_.empty() && low_ + static_cast<int>(c_.size()) - 1 > prec_) {
            c_.pop_back();
        }
        if (c_.empty()) {
            low_ = 0;
        }
    }

    std::vector<Rational> c_;
    int low_ = 0;
    int prec_ = 0;
};

} // namespace hooklab

#endif
