#ifndef HOOKLAB_ELLIPTIC_HPP
#define HOOKLAB_ELLIPTIC_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <hooklab/enumerate.hpp>
#include <hooklab/littlewood.hpp>
#include <hooklab/partition.hpp>
#include <hooklab/pseries.hpp>
#include <hooklab/qseries.hpp>
#include <hooklab/series.hpp>

namespace hooklab
{

// theta(z;p) = sum_n (-1)^n z^n p^{n(n-1)/2} = (p;p)_inf (z;p)_inf (p/z;p)_inf.
// The sign makes theta(z;p) = -z theta(1/z;p) hold and gives theta(z;0) = 1-z.

// n with n(n-1)/2 + k*n <= prec, i.e. the terms of theta(x p^k; p) that matter.
inline std::vector<int> theta_indices(int k, int prec)
{
    std::vector<int> out;
    const int bound = 2 * (std::abs(k) + std::abs(prec)) + 4;
    for (int n = -bound; n <= bound; ++n) {
        if (n * (n - 1) / 2 + k * n <= prec) {
            out.push_back(n);
        }
    }
    return out;
}

// theta(c * m; p) for a monomial argument given by natural exponents, as a
// series in the table's truncated variable `pvar`.
inline MultiSeries theta_series(const VarTablePtr &table, const Rational &c, std::span<const int> arg, std::string_view pvar)
{
    if (c == 0) {
        throw SeriesError("zero-argument: theta needs a nonzero argument");
    }
    const auto pidx = table->require(pvar);
    if (!table->is_truncated(pidx)) {
        throw SeriesError("theta nome must be a truncated variable");
    }
    const int cap = table->cap(pidx);
    const int k = arg[pidx];
    std::vector<MultiSeries::Term> terms;
    for (int n : theta_indices(k, cap)) {
        std::vector<int> nat(arg.begin(), arg.end());
        for (auto &e : nat) {
            e *= n;
        }
        nat[pidx] += n * (n - 1) / 2;
        Rational coeff = rational_pow(c, n);
        if (n % 2) {
            coeff = -coeff;
        }
        terms.emplace_back(table->from_natural(nat), coeff);
    }
    return MultiSeries(table, std::move(terms));
}

inline MultiSeries theta_series(const VarTablePtr &table, const Rational &c,
                                std::initializer_list<std::pair<std::string_view, int>> arg, std::string_view pvar)
{
    std::vector<int> nat(table->size(), 0);
    for (auto [n, e] : arg) {
        nat[table->require(n)] += e;
    }
    return theta_series(table, c, nat, pvar);
}

// theta(x p^k; p) through p^prec.
inline PSeries theta_p(const Rational &x, int k, int prec)
{
    if (x == 0) {
        throw std::invalid_argument("zero-argument: theta needs a nonzero argument");
    }
    PSeries out = PSeries::constant(0, prec);
    for (int n : theta_indices(k, prec)) {
        Rational c = rational_pow(x, n);
        out.add_term(n % 2 ? Rational(-c) : c, n * (n - 1) / 2 + k * n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// C(m, l, n1, n2): coefficient of p^m u^l q^{-n1} t^{n2} in
// (upq, u^-1 p q^-1, u p t^-1, u^-1 p t; p) / (pq, p q^-1, p t^-1, p t; p).

class CTable
{
public:
    using Key = std::array<int, 4>; // m, l, n1, n2

    int p_cap() const noexcept
    {
        return p_cap_;
    }
    long at(int m, int l, int n1, int n2) const
    {
        auto it = entries_.find({m, l, n1, n2});
        return it == entries_.end() ? 0 : it->second;
    }
    const std::map<Key, long> &entries() const noexcept
    {
        return entries_;
    }

    std::vector<std::string> invariant_failures() const
    {
        std::vector<std::string> out;
        std::map<std::array<int, 3>, long> lsum;
        for (const auto &[k, c] : entries_) {
            const auto [m, l, n1, n2] = k;
            const auto tag = "C(" + std::to_string(m) + "," + std::to_string(l) + "," + std::to_string(n1) + "," + std::to_string(n2) + ")";
            if (at(m, l, n2, n1) != c) {
                out.push_back("symmetry n1<->n2 fails at " + tag);
            }
            if (at(m, -l, -n1, -n2) != c) {
                out.push_back("symmetry sign fails at " + tag);
            }
            int bound = 0;
            while ((bound + 1) * (bound + 1) <= 4 * m + 1) {
                ++bound;
            }
            if (std::abs(l) >= bound) {
                out.push_back("l-support bound fails at " + tag);
            }
            lsum[{m, n1, n2}] += c;
        }
        for (const auto &[k, s] : lsum) {
            if (s != 0) {
                out.push_back("sum over l nonzero at m=" + std::to_string(k[0]) + " n1=" + std::to_string(k[1]) +
                              " n2=" + std::to_string(k[2]));
            }
        }
        return out;
    }

private:
    friend CTable c_table(int p_cap);
    int p_cap_ = 0;
    std::map<Key, long> entries_;
};

inline CTable c_table(int p_cap)
{
    if (p_cap < 1) {
        throw std::invalid_argument("c_table needs p_cap >= 1");
    }
    auto table = VarTable::Builder().truncated("p", p_cap).exact("u", true).exact("q", true).exact("t", true).build();
    ProductBuilder b(table);
    const std::array<Monomial, 1> base{table->monomial({{"p", 1}})};
    auto poch = [&](std::initializer_list<std::pair<std::string_view, int>> a, long e) {
        b.pochhammer(1, table->monomial(a), base, e);
    };
    poch({{"u", 1}, {"p", 1}, {"q", 1}}, 1);
    poch({{"u", -1}, {"p", 1}, {"q", -1}}, 1);
    poch({{"u", 1}, {"p", 1}, {"t", -1}}, 1);
    poch({{"u", -1}, {"p", 1}, {"t", 1}}, 1);
    poch({{"p", 1}, {"q", 1}}, -1);
    poch({{"p", 1}, {"q", -1}}, -1);
    poch({{"p", 1}, {"t", -1}}, -1);
    poch({{"p", 1}, {"t", 1}}, -1);
    const auto ratio = b.build();

    CTable out;
    out.p_cap_ = p_cap;
    for (const auto &[m, c] : ratio.terms()) {
        const auto nat = table->natural(m);
        if (nat[0] == 0) {
            if (!(nat[1] == 0 && nat[2] == 0 && nat[3] == 0 && c == 1)) {
                throw std::logic_error("c_table: constant term of the defining ratio is not 1");
            }
            continue;
        }
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
            throw std::logic_error("c_table: non-integral coefficient");
        }
        out.entries_[{nat[0], nat[1], -nat[2], nat[3]}] = c.get_num().get_si();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational evaluation points for q, t, u.

struct RationalPoint {
    Rational q, t, u;
    std::uint64_t seed = 0;
    int draw = 0;

    // Seed 0 starts at q=2/3, t=3/5, u=5/7; redraws and other seeds use
    // ratios of distinct small primes.
    static RationalPoint from_seed(std::uint64_t seed, int draw = 0)
    {
        RationalPoint pt;
        pt.seed = seed;
        pt.draw = draw;
        if (seed == 0 && draw == 0) {
            pt.q = make_rational(2, 3);
            pt.t = make_rational(3, 5);
            pt.u = make_rational(5, 7);
            return pt;
        }
        static constexpr std::array<long, 12> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(draw));
        std::array<long, 6> pick{};
        for (std::size_t i = 0; i < pick.size(); ++i) {
            for (;;) {
                const long p = primes[rng() % primes.size()];
                if (std::find(pick.begin(), pick.begin() + static_cast<long>(i), p) == pick.begin() + static_cast<long>(i)) {
                    pick[i] = p;
                    break;
                }
            }
        }
        pt.q = make_rational(pick[0], pick[1]);
        pt.t = make_rational(pick[2], pick[3]);
        pt.u = make_rational(pick[4], pick[5]);
        return pt;
    }

    RationalPoint redraw() const
    {
        return from_seed(seed, draw + 1);
    }

    std::string to_string() const
    {
        return "q=" + q.get_str() + " t=" + t.get_str() + " u=" + u.get_str();
    }
};

// theta(u^eu q^a t^b p^k; p) at the point, through p^prec.
inline PSeries theta_at(const RationalPoint &pt, int eu, int a, int b, int k, int prec)
{
    return theta_p(rational_pow(pt.u, eu) * rational_pow(pt.q, a) * rational_pow(pt.t, b), k, prec);
}

// Square weight theta(u q^{a+1} t^l) theta(u^-1 q^a t^{l+1}) / (theta(q^{a+1} t^l) theta(q^a t^{l+1}))
// with u replaced by u p^ushift.
inline PSeries theta_square_weight(const RationalPoint &pt, int a, int l, int prec, int ushift = 0)
{
    const PSeries num = theta_at(pt, 1, a + 1, l, ushift, prec) * theta_at(pt, -1, a, l + 1, -ushift, prec);
    const PSeries den = theta_at(pt, 0, a + 1, l, 0, prec) * theta_at(pt, 0, a, l + 1, 0, prec);
    return num / den;
}

// Product of square weights over the squares of lambda with hook divisible by r.
inline PSeries elliptic_partition_weight(const Partition &lambda, int r, const RationalPoint &pt, int prec, int ushift = 0)
{
    PSeries w = PSeries::constant(1, prec);
    for_each_square(lambda, [&](Square, HookStats hs) {
        if (hs.hook % r == 0) {
            w = w * theta_square_weight(pt, hs.arm, hs.leg, prec, ushift);
        }
    });
    return w;
}

// f_{omega;r,n}: sum over lambda of size |omega| + r n with r-core omega.
// Throws DenominatorVanishes when the point is degenerate.
inline PSeries f_omega_rn(const Partition &omega, int r, int n, const RationalPoint &pt, int p_cap, int ushift = 0)
{
    if (!is_r_core(omega, r)) {
        throw std::invalid_argument("not-an-r-core: " + omega.to_string());
    }
    // Weights with a shifted u start at p^{-n}; work with spare precision.
    const int work = p_cap + 2 * n * (std::abs(ushift) + 1) + 2;
    PSeries sum = PSeries::constant(0, work);
    for (const auto &lam : PartitionsOf(omega.size() + r * n)) {
        if (r_core(lam, r) == omega) {
            sum = sum + elliptic_partition_weight(lam, r, pt, work, ushift);
        }
    }
    return sum;
}

struct EllipticCheck {
    bool ok;
    std::string detail;
};

// f(p u) = (t / (u^2 p q))^n f(u), compared through p^p_cap.
inline EllipticCheck quasi_periodicity_check(const Partition &omega, int r, int n, const RationalPoint &pt, int p_cap)
{
    const PSeries lhs = f_omega_rn(omega, r, n, pt, p_cap + n, 1);
    const PSeries f = f_omega_rn(omega, r, n, pt, p_cap + n, 0);
    const Rational factor = pt.t / (pt.u * pt.u * pt.q);
    const PSeries rhs = PSeries::monomial(rational_pow(factor, n), -n, f.prec()) * f;
    if (lhs.prec() < p_cap || rhs.prec() < p_cap) {
        return {false, "insufficient precision"};
    }
    if (!same_through(lhs, rhs, p_cap)) {
        return {false, "lhs " + lhs.to_string() + " rhs " + rhs.to_string()};
    }
    return {true, ""};
}

// theta(xz)theta(x/z)theta(yw)theta(y/w) - theta(xw)theta(x/w)theta(yz)theta(y/z)
//   = (y/z) theta(xy)theta(x/y)theta(zw)theta(z/w)
inline EllipticCheck theta_addition_check(const Rational &x, const Rational &y, const Rational &z, const Rational &w, int p_cap)
{
    auto th = [&](const Rational &a) { return theta_p(a, 0, p_cap); };
    const PSeries lhs = th(x * z) * th(x / z) * th(y * w) * th(y / w) - th(x * w) * th(x / w) * th(y * z) * th(y / z);
    const PSeries rhs = (y / z) * (th(x * y) * th(x / y) * th(z * w) * th(z / w));
    if (!same_through(lhs, rhs, p_cap)) {
        return {false, "lhs " + lhs.to_string() + " rhs " + rhs.to_string()};
    }
    return {true, ""};
}

// The n = 2 comparison of omega = 0 and omega = (1): three differences of
// single-partition terms t1, t2, t3, given by closed theta quotients, and
// t1 + t2 + t3 = 0.
struct NTwoTerms {
    PSeries t1, t2, t3;
    PSeries diff1, diff2, diff3; // the same three differences from the partition weights
};

inline NTwoTerms n_two_terms(int r, const RationalPoint &pt, int p_cap)
{
    if (r < 2) {
        throw std::invalid_argument("the n = 2 cancellation needs r >= 2");
    }
    const int prec = p_cap;
    auto th = [&](int eu, int a, int b) { return theta_at(pt, eu, a, b, 0, prec); };
    auto rows = [](std::initializer_list<std::pair<int, int>> blocks) {
        std::vector<int> parts;
        for (auto [v, c] : blocks) {
            parts.insert(parts.end(), static_cast<std::size_t>(std::max(c, 0)), v);
        }
        return Partition(std::move(parts));
    };
    auto phi_w = [&](const Partition &lam) { return elliptic_partition_weight(lam, r, pt, prec); };

    NTwoTerms out;
    const Rational c1 = -rational_pow(pt.q, 2 * r - 1) * rational_pow(pt.t, r + 1);
    out.t1 = c1 * (th(1, 1, -1) * th(1, 1 - r, -1) * th(-1, -r, 0) * th(-1, 0, 0) * th(0, r + 1, 2 * r - 1) /
                   (th(0, r - 1, 1) * th(0, 1, r - 1) * th(0, 0, r) * th(0, r + 1, r - 1) * th(0, r, r)));
    out.t2 = th(1, 1, -1) * th(1, r, r) * th(-1, r - 1, r + 1) * th(-1, 0, 0) * th(0, 2 - r, r - 2) /
             (th(0, r - 1, 1) * th(0, 2 - r, -2) * th(0, 1, r - 1) * th(0, 0, r) * th(0, r, r));
    out.t3 = -(th(1, 2, r - 2) * th(1, 1, -1) * th(-1, 1, r - 1) * th(-1, 0, 0) * th(0, 2 * r - 1, r + 1) /
               (th(0, r - 1, 1) * th(0, 2 - r, -2) * th(0, 1, r - 1) * th(0, r + 1, r - 1) * th(0, r, r)));

    out.diff1 = phi_w(rows({{r + 1, 1}, {1, r - 1}})) - phi_w(rows({{r + 1, 1}, {1, r}}));
    out.diff2 = phi_w(rows({{r, 1}, {1, r}})) - phi_w(rows({{r, 1}, {2, 1}, {1, r - 1}}));
    out.diff3 = phi_w(rows({{r, 1}, {2, 1}, {1, r - 2}})) - phi_w(rows({{r + 1, 1}, {2, 1}, {1, r - 2}}));
    return out;
}

// ---------------------------------------------------------------------------
// Elliptic product right-hand sides. Tables must grade q (and t) by p with a
// shift of at least the T cap (ENO) or twice the T cap (PQ_NO) so that the
// negative q, t powers in the factors are representable.

// (uqT, u^-1 tT; q,t,T)/(T, qtT; q,t,T) times the C-table product.
inline MultiSeries eno_rhs(const VarTablePtr &table)
{
    const int cap_t = table->cap(table->require("T"));
    const int cap_p = table->cap(table->require("p"));
    ProductBuilder b(table);
    const auto qtT = b.monomials({"q", "t", "T"});
    const auto qt = b.monomials({"q", "t"});
    auto mono = [&](std::initializer_list<std::pair<std::string_view, int>> a) { return table->monomial(a); };
    b.pochhammer(1, mono({{"u", 1}, {"q", 1}, {"T", 1}}), qtT, 1);
    b.pochhammer(1, mono({{"u", -1}, {"t", 1}, {"T", 1}}), qtT, 1);
    b.pochhammer(1, mono({{"T", 1}}), qtT, -1);
    b.pochhammer(1, mono({{"q", 1}, {"t", 1}, {"T", 1}}), qtT, -1);
    if (cap_p > 0) {
        const CTable ct = c_table(cap_p * std::max(cap_t, 1));
        for (int m = 1; m <= cap_p; ++m) {
            for (int k = 1; k <= cap_t; ++k) {
                for (const auto &[key, c] : ct.entries()) {
                    if (key[0] != k * m) {
                        continue;
                    }
                    const int l = key[1], n1 = key[2], n2 = key[3];
                    auto f = [&](int eu, int eq, int et) {
                        return mono({{"p", m}, {"T", k}, {"u", eu}, {"q", eq}, {"t", et}});
                    };
                    b.pochhammer(1, f(l + 1, 1 - n1, n2), qt, c);
                    b.pochhammer(1, f(l - 1, -n1, 1 + n2), qt, c);
                    b.pochhammer(1, f(l, -n1, n2), qt, -c);
                    b.pochhammer(1, f(l, 1 - n1, 1 + n2), qt, -c);
                }
            }
        }
    }
    return b.build();
}

// Right-hand side of the p,q-analogue of the modular NO formula.
inline MultiSeries pq_no_rhs(const VarTablePtr &table, int r)
{
    const int cap_t = table->cap(table->require("T"));
    const int cap_s = table->cap(table->require("S"));
    const int cap_p = table->cap(table->require("p"));
    ProductBuilder b(table);
    auto mono = [&](std::initializer_list<std::pair<std::string_view, int>> a) { return table->monomial(a); };
    const auto T = mono({{"T", 1}});
    const auto Tr = mono({{"T", r}});
    const auto qr = mono({{"q", r}});
    const auto STr = mono({{"S", 1}, {"T", r}});
    const std::array<Monomial, 1> bT{T}, bTr{Tr};
    const std::array<Monomial, 3> bq{qr, qr, STr};
    const std::array<Monomial, 2> bqq{qr, qr};
    b.pochhammer(1, Tr, bTr, r);
    b.pochhammer(1, T, bT, -1);
    b.pochhammer(1, mono({{"u", 1}, {"q", r}, {"S", 1}, {"T", r}}), bq, r);
    b.pochhammer(1, mono({{"u", -1}, {"q", r}, {"S", 1}, {"T", r}}), bq, r);
    b.pochhammer(1, STr, bq, -r);
    b.pochhammer(1, mono({{"q", 2 * r}, {"S", 1}, {"T", r}}), bq, -r);
    const int kmax = std::min(cap_s, cap_t / r);
    if (cap_p > 0 && kmax > 0) {
        const CTable ct = c_table(cap_p * kmax);
        for (int m = 1; m <= cap_p; ++m) {
            for (int k = 1; k <= kmax; ++k) {
                for (const auto &[key, c] : ct.entries()) {
                    if (key[0] != k * m) {
                        continue;
                    }
                    const int l = key[1], d = key[3] - key[2];
                    auto f = [&](int eu, int eq) { return mono({{"p", m}, {"S", k}, {"T", k * r}, {"u", eu}, {"q", eq}}); };
                    const long e = c * r;
                    b.pochhammer(1, f(l + 1, (d + 1) * r), bqq, e);
                    b.pochhammer(1, f(l - 1, (d + 1) * r), bqq, e);
                    b.pochhammer(1, f(l, d * r), bqq, -e);
                    b.pochhammer(1, f(l, (d + 2) * r), bqq, -e);
                }
            }
        }
    }
    return b.build();
}

} // namespace hooklab

#endif
