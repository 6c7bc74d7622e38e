#ifndef HOOKLAB_RHO_HPP
#define HOOKLAB_RHO_HPP

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <hooklab/elliptic.hpp>
#include <hooklab/series.hpp>

namespace hooklab
{

enum class RhoKind { CONST_Z, INV_H_SQ, NO, Z_OVER_H, Q_WEIGHT, QT_WEIGHT, THETA_WEIGHT };

inline constexpr std::array<RhoKind, 7> kAllRhoKinds{RhoKind::CONST_Z,  RhoKind::INV_H_SQ,   RhoKind::NO,
                                                     RhoKind::Z_OVER_H, RhoKind::Q_WEIGHT,   RhoKind::QT_WEIGHT,
                                                     RhoKind::THETA_WEIGHT};

inline std::string_view rho_name(RhoKind k)
{
    switch (k) {
    case RhoKind::CONST_Z: return "CONST_Z";
    case RhoKind::INV_H_SQ: return "INV_H_SQ";
    case RhoKind::NO: return "NO";
    case RhoKind::Z_OVER_H: return "Z_OVER_H";
    case RhoKind::Q_WEIGHT: return "Q_WEIGHT";
    case RhoKind::QT_WEIGHT: return "QT_WEIGHT";
    case RhoKind::THETA_WEIGHT: return "THETA_WEIGHT";
    }
    return "?";
}

inline std::optional<RhoKind> rho_from_name(std::string_view s)
{
    for (auto k : kAllRhoKinds) {
        if (rho_name(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

// A hook or square weight. Kinds that depend on h alone evaluate a square
// through h = a + l + 1; QT_WEIGHT and THETA_WEIGHT use (a, l) directly, and
// at_hook(h) evaluates them at (h - 1, 0).
//
//   CONST_Z       z
//   INV_H_SQ      1/h^2
//   NO            1 - c z/h^2                      (c = z_scale)
//   Z_OVER_H      z/h
//   Q_WEIGHT      z (1 - u q^h)/(1 - q^h)
//   QT_WEIGHT     (1 - u q^{a+1} t^l)(1 - u^-1 q^a t^{l+1}) / ((1 - q^{a+1} t^l)(1 - q^a t^{l+1}))
//   THETA_WEIGHT  the same with theta(.; p) in place of (1 - .)
//
// QT_WEIGHT and THETA_WEIGHT read t := q when the table has no t. With a
// rational point THETA_WEIGHT only needs p; otherwise q, t are graded by p.
struct RhoSpec {
    RhoKind kind = RhoKind::CONST_Z;
    Rational z_scale = 1;
    std::optional<RationalPoint> point;

    std::vector<std::string> required_vars() const
    {
        switch (kind) {
        case RhoKind::CONST_Z:
        case RhoKind::NO:
        case RhoKind::Z_OVER_H: return {"z"};
        case RhoKind::INV_H_SQ: return {};
        case RhoKind::Q_WEIGHT: return {"z", "u", "q"};
        case RhoKind::QT_WEIGHT: return {"u", "q"};
        case RhoKind::THETA_WEIGHT:
            if (point) {
                return {"p"};
            }
            return {"u", "q", "p"};
        }
        return {};
    }

    MultiSeries at_square(const VarTablePtr &table, int arm, int leg) const
    {
        for (const auto &v : required_vars()) {
            if (!table->has(v)) {
                throw SeriesError("weight " + std::string(rho_name(kind)) + " needs variable " + v);
            }
        }
        const int h = arm + leg + 1;
        auto var = [&](std::string_view n) { return MultiSeries::var(table, n); };
        switch (kind) {
        case RhoKind::CONST_Z: return var("z");
        case RhoKind::INV_H_SQ: return MultiSeries::constant(table, make_rational(1, static_cast<long>(h) * h));
        case RhoKind::NO: return 1 - var("z") * (z_scale / (static_cast<long>(h) * h));
        case RhoKind::Z_OVER_H: return var("z") * make_rational(1, h);
        case RhoKind::Q_WEIGHT: {
            const auto uqh = MultiSeries::term(table, table->monomial({{"u", 1}, {"q", h}}));
            const auto qh = MultiSeries::term(table, table->monomial({{"q", h}}));
            return var("z") * (1 - uqh) * inverse(1 - qh);
        }
        case RhoKind::QT_WEIGHT: {
            auto m = [&](int eu, int a, int b) { return MultiSeries::term(table, qt_monomial(*table, eu, a, b)); };
            return (1 - m(1, arm + 1, leg)) * (1 - m(-1, arm, leg + 1)) *
                   inverse((1 - m(0, arm + 1, leg)) * (1 - m(0, arm, leg + 1)));
        }
        case RhoKind::THETA_WEIGHT: return theta_weight(table, arm, leg);
        }
        throw std::logic_error("unknown weight kind");
    }

    MultiSeries at_hook(const VarTablePtr &table, int h) const
    {
        return at_square(table, h - 1, 0);
    }

private:
    static Monomial qt_monomial(const VarTable &table, int eu, int a, int b)
    {
        std::vector<int> nat(table.size(), 0);
        if (eu != 0) {
            nat[table.require("u")] += eu;
        }
        nat[table.require("q")] += a;
        nat[table.has("t") ? table.require("t") : table.require("q")] += b;
        return table.from_natural(nat);
    }

    MultiSeries theta_weight(const VarTablePtr &table, int arm, int leg) const
    {
        std::vector<int> zero(table->size(), 0);
        if (point) {
            const auto &pt = *point;
            auto th = [&](int eu, int a, int b) {
                return theta_series(table, rational_pow(pt.u, eu) * rational_pow(pt.q, a) * rational_pow(pt.t, b), zero, "p");
            };
            const auto den = th(0, arm + 1, leg) * th(0, arm, leg + 1);
            if (den.coefficient(Monomial{}) == 0) {
                throw DenominatorVanishes();
            }
            return th(1, arm + 1, leg) * th(-1, arm, leg + 1) * inverse(den);
        }
        auto th = [&](int eu, int a, int b) {
            const auto m = qt_monomial(*table, eu, a, b);
            const auto nat = table->natural(m);
            return theta_series(table, 1, nat, "p");
        };
        return th(1, arm + 1, leg) * th(-1, arm, leg + 1) * inverse(th(0, arm + 1, leg) * th(0, arm, leg + 1));
    }
};

// Memoised weights for one table; safe to share between threads.
class RhoCache
{
public:
    RhoCache(RhoSpec spec, VarTablePtr table) : spec_(std::move(spec)), table_(std::move(table)) {}

    const RhoSpec &spec() const noexcept
    {
        return spec_;
    }
    const VarTablePtr &table() const noexcept
    {
        return table_;
    }

    MultiSeries at_square(int arm, int leg)
    {
        const std::pair<int, int> key{arm, leg};
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) {
                return it->second;
            }
        }
        auto value = spec_.at_square(table_, arm, leg);
        std::lock_guard lock(mutex_);
        return cache_.emplace(key, std::move(value)).first->second;
    }

    MultiSeries at_hook(int h)
    {
        return at_square(h - 1, 0);
    }

private:
    RhoSpec spec_;
    VarTablePtr table_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, MultiSeries> cache_;
};

} // namespace hooklab

#endif
