#ifndef HOOKLAB_IDENTITIES_HPP
#define HOOKLAB_IDENTITIES_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <hooklab/elliptic.hpp>
#include <hooklab/partition_sum.hpp>
#include <hooklab/qseries.hpp>
#include <hooklab/rho.hpp>
#include <hooklab/series.hpp>
#include <hooklab/series_json.hpp>

namespace hooklab
{

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Status { PASS, FAIL, CONJECTURE_CONSISTENT, ERROR };

inline std::string_view status_name(Status s)
{
    switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::CONJECTURE_CONSISTENT: return "CONJECTURE-CONSISTENT";
    case Status::ERROR: return "ERROR";
    }
    return "?";
}

struct VerificationConfig {
    std::string id;
    std::optional<int> r;
    std::optional<Partition> core;
    std::optional<int> alpha, beta;
    std::map<std::string, int> caps;
    std::optional<RhoKind> rho;
    std::uint64_t seed = 0;
    std::optional<int> points;
};

// One LHS/RHS comparison inside a verification run.
struct Check {
    std::string label;
    bool ok = true;
    nlohmann::json mismatch; // null when ok
    std::size_t lhs_terms = 0, rhs_terms = 0;
};

struct IdentityReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::ERROR;
    nlohmann::json first_mismatch; // null unless FAIL
    std::string failed_check;
    std::string error;
    std::size_t lhs_terms = 0, rhs_terms = 0, checks = 0;
    long elapsed_ms = 0;
    bool conjecture = false;

    nlohmann::json to_json() const
    {
        return {{"identity", id}, {"params", params}, {"status", status_name(status)}, {"first_mismatch", first_mismatch},
                {"elapsed_ms", elapsed_ms}};
    }

    int exit_code() const
    {
        switch (status) {
        case Status::PASS:
        case Status::CONJECTURE_CONSISTENT: return 0;
        case Status::FAIL: return conjecture ? 2 : 1;
        case Status::ERROR: return 3;
        }
        return 3;
    }
};

// Resolved parameters handed to an identity's runner.
struct Context {
    int r = 1;
    Partition core;
    int alpha = 2, beta = 1;
    std::map<std::string, int> caps;
    std::optional<RhoKind> rho;
    std::uint64_t seed = 0;
    int points = 3;

    int cap(const std::string &v) const
    {
        auto it = caps.find(v);
        if (it == caps.end()) {
            throw ConfigError("missing cap for " + v);
        }
        return it->second;
    }
};

struct IdentityDescriptor {
    std::string id;
    std::string title;
    bool conjecture = false;
    std::set<std::string> params; // subset of r, core, alpha, beta, rho, seed, points
    std::map<std::string, int> caps;
    int r = 1;
    std::function<std::vector<Check>(const Context &)> run;
};

namespace detail
{

using Powers = std::initializer_list<std::pair<std::string_view, int>>;

inline Check compare_series(std::string label, const MultiSeries &lhs, const MultiSeries &rhs)
{
    Check c;
    c.label = std::move(label);
    c.lhs_terms = lhs.size();
    c.rhs_terms = rhs.size();
    if (auto mm = first_mismatch(lhs, rhs)) {
        c.ok = false;
        c.mismatch = {{"monomial", monomial_to_json(*lhs.table(), mm->monomial)},
                      {"lhs", mm->lhs.get_str()},
                      {"rhs", mm->rhs.get_str()}};
    }
    return c;
}

// Small wrapper over ProductBuilder taking monomials by name.
class Product
{
public:
    explicit Product(VarTablePtr table) : table_(table), b_(std::move(table)) {}

    Monomial m(Powers p) const
    {
        return table_->monomial(p);
    }
    Product &poch(const Monomial &a, const std::vector<Monomial> &bases, long e)
    {
        b_.pochhammer(1, a, bases, e);
        return *this;
    }
    // (a; bases)^e
    Product &poch(Powers a, std::vector<Monomial> bases, long e)
    {
        b_.pochhammer(1, m(a), bases, e);
        return *this;
    }
    Product &poch(Powers a, std::vector<Monomial> bases, const MultiSeries &e)
    {
        b_.pochhammer(1, m(a), bases, e);
        return *this;
    }
    // (a; a)^e
    Product &eta(Powers a, long e)
    {
        return poch(a, {m(a)}, e);
    }
    Product &exp_of(const MultiSeries &x)
    {
        b_.exp_of(x);
        return *this;
    }
    Product &times(const MultiSeries &x)
    {
        b_.times(x);
        return *this;
    }
    MultiSeries build()
    {
        return b_.build();
    }

private:
    VarTablePtr table_;
    ProductBuilder b_;
};

inline MultiSeries mono(const VarTablePtr &t, Powers p, const Rational &c = 1)
{
    return MultiSeries::term(t, t->monomial(p), c);
}

inline MultiSeries var(const VarTablePtr &t, std::string_view n)
{
    return MultiSeries::var(t, n);
}

inline VarTable::Builder builder_with(const Context &ctx, std::initializer_list<std::string> truncated)
{
    VarTable::Builder b;
    for (const auto &v : truncated) {
        b.truncated(v, ctx.cap(v));
    }
    return b;
}

// The (T^r;T^r)^r / (T;T) factor.
inline void cores_factor(Product &p, int r)
{
    p.eta({{"T", r}}, r).eta({{"T", 1}}, -1);
}

// Variables and table for a weight kind; truncated vars first.
inline VarTablePtr rho_table(const Context &ctx, RhoKind kind, bool with_s)
{
    VarTable::Builder b;
    b.truncated("T", ctx.cap("T"));
    if (with_s) {
        b.truncated("S", ctx.cap("S"));
    }
    switch (kind) {
    case RhoKind::CONST_Z:
    case RhoKind::NO:
    case RhoKind::Z_OVER_H: b.exact("z"); break;
    case RhoKind::INV_H_SQ: break;
    case RhoKind::Q_WEIGHT: b.truncated("q", ctx.cap("q")).exact("z").exact("u", true); break;
    case RhoKind::QT_WEIGHT: b.truncated("q", ctx.cap("q")).truncated("t", ctx.cap("t")).exact("u", true); break;
    case RhoKind::THETA_WEIGHT: b.truncated("p", ctx.cap("p")); break;
    }
    return b.build();
}

inline RhoSpec rho_spec(const Context &ctx, RhoKind kind)
{
    RhoSpec spec{kind, 1, std::nullopt};
    if (kind == RhoKind::THETA_WEIGHT) {
        spec.point = RationalPoint::from_seed(ctx.seed);
    }
    return spec;
}

// f_r(T) = sum_lambda T^{|lambda|} prod rho(r h) over all hooks (bottom_only
// = false) or over bottom hooks.
inline MultiSeries seed_series(const VarTablePtr &table, RhoCache &rho, int r, bool bottom_only)
{
    return sum_all(
        table, 1,
        [&](const Partition &lam) {
            MultiSeries w = MultiSeries::one(table);
            for_each_square(lam, [&](Square, HookStats hs) {
                if (!bottom_only || hs.leg == 0) {
                    w *= rho.at_hook(r * hs.hook);
                }
            });
            return w;
        },
        false);
}

inline MultiSeries at_st_r(const MultiSeries &f, int r)
{
    return substitute(f, "T", {{"S", 1}, {"T", r}});
}

inline MultiSeries z_power(const VarTablePtr &t, int k)
{
    return mono(t, {{"z", k}});
}

inline std::vector<Monomial> bases(const VarTablePtr &t, std::initializer_list<Powers> list)
{
    std::vector<Monomial> out;
    for (auto p : list) {
        out.push_back(t->monomial(p));
    }
    return out;
}

// exp(c * x / (1 - x)) with x a monomial series.
inline MultiSeries geometric_exponent(const MultiSeries &x, const Rational &c)
{
    return (c * x) * inverse(1 - x);
}

inline std::vector<Check> one(Check c)
{
    return {std::move(c)};
}

// ---------------------------------------------------------------------------

inline std::vector<IdentityDescriptor> build_registry()
{
    std::vector<IdentityDescriptor> reg;
    auto add = [&](IdentityDescriptor d) { reg.push_back(std::move(d)); };

    add({"GF_PART", "sum z^l(lambda) T^|lambda| = 1/(zT;T)", false, {}, {{"T", 12}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) { return z_power(tb, static_cast<int>(lam.length())); });
             Product p(tb);
             p.poch({{"z", 1}, {"T", 1}}, {p.m({{"T", 1}})}, -1);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"GF_RKERNELS", "sum over r-kernels z^lambda_1 T^|lambda| = (z^r T^r;T^r)/(zT;T)", false, {"r"}, {{"T", 12}}, 2,
         [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) {
                 return is_r_kernel(lam, r) ? z_power(tb, lam.largest()) : MultiSeries(tb);
             });
             Product p(tb);
             p.poch({{"z", r}, {"T", r}}, {p.m({{"T", r}})}, 1).poch({{"z", 1}, {"T", 1}}, {p.m({{"T", 1}})}, -1);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"GF_FIXED_CORE", "sum over core_r(lambda) = omega of T^|lambda| = T^|omega|/(T^r;T^r)^r", false, {"r", "core"},
         {{"T", 14}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T"}).build();
             const int n_cap = std::max(0, (ctx.cap("T") - ctx.core.size()) / r);
             const auto parts = partitions_with_core(ctx.core, r, n_cap);
             auto lhs = parallel_sum(
                 tb, parts, [&](const Partition &lam) { return tb->monomial({{"T", lam.size()}}); },
                 [&](const Partition &) { return MultiSeries::one(tb); });
             Product p(tb);
             p.eta({{"T", r}}, -r);
             auto rhs = p.build().mul_term(tb->monomial({{"T", ctx.core.size()}}));
             return one(compare_series("main", lhs, rhs));
         }});

    add({"GF_CORES", "sum over r-cores T^|omega| = (T^r;T^r)^r/(T;T)", false, {"r"}, {{"T", 10}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T"}).build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) {
                 return is_r_core(lam, r) ? MultiSeries::one(tb) : MultiSeries(tb);
             });
             Product p(tb);
             cores_factor(p, r);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"GF_KERNELS_FIXED_CORE", "sum over r-kernels with core omega of T^|mu| = T^|omega|/(T^r;T^r)^(r-1)", false,
         {"r", "core"}, {{"T", 14}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T"}).build();
             const int n_cap = std::max(0, (ctx.cap("T") - ctx.core.size()) / r);
             const auto parts = partitions_with_core(ctx.core, r, n_cap);
             auto lhs = parallel_sum(
                 tb, parts, [&](const Partition &lam) { return tb->monomial({{"T", lam.size()}}); },
                 [&](const Partition &lam) { return is_r_kernel(lam, r) ? MultiSeries::one(tb) : MultiSeries(tb); });
             Product p(tb);
             p.eta({{"T", r}}, -(r - 1));
             auto rhs = p.build().mul_term(tb->monomial({{"T", ctx.core.size()}}));
             return one(compare_series("main", lhs, rhs));
         }});

    add({"FRT_SQUARE", "sum T^n (f^lambda/n!)^2 = e^T, i.e. sum (f^lambda)^2 = n!", false, {}, {{"T", 12}}, 1,
         [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) {
                 Rational x(count_syt(lam), factorial(static_cast<unsigned>(lam.size())));
                 x.canonicalize();
                 return MultiSeries::constant(tb, x * x);
             });
             return one(compare_series("main", lhs, exp_series(var(tb, "T"))));
         }});

    add({"HOOK_EXP", "sum T^|lambda| prod 1/h^2 = e^T", false, {}, {{"T", 10}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::INV_H_SQ}, HookDomain::ALL_MOD_R);
             return one(compare_series("main", lhs, exp_series(var(tb, "T"))));
         }});

    add({"HOOK_EXP_MOD", "sum T^|lambda| prod_{H_r} S/h^2 = e^{S T^r/r} (T^r;T^r)^r/(T;T)", false, {"r"},
         {{"T", 10}, {"S", 5}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "S"}).build();
             auto lhs = sum_all(tb, r, RhoSpec{RhoKind::INV_H_SQ}, HookDomain::ALL_MOD_R);
             Product p(tb);
             cores_factor(p, r);
             p.exp_of(mono(tb, {{"S", 1}, {"T", r}}, make_rational(1, r)));
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"NO", "sum T^|lambda| prod (1 - z/h^2) = (T;T)^(z-1)", false, {}, {{"T", 10}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::NO}, HookDomain::ALL_MOD_R);
             return one(compare_series("main", lhs, eta_power(tb, "T", var(tb, "z") - 1)));
         }});

    add({"NO_MOD",
         "sum T^|lambda| S^|H_r| prod_{H_r} (1 - r z/h^2) = (T^r;T^r)^r/(T;T) (ST^r;ST^r)^(z-r)  (z stands for z/r)",
         false, {"r"}, {{"T", 9}, {"S", 3}}, 3, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "S"}).exact("z").build();
             auto lhs = sum_all(tb, r, RhoSpec{RhoKind::NO, Rational(r)}, HookDomain::ALL_MOD_R);
             Product p(tb);
             cores_factor(p, r);
             const auto st = p.m({{"S", 1}, {"T", r}});
             p.poch({{"S", 1}, {"T", r}}, {st}, var(tb, "z") - r);
             return one(compare_series("main", lhs, p.build()));
         }});

    // Generic multiplication theorems, one weight kind per run.
    auto rho_kind = [](const Context &ctx) { return ctx.rho.value_or(RhoKind::NO); };
    const std::map<std::string, int> mult_caps{{"T", 6}, {"S", 6}, {"q", 3}, {"t", 3}, {"p", 1}};

    add({"HANJI_MULT", "sum T^|lambda| S^|H_r| prod_{H_r} rho(h) = (T^r;T^r)^r/(T;T) f_r(ST^r)^r", false,
         {"r", "rho", "seed"}, mult_caps, 2, [rho_kind](const Context &ctx) {
             const int r = ctx.r;
             const auto kind = rho_kind(ctx);
             auto tb = rho_table(ctx, kind, true);
             RhoCache rho(rho_spec(ctx, kind), tb);
             auto lhs = sum_all(tb, r, [&](const Partition &lam) { return weight_product(lam, rho, r, HookDomain::ALL_MOD_R); });
             auto f = seed_series(tb, rho, r, false);
             Product p(tb);
             cores_factor(p, r);
             p.times(pow(at_st_r(f, r), r));
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"HANJI_MOD", "sum over core omega of T^((|lambda|-|omega|)/r) prod_{H_r} rho(h) = f_r(T)^r", false,
         {"r", "core", "rho", "seed"}, mult_caps, 2, [rho_kind](const Context &ctx) {
             const int r = ctx.r;
             const auto kind = rho_kind(ctx);
             auto tb = rho_table(ctx, kind, false);
             RhoCache rho(rho_spec(ctx, kind), tb);
             auto lhs = sum_fixed_core(tb, ctx.core, r,
                                       [&](const Partition &lam) { return weight_product(lam, rho, r, HookDomain::ALL_MOD_R); });
             auto f = seed_series(tb, rho, r, false);
             return one(compare_series("main", lhs, pow(f, r)));
         }});

    add({"MULT_NEW", "sum over core omega of T^((|lambda|-|omega|)/r) prod_{H^b_r} rho(h) = f_r(T)/(T;T)^(r-1)", false,
         {"r", "core", "rho", "seed"}, mult_caps, 2, [rho_kind](const Context &ctx) {
             const int r = ctx.r;
             const auto kind = rho_kind(ctx);
             auto tb = rho_table(ctx, kind, false);
             RhoCache rho(rho_spec(ctx, kind), tb);
             auto lhs = sum_fixed_core(
                 tb, ctx.core, r, [&](const Partition &lam) { return weight_product(lam, rho, r, HookDomain::BOTTOM_MOD_R); });
             Product p(tb);
             p.eta({{"T", 1}}, -(r - 1)).times(seed_series(tb, rho, r, true));
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"MULT_NEW2",
         "sum T^|lambda| S^|H_r| prod_{H^b_r} rho(h) = (T^r;T^r)^r/((T;T)(ST^r;ST^r)^(r-1)) f_r(ST^r)", false,
         {"r", "rho", "seed"}, mult_caps, 2, [rho_kind](const Context &ctx) {
             const int r = ctx.r;
             const auto kind = rho_kind(ctx);
             auto tb = rho_table(ctx, kind, true);
             RhoCache rho(rho_spec(ctx, kind), tb);
             auto lhs = sum_all(tb, r, [&](const Partition &lam) { return weight_product(lam, rho, r, HookDomain::BOTTOM_MOD_R); });
             Product p(tb);
             cores_factor(p, r);
             p.eta({{"S", 1}, {"T", r}}, -(r - 1)).times(at_st_r(seed_series(tb, rho, r, true), r));
             return one(compare_series("main", lhs, p.build()));
         }});

    // z counts |H^b_r| or l_r.
    auto stat_a = [](bool length) {
        return [length](const Context &ctx) {
            const int r = ctx.r;
            auto tb = builder_with(ctx, {"T"}).exact("z").build();
            auto lhs = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) {
                return z_power(tb, length ? modular_length(lam, r) : bottom_hooks_mod(lam, r).total());
            });
            Product p(tb);
            p.poch({{"z", 1}, {"T", 1}}, {p.m({{"T", 1}})}, -1).eta({{"T", 1}}, -(r - 1));
            return one(compare_series("main", lhs, p.build()));
        };
    };
    auto stat_b = [](bool length) {
        return [length](const Context &ctx) {
            const int r = ctx.r;
            auto tb = builder_with(ctx, {"T", "S"}).exact("z").build();
            auto lhs = sum_all(tb, r, [&](const Partition &lam) {
                return z_power(tb, length ? modular_length(lam, r) : bottom_hooks_mod(lam, r).total());
            });
            Product p(tb);
            cores_factor(p, r);
            const auto st = p.m({{"S", 1}, {"T", r}});
            p.poch({{"z", 1}, {"S", 1}, {"T", r}}, {st}, -1).eta({{"S", 1}, {"T", r}}, -(r - 1));
            return one(compare_series("main", lhs, p.build()));
        };
    };
    add({"APP_CONST_A", "sum over core omega of T^((|lambda|-|omega|)/r) z^|H^b_r| = 1/((zT;T)(T;T)^(r-1))", false,
         {"r", "core"}, {{"T", 6}}, 3, stat_a(false)});
    add({"APP_CONST_B", "sum T^|lambda| S^|H_r| z^|H^b_r| = (T^r;T^r)^r/((T;T)(zST^r;ST^r)(ST^r;ST^r)^(r-1))", false, {"r"},
         {{"T", 12}, {"S", 6}}, 2, stat_b(false)});
    add({"APP_LEN_A", "sum over core omega of T^((|lambda|-|omega|)/r) z^l_r = 1/((zT;T)(T;T)^(r-1))", false,
         {"r", "core"}, {{"T", 6}}, 3, stat_a(true)});
    add({"APP_LEN_B", "sum T^|lambda| S^|H_r| z^l_r = (T^r;T^r)^r/((T;T)(zST^r;ST^r)(ST^r;ST^r)^(r-1))", false, {"r"},
         {{"T", 12}, {"S", 6}}, 2, stat_b(true)});

    add({"INVOLUTION", "sum T^|lambda| prod 1/h = exp(T + T^2/2)", false, {}, {{"T", 12}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) {
                 mpz_class prod = 1;
                 for_each_square(lam, [&](Square, HookStats hs) { prod *= hs.hook; });
                 return MultiSeries::constant(tb, Rational(1) / Rational(prod));
             });
             auto rhs = exp_series(var(tb, "T") + mono(tb, {{"T", 2}}, make_rational(1, 2)));
             return one(compare_series("main", lhs, rhs));
         }});

    add({"EXP_BOTTOM", "sum T^|lambda| prod_{H^b} z/h = exp(zT/(1-T))", false, {}, {{"T", 10}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::Z_OVER_H}, HookDomain::BOTTOM_MOD_R);
             auto rhs = exp_series(var(tb, "z") * geometric_exponent(var(tb, "T"), 1));
             return one(compare_series("main", lhs, rhs));
         }});

    auto right_inverse_hooks = [](const VarTablePtr &tb, const Partition &lam, int r) {
        mpz_class prod = 1;
        for (int h : right_hooks_mod(lam, r).values()) {
            prod *= h;
        }
        return z_power(tb, modular_length(lam, r)) * (Rational(1) / Rational(prod));
    };
    add({"EXP_BOTTOM_MOD_A",
         "sum over core omega of T^((|lambda|-|omega|)/r) z^l_r prod_{H^r_r} 1/h = exp(zT/(r(1-T)))/(T;T)^(r-1)", false,
         {"r", "core"}, {{"T", 6}}, 2, [right_inverse_hooks](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) { return right_inverse_hooks(tb, lam, r); });
             Product p(tb);
             p.eta({{"T", 1}}, -(r - 1)).exp_of(var(tb, "z") * geometric_exponent(var(tb, "T"), make_rational(1, r)));
             return one(compare_series("main", lhs, p.build()));
         }});
    add({"EXP_BOTTOM_MOD_B",
         "sum T^|lambda| S^|H_r| z^l_r prod_{H^r_r} 1/h = (T^r;T^r)^r/((T;T)(ST^r;ST^r)^(r-1)) exp(zST^r/(r(1-ST^r)))",
         false, {"r"}, {{"T", 10}, {"S", 5}}, 2, [right_inverse_hooks](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "S"}).exact("z").build();
             auto lhs = sum_all(tb, r, [&](const Partition &lam) { return right_inverse_hooks(tb, lam, r); });
             Product p(tb);
             cores_factor(p, r);
             p.eta({{"S", 1}, {"T", r}}, -(r - 1))
                 .exp_of(var(tb, "z") * geometric_exponent(mono(tb, {{"S", 1}, {"T", r}}), make_rational(1, r)));
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"Q_BOTTOM", "sum T^|lambda| prod_{H^b} z(1-uq^h)/(1-q^h) = (uzqT;q,T)/(zT;q,T)", false, {}, {{"T", 8}, {"q", 8}}, 1,
         [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T", "q"}).exact("z").exact("u", true).build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::Q_WEIGHT}, HookDomain::BOTTOM_MOD_R);
             Product p(tb);
             const auto qT = bases(tb, {{{"q", 1}}, {{"T", 1}}});
             p.poch({{"u", 1}, {"z", 1}, {"q", 1}, {"T", 1}}, qT, 1).poch({{"z", 1}, {"T", 1}}, qT, -1);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"AMDEBERHAN_T", "sum T^|lambda| t^|H^b| prod_{H^b} (1 - z/h) = (tT;T)^(z-1)", false, {}, {{"T", 10}}, 1,
         [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T"}).exact("t").exact("z").build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) {
                 const auto hb = bottom_hooks_mod(lam, 1).values();
                 MultiSeries w = mono(tb, {{"t", static_cast<int>(hb.size())}});
                 for (int h : hb) {
                     w *= 1 - var(tb, "z") * make_rational(1, h);
                 }
                 return w;
             });
             Product p(tb);
             p.poch({{"t", 1}, {"T", 1}}, {p.m({{"T", 1}})}, var(tb, "z") - 1);
             return one(compare_series("main", lhs, p.build()));
         }});

    auto unify_term = [](const VarTablePtr &tb, const Partition &lam, int r) {
        MultiSeries w = z_power(tb, modular_length(lam, r));
        for (int h : right_hooks_mod(lam, r).values()) {
            w *= (1 - mono(tb, {{"u", 1}, {"q", h}})) * inverse(1 - mono(tb, {{"q", h}}));
        }
        return w;
    };
    add({"UNIFY_A",
         "sum over core omega of T^((|lambda|-|omega|)/r) z^l_r prod_{H^r_r} (1-uq^h)/(1-q^h) = "
         "(uzq^rT;q^r,T)/((T;T)^(r-1)(zT;q^r,T))",
         false, {"r", "core"}, {{"T", 5}, {"q", 8}}, 2, [unify_term](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "q"}).exact("z").exact("u", true).build();
             auto lhs = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) { return unify_term(tb, lam, r); });
             Product p(tb);
             const auto b = bases(tb, {{{"q", r}}, {{"T", 1}}});
             p.poch({{"u", 1}, {"z", 1}, {"q", r}, {"T", 1}}, b, 1).eta({{"T", 1}}, -(r - 1)).poch({{"z", 1}, {"T", 1}}, b, -1);
             return one(compare_series("main", lhs, p.build()));
         }});
    add({"UNIFY_B",
         "sum T^|lambda| S^|H_r| z^l_r prod_{H^r_r} (1-uq^h)/(1-q^h) = "
         "(T^r;T^r)^r (uzq^rST^r;q^r,ST^r)/((T;T)(ST^r;ST^r)^(r-1)(zST^r;q^r,ST^r))",
         false, {"r"}, {{"T", 8}, {"S", 4}, {"q", 8}}, 2, [unify_term](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "S", "q"}).exact("z").exact("u", true).build();
             auto lhs = sum_all(tb, r, [&](const Partition &lam) { return unify_term(tb, lam, r); });
             Product p(tb);
             cores_factor(p, r);
             const auto b = bases(tb, {{{"q", r}}, {{"S", 1}, {"T", r}}});
             p.poch({{"u", 1}, {"z", 1}, {"q", r}, {"S", 1}, {"T", r}}, b, 1)
                 .eta({{"S", 1}, {"T", r}}, -(r - 1))
                 .poch({{"z", 1}, {"S", 1}, {"T", r}}, b, -1);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"QT_T0_PAIR",
         "fixed core omega: prod over l(s)=0, r|h of (1-uq^{a+1})/(1-q^{a+1}) = (uq^rT;q^r,T)/((T;T)^r(q^rT;q^r,T)), "
         "and the a(s)=0 analogue in t, u^-1",
         false, {"r", "core"}, {{"T", 5}, {"q", 6}, {"t", 6}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "q", "t"}).exact("u", true).build();
             auto lhs_q = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) {
                 MultiSeries w = MultiSeries::one(tb);
                 for_each_square(lam, [&](Square, HookStats hs) {
                     if (hs.hook % r == 0 && hs.leg == 0) {
                         w *= (1 - mono(tb, {{"u", 1}, {"q", hs.arm + 1}})) * inverse(1 - mono(tb, {{"q", hs.arm + 1}}));
                     }
                 });
                 return w;
             });
             auto lhs_t = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) {
                 MultiSeries w = MultiSeries::one(tb);
                 for_each_square(lam, [&](Square, HookStats hs) {
                     if (hs.hook % r == 0 && hs.arm == 0) {
                         w *= (1 - mono(tb, {{"u", -1}, {"t", hs.leg + 1}})) * inverse(1 - mono(tb, {{"t", hs.leg + 1}}));
                     }
                 });
                 return w;
             });
             Product pq(tb), pt(tb);
             const auto bq = bases(tb, {{{"q", r}}, {{"T", 1}}});
             const auto bt = bases(tb, {{{"t", r}}, {{"T", 1}}});
             pq.poch({{"u", 1}, {"q", r}, {"T", 1}}, bq, 1).eta({{"T", 1}}, -r).poch({{"q", r}, {"T", 1}}, bq, -1);
             pt.poch({{"u", -1}, {"t", r}, {"T", 1}}, bt, 1).eta({{"T", 1}}, -r).poch({{"t", r}, {"T", 1}}, bt, -1);
             return std::vector<Check>{compare_series("q-side", lhs_q, pq.build()), compare_series("t-side", lhs_t, pt.build())};
         }});

    add({"QNO_MOD",
         "sum over core omega of T^((|lambda|-|omega|)/r) prod_{H_r} (1-uq^h)(1-u^-1 q^h)/(1-q^h)^2 = "
         "((uq^rT,u^-1 q^rT;q^r,q^r,T)/(T,q^{2r}T;q^r,q^r,T))^r",
         false, {"r", "core"}, {{"T", 5}, {"q", 8}}, 2, [](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "q"}).exact("u", true).build();
             auto lhs = sum_fixed_core(tb, ctx.core, r, RhoSpec{RhoKind::QT_WEIGHT}, HookDomain::ALL_MOD_R);
             Product p(tb);
             const auto b = bases(tb, {{{"q", r}}, {{"q", r}}, {{"T", 1}}});
             p.poch({{"u", 1}, {"q", r}, {"T", 1}}, b, r).poch({{"u", -1}, {"q", r}, {"T", 1}}, b, r);
             p.poch({{"T", 1}}, b, -r).poch({{"q", 2 * r}, {"T", 1}}, b, -r);
             return one(compare_series("main", lhs, p.build()));
         }});

    add({"QT_NO", "sum T^|lambda| prod_s (q,t square weight) = (uqT,u^-1 tT;q,t,T)/(T,qtT;q,t,T)", false, {},
         {{"T", 6}, {"q", 6}, {"t", 6}}, 1, [](const Context &ctx) {
             auto tb = builder_with(ctx, {"T", "q", "t"}).exact("u", true).build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::QT_WEIGHT}, HookDomain::SQUARES_MOD_R);
             Product p(tb);
             const auto b = bases(tb, {{{"q", 1}}, {{"t", 1}}, {{"T", 1}}});
             p.poch({{"u", 1}, {"q", 1}, {"T", 1}}, b, 1).poch({{"u", -1}, {"t", 1}, {"T", 1}}, b, 1);
             p.poch({{"T", 1}}, b, -1).poch({{"q", 1}, {"t", 1}, {"T", 1}}, b, -1);
             return one(compare_series("main", lhs, p.build()));
         }});

    // The two product forms of the modular q,t-conjecture with X = ST^r (all
    // partitions) or X = T (fixed core).
    auto conj_forms = [](const VarTablePtr &tb, int r, Powers x, const std::function<void(Product &)> &prefactor) {
        const int cq = tb->cap(tb->require("q")), ct = tb->cap(tb->require("t"));
        auto with = [&](Powers extra) {
            std::vector<std::pair<std::string_view, int>> v(x.begin(), x.end());
            v.insert(v.end(), extra.begin(), extra.end());
            return v;
        };
        auto poch = [&](Product &p, Powers extra, const std::vector<Monomial> &b, long e) {
            std::vector<int> nat(tb->size(), 0);
            for (auto [n, k] : with(extra)) {
                nat[tb->require(n)] += k;
            }
            p.poch(tb->from_natural(nat), b, e);
        };
        const auto xm = tb->monomial(x);
        Product f1(tb), f2(tb);
        prefactor(f1);
        prefactor(f2);
        const std::vector<Monomial> bx{xm};
        for (int i = 1; i <= cq + 1; ++i) {
            for (int j = 1; j <= ct + 1; ++j) {
                if (((i + j - 1) % r) != 0) {
                    continue;
                }
                poch(f1, {{"u", 1}, {"q", i}, {"t", j - 1}}, bx, 1);
                poch(f1, {{"u", -1}, {"q", i - 1}, {"t", j}}, bx, 1);
                poch(f1, {{"q", i}, {"t", j - 1}}, bx, -1);
                poch(f1, {{"q", i - 1}, {"t", j}}, bx, -1);
            }
        }
        const std::vector<Monomial> b2{tb->monomial({{"q", r}}), tb->monomial({{"t", r}}), xm};
        for (int i = 1; i <= r; ++i) {
            poch(f2, {{"u", 1}, {"q", i}, {"t", r - i}}, b2, 1);
            poch(f2, {{"u", -1}, {"q", r - i}, {"t", i}}, b2, 1);
            poch(f2, {{"q", i}, {"t", r - i}}, b2, -1);
            poch(f2, {{"q", r - i}, {"t", i}}, b2, -1);
        }
        return std::pair{f1.build(), f2.build()};
    };

    add({"CONJ_QT_MOD",
         "sum T^|lambda| S^|H_r| prod_{r|h} (q,t square weight) = (T^r;T^r)^r/((T;T)(ST^r;ST^r)^r) prod_{i+j=1 mod r} ...",
         true, {"r"}, {{"T", 6}, {"S", 3}, {"q", 5}, {"t", 5}}, 2, [conj_forms](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "S", "q", "t"}).exact("u", true).build();
             auto lhs = sum_all(tb, r, RhoSpec{RhoKind::QT_WEIGHT}, HookDomain::SQUARES_MOD_R);
             auto [f1, f2] = conj_forms(tb, r, {{"S", 1}, {"T", r}}, [&](Product &p) {
                 cores_factor(p, r);
                 p.eta({{"S", 1}, {"T", r}}, -r);
             });
             return std::vector<Check>{compare_series("forms agree", f1, f2), compare_series("first form", lhs, f1),
                                       compare_series("second form", lhs, f2)};
         }});

    add({"CONJ_QT_MOD_CORE",
         "sum over core omega of T^((|lambda|-|omega|)/r) prod_{r|h} (q,t square weight) = 1/(T;T)^r prod ...", true,
         {"r", "core"}, {{"T", 5}, {"q", 4}, {"t", 4}}, 2, [conj_forms](const Context &ctx) {
             const int r = ctx.r;
             auto tb = builder_with(ctx, {"T", "q", "t"}).exact("u", true).build();
             auto lhs = sum_fixed_core(tb, ctx.core, r, RhoSpec{RhoKind::QT_WEIGHT}, HookDomain::SQUARES_MOD_R);
             auto [f1, f2] = conj_forms(tb, r, {{"T", 1}}, [&](Product &p) { p.eta({{"T", 1}}, -r); });
             return std::vector<Check>{compare_series("forms agree", f1, f2), compare_series("first form", lhs, f1),
                                       compare_series("second form", lhs, f2)};
         }});

    add({"ELLIPTIC_OMEGA",
         "f_{omega;r,n}(u;q,t;p) does not depend on the r-core omega (|omega| <= 4); with quasi-periodicity and the n = 2 "
         "three-term cancellation",
         true, {"r", "seed", "points"}, {{"T", 3}, {"p", 2}}, 2, [](const Context &ctx) {
             const int r = ctx.r, n_cap = ctx.cap("T"), p_cap = ctx.cap("p");
             std::vector<Check> out;
             const auto cores = enumerate_r_cores(r, 4);
             auto series_check = [&](std::string label, const PSeries &a, const PSeries &b, int n) {
                 Check c;
                 c.label = std::move(label);
                 c.lhs_terms = c.rhs_terms = static_cast<std::size_t>(p_cap + 1);
                 for (int k = std::min(a.valuation(), b.valuation()); k <= p_cap; ++k) {
                     if (a.coeff(k) != b.coeff(k)) {
                         c.ok = false;
                         c.mismatch = {{"monomial", {{"T", n}, {"p", k}}}, {"lhs", a.coeff(k).get_str()}, {"rhs", b.coeff(k).get_str()}};
                         break;
                     }
                 }
                 return c;
             };
             for (int k = 0; k < ctx.points; ++k) {
                 auto pt = RationalPoint::from_seed(ctx.seed + static_cast<std::uint64_t>(k));
                 for (int attempt = 0;; ++attempt) {
                     try {
                         std::vector<Check> local;
                         for (int n = 0; n <= n_cap; ++n) {
                             const auto base = f_omega_rn(Partition(), r, n, pt, p_cap);
                             for (const auto &omega : cores) {
                                 if (omega.size() == 0) {
                                     continue;
                                 }
                                 local.push_back(series_check("omega " + omega.to_string() + " n " + std::to_string(n) + " at " + pt.to_string(),
                                                              f_omega_rn(omega, r, n, pt, p_cap), base, n));
                             }
                             auto qp = quasi_periodicity_check(Partition(), r, n, pt, p_cap);
                             Check c;
                             c.label = "quasi-periodicity n " + std::to_string(n) + " at " + pt.to_string();
                             c.ok = qp.ok;
                             if (!qp.ok) {
                                 c.mismatch = {{"monomial", {{"T", n}}}, {"lhs", qp.detail}, {"rhs", ""}};
                             }
                             local.push_back(c);
                         }
                         if (r >= 2 && n_cap >= 2) {
                             const auto t = n_two_terms(r, pt, p_cap);
                             local.push_back(series_check("t1+t2+t3 at " + pt.to_string(), t.t1 + t.t2 + t.t3, PSeries::constant(0, p_cap), 2));
                             local.push_back(series_check("t1 at " + pt.to_string(), t.t1, t.diff1, 2));
                             local.push_back(series_check("t2 at " + pt.to_string(), t.t2, t.diff2, 2));
                             local.push_back(series_check("t3 at " + pt.to_string(), t.t3, t.diff3, 2));
                         }
                         out.insert(out.end(), local.begin(), local.end());
                         break;
                     } catch (const DenominatorVanishes &) {
                         if (attempt >= 10) {
                             throw;
                         }
                         pt = pt.redraw();
                     }
                 }
             }
             return out;
         }});

    add({"ENO", "elliptic q,t square weights summed over all partitions = (uqT,u^-1 tT;q,t,T)/(T,qtT;q,t,T) x C-table product",
         false, {}, {{"T", 4}, {"p", 1}, {"q", 4}, {"t", 4}}, 1, [](const Context &ctx) {
             const int cap_t = ctx.cap("T");
             auto tb = VarTable::Builder()
                           .truncated("T", cap_t)
                           .truncated("p", ctx.cap("p"))
                           .truncated("q", ctx.cap("q"))
                           .truncated("t", ctx.cap("t"))
                           .grade("q", "p", cap_t)
                           .grade("t", "p", cap_t)
                           .exact("u", true)
                           .build();
             auto lhs = sum_all(tb, 1, RhoSpec{RhoKind::THETA_WEIGHT}, HookDomain::SQUARES_MOD_R);
             return one(compare_series("main", lhs, eno_rhs(tb)));
         }});

    add({"PQ_NO",
         "sum T^|lambda| S^|H_r| prod_{H_r} theta(uq^h)theta(u^-1 q^h)/theta(q^h)^2 = modular p,q-NO product", false, {"r"},
         {{"T", 5}, {"S", 5}, {"p", 1}, {"q", 5}}, 1, [](const Context &ctx) {
             const int r = ctx.r, cap_t = ctx.cap("T");
             auto tb = VarTable::Builder()
                           .truncated("T", cap_t)
                           .truncated("S", ctx.cap("S"))
                           .truncated("p", ctx.cap("p"))
                           .truncated("q", ctx.cap("q"))
                           .grade("q", "p", 2 * cap_t)
                           .exact("u", true)
                           .build();
             auto lhs = sum_all(tb, r, RhoSpec{RhoKind::THETA_WEIGHT}, HookDomain::ALL_MOD_R);
             return one(compare_series("main", lhs, pq_no_rhs(tb, r)));
         }});

    add({"BF_GF", "sum T^|lambda| z^BF_{a,b}(lambda) = (T^r;T^r)/((T;T)(zT^r;T^r)), r = a + b", false, {"alpha", "beta"},
         {{"T", 12}}, 3, [](const Context &ctx) {
             const int a = ctx.alpha, b = ctx.beta, r = a + b;
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_all(tb, 1, [&](const Partition &lam) { return z_power(tb, bf_stat(lam, a, b)); });
             Product p(tb);
             p.eta({{"T", r}}, 1).eta({{"T", 1}}, -1).poch({{"z", 1}, {"T", r}}, {p.m({{"T", r}})}, -1);
             return one(compare_series("main", lhs, p.build()));
         }});
    add({"BF_FIXED_A",
         "sum over (a+b)-core omega of T^((|lambda|-|omega|)/r) z^BF_{a,b}(lambda) = 1/((zT;T)(T;T)^(r-1))", false,
         {"alpha", "beta", "core"}, {{"T", 5}}, 3, [](const Context &ctx) {
             const int a = ctx.alpha, b = ctx.beta, r = a + b;
             auto tb = builder_with(ctx, {"T"}).exact("z").build();
             auto lhs = sum_fixed_core(tb, ctx.core, r, [&](const Partition &lam) { return z_power(tb, bf_stat(lam, a, b)); });
             Product p(tb);
             p.poch({{"z", 1}, {"T", 1}}, {p.m({{"T", 1}})}, -1).eta({{"T", 1}}, -(r - 1));
             return one(compare_series("main", lhs, p.build()));
         }});
    add({"BF_FIXED_B",
         "sum T^|lambda| S^|H_r| z^BF_{a,b}(lambda) = (T^r;T^r)^r/((T;T)(zST^r;ST^r)(ST^r;ST^r)^(r-1))", false,
         {"alpha", "beta"}, {{"T", 12}, {"S", 4}}, 3, [](const Context &ctx) {
             const int a = ctx.alpha, b = ctx.beta, r = a + b;
             auto tb = builder_with(ctx, {"T", "S"}).exact("z").build();
             auto lhs = sum_all(tb, r, [&](const Partition &lam) { return z_power(tb, bf_stat(lam, a, b)); });
             Product p(tb);
             cores_factor(p, r);
             const auto st = p.m({{"S", 1}, {"T", r}});
             p.poch({{"z", 1}, {"S", 1}, {"T", r}}, {st}, -1).eta({{"S", 1}, {"T", r}}, -(r - 1));
             return one(compare_series("main", lhs, p.build()));
         }});

    return reg;
}

} // namespace detail

inline const std::vector<IdentityDescriptor> &registry()
{
    static const std::vector<IdentityDescriptor> reg = detail::build_registry();
    return reg;
}

inline const IdentityDescriptor *find_identity(std::string_view id)
{
    for (const auto &d : registry()) {
        if (d.id == id) {
            return &d;
        }
    }
    return nullptr;
}

// Resolves defaults and validates a configuration against its descriptor.
inline Context resolve(const IdentityDescriptor &d, const VerificationConfig &cfg)
{
    auto reject = [&](const std::string &what) {
        if (!d.params.contains(what)) {
            throw ConfigError(d.id + " does not take " + what);
        }
    };
    Context ctx;
    ctx.r = d.r;
    if (cfg.r) {
        reject("r");
        if (*cfg.r < 1) {
            throw ConfigError("r must be positive");
        }
        ctx.r = *cfg.r;
    }
    if (cfg.alpha || cfg.beta) {
        reject("alpha");
    }
    if (d.params.contains("alpha")) {
        ctx.alpha = cfg.alpha.value_or(2);
        ctx.beta = cfg.beta.value_or(1);
        if (ctx.alpha < 1 || ctx.beta < 0) {
            throw ConfigError("alpha must be >= 1 and beta >= 0");
        }
        ctx.r = ctx.alpha + ctx.beta;
    }
    if (cfg.core) {
        reject("core");
        ctx.core = *cfg.core;
    }
    if (d.params.contains("core") && !is_r_core(ctx.core, ctx.r)) {
        throw ConfigError("not-an-r-core: " + ctx.core.to_string() + " for r = " + std::to_string(ctx.r));
    }
    if (cfg.rho) {
        reject("rho");
        ctx.rho = cfg.rho;
    }
    if (cfg.points) {
        reject("points");
        if (*cfg.points < 1) {
            throw ConfigError("points must be positive");
        }
        ctx.points = *cfg.points;
    }
    ctx.seed = cfg.seed;
    ctx.caps = d.caps;
    for (const auto &[v, c] : cfg.caps) {
        if (!d.caps.contains(v)) {
            throw ConfigError(d.id + " has no variable " + v);
        }
        if (c < 0 || (c == 0 && v == "T")) {
            throw ConfigError("cap for " + v + " must be positive");
        }
        ctx.caps[v] = c;
    }
    return ctx;
}

inline nlohmann::json params_json(const IdentityDescriptor &d, const Context &ctx)
{
    nlohmann::json p = nlohmann::json::object();
    if (d.params.contains("r") || d.params.contains("alpha")) {
        p["r"] = ctx.r;
    }
    if (d.params.contains("alpha")) {
        p["alpha"] = ctx.alpha;
        p["beta"] = ctx.beta;
    }
    if (d.params.contains("core")) {
        p["core"] = ctx.core.part_vector();
    }
    if (d.params.contains("rho")) {
        p["rho"] = rho_name(ctx.rho.value_or(RhoKind::NO));
    }
    if (d.params.contains("seed")) {
        p["seed"] = ctx.seed;
    }
    if (d.params.contains("points")) {
        p["points"] = ctx.points;
    }
    p["caps"] = ctx.caps;
    return p;
}

inline IdentityReport verify(const VerificationConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.id = cfg.id;
    auto finish = [&]() {
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        return rep;
    };
    const auto *d = find_identity(cfg.id);
    if (!d) {
        rep.error = "unknown identity " + cfg.id;
        return finish();
    }
    rep.conjecture = d->conjecture;
    try {
        const Context ctx = resolve(*d, cfg);
        rep.params = params_json(*d, ctx);
        const auto checks = d->run(ctx);
        rep.checks = checks.size();
        rep.status = d->conjecture ? Status::CONJECTURE_CONSISTENT : Status::PASS;
        for (const auto &c : checks) {
            rep.lhs_terms += c.lhs_terms;
            rep.rhs_terms += c.rhs_terms;
            if (!c.ok && rep.status != Status::FAIL) {
                rep.status = Status::FAIL;
                rep.first_mismatch = c.mismatch;
                rep.failed_check = c.label;
            }
        }
    } catch (const std::exception &e) {
        rep.status = Status::ERROR;
        rep.first_mismatch = nullptr;
        rep.error = e.what();
    }
    return finish();
}

} // namespace hooklab

#endif
