#ifndef HOOKLAB_PARTITION_SUM_HPP
#define HOOKLAB_PARTITION_SUM_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <hooklab/enumerate.hpp>
#include <hooklab/littlewood.hpp>
#include <hooklab/partition.hpp>
#include <hooklab/rho.hpp>
#include <hooklab/series.hpp>

namespace hooklab
{

// HOOKLAB_THREADS, else the hardware concurrency.
inline unsigned worker_threads()
{
    if (const char *env = std::getenv("HOOKLAB_THREADS")) {
        char *end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

using SummandFn = std::function<MultiSeries(const Partition &)>;

// Sum of monomial(lambda) * term(lambda) over the given partitions. Worker w
// takes every workers-th partition starting at w and the partial sums are
// merged in worker order, so the result does not depend on scheduling.
inline MultiSeries parallel_sum(const VarTablePtr &table, const std::vector<Partition> &parts,
                                const std::function<Monomial(const Partition &)> &monomial, const SummandFn &term)
{
    const std::size_t n = parts.size();
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(worker_threads(), n / 8 + 1));
    std::vector<std::optional<MultiSeries>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::size_t w) {
        try {
            MultiSeries::Accumulator acc(table);
            for (std::size_t i = w; i < n; i += workers) {
                const auto m = monomial(parts[i]);
                if (!table->within_caps(m)) {
                    continue;
                }
                acc.add_scaled(term(parts[i]), m, 1);
            }
            partial[w] = acc.finish();
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(run, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    MultiSeries::Accumulator total(table);
    for (std::size_t w = 0; w < workers; ++w) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        total.add(*partial[w]);
    }
    return total.finish();
}

enum class HookDomain { ALL_MOD_R, BOTTOM_MOD_R, RIGHT_MOD_R, SQUARES_MOD_R };

// Product of the weight over the squares of lambda selected by the domain.
// The *_MOD_R domains feed the hook length to the weight; SQUARES_MOD_R
// feeds (arm, leg) of every square whose hook is divisible by r.
inline MultiSeries weight_product(const Partition &lambda, RhoCache &rho, int r, HookDomain domain)
{
    MultiSeries out = MultiSeries::one(rho.table());
    for_each_square(lambda, [&](Square, HookStats hs) {
        if (hs.hook % r != 0) {
            return;
        }
        switch (domain) {
        case HookDomain::ALL_MOD_R: out *= rho.at_hook(hs.hook); break;
        case HookDomain::BOTTOM_MOD_R:
            if (hs.leg == 0) {
                out *= rho.at_hook(hs.hook);
            }
            break;
        case HookDomain::RIGHT_MOD_R:
            if (hs.arm == 0) {
                out *= rho.at_hook(hs.hook);
            }
            break;
        case HookDomain::SQUARES_MOD_R: out *= rho.at_square(hs.arm, hs.leg); break;
        }
    });
    return out;
}

// sum over |lambda| <= cap(T) of T^{|lambda|} S^{|H_r(lambda)|} term(lambda).
// S is tracked when the table has it, unless track_s is false.
inline MultiSeries sum_all(const VarTablePtr &table, int r, const SummandFn &term, bool track_s = true)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    const int cap = table->cap(table->require("T"));
    track_s = track_s && table->has("S");
    const auto parts = partitions_up_to(cap);
    return parallel_sum(
        table, parts,
        [&](const Partition &lam) {
            if (track_s) {
                return table->monomial({{"T", lam.size()}, {"S", hook_multiset_mod(lam, r).total()}});
            }
            return table->monomial({{"T", lam.size()}});
        },
        term);
}

inline MultiSeries sum_all(const VarTablePtr &table, int r, const RhoSpec &rho, HookDomain domain, bool track_s = true)
{
    RhoCache cache(rho, table);
    return sum_all(
        table, r, [&](const Partition &lam) { return weight_product(lam, cache, r, domain); }, track_s);
}

// Partitions with the given r-core and |lambda| <= |omega| + r * n_cap.
inline std::vector<Partition> partitions_with_core(const Partition &omega, int r, int n_cap)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    if (!is_r_core(omega, r)) {
        throw std::invalid_argument("not-an-r-core: " + omega.to_string());
    }
    std::vector<Partition> out;
    for (int k = 0; k <= n_cap; ++k) {
        for (const auto &lam : PartitionsOf(omega.size() + r * k)) {
            if (r_core(lam, r) == omega) {
                out.push_back(lam);
            }
        }
    }
    return out;
}

// sum over core_r(lambda) = omega of T^{(|lambda| - |omega|)/r} term(lambda).
inline MultiSeries sum_fixed_core(const VarTablePtr &table, const Partition &omega, int r, const SummandFn &term)
{
    const int cap = table->cap(table->require("T"));
    const auto parts = partitions_with_core(omega, r, cap);
    return parallel_sum(
        table, parts,
        [&](const Partition &lam) {
            const int diff = lam.size() - omega.size();
            if (diff % r != 0) {
                throw std::logic_error("size difference to the core is not divisible by r for " + lam.to_string());
            }
            return table->monomial({{"T", diff / r}});
        },
        term);
}

inline MultiSeries sum_fixed_core(const VarTablePtr &table, const Partition &omega, int r, const RhoSpec &rho, HookDomain domain)
{
    RhoCache cache(rho, table);
    return sum_fixed_core(table, omega, r, [&](const Partition &lam) { return weight_product(lam, cache, r, domain); });
}

// {BF_{alpha,beta}(lambda) : lambda |- n, core_{alpha+beta}(lambda) = omega}
inline HookMultiset bf_multiset(int n, int alpha, int beta, const std::optional<Partition> &omega = std::nullopt)
{
    const int r = alpha + beta;
    if (alpha < 1 || beta < 0) {
        throw std::invalid_argument("bf_multiset requires alpha >= 1 and beta >= 0");
    }
    if (omega && !is_r_core(*omega, r)) {
        throw std::invalid_argument("not-a-core: " + omega->to_string());
    }
    HookMultiset out;
    for (const auto &lam : PartitionsOf(n)) {
        if (!omega || r_core(lam, r) == *omega) {
            out.add(bf_stat(lam, alpha, beta));
        }
    }
    return out;
}

} // namespace hooklab

#endif
