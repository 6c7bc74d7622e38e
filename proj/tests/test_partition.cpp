#include <hooklab/enumerate.hpp>
#include <hooklab/partition.hpp>

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

using namespace hooklab;

namespace
{

// Hook length by walking the diagram, independent of conjugate().
int naive_hook(const Partition &p, int i, int j)
{
    int arm = 0, leg = 0;
    while (p.contains(i, j + arm + 1)) {
        ++arm;
    }
    while (p.contains(i + leg + 1, j)) {
        ++leg;
    }
    return arm + leg + 1;
}

// Standard fillings counted by removing a corner cell holding the largest entry.
long brute_syt(std::vector<int> parts, std::map<std::vector<int>, long> &memo)
{
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    if (parts.empty()) {
        return 1;
    }
    if (auto it = memo.find(parts); it != memo.end()) {
        return it->second;
    }
    long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size() || parts[i] > parts[i + 1]) {
            auto next = parts;
            --next[i];
            total += brute_syt(next, memo);
        }
    }
    memo[parts] = total;
    return total;
}

} // namespace

TEST(Partition, ParseAndPrint)
{
    EXPECT_EQ(Partition::parse(" 6, 5,5,3,1,1 "), Partition({6, 5, 5, 3, 1, 1}));
    EXPECT_EQ(Partition::parse(""), Partition{});
    EXPECT_EQ(Partition::parse("[]"), Partition{});
    EXPECT_EQ(Partition({6, 5, 5, 3, 1, 1}).to_string(), "6,5,5,3,1,1");
    EXPECT_EQ(Partition{}.to_string(), "[]");
    EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate({6, 5, 5, 3, 1, 1}), Partition({6, 4, 4, 3, 3, 1}));
    EXPECT_EQ(conjugate({}), Partition{});
    EXPECT_EQ(conjugate({5}), Partition({1, 1, 1, 1, 1}));
    for (int n = 0; n <= 12; ++n) {
        for (const auto &p : PartitionsOf(n)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
        }
    }
}

TEST(Partition, HookStats)
{
    EXPECT_EQ(hook_stats({6, 5, 5, 3, 1, 1}, {2, 2}), (HookStats{3, 2, 6}));
    EXPECT_EQ(hook_stats({1}, {1, 1}), (HookStats{0, 0, 1}));
    EXPECT_EQ(hook_stats({5, 4, 4, 1}, {1, 2}), (HookStats{3, 2, 6}));
    EXPECT_THROW(hook_stats({2, 1}, {2, 2}), std::out_of_range);
}

TEST(Partition, HookMultisets)
{
    const Partition lam{6, 5, 5, 3, 1, 1};
    EXPECT_EQ(hook_multiset_mod(lam, 1),
              (HookMultiset{{1, 4}, {2, 4}, {3, 1}, {4, 2}, {5, 4}, {6, 1}, {7, 1}, {8, 2}, {9, 1}, {11, 1}}));
    EXPECT_EQ(hook_multiset_mod(lam, 2), (HookMultiset{{2, 4}, {4, 2}, {6, 1}, {8, 2}}));
    EXPECT_TRUE(hook_multiset_mod(lam, 12).empty());
    EXPECT_EQ(bottom_hooks_mod(lam, 1), (HookMultiset{{1, 4}, {2, 2}}));
    EXPECT_EQ(bottom_hooks_mod(lam, 2), (HookMultiset{{2, 2}}));
    EXPECT_TRUE(bottom_hooks_mod({}, 3).empty());
}

TEST(Partition, ModularLength)
{
    const Partition lam{3, 2, 2, 1, 1, 1, 1};
    EXPECT_EQ(modular_length(lam, 2), 3);
    EXPECT_EQ(modular_length(lam, 5), 0);
    EXPECT_EQ(modular_length(lam, 1), 7);
}

TEST(Partition, CoresAndKernels)
{
    EXPECT_TRUE(is_r_core({2}, 3));
    EXPECT_TRUE(is_r_kernel({5, 3, 3, 1}, 3));
    EXPECT_FALSE(is_r_core({5, 3, 3, 1}, 3));
    EXPECT_FALSE(is_r_core({3, 1}, 2));
}

TEST(Partition, Enumeration)
{
    int count = 0;
    for (const auto &p : PartitionsOf(9)) {
        EXPECT_EQ(p.size(), 9);
        ++count;
    }
    EXPECT_EQ(count, 30);

    std::vector<Partition> zero(PartitionsOf(0).begin(), PartitionsOf(0).end());
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());

    std::vector<Partition> six(PartitionsOf(6).begin(), PartitionsOf(6).end());
    EXPECT_EQ(six.front(), Partition({6}));
    EXPECT_EQ(six[1], Partition({5, 1}));
    EXPECT_EQ(six.back(), Partition({1, 1, 1, 1, 1, 1}));
    EXPECT_TRUE(std::is_sorted(six.rbegin(), six.rend()));

    const auto cores = enumerate_r_cores(2, 10);
    std::vector<int> sizes;
    for (const auto &c : cores) {
        sizes.push_back(c.size());
        const int l = static_cast<int>(c.length());
        for (int i = 1; i <= l; ++i) {
            EXPECT_EQ(c.part(static_cast<std::size_t>(i)), l - i + 1);
        }
    }
    EXPECT_EQ(sizes, (std::vector<int>{0, 1, 3, 6, 10}));
}

TEST(Partition, Counts)
{
    // Partition numbers from Euler's pentagonal recurrence.
    std::vector<long> p(21, 0);
    p[0] = 1;
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const long sign = (k % 2) ? 1 : -1;
            p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
            }
        }
    }
    for (int n = 0; n <= 20; ++n) {
        long c = 0;
        for ([[maybe_unused]] const auto &q : PartitionsOf(n)) {
            ++c;
        }
        EXPECT_EQ(c, p[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Partition, BfStatistic)
{
    const Partition lam{7, 6, 4, 4, 2, 1};
    EXPECT_EQ(bf_stat(lam, 2, 1), 5);
    EXPECT_EQ(bf_stat(lam, 4, 2), 2);
    EXPECT_EQ(bf_stat(lam, 6, 3), 0);
}

TEST(Partition, CountSyt)
{
    std::map<std::vector<int>, long> memo;
    EXPECT_EQ(count_syt({2, 1}), 2);
    EXPECT_EQ(count_syt({7}), 1);
    for (int n = 0; n <= 10; ++n) {
        mpz_class sum = 0;
        for (const auto &p : PartitionsOf(n)) {
            const auto f = count_syt(p);
            EXPECT_EQ(f, brute_syt(p.part_vector(), memo)) << p;
            sum += f * f;
        }
        EXPECT_EQ(sum, factorial(static_cast<unsigned>(n)));
    }
}

TEST(Partition, Properties)
{
    for (int n = 0; n <= 16; ++n) {
        for (const auto &lam : PartitionsOf(n)) {
            const auto conj = conjugate(lam);
            const auto h1 = hook_multiset_mod(lam, 1);
            EXPECT_EQ(h1.total(), n);
            EXPECT_EQ(h1, hook_multiset_mod(conj, 1));
            EXPECT_EQ(bottom_hooks_mod(lam, 1).total(), lam.largest());
            for_each_square(lam, [&](Square s, HookStats hs) { EXPECT_EQ(hs.hook, naive_hook(lam, s.row, s.col)); });
            for (int r = 1; r <= 6; ++r) {
                HookMultiset filtered;
                for (auto [v, c] : h1.counts()) {
                    if (v % r == 0) {
                        filtered.add(v, c);
                    }
                }
                EXPECT_EQ(hook_multiset_mod(lam, r), filtered);
                EXPECT_EQ(modular_length(lam, r), bottom_hooks_mod(conj, r).total());
                EXPECT_EQ(is_r_kernel(lam, r), bottom_hooks_mod(lam, r).empty());
                if (is_r_core(lam, r)) {
                    EXPECT_TRUE(is_r_kernel(lam, r));
                }
                EXPECT_EQ(bf_stat(lam, r, 0), bottom_hooks_mod(lam, r).total());
            }
            for (int a = 1; a <= 4; ++a) {
                for (int b = 1; b <= 4; ++b) {
                    if (std::gcd(a, b) == 1) {
                        EXPECT_EQ(bf_set(lam, a, b, true), bf_set(lam, a, b, false));
                    }
                }
            }
        }
    }
}
