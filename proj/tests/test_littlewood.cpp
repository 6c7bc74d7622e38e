#include <hooklab/enumerate.hpp>
#include <hooklab/littlewood.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hooklab;

namespace
{

// r-core by sliding beads of the beta-set {lambda_i - i} up their runners.
Partition bead_core(const Partition &lam, int r)
{
    const int n = static_cast<int>(lam.length()) + r * (lam.size() + 1);
    std::set<int> beads;
    for (int i = 1; i <= n; ++i) {
        beads.insert(lam.part(static_cast<std::size_t>(i)) - i);
    }
    bool moved = true;
    while (moved) {
        moved = false;
        for (int b : beads) {
            if (b - r >= -n && !beads.count(b - r)) {
                beads.erase(b);
                beads.insert(b - r);
                moved = true;
                break;
            }
        }
    }
    std::vector<int> parts;
    int i = 1;
    for (auto it = beads.rbegin(); it != beads.rend(); ++it, ++i) {
        parts.push_back(*it + i);
    }
    return Partition(std::move(parts));
}

// Kernel by repeatedly removing r full columns above the lowest row with a gap >= r.
KernelPair greedy_kernel(const Partition &lam, int r)
{
    std::vector<int> mu(lam.part_vector());
    std::vector<int> nu(mu.size(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const int next = i + 1 < mu.size() ? mu[i + 1] : 0;
            if (mu[i] - next >= r) {
                for (std::size_t k = 0; k <= i; ++k) {
                    mu[k] -= r;
                    ++nu[k];
                }
                changed = true;
                break;
            }
        }
    }
    return {Partition(mu), Partition(nu)};
}

} // namespace

TEST(EdgeSequence, WorkedExample)
{
    const auto e = edge_sequence({5, 4, 4, 1});
    EXPECT_EQ(e.render(3), "0001011|10010111");
    EXPECT_EQ(edge_to_partition(e), Partition({5, 4, 4, 1}));

    const auto empty = edge_sequence({});
    EXPECT_TRUE(empty.bits().empty());
    EXPECT_EQ(empty.render(3), "000|111");
}

TEST(EdgeSequence, HandBuilt)
{
    // Extra padding canonicalises away.
    EdgeSequence padded({0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1}, 6);
    EXPECT_EQ(padded, edge_sequence({5, 4, 4, 1}));
    EXPECT_THROW(EdgeSequence({1, 0}, 0), std::invalid_argument);
    EXPECT_THROW(EdgeSequence({1, 0}, 2), std::invalid_argument);
    EXPECT_EQ(EdgeSequence({1, 0}, 1).to_partition(), Partition({1}));
}

TEST(EdgeSequence, RoundTrip)
{
    for (int n = 0; n <= 20; ++n) {
        for (const auto &p : PartitionsOf(n)) {
            const auto e = edge_sequence(p);
            EXPECT_EQ(edge_to_partition(e), p);
            EXPECT_EQ(EdgeSequence(e.bits(), e.marker()), e);
        }
    }
}

TEST(Phi, WorkedExample)
{
    const auto cq = phi({5, 4, 4, 1}, 3);
    EXPECT_EQ(cq.core, Partition({2}));
    ASSERT_EQ(cq.quotient.size(), 3u);
    EXPECT_EQ(cq.quotient[0], Partition{});
    EXPECT_EQ(cq.quotient[1], Partition({1, 1}));
    EXPECT_EQ(cq.quotient[2], Partition({2}));
    EXPECT_EQ(hook_multiset_mod({5, 4, 4, 1}, 3), (HookMultiset{{3, 2}, {6, 2}}));
    EXPECT_EQ(phi_inverse(cq, 3), Partition({5, 4, 4, 1}));

    const auto one = phi({3, 1}, 1);
    EXPECT_TRUE(one.core.empty());
    ASSERT_EQ(one.quotient.size(), 1u);
    EXPECT_EQ(one.quotient[0], Partition({3, 1}));
}

TEST(Phi, CoreExamples)
{
    EXPECT_EQ(r_core({5, 4, 4, 1}, 3), Partition({2}));
    EXPECT_EQ(r_core({14, 6, 6, 1}, 3), r_core({5, 3, 3, 1}, 3));
    for (const auto &w : enumerate_r_cores(3, 15)) {
        EXPECT_EQ(r_core(w, 3), w);
    }
}

TEST(Phi, Errors)
{
    EXPECT_THROW(phi_inverse({Partition({2}), {Partition{}, Partition{}}}, 3), std::invalid_argument);
    EXPECT_THROW(phi_inverse({Partition({3}), {Partition{}, Partition{}, Partition{}}}, 3), std::invalid_argument);
}

TEST(Psi, WorkedExample)
{
    const auto kp = psi({14, 6, 6, 1}, 3);
    EXPECT_EQ(kp.kernel, Partition({5, 3, 3, 1}));
    EXPECT_EQ(kp.cofactor, Partition({3, 1, 1}));
    EXPECT_EQ(psi_inverse(kp, 3), Partition({14, 6, 6, 1}));
    EXPECT_EQ(bottom_hooks_mod({14, 6, 6, 1}, 3), bottom_hooks_mod({3, 1, 1}, 1).scaled(3));

    const auto one = psi({4, 2, 1}, 1);
    EXPECT_TRUE(one.kernel.empty());
    EXPECT_EQ(one.cofactor, Partition({4, 2, 1}));
    EXPECT_THROW(psi_inverse({Partition({4}), Partition{}}, 3), std::invalid_argument);
}

// Exhaustive at a smaller size here; the acceptance suite covers n <= 25.
TEST(Decompositions, Properties)
{
    for (int n = 0; n <= 16; ++n) {
        for (const auto &lam : PartitionsOf(n)) {
            for (int r = 1; r <= 5; ++r) {
                const auto cq = phi(lam, r);
                EXPECT_TRUE(is_r_core(cq.core, r));
                EXPECT_EQ(cq.core, bead_core(lam, r)) << lam << " r=" << r;
                EXPECT_EQ(n, cq.core.size() + r * cq.quotient_size());
                HookMultiset hq;
                for (const auto &nu : cq.quotient) {
                    hq += hook_multiset_mod(nu, 1);
                }
                EXPECT_EQ(hook_multiset_mod(lam, r), hq.scaled(r));
                EXPECT_EQ(phi_inverse(cq, r), lam);

                const auto kp = psi(lam, r);
                EXPECT_EQ(kp, greedy_kernel(lam, r)) << lam << " r=" << r;
                EXPECT_TRUE(is_r_kernel(kp.kernel, r));
                EXPECT_EQ(n, kp.kernel.size() + r * kp.cofactor.size());
                EXPECT_EQ(bottom_hooks_mod(lam, r), bottom_hooks_mod(kp.cofactor, 1).scaled(r));
                EXPECT_EQ(r_core(kp.kernel, r), cq.core);
                EXPECT_EQ(psi_inverse(kp, r), lam);
            }
        }
    }
}

TEST(Decompositions, SingleRimShift)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng() % 20);
        std::vector<Partition> all(PartitionsOf(n).begin(), PartitionsOf(n).end());
        const auto &lam = all[rng() % all.size()];
        const int r = 1 + static_cast<int>(rng() % 5);
        const std::size_t i = 1 + rng() % (lam.length() + 1);
        auto parts = lam.part_vector();
        parts.resize(std::max(parts.size(), i), 0);
        parts[i - 1] += r;
        // Shifting one part by r may break monotonicity; only keep valid shapes.
        if (!std::is_sorted(parts.rbegin(), parts.rend())) {
            continue;
        }
        EXPECT_EQ(r_core(Partition(parts), r), r_core(lam, r));
    }
}

TEST(Decompositions, PsiSurjective)
{
    for (int r = 1; r <= 4; ++r) {
        for (int total = 0; total <= 20; ++total) {
            for (int k = 0; r * k <= total; ++k) {
                for (const auto &mu : PartitionsOf(total - r * k)) {
                    if (!is_r_kernel(mu, r)) {
                        continue;
                    }
                    for (const auto &nu : PartitionsOf(k)) {
                        const KernelPair kp{mu, nu};
                        EXPECT_EQ(psi(psi_inverse(kp, r), r), kp);
                    }
                }
            }
        }
    }
}
