#ifndef HOOKLAB_PARTITION_HPP
#define HOOKLAB_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hooklab
{

// An integer partition, stored as its positive parts in weakly decreasing
// order. The empty part list is the partition of zero.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Accepts "6,5,5,3,1,1"; whitespace is ignored, "" and "[]" give the empty
    // partition.
    static Partition parse(std::string_view text)
    {
        std::string cleaned;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                cleaned.push_back(c);
            }
        }
        if (cleaned.size() >= 2 && cleaned.front() == '[' && cleaned.back() == ']') {
            cleaned = cleaned.substr(1, cleaned.size() - 2);
        }
        std::vector<int> parts;
        if (cleaned.empty()) {
            return Partition{};
        }
        std::size_t pos = 0;
        while (pos <= cleaned.size()) {
            auto comma = cleaned.find(',', pos);
            if (comma == std::string::npos) {
                comma = cleaned.size();
            }
            auto token = cleaned.substr(pos, comma - pos);
            if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
            }
            if (token.size() > 6) {
                throw std::invalid_argument("partition part too large: " + token);
            }
            parts.push_back(std::stoi(token));
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::string to_string() const
    {
        if (parts_.empty()) {
            return "[]";
        }
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    std::span<const int> parts() const noexcept
    {
        return parts_;
    }
    const std::vector<int> &part_vector() const noexcept
    {
        return parts_;
    }

    // 1-based part access; zero beyond the length.
    int part(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    std::size_t length() const noexcept
    {
        return parts_.size();
    }
    int size() const noexcept
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    bool empty() const noexcept
    {
        return parts_.empty();
    }
    int largest() const noexcept
    {
        return parts_.empty() ? 0 : parts_.front();
    }

    // m_i(lambda)
    int multiplicity(int i) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    bool contains(int row, int col) const noexcept
    {
        return row >= 1 && col >= 1 && col <= part(static_cast<std::size_t>(row));
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Partition &p)
    {
        return os << '(' << (p.empty() ? std::string("0") : p.to_string()) << ')';
    }

private:
    std::vector<int> parts_;
};

struct Square {
    int row;
    int col;
    friend auto operator<=>(const Square &, const Square &) = default;
};

struct HookStats {
    int arm;
    int leg;
    int hook;
    friend bool operator==(const HookStats &, const HookStats &) = default;
};

inline Partition conjugate(const Partition &lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts()) {
        for (int j = 0; j < p; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

inline HookStats hook_stats(const Partition &lambda, const Partition &conj, Square s)
{
    if (!lambda.contains(s.row, s.col)) {
        throw std::out_of_range("square-outside-partition: (" + std::to_string(s.row) + "," + std::to_string(s.col) + ")");
    }
    const int arm = lambda.part(static_cast<std::size_t>(s.row)) - s.col;
    const int leg = conj.part(static_cast<std::size_t>(s.col)) - s.row;
    return {arm, leg, arm + leg + 1};
}

inline HookStats hook_stats(const Partition &lambda, Square s)
{
    return hook_stats(lambda, conjugate(lambda), s);
}

// Calls f(Square, HookStats) for every square, row by row.
template <typename F>
void for_each_square(const Partition &lambda, F &&f)
{
    const Partition conj = conjugate(lambda);
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const int li = lambda.part(i);
        for (int j = 1; j <= li; ++j) {
            const int arm = li - j;
            const int leg = conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i);
            f(Square{static_cast<int>(i), j}, HookStats{arm, leg, arm + leg + 1});
        }
    }
}

// Multiset of positive integers stored as value -> multiplicity.
class HookMultiset
{
public:
    HookMultiset() = default;
    HookMultiset(std::initializer_list<std::pair<const int, int>> counts)
    {
        for (auto [v, c] : counts) {
            add(v, c);
        }
    }

    void add(int value, int count = 1)
    {
        if (count <= 0) {
            return;
        }
        counts_[value] += count;
    }

    int count(int value) const
    {
        auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    int total() const
    {
        int t = 0;
        for (const auto &kv : counts_) {
            t += kv.second;
        }
        return t;
    }

    bool empty() const noexcept
    {
        return counts_.empty();
    }

    // r * S
    HookMultiset scaled(int r) const
    {
        HookMultiset out;
        for (auto [v, c] : counts_) {
            out.add(v * r, c);
        }
        return out;
    }

    HookMultiset &operator+=(const HookMultiset &other)
    {
        for (auto [v, c] : other.counts_) {
            add(v, c);
        }
        return *this;
    }

    const std::map<int, int> &counts() const noexcept
    {
        return counts_;
    }

    std::vector<int> values() const
    {
        std::vector<int> out;
        for (auto [v, c] : counts_) {
            out.insert(out.end(), static_cast<std::size_t>(c), v);
        }
        return out;
    }

    friend bool operator==(const HookMultiset &, const HookMultiset &) = default;

    friend std::ostream &operator<<(std::ostream &os, const HookMultiset &m)
    {
        os << '{';
        bool first = true;
        for (auto [v, c] : m.counts_) {
            os << (first ? "" : ",") << v;
            if (c != 1) {
                os << '^' << c;
            }
            first = false;
        }
        return os << '}';
    }

private:
    std::map<int, int> counts_;
};

// H_r(lambda): hook lengths divisible by r.
inline HookMultiset hook_multiset_mod(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    HookMultiset out;
    for_each_square(lambda, [&](Square, HookStats hs) {
        if (hs.hook % r == 0) {
            out.add(hs.hook);
        }
    });
    return out;
}

// H^b_r(lambda): hook lengths of bottom squares (leg zero) divisible by r.
// The bottom square of column j sits in row lambda'_j and has hook
// lambda_{lambda'_j} - j + 1.
inline HookMultiset bottom_hooks_mod(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    HookMultiset out;
    const Partition conj = conjugate(lambda);
    for (int j = 1; j <= lambda.largest(); ++j) {
        const auto row = static_cast<std::size_t>(conj.part(static_cast<std::size_t>(j)));
        const int hook = lambda.part(row) - j + 1;
        if (hook % r == 0) {
            out.add(hook);
        }
    }
    return out;
}

// H^r_r(lambda) = H^b_r(lambda'): hooks of squares with trivial arm.
inline HookMultiset right_hooks_mod(const Partition &lambda, int r)
{
    return bottom_hooks_mod(conjugate(lambda), r);
}

// l_r(lambda) = sum_i floor(m_i(lambda) / r)
inline int modular_length(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    int total = 0;
    const auto parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        total += static_cast<int>(j - i) / r;
        i = j;
    }
    return total;
}

inline bool is_r_core(const Partition &lambda, int r)
{
    return hook_multiset_mod(lambda, r).empty();
}

// Consecutive part differences (with a trailing zero part) all below r.
inline bool is_r_kernel(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) - lambda.part(i + 1) >= r) {
            return false;
        }
    }
    return true;
}

// BF_{alpha,beta}(lambda): squares with alpha*l(s) = beta*a(s) + beta and
// h(s) divisible by alpha + beta. The congruence filter can be switched off
// to observe that it is implied when gcd(alpha, beta) = 1.
inline std::vector<Square> bf_set(const Partition &lambda, int alpha, int beta, bool congruence_filter = true)
{
    if (alpha < 1 || beta < 0) {
        throw std::invalid_argument("bf_set requires alpha >= 1 and beta >= 0");
    }
    std::vector<Square> out;
    const int r = alpha + beta;
    for_each_square(lambda, [&](Square s, HookStats hs) {
        if (alpha * hs.leg == beta * hs.arm + beta && (!congruence_filter || hs.hook % r == 0)) {
            out.push_back(s);
        }
    });
    return out;
}

inline int bf_stat(const Partition &lambda, int alpha, int beta)
{
    return static_cast<int>(bf_set(lambda, alpha, beta).size());
}

inline mpz_class factorial(unsigned n)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// Number of standard Young tableaux, n! / prod h.
inline mpz_class count_syt(const Partition &lambda)
{
    mpz_class denom = 1;
    for_each_square(lambda, [&](Square, HookStats hs) { denom *= hs.hook; });
    const mpz_class num = factorial(static_cast<unsigned>(lambda.size()));
    if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) {
        throw std::logic_error("hook product does not divide n!: hook computation is broken");
    }
    return num / denom;
}

} // namespace hooklab

#endif
