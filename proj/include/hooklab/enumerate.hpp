#ifndef HOOKLAB_ENUMERATE_HPP
#define HOOKLAB_ENUMERATE_HPP

#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <vector>

#include <hooklab/partition.hpp>

namespace hooklab
{

// Range over the partitions of n in reverse-lexicographic order:
// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n). For n = 0 it yields the
// empty partition once.
class PartitionsOf
{
public:
    explicit PartitionsOf(int n) : n_(n)
    {
        if (n < 0) {
            throw std::invalid_argument("cannot enumerate partitions of a negative integer");
        }
    }

    class iterator
    {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        using pointer = const Partition *;
        using reference = const Partition &;

        iterator() = default;
        explicit iterator(int n) : done_(false)
        {
            if (n > 0) {
                parts_.push_back(n);
            }
            current_ = Partition(parts_);
        }

        const Partition &operator*() const
        {
            return current_;
        }
        const Partition *operator->() const
        {
            return &current_;
        }

        iterator &operator++()
        {
            advance();
            return *this;
        }
        iterator operator++(int)
        {
            iterator old = *this;
            advance();
            return old;
        }

        friend bool operator==(const iterator &a, const iterator &b)
        {
            return a.done_ == b.done_;
        }

    private:
        // Lower the last part exceeding 1 and refill greedily with that value.
        void advance()
        {
            int ones = 0;
            while (!parts_.empty() && parts_.back() == 1) {
                parts_.pop_back();
                ++ones;
            }
            if (parts_.empty()) {
                done_ = true;
                return;
            }
            const int k = --parts_.back();
            int remaining = ones + 1;
            while (remaining >= k) {
                parts_.push_back(k);
                remaining -= k;
            }
            if (remaining > 0) {
                parts_.push_back(remaining);
            }
            current_ = Partition(parts_);
        }

        std::vector<int> parts_;
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const
    {
        return iterator(n_);
    }
    iterator end() const
    {
        return iterator();
    }

private:
    int n_;
};

inline PartitionsOf enumerate_partitions(int n)
{
    return PartitionsOf(n);
}

// All partitions of size 0..max_size, grouped by size, each group in
// reverse-lexicographic order.
inline std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        for (const auto &p : PartitionsOf(n)) {
            out.push_back(p);
        }
    }
    return out;
}

// Every r-core of size at most max_size, by filtering the full enumeration.
inline std::vector<Partition> enumerate_r_cores(int r, int max_size)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        for (const auto &p : PartitionsOf(n)) {
            if (is_r_core(p, r)) {
                out.push_back(p);
            }
        }
    }
    return out;
}

} // namespace hooklab

#endif
