#ifndef HOOKLAB_LITTLEWOOD_HPP
#define HOOKLAB_LITTLEWOOD_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <hooklab/partition.hpp>

namespace hooklab
{

// Finite window of the bi-infinite 0/1 boundary code of a partition: 0 is an
// up step, 1 a right step. Left of the window everything is 0, right of it
// everything is 1. Position 0 of the bi-infinite labelling is bits[marker].
//
// Canonical form: the window starts at the first 1 and ends at the last 0.
// For a partition lambda this window has length lambda_1 + l(lambda) and the
// balanced marker sits at index l(lambda).
class EdgeSequence
{
public:
    EdgeSequence() = default;

    // Hand-built sequences are canonicalised and must be balanced: the number
    // of 1s left of the marker equals the number of 0s at or right of it.
    EdgeSequence(std::vector<std::uint8_t> bits, long marker) : bits_(std::move(bits)), marker_(marker)
    {
        for (auto b : bits_) {
            if (b > 1) {
                throw std::invalid_argument("edge sequence entries must be 0 or 1");
            }
        }
        canonicalise();
        if (charge() != 0) {
            throw std::invalid_argument("unbalanced-marker: ones left of marker differ from zeros right of it");
        }
    }

    static EdgeSequence from_partition(const Partition &lambda)
    {
        EdgeSequence e;
        for (std::size_t i = lambda.length(); i >= 1; --i) {
            const int run = lambda.part(i) - lambda.part(i + 1);
            e.bits_.insert(e.bits_.end(), static_cast<std::size_t>(run), 1);
            e.bits_.push_back(0);
        }
        e.marker_ = static_cast<long>(lambda.length());
        return e;
    }

    // Bit at position i of the bi-infinite labelling.
    std::uint8_t at(long i) const noexcept
    {
        const long idx = i + marker_;
        if (idx < 0) {
            return 0;
        }
        if (idx >= static_cast<long>(bits_.size())) {
            return 1;
        }
        return bits_[static_cast<std::size_t>(idx)];
    }

    const std::vector<std::uint8_t> &bits() const noexcept
    {
        return bits_;
    }
    long marker() const noexcept
    {
        return marker_;
    }

    Partition to_partition() const
    {
        return partition_of_bits(bits_);
    }

    // "0001011|10010111" style rendering with `pad` extra symbols each side.
    std::string render(std::size_t pad = 3) const
    {
        std::string out(pad, '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (static_cast<long>(i) == marker_) {
                out += '|';
            }
            out += static_cast<char>('0' + bits_[i]);
        }
        if (marker_ >= static_cast<long>(bits_.size())) {
            out += '|';
        }
        out += std::string(pad, '1');
        return out;
    }

    // Parts are, for every 0, the number of 1s before it.
    static Partition partition_of_bits(const std::vector<std::uint8_t> &bits)
    {
        std::vector<int> parts;
        int ones = 0;
        for (auto b : bits) {
            if (b) {
                ++ones;
            } else if (ones > 0) {
                parts.push_back(ones);
            }
        }
        return Partition(std::vector<int>(parts.rbegin(), parts.rend()));
    }

    friend bool operator==(const EdgeSequence &, const EdgeSequence &) = default;

private:
    void canonicalise()
    {
        std::size_t lead = 0;
        while (lead < bits_.size() && bits_[lead] == 0) {
            ++lead;
        }
        bits_.erase(bits_.begin(), bits_.begin() + static_cast<long>(lead));
        marker_ -= static_cast<long>(lead);
        while (!bits_.empty() && bits_.back() == 1) {
            bits_.pop_back();
        }
    }

    // (#1 strictly left of marker) - (#0 at or right of marker)
    long charge() const noexcept
    {
        long c = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            const bool left = static_cast<long>(i) < marker_;
            if (left && bits_[i] == 1) {
                ++c;
            } else if (!left && bits_[i] == 0) {
                --c;
            }
        }
        // Window entries only; positions outside contribute nothing because
        // the left padding is 0 and the right padding is 1.
        if (marker_ > static_cast<long>(bits_.size())) {
            // Ones between the window end and the marker.
            c += marker_ - static_cast<long>(bits_.size());
        } else if (marker_ < 0) {
            // Zeros between the marker and the window start.
            c -= -marker_;
        }
        return c;
    }

    std::vector<std::uint8_t> bits_;
    long marker_ = 0;
};

inline EdgeSequence edge_sequence(const Partition &lambda)
{
    return EdgeSequence::from_partition(lambda);
}

inline Partition edge_to_partition(const EdgeSequence &e)
{
    return e.to_partition();
}

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;

    int quotient_size() const
    {
        int s = 0;
        for (const auto &nu : quotient) {
            s += nu.size();
        }
        return s;
    }
    friend bool operator==(const CoreQuotient &, const CoreQuotient &) = default;
};

struct KernelPair {
    Partition kernel;
    Partition cofactor;
    friend bool operator==(const KernelPair &, const KernelPair &) = default;
};

namespace detail
{

// Positions i + r*j, j in [jlo, jhi), of the bi-infinite sequence s.
inline std::vector<std::uint8_t> residue_class(const EdgeSequence &s, int r, int i, long jlo, long jhi)
{
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(jhi - jlo));
    for (long j = jlo; j < jhi; ++j) {
        out.push_back(s.at(i + r * j));
    }
    return out;
}

// Range of j such that every position i + r*j outside it lies in the padding.
inline std::pair<long, long> class_range(const EdgeSequence &s, int r)
{
    const long lo = -s.marker() - 1;
    const long hi = static_cast<long>(s.bits().size()) - s.marker() + 1;
    return {lo / r - 2, hi / r + 2};
}

} // namespace detail

// Littlewood decomposition via the r residue classes of the edge sequence
// and the abacus push of each class.
inline CoreQuotient phi(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    const EdgeSequence s = edge_sequence(lambda);
    const auto [jlo, jhi] = detail::class_range(s, r);

    CoreQuotient out;
    std::vector<long> boundary(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto cls = detail::residue_class(s, r, i, jlo, jhi);
        out.quotient.push_back(EdgeSequence::partition_of_bits(cls));
        // The charge (ones left of j=0 minus zeros at or right of j=0) is
        // invariant under pushing zeros left; once pushed, the class reads
        // 0 for j < b and 1 for j >= b with b = -charge.
        long charge = 0;
        for (long j = jlo; j < jhi; ++j) {
            const auto bit = cls[static_cast<std::size_t>(j - jlo)];
            if (j < 0 && bit == 1) {
                ++charge;
            } else if (j >= 0 && bit == 0) {
                --charge;
            }
        }
        boundary[static_cast<std::size_t>(i)] = -charge;
    }

    // Reassemble: position p = i + r*j is 0 iff j < b_i.
    const long plo = r * (jlo - 1);
    const long phi_ = r * (jhi + 1);
    std::vector<std::uint8_t> bits;
    for (long p = plo; p < phi_; ++p) {
        const long i = ((p % r) + r) % r;
        const long j = (p - i) / r;
        bits.push_back(j < boundary[static_cast<std::size_t>(i)] ? 0 : 1);
    }
    out.core = EdgeSequence::partition_of_bits(bits);
    return out;
}

inline Partition r_core(const Partition &lambda, int r)
{
    return phi(lambda, r).core;
}

inline Partition phi_inverse(const CoreQuotient &cq, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    if (cq.quotient.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("wrong-quotient-arity: expected " + std::to_string(r) + " quotient partitions, got " +
                                    std::to_string(cq.quotient.size()));
    }
    if (!is_r_core(cq.core, r)) {
        throw std::invalid_argument("not-an-r-core: " + cq.core.to_string() + " is not a " + std::to_string(r) + "-core");
    }

    // Charges of the core's classes fix where each quotient sequence sits.
    const EdgeSequence core_seq = edge_sequence(cq.core);
    const auto [cjlo, cjhi] = detail::class_range(core_seq, r);
    std::vector<long> charge(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        long c = 0;
        for (long j = cjlo; j < cjhi; ++j) {
            const auto bit = core_seq.at(i + r * j);
            if (j < 0 && bit == 1) {
                ++c;
            } else if (j >= 0 && bit == 0) {
                --c;
            }
        }
        charge[static_cast<std::size_t>(i)] = c;
    }

    // Class i, position j reads the quotient window at index l(nu) + charge + j.
    std::vector<EdgeSequence> windows;
    long span = 0;
    for (int i = 0; i < r; ++i) {
        windows.push_back(edge_sequence(cq.quotient[static_cast<std::size_t>(i)]));
        const long c = charge[static_cast<std::size_t>(i)];
        span = std::max(span, static_cast<long>(windows.back().bits().size()) + (c < 0 ? -c : c) + 2);
    }
    auto class_bit = [&](int i, long j) -> std::uint8_t {
        const auto &w = windows[static_cast<std::size_t>(i)];
        const long idx = w.marker() + charge[static_cast<std::size_t>(i)] + j;
        if (idx < 0) {
            return 0;
        }
        if (idx >= static_cast<long>(w.bits().size())) {
            return 1;
        }
        return w.bits()[static_cast<std::size_t>(idx)];
    };

    std::vector<std::uint8_t> bits;
    for (long p = -r * (span + 1); p < r * (span + 1); ++p) {
        const long i = ((p % r) + r) % r;
        const long j = (p - i) / r;
        bits.push_back(class_bit(static_cast<int>(i), j));
    }
    return EdgeSequence::partition_of_bits(bits);
}

// psi_r: mu_i = lambda_i - r*nu_i with nu_i = sum_{j>=i} floor((lambda_j - lambda_{j+1}) / r).
inline KernelPair psi(const Partition &lambda, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    const std::size_t len = lambda.length();
    std::vector<int> kernel(len), cofactor(len);
    int nu = 0;
    for (std::size_t i = len; i >= 1; --i) {
        nu += (lambda.part(i) - lambda.part(i + 1)) / r;
        cofactor[i - 1] = nu;
        kernel[i - 1] = lambda.part(i) - r * nu;
    }
    return {Partition(std::move(kernel)), Partition(std::move(cofactor))};
}

inline Partition psi_inverse(const KernelPair &kp, int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    if (!is_r_kernel(kp.kernel, r)) {
        throw std::invalid_argument("not-an-r-kernel: " + kp.kernel.to_string() + " is not a " + std::to_string(r) + "-kernel");
    }
    const std::size_t len = std::max(kp.kernel.length(), kp.cofactor.length());
    std::vector<int> parts(len);
    for (std::size_t i = 1; i <= len; ++i) {
        parts[i - 1] = kp.kernel.part(i) + r * kp.cofactor.part(i);
    }
    return Partition(std::move(parts));
}

} // namespace hooklab

#endif
