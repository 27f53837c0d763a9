#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace coreset {

// Master seed for an entire run. Every random decision in the library is a
// pure function of (master seed, stream tag, counter), so results do not
// depend on evaluation order or thread scheduling.
struct RngSeed {
    std::uint64_t master = 0;
};

namespace detail {

// Stafford mix13 finalizer (the splitmix64 output function).
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

} // namespace detail

// Counter-based stream: at(c) is the c-th draw, computable in any order.
// Streams are keyed by (seed, tag) or (seed, tag, index) for per-object
// substreams such as one stream per shard.
class StreamRng {
public:
    StreamRng(RngSeed seed, std::string_view tag)
        : key_(detail::mix64(seed.master ^ detail::fnv1a64(tag))) {}

    StreamRng(RngSeed seed, std::string_view tag, std::uint64_t index)
        : key_(detail::mix64(detail::mix64(seed.master ^ detail::fnv1a64(tag)) +
                             (index + 1) * detail::kGolden)) {}

    // Random access: pure function of (key, counter).
    std::uint64_t at(std::uint64_t counter) const {
        return detail::mix64(key_ + (counter + 1) * detail::kGolden);
    }

    // Sequential interface (UniformRandomBitGenerator).
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }
    result_type operator()() { return at(counter_++); }

    std::uint64_t counter() const { return counter_; }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    double unit_at(std::uint64_t c) const { return static_cast<double>(at(c) >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) {
        if (p >= 1.0) { ++counter_; return true; }
        if (p <= 0.0) { ++counter_; return false; }
        return next_unit() < p;
    }
    bool bernoulli_at(std::uint64_t c, double p) const {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return unit_at(c) < p;
    }

    // Uniform integer in [0, n). Fixed-point multiply; bias is O(n / 2^64).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>((*this)()) * n) >> 64);
    }
    std::uint64_t below_at(std::uint64_t c, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(at(c)) * n) >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Fisher-Yates shuffle driven by sequential draws from `rng`.
template <typename T>
void shuffle(std::vector<T>& items, StreamRng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

// Random permutation of [0, n).
inline std::vector<std::uint32_t> random_permutation(std::uint32_t n, StreamRng& rng) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    shuffle(perm, rng);
    return perm;
}

// k distinct values from [0, universe), via partial Fisher-Yates; selection order.
inline std::vector<std::uint32_t> sample_without_replacement(std::uint32_t universe,
                                                             std::uint32_t k,
                                                             StreamRng& rng) {
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint32_t i = 0; i < k && i < universe; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(rng.next_below(universe - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace coreset
