#pragma once

#include <cstdint>

namespace clifftomo {

// Counter-based generator ("splitmix64ctr/1"): output i is a stateless mix
// of (key, i), so sub-streams can be derived for any (task, repetition)
// pair and results do not depend on evaluation order or thread count.
class CtrRng {
public:
    explicit CtrRng(std::uint64_t key) : key_(key) {}

    static std::uint64_t mix(std::uint64_t key, std::uint64_t ctr) {
        std::uint64_t z = key + 0x9e3779b97f4a7c15ULL * (ctr + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        // second round, keyed again so key bits diffuse fully
        z += key ^ 0xd1b54a32d192ed03ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(key_, ctr_++); }

    // Unbiased draw in [0, bound) by masked rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    bool next_bit() { return next() >> 63; }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Deterministic sub-stream key, e.g. per (task, repetition).
    static std::uint64_t derive(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0) {
        return mix(mix(key, a ^ 0x5851f42d4c957f2dULL), b);
    }

    static constexpr const char* algorithm() { return "splitmix64ctr/1"; }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace clifftomo
