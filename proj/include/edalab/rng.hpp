#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace edalab {

/// SplitMix64 finalizer (the SplittableRandom mixer). Used both for seed
/// derivation and as the per-substream output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Child-seed derivation: folds each label into the running seed through
/// mix64. Order-sensitive, so (role, index) and (index, role) differ. This
/// is the single splitting function behind all substreams and trial seeds.
inline std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t h = parent;
    for (std::uint64_t l : labels) h = mix64(h ^ mix64(l + kGoldenGamma));
    return h;
}

/// A SplitMix64 stream: Weyl increment plus mix64 per draw.
class Substream {
public:
    explicit Substream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// True iff the next uniform draw is below p.
    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

/// Substream role labels. The numbers are part of the reproducibility
/// contract: changing them changes every derived stream.
namespace stream_role {
inline constexpr std::uint64_t offspring_x = 1;
inline constexpr std::uint64_t offspring_y = 2;
inline constexpr std::uint64_t tie_break = 3;
inline constexpr std::uint64_t csa_population = 4;
inline constexpr std::uint64_t trial = 5;
inline constexpr std::uint64_t bernoulli_feed = 6;
} // namespace stream_role

/// Per-run generator bundle: one substream per position per offspring role
/// plus one shared tie-break stream. A custom stream-id layout reassigns
/// which derived stream each position uses; permuting the layout permutes
/// the sampled trajectory position-wise.
class RunRng {
public:
    RunRng(std::uint64_t master, std::size_t n) : RunRng(master, n, identity_ids(n)) {}

    RunRng(std::uint64_t master, std::size_t n, const std::vector<std::uint32_t>& stream_ids)
        : tie_(derive_seed(master, {stream_role::tie_break, 0})) {
        x_.reserve(n);
        y_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t id = stream_ids.at(i);
            x_.emplace_back(derive_seed(master, {stream_role::offspring_x, id}));
            y_.emplace_back(derive_seed(master, {stream_role::offspring_y, id}));
        }
    }

    Substream& x_stream(std::size_t i) { return x_[i]; }
    Substream& y_stream(std::size_t i) { return y_[i]; }
    Substream& tie_stream() { return tie_; }

    std::span<Substream> x_streams() { return x_; }
    std::span<Substream> y_streams() { return y_; }

    static std::vector<std::uint32_t> identity_ids(std::size_t n) {
        std::vector<std::uint32_t> ids(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
        return ids;
    }

private:
    std::vector<Substream> x_, y_;
    Substream tie_;
};

} // namespace edalab
