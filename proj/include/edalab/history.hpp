#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace edalab {

enum class HistoryMode { exact, condensed };

/// Accepts "exact" or "condensed"; throws std::invalid_argument otherwise.
HistoryMode history_mode_from_name(std::string_view name);
std::string_view history_mode_name(HistoryMode m);

/// Result of a suffix query: `ones` set bits among the last `length` entries.
struct SuffixCount {
    std::uint64_t length = 0;
    std::uint64_t ones = 0;
};

/// Append-only bit sequence with O(log) per-append maintenance of the
/// one-count over every power-of-two suffix. The count for window 2^m is a
/// rolling sum: each append adds the incoming bit and subtracts the bit
/// that leaves the window.
class ExactHistory {
public:
    void append(bool bit);
    void reset();

    std::uint64_t size() const { return size_; }
    std::uint64_t total_ones() const { return total_ones_; }

    /// Bit at 0-based index i counted from the oldest entry.
    bool bit_at(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }

    /// Ones among the last `len` bits. `len` must be a power of two and at
    /// most size(); anything else throws std::invalid_argument.
    std::uint64_t ones_in_suffix(std::uint64_t len) const;

private:
    std::vector<std::uint64_t> bits_;
    std::uint64_t size_ = 0;
    std::uint64_t total_ones_ = 0;
    std::vector<std::uint64_t> window_ones_; // index m covers the last 2^m bits
};

/// One block of a condensed history: `ones` set bits inside `span`
/// consecutive entries; spans are powers of two (including 1).
struct Block {
    std::uint64_t span = 0;
    std::uint64_t ones = 0;

    bool operator==(const Block&) const = default;
};

/// Logarithmic-memory history. Raw bits are not kept; instead the sequence
/// is summarized as a list of blocks, earliest first. Appending pushes a
/// span-1 block, then, scanning from the latest block backward, whenever
/// three consecutive blocks share a span the two earliest of the three are
/// merged into one block of doubled span, repeated until no triple
/// remains. Afterwards the list holds between one and two blocks of every
/// span 2^j up to the largest present.
class CondensedHistory {
public:
    void append(bool bit);
    void reset();

    std::uint64_t size() const { return total_length_; }
    std::uint64_t total_ones() const;
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Shortest whole-block suffix covering at least `len` entries. The
    /// returned length is always in [len, 2*len). Throws
    /// std::invalid_argument unless 1 <= len <= size().
    SuffixCount ones_in_block_suffix(std::uint64_t len) const;

    /// Number of block merges performed by the most recent append.
    std::uint64_t last_append_merges() const { return last_append_merges_; }

    /// Walks the blocks newest-first once and reports the block-suffix
    /// count for every power-of-two threshold <= size(), in ascending
    /// order. `fn(threshold, count)` returns false to stop early. This is
    /// what the significance scan uses instead of one walk per window.
    template <typename Fn>
    void for_each_pow2_suffix(Fn&& fn) const {
        std::uint64_t threshold = 1;
        SuffixCount acc;
        for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
            acc.length += it->span;
            acc.ones += it->ones;
            while (threshold <= total_length_ && acc.length >= threshold) {
                if (!fn(threshold, acc)) return;
                threshold <<= 1;
            }
        }
    }

private:
    std::vector<Block> blocks_;
    std::uint64_t total_length_ = 0;
    std::uint64_t last_append_merges_ = 0;
};

/// Mode-switched history facade used by the sig-cGA.
class History {
public:
    explicit History(HistoryMode mode);

    HistoryMode mode() const;
    void append(bool bit);
    void reset();
    std::uint64_t size() const;

    /// Unified suffix query. Exact mode requires a power-of-two length and
    /// returns it unchanged; condensed mode may widen the window to the
    /// enclosing whole-block suffix (less than twice as long).
    SuffixCount suffix_count(std::uint64_t len) const;

    const ExactHistory& exact() const;
    const CondensedHistory& condensed() const;

private:
    std::variant<ExactHistory, CondensedHistory> impl_;
};

} // namespace edalab
