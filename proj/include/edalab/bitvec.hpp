#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edalab {

/// Fixed-length bit string stored as packed 64-bit words.
///
/// Position 0 is the leftmost bit of the string. Bits beyond size() in the
/// last word are kept at zero, so popcounts and word-wise scans need no
/// extra masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
            }
        }
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    /// Overwrites an entire word; bits beyond size() are cleared.
    void set_word(std::size_t w, std::uint64_t value) { words_[w] = value & word_mask(w); }

    std::size_t word_count() const { return words_.size(); }

    std::span<const std::uint64_t> words() const { return words_; }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Length of the all-ones prefix starting at position 0.
    std::size_t leading_ones() const {
        std::size_t run = 0;
        for (std::uint64_t w : words_) {
            const int ones = std::countr_one(w);
            run += static_cast<std::size_t>(ones);
            if (ones < 64) break;
        }
        return run < n_ ? run : n_;
    }

    bool all_ones() const { return count_ones() == n_; }

    bool operator==(const BitVector&) const = default;

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

private:
    std::uint64_t word_mask(std::size_t w) const {
        if (w + 1 < words_.size() || n_ % 64 == 0) return ~std::uint64_t{0};
        return ~std::uint64_t{0} >> (64 - n_ % 64);
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace edalab
