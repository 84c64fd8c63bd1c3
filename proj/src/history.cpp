#include "edalab/history.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace edalab {

HistoryMode history_mode_from_name(std::string_view name) {
    if (name == "exact") return HistoryMode::exact;
    if (name == "condensed") return HistoryMode::condensed;
    throw std::invalid_argument("unknown history mode: " + std::string(name));
}

std::string_view history_mode_name(HistoryMode m) {
    return m == HistoryMode::exact ? "exact" : "condensed";
}

// ---- ExactHistory ---------------------------------------------------------

void ExactHistory::append(bool bit) {
    const std::uint64_t pos = size_;
    if ((pos & 63) == 0) bits_.push_back(0);
    if (bit) bits_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
    ++size_;
    total_ones_ += bit ? 1 : 0;

    for (std::size_t m = 0; m < window_ones_.size(); ++m) {
        const std::uint64_t window = std::uint64_t{1} << m;
        window_ones_[m] += bit ? 1 : 0;
        if (size_ > window) window_ones_[m] -= bit_at(size_ - 1 - window) ? 1 : 0;
    }
    // size_ just reached the next power of two: open that window level. It
    // spans the whole history at this moment, so it starts at total_ones_.
    if ((size_ & (size_ - 1)) == 0 && (std::uint64_t{1} << window_ones_.size()) == size_) {
        window_ones_.push_back(total_ones_);
    }
}

void ExactHistory::reset() {
    bits_.clear();
    size_ = 0;
    total_ones_ = 0;
    window_ones_.clear();
}

std::uint64_t ExactHistory::ones_in_suffix(std::uint64_t len) const {
    if (len == 0 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("ones_in_suffix: length must be a power of two");
    }
    if (len > size_) {
        throw std::invalid_argument("ones_in_suffix: length exceeds history size");
    }
    return window_ones_[static_cast<std::size_t>(std::countr_zero(len))];
}

// ---- CondensedHistory ------------------------------------------------------

void CondensedHistory::append(bool bit) {
    blocks_.push_back(Block{1, bit ? std::uint64_t{1} : std::uint64_t{0}});
    ++total_length_;
    last_append_merges_ = 0;

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = blocks_.size(); i >= 3; --i) {
            const std::size_t k = i - 1;
            if (blocks_[k].span == blocks_[k - 1].span && blocks_[k - 1].span == blocks_[k - 2].span) {
                blocks_[k - 2].span *= 2;
                blocks_[k - 2].ones += blocks_[k - 1].ones;
                blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(k - 1));
                ++last_append_merges_;
                merged = true;
                break;
            }
        }
    }
}

void CondensedHistory::reset() {
    blocks_.clear();
    total_length_ = 0;
    last_append_merges_ = 0;
}

std::uint64_t CondensedHistory::total_ones() const {
    std::uint64_t ones = 0;
    for (const Block& b : blocks_) ones += b.ones;
    return ones;
}

SuffixCount CondensedHistory::ones_in_block_suffix(std::uint64_t len) const {
    if (len == 0 || len > total_length_) {
        throw std::invalid_argument("ones_in_block_suffix: length out of range");
    }
    SuffixCount acc;
    for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
        acc.length += it->span;
        acc.ones += it->ones;
        if (acc.length >= len) break;
    }
    return acc;
}

// ---- History ----------------------------------------------------------------

History::History(HistoryMode mode) {
    if (mode == HistoryMode::exact) {
        impl_.emplace<ExactHistory>();
    } else {
        impl_.emplace<CondensedHistory>();
    }
}

HistoryMode History::mode() const {
    return std::holds_alternative<ExactHistory>(impl_) ? HistoryMode::exact : HistoryMode::condensed;
}

void History::append(bool bit) {
    std::visit([bit](auto& h) { h.append(bit); }, impl_);
}

void History::reset() {
    std::visit([](auto& h) { h.reset(); }, impl_);
}

std::uint64_t History::size() const {
    return std::visit([](const auto& h) { return h.size(); }, impl_);
}

SuffixCount History::suffix_count(std::uint64_t len) const {
    if (const auto* ex = std::get_if<ExactHistory>(&impl_)) {
        return SuffixCount{len, ex->ones_in_suffix(len)};
    }
    return std::get<CondensedHistory>(impl_).ones_in_block_suffix(len);
}

const ExactHistory& History::exact() const {
    if (const auto* ex = std::get_if<ExactHistory>(&impl_)) return *ex;
    throw std::logic_error("History: not in exact mode");
}

const CondensedHistory& History::condensed() const {
    if (const auto* co = std::get_if<CondensedHistory>(&impl_)) return *co;
    throw std::logic_error("History: not in condensed mode");
}

} // namespace edalab
