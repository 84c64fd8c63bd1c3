#include "edalab/fitness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace edalab {

FitnessKind fitness_kind_from_name(std::string_view name) {
    if (name == "onemax") return FitnessKind::one_max;
    if (name == "leadingones") return FitnessKind::leading_ones;
    if (name == "binval") return FitnessKind::bin_val;
    throw std::invalid_argument("unknown fitness function name: " + std::string(name));
}

std::string_view fitness_name(FitnessKind kind) {
    switch (kind) {
        case FitnessKind::one_max: return "onemax";
        case FitnessKind::leading_ones: return "leadingones";
        case FitnessKind::bin_val: return "binval";
    }
    return "?";
}

std::size_t one_max(const BitVector& x) { return x.count_ones(); }

std::size_t leading_ones(const BitVector& x) { return x.leading_ones(); }

std::string bin_val(const BitVector& x) {
    // Schoolbook double-and-add on a little-endian decimal digit vector.
    std::vector<std::uint8_t> digits{0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint8_t carry = x.get(i) ? 1 : 0;
        for (auto& d : digits) {
            const std::uint8_t v = static_cast<std::uint8_t>(d * 2 + carry);
            d = static_cast<std::uint8_t>(v % 10);
            carry = static_cast<std::uint8_t>(v / 10);
        }
        while (carry) {
            digits.push_back(static_cast<std::uint8_t>(carry % 10));
            carry = static_cast<std::uint8_t>(carry / 10);
        }
    }
    std::string out(digits.size(), '0');
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out[digits.size() - 1 - i] = static_cast<char>('0' + digits[i]);
    }
    return out;
}

namespace {

Ordering from_counts(std::size_t cx, std::size_t cy) {
    if (cx > cy) return Ordering::x_better;
    if (cy > cx) return Ordering::y_better;
    return Ordering::equal;
}

/// Lexicographic dominance: the first differing position decides, and the
/// individual holding the 1 there has the larger binary value.
Ordering lexicographic_compare(const BitVector& x, const BitVector& y) {
    const auto xw = x.words();
    const auto yw = y.words();
    for (std::size_t w = 0; w < xw.size(); ++w) {
        const std::uint64_t diff = xw[w] ^ yw[w];
        if (diff) {
            const std::uint64_t lowest = diff & (~diff + 1);
            return (xw[w] & lowest) ? Ordering::x_better : Ordering::y_better;
        }
    }
    return Ordering::equal;
}

} // namespace

Ordering compare(const FitnessFunction& f, const BitVector& x, const BitVector& y) {
    if (x.size() != f.n || y.size() != f.n) {
        throw std::invalid_argument("compare: individual length does not match problem size");
    }
    switch (f.kind) {
        case FitnessKind::one_max: return from_counts(x.count_ones(), y.count_ones());
        case FitnessKind::leading_ones: return from_counts(x.leading_ones(), y.leading_ones());
        case FitnessKind::bin_val: return lexicographic_compare(x, y);
    }
    throw std::logic_error("compare: bad fitness kind");
}

} // namespace edalab
