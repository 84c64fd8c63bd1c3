#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "edalab/bitvec.hpp"

namespace edalab {

enum class FitnessKind { one_max, leading_ones, bin_val };

/// Accepts "onemax", "leadingones", "binval"; throws std::invalid_argument otherwise.
FitnessKind fitness_kind_from_name(std::string_view name);
std::string_view fitness_name(FitnessKind kind);

/// A benchmark function identified by kind and problem size. The all-ones
/// string is the unique maximizer of all three kinds.
struct FitnessFunction {
    FitnessKind kind;
    std::size_t n;
};

/// Number of ones.
std::size_t one_max(const BitVector& x);

/// Length of the maximal all-ones prefix.
std::size_t leading_ones(const BitVector& x);

/// The bit string read as a binary number (position 0 carries weight
/// 2^(n-1)), returned as a decimal string since the value does not fit a
/// machine word for large n. Only used for reporting; comparisons go
/// through compare().
std::string bin_val(const BitVector& x);

enum class Ordering { x_better, y_better, equal };

/// Value-order comparison of two individuals under f. BinVal compares
/// lexicographically from position 0, which is order-equivalent to the
/// weighted sum and avoids big-integer arithmetic in the sampling loop.
/// Throws std::invalid_argument if the lengths do not match f.n.
Ordering compare(const FitnessFunction& f, const BitVector& x, const BitVector& y);

/// Maximization objective interface consumed by the optimizers. All
/// algorithms only ever need order comparisons, never raw fitness values.
class Objective {
public:
    virtual ~Objective() = default;
    virtual std::size_t dimension() const = 0;
    virtual Ordering compare(const BitVector& x, const BitVector& y) const = 0;
};

class BenchmarkObjective final : public Objective {
public:
    BenchmarkObjective(FitnessKind kind, std::size_t n) : f_{kind, n} {}
    explicit BenchmarkObjective(FitnessFunction f) : f_(f) {}

    std::size_t dimension() const override { return f_.n; }
    Ordering compare(const BitVector& x, const BitVector& y) const override {
        return edalab::compare(f_, x, y);
    }
    const FitnessFunction& function() const { return f_; }

private:
    FitnessFunction f_;
};

} // namespace edalab
