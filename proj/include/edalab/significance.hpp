#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edalab/history.hpp"

namespace edalab {

/// Parameters of the significance detector. The run-time guarantees assume
/// epsilon > 12; smaller values only make the detector trigger-happy, so
/// callers should warn rather than reject them.
struct SignificanceParams {
    double epsilon = 13.0;
    std::size_t n = 0;

    bool below_recommended_epsilon() const { return epsilon <= 12.0; }
};

/// Surplus over the expected count that counts as significant:
/// epsilon * max(sqrt(mu * ln n), ln n).
/// Throws std::invalid_argument for epsilon <= 0, mu < 0, or n < 2.
double significance_threshold(double epsilon, double mu, std::size_t n);

enum class SigVerdict { up, down, stay };

struct SigResult {
    SigVerdict verdict = SigVerdict::stay;
    std::optional<std::uint64_t> triggering_length; // set iff verdict != stay
};

/// Scans suffix windows of length 1, 2, 4, ... up to the history length,
/// ascending, and stops at the first window whose one- (or zero-) count
/// clears the significance threshold for the given frequency:
///
///   tau = 1/2:     up   if ones(H[2^m])  >= 2^m/2 + s(eps, 2^m/2)
///                  down if zeros(H[2^m]) >= 2^m/2 + s(eps, 2^m/2)
///   tau = 1-1/n:   down if zeros(H[2^m]) >= 2^m/n + s(eps, 2^m/n)
///   tau = 1/n:     up   if ones(H[2^m])  >= 2^m/n + s(eps, 2^m/n)
///
/// Only windows that are exact powers of two at most |H| are checked. In
/// condensed mode the query widens to the enclosing whole-block suffix and
/// the expectation term uses the effective length instead of 2^m.
///
/// Admissible tau values are 1/n, 1/2 and 1-1/n; anything else throws
/// std::invalid_argument. n = 1 degenerates gracefully: ln 1 = 0 makes
/// every threshold zero, which is harmless because at n = 1 the value 1/n
/// is 1 and an optimum ends the run before a verdict can misdirect it.
SigResult sig(double tau, const History& h, const SignificanceParams& params);

/// Precomputes per-window trigger counts for one (epsilon, n) pair so the
/// per-append scan compares plain counts against cached doubles. One
/// instance per run; the lazily grown cache makes it single-owner state.
class SigEvaluator {
public:
    explicit SigEvaluator(SignificanceParams params);

    SigResult evaluate(double tau, const History& h) const;
    const SignificanceParams& params() const { return params_; }

private:
    enum class TauCase { half, high, low };

    TauCase classify(double tau) const;
    double surplus(double mu) const; // epsilon * max(sqrt(mu ln n), ln n)
    void ensure_levels(std::size_t levels) const;
    SigResult evaluate_exact(TauCase c, const ExactHistory& h) const;
    SigResult evaluate_condensed(TauCase c, const CondensedHistory& h) const;

    SignificanceParams params_;
    double log_n_;
    mutable std::vector<double> trigger_half_; // window 2^m, hypothesis rate 1/2
    mutable std::vector<double> trigger_rare_; // window 2^m, hypothesis rate 1/n
};

} // namespace edalab
