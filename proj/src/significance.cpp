#include "edalab/significance.hpp"

#include <cmath>
#include <stdexcept>

namespace edalab {

double significance_threshold(double epsilon, double mu, std::size_t n) {
    if (epsilon <= 0.0) throw std::invalid_argument("significance_threshold: epsilon must be positive");
    if (mu < 0.0) throw std::invalid_argument("significance_threshold: mu must be non-negative");
    if (n < 2) throw std::invalid_argument("significance_threshold: n must be at least 2");
    const double log_n = std::log(static_cast<double>(n));
    return epsilon * std::max(std::sqrt(mu * log_n), log_n);
}

SigEvaluator::SigEvaluator(SignificanceParams params)
    : params_(params), log_n_(std::log(static_cast<double>(params.n))) {
    if (params_.epsilon <= 0.0) throw std::invalid_argument("sig: epsilon must be positive");
    if (params_.n < 1) throw std::invalid_argument("sig: n must be at least 1");
}

double SigEvaluator::surplus(double mu) const {
    return params_.epsilon * std::max(std::sqrt(mu * log_n_), log_n_);
}

SigEvaluator::TauCase SigEvaluator::classify(double tau) const {
    const double n = static_cast<double>(params_.n);
    if (tau == 0.5) return TauCase::half;
    if (tau == 1.0 - 1.0 / n) return TauCase::high;
    if (tau == 1.0 / n) return TauCase::low;
    throw std::invalid_argument("sig: tau must be one of 1/n, 1/2, 1-1/n");
}

void SigEvaluator::ensure_levels(std::size_t levels) const {
    const double n = static_cast<double>(params_.n);
    while (trigger_half_.size() < levels) {
        const double window = static_cast<double>(std::uint64_t{1} << trigger_half_.size());
        const double mu_half = window / 2.0;
        const double mu_rare = window / n;
        trigger_half_.push_back(mu_half + surplus(mu_half));
        trigger_rare_.push_back(mu_rare + surplus(mu_rare));
    }
}

SigResult SigEvaluator::evaluate_exact(TauCase c, const ExactHistory& h) const {
    const std::uint64_t len = h.size();
    std::size_t levels = 0;
    while ((std::uint64_t{1} << levels) <= len) ++levels;
    ensure_levels(levels);

    for (std::size_t m = 0; m < levels; ++m) {
        const std::uint64_t window = std::uint64_t{1} << m;
        const std::uint64_t ones = h.ones_in_suffix(window);
        const std::uint64_t zeros = window - ones;
        switch (c) {
            case TauCase::half:
                if (static_cast<double>(ones) >= trigger_half_[m]) return {SigVerdict::up, window};
                if (static_cast<double>(zeros) >= trigger_half_[m]) return {SigVerdict::down, window};
                break;
            case TauCase::high:
                if (static_cast<double>(zeros) >= trigger_rare_[m]) return {SigVerdict::down, window};
                break;
            case TauCase::low:
                if (static_cast<double>(ones) >= trigger_rare_[m]) return {SigVerdict::up, window};
                break;
        }
    }
    return {SigVerdict::stay, std::nullopt};
}

SigResult SigEvaluator::evaluate_condensed(TauCase c, const CondensedHistory& h) const {
    const double n = static_cast<double>(params_.n);
    SigResult result;
    h.for_each_pow2_suffix([&](std::uint64_t window, const SuffixCount& sc) {
        const double eff = static_cast<double>(sc.length);
        const double ones = static_cast<double>(sc.ones);
        const double zeros = eff - ones;
        switch (c) {
            case TauCase::half: {
                const double trigger = eff / 2.0 + surplus(eff / 2.0);
                if (ones >= trigger) {
                    result = {SigVerdict::up, window};
                    return false;
                }
                if (zeros >= trigger) {
                    result = {SigVerdict::down, window};
                    return false;
                }
                break;
            }
            case TauCase::high: {
                const double trigger = eff / n + surplus(eff / n);
                if (zeros >= trigger) {
                    result = {SigVerdict::down, window};
                    return false;
                }
                break;
            }
            case TauCase::low: {
                const double trigger = eff / n + surplus(eff / n);
                if (ones >= trigger) {
                    result = {SigVerdict::up, window};
                    return false;
                }
                break;
            }
        }
        return true;
    });
    return result;
}

SigResult SigEvaluator::evaluate(double tau, const History& h) const {
    const TauCase c = classify(tau);
    if (h.mode() == HistoryMode::exact) return evaluate_exact(c, h.exact());
    return evaluate_condensed(c, h.condensed());
}

SigResult sig(double tau, const History& h, const SignificanceParams& params) {
    return SigEvaluator(params).evaluate(tau, h);
}

} // namespace edalab
