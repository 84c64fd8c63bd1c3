#include "edalab/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edalab {

void sample_offspring(const std::vector<double>& freq, std::span<Substream> streams, BitVector& out) {
    for (std::size_t i = 0; i < freq.size(); ++i) {
        out.set(i, streams[i].bernoulli(freq[i]));
    }
}

Selection select_winner(const BitVector& x, const BitVector& y, const Objective& f, Substream& tie) {
    switch (f.compare(x, y)) {
        case Ordering::x_better: return {true, false};
        case Ordering::y_better: return {false, false};
        case Ordering::equal: break;
    }
    return {tie.next_unit() < 0.5, true};
}

std::string_view failure_kind_name(FailureKind k) {
    return k == FailureKind::budget_exhausted ? "budget_exhausted" : "wrong_fixation";
}

namespace {

void require_budget(std::uint64_t max_evals) {
    if (max_evals < 2) throw std::invalid_argument("run: evaluation budget must be at least 2");
}

template <typename Alg>
RunResult run_pairwise_sampler(Alg& alg, std::uint64_t max_evals) {
    require_budget(max_evals);
    bool success = false;
    while (alg.evaluations() + 2 <= max_evals) {
        if (alg.step()) {
            success = true;
            break;
        }
    }
    RunResult r;
    r.success = success;
    r.evaluations = alg.evaluations();
    r.iterations = alg.iterations();
    if (!success) r.failure_kind = FailureKind::budget_exhausted;
    r.final_frequencies = alg.frequencies();
    return r;
}

} // namespace

// ---- sig-cGA ---------------------------------------------------------------

SigCga::SigCga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t seed)
    : SigCga(f, cfg, seed, RunRng::identity_ids(f.dimension())) {}

SigCga::SigCga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t seed,
               const std::vector<std::uint32_t>& stream_ids)
    : f_(&f),
      n_(f.dimension()),
      sig_(SignificanceParams{cfg.epsilon, f.dimension()}),
      freq_(f.dimension(), 0.5),
      histories_(f.dimension(), History(cfg.history_mode)),
      rng_(seed, f.dimension(), stream_ids),
      x_(f.dimension()),
      y_(f.dimension()),
      tau_low_(1.0 / static_cast<double>(f.dimension())),
      tau_high_(1.0 - 1.0 / static_cast<double>(f.dimension())) {
    if (n_ < 1) throw std::invalid_argument("sig-cGA: n must be at least 1");
}

bool SigCga::step() {
    sample_offspring(freq_, rng_.x_streams(), x_);
    sample_offspring(freq_, rng_.y_streams(), y_);
    evaluations_ += 2;
    const bool sampled_optimum = x_.all_ones() || y_.all_ones();

    const Selection sel = select_winner(x_, y_, *f_, rng_.tie_stream());
    const BitVector& winner = sel.x_won ? x_ : y_;

    for (std::size_t i = 0; i < n_; ++i) {
        histories_[i].append(winner.get(i));
        const SigResult verdict = sig_.evaluate(freq_[i], histories_[i]);
        double next = freq_[i];
        if (verdict.verdict == SigVerdict::up) {
            next = tau_high_;
        } else if (verdict.verdict == SigVerdict::down) {
            next = tau_low_;
        }
        if (next != freq_[i]) {
            freq_[i] = next;
            histories_[i].reset();
        }
    }
    ++iterations_;
    return sampled_optimum;
}

RunResult run_sig_cga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t max_evals,
                      std::uint64_t seed) {
    SigCga alg(f, cfg, seed);
    return run_pairwise_sampler(alg, max_evals);
}

// ---- scGA ------------------------------------------------------------------

ScgaParams default_scga_params(std::size_t n) {
    // Guard tiny n: ln 1 = 0 would blow up the step size.
    const double log_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
    ScgaParams p;
    p.rho = 1.0 / (2.0 * log_n);
    p.a = p.rho / 2.0;
    p.d = 5.0 / 6.0;
    return p;
}

double scga_update_position(double tau, bool x_bit, bool y_bit, const ScgaParams& p) {
    if (x_bit == y_bit) return tau;
    double next = tau;
    if (x_bit) { // winner sampled 1, loser 0
        if (tau <= 0.5) {
            next = tau + p.rho + p.a;
        } else if (tau < p.d) {
            next = tau + p.rho;
        } else {
            next = 1.0;
        }
    } else { // winner sampled 0, loser 1
        if (tau >= 0.5) {
            next = tau - p.rho - p.a;
        } else if (tau > 1.0 - p.d) {
            next = tau - p.rho;
        } else {
            next = 0.0;
        }
    }
    return std::clamp(next, 0.0, 1.0);
}

Scga::Scga(const Objective& f, const ScgaParams& p, std::uint64_t seed)
    : f_(&f),
      n_(f.dimension()),
      params_(p),
      freq_(f.dimension(), 0.5),
      rng_(seed, f.dimension()),
      x_(f.dimension()),
      y_(f.dimension()) {
    if (params_.rho <= 0.0 || params_.rho >= 1.0) throw std::invalid_argument("scGA: rho must be in (0, 1)");
    if (params_.a < 0.0) throw std::invalid_argument("scGA: a must be non-negative");
    if (params_.d <= 0.5 || params_.d >= 1.0) throw std::invalid_argument("scGA: d must be in (1/2, 1)");
}

bool Scga::step() {
    sample_offspring(freq_, rng_.x_streams(), x_);
    sample_offspring(freq_, rng_.y_streams(), y_);
    evaluations_ += 2;
    const bool sampled_optimum = x_.all_ones() || y_.all_ones();

    const Selection sel = select_winner(x_, y_, *f_, rng_.tie_stream());
    const BitVector& winner = sel.x_won ? x_ : y_;
    const BitVector& loser = sel.x_won ? y_ : x_;

    ++iterations_;
    for (std::size_t i = 0; i < n_; ++i) {
        const bool wb = winner.get(i);
        const bool lb = loser.get(i);
        if (wb == lb) continue;
        freq_[i] = scga_update_position(freq_[i], wb, lb, params_);
        if (!first_boundary_exit_ && (freq_[i] >= params_.d || freq_[i] <= 1.0 - params_.d)) {
            first_boundary_exit_ = iterations_;
        }
    }
    return sampled_optimum;
}

RunResult run_scga(const Objective& f, const ScgaParams& p, std::uint64_t max_evals,
                   std::uint64_t seed) {
    Scga alg(f, p, seed);
    RunResult r = run_pairwise_sampler(alg, max_evals);
    r.first_boundary_exit = alg.first_boundary_exit();
    return r;
}

// ---- classic cGA -----------------------------------------------------------

double default_cga_rho(std::size_t n) {
    const double dn = static_cast<double>(std::max<std::size_t>(n, 2));
    return 1.0 / (std::sqrt(dn) * std::log(dn));
}

double cga_update_position(double tau, bool x_bit, bool y_bit, double rho, std::size_t n) {
    if (x_bit == y_bit) return tau;
    const double lo = 1.0 / static_cast<double>(n);
    const double next = x_bit ? tau + rho : tau - rho;
    return std::clamp(next, lo, 1.0 - lo);
}

Cga::Cga(const Objective& f, double rho, std::uint64_t seed)
    : f_(&f),
      n_(f.dimension()),
      rho_(rho),
      freq_(f.dimension(), 0.5),
      rng_(seed, f.dimension()),
      x_(f.dimension()),
      y_(f.dimension()) {
    if (rho_ <= 0.0 || rho_ >= 1.0) throw std::invalid_argument("cGA: rho must be in (0, 1)");
}

bool Cga::step() {
    sample_offspring(freq_, rng_.x_streams(), x_);
    sample_offspring(freq_, rng_.y_streams(), y_);
    evaluations_ += 2;
    const bool sampled_optimum = x_.all_ones() || y_.all_ones();

    const Selection sel = select_winner(x_, y_, *f_, rng_.tie_stream());
    const BitVector& winner = sel.x_won ? x_ : y_;
    const BitVector& loser = sel.x_won ? y_ : x_;

    for (std::size_t i = 0; i < n_; ++i) {
        freq_[i] = cga_update_position(freq_[i], winner.get(i), loser.get(i), rho_, n_);
    }
    ++iterations_;
    return sampled_optimum;
}

RunResult run_cga(const Objective& f, double rho, std::uint64_t max_evals, std::uint64_t seed) {
    Cga alg(f, rho, seed);
    return run_pairwise_sampler(alg, max_evals);
}

// ---- convex search ----------------------------------------------------------

std::size_t csa_default_mu(std::size_t n) {
    const double arg = 4.0 * static_cast<double>(n) * static_cast<double>(n) + static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(8.0 * std::log2(arg)));
}

Csa::Csa(const Objective& f, std::size_t mu, std::uint64_t seed)
    : f_(&f),
      n_(f.dimension()),
      mu_(mu),
      stream_(derive_seed(seed, {stream_role::csa_population, 0})) {
    if (mu_ < 2) throw std::invalid_argument("CSA: mu must be at least 2");
    sample_random_population();
}

Csa::Csa(const Objective& f, std::vector<BitVector> population, std::uint64_t seed)
    : f_(&f),
      n_(f.dimension()),
      mu_(population.size()),
      stream_(derive_seed(seed, {stream_role::csa_population, 0})),
      pop_(std::move(population)) {
    if (mu_ < 2) throw std::invalid_argument("CSA: mu must be at least 2");
    evaluations_ += mu_;
    for (const BitVector& ind : pop_) note_sampled(ind);
}

void Csa::note_sampled(const BitVector& ind) {
    if (ind.all_ones()) optimum_sampled_ = true;
}

void Csa::sample_random_population() {
    pop_.assign(mu_, BitVector(n_));
    const std::size_t words = pop_[0].word_count();
    for (BitVector& ind : pop_) {
        for (std::size_t w = 0; w < words; ++w) ind.set_word(w, stream_.next_u64());
        note_sampled(ind);
    }
    evaluations_ += mu_;
}

void Csa::reinitialize() {
    terminal_.reset();
    sample_random_population();
}

const BitVector& Csa::terminal_individual() const {
    if (!terminal_) throw std::logic_error("CSA: no terminal individual");
    return *terminal_;
}

Csa::StepOutcome Csa::step() {
    ++generations_;

    bool all_identical = true;
    for (std::size_t j = 1; j < mu_ && all_identical; ++j) {
        if (!(pop_[j] == pop_[0])) all_identical = false;
    }
    if (all_identical) {
        terminal_ = pop_[0];
        return StepOutcome::terminal;
    }

    // Locate the lowest fitness level and whether all levels coincide.
    std::size_t worst = 0;
    bool all_equal_fitness = true;
    for (std::size_t j = 1; j < mu_; ++j) {
        const Ordering c = f_->compare(pop_[j], pop_[worst]);
        if (c != Ordering::equal) all_equal_fitness = false;
        if (c == Ordering::y_better) worst = j;
    }
    if (all_equal_fitness) return StepOutcome::plateau;

    // Reduced parent population: everyone strictly fitter than the worst
    // level. Consensus masks: a position is free when the survivors carry
    // both bit values there.
    const std::size_t words = pop_[0].word_count();
    std::vector<std::uint64_t> and_mask(words, ~std::uint64_t{0});
    std::vector<std::uint64_t> or_mask(words, 0);
    for (std::size_t j = 0; j < mu_; ++j) {
        if (f_->compare(pop_[j], pop_[worst]) != Ordering::x_better) continue;
        const auto w = pop_[j].words();
        for (std::size_t k = 0; k < words; ++k) {
            and_mask[k] &= w[k];
            or_mask[k] |= w[k];
        }
    }

    for (BitVector& ind : pop_) {
        for (std::size_t k = 0; k < words; ++k) {
            const std::uint64_t free = or_mask[k] & ~and_mask[k];
            ind.set_word(k, and_mask[k] | (stream_.next_u64() & free));
        }
        note_sampled(ind);
    }
    evaluations_ += mu_;
    return StepOutcome::advanced;
}

RunResult run_csa(const Objective& f, const CsaParams& p, std::uint64_t max_evals,
                  std::uint64_t seed) {
    if (p.mu < 2) throw std::invalid_argument("CSA: mu must be at least 2");
    if (max_evals < p.mu) throw std::invalid_argument("CSA: budget below one population evaluation");

    Csa alg(f, p.mu, seed);
    RunResult r;
    auto finish = [&](bool success, std::optional<FailureKind> kind) {
        r.success = success;
        r.failure_kind = success ? std::nullopt : kind;
        r.evaluations = alg.evaluations();
        r.iterations = alg.generations();
        r.final_population = alg.population();
        return r;
    };

    if (alg.optimum_sampled()) return finish(true, std::nullopt);
    while (true) {
        if (p.max_iterations != 0 && alg.generations() >= p.max_iterations) {
            return finish(false, FailureKind::budget_exhausted);
        }
        if (alg.evaluations() + p.mu > max_evals) {
            return finish(false, FailureKind::budget_exhausted);
        }
        const Csa::StepOutcome out = alg.step();
        if (alg.optimum_sampled()) return finish(true, std::nullopt);
        if (out == Csa::StepOutcome::terminal) {
            if (!p.restart) return finish(false, FailureKind::wrong_fixation);
            alg.reinitialize();
            ++r.restarts;
            if (alg.optimum_sampled()) return finish(true, std::nullopt);
        } else if (out == Csa::StepOutcome::plateau && p.max_iterations == 0) {
            // A plateau population reproduces itself verbatim, so without an
            // iteration cap the run can never spend another evaluation.
            return finish(false, FailureKind::budget_exhausted);
        }
    }
}

} // namespace edalab
