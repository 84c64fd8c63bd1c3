#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edalab/bitvec.hpp"
#include "edalab/fitness.hpp"
#include "edalab/history.hpp"
#include "edalab/rng.hpp"
#include "edalab/significance.hpp"

namespace edalab {

/// Draws one offspring into `out`: bit i is 1 iff the next uniform from
/// streams[i] is strictly below freq[i].
void sample_offspring(const std::vector<double>& freq, std::span<Substream> streams, BitVector& out);

struct Selection {
    bool x_won = false;
    bool tied = false;
};

/// The strictly fitter individual wins; ties are broken by a fair coin
/// from the dedicated tie-break stream.
Selection select_winner(const BitVector& x, const BitVector& y, const Objective& f, Substream& tie);

enum class FailureKind { budget_exhausted, wrong_fixation };
std::string_view failure_kind_name(FailureKind k);

struct RunResult {
    bool success = false;
    std::uint64_t evaluations = 0;
    std::uint64_t iterations = 0;
    std::optional<FailureKind> failure_kind;
    std::vector<double> final_frequencies;            // frequency-based algorithms
    std::vector<BitVector> final_population;          // CSA
    std::optional<std::uint64_t> first_boundary_exit; // scGA: first iteration with a frequency outside (1-d, d)
    std::uint64_t restarts = 0;                       // CSA
};

// ---- sig-cGA ---------------------------------------------------------------

struct SigCgaConfig {
    double epsilon = 13.0;
    HistoryMode history_mode = HistoryMode::exact;
};

/// The history-backed compact GA. Frequencies take only the values 1/n,
/// 1/2 and 1-1/n. Each iteration samples two offspring, appends the
/// winner's bits to the per-position histories, and moves a frequency only
/// on a significant surplus of ones or zeros; a moved frequency gets its
/// history cleared.
class SigCga {
public:
    SigCga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t seed);
    /// `stream_ids[i]` selects which derived substream position i draws
    /// from; permuting the layout permutes the trajectory position-wise.
    SigCga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t seed,
           const std::vector<std::uint32_t>& stream_ids);

    /// One iteration (two offspring). Returns true iff an optimum was sampled.
    bool step();

    const std::vector<double>& frequencies() const { return freq_; }
    const History& history(std::size_t i) const { return histories_[i]; }
    std::uint64_t iterations() const { return iterations_; }
    std::uint64_t evaluations() const { return evaluations_; }
    double tau_low() const { return tau_low_; }
    double tau_high() const { return tau_high_; }

private:
    const Objective* f_;
    std::size_t n_;
    SigEvaluator sig_;
    std::vector<double> freq_;
    std::vector<History> histories_;
    RunRng rng_;
    BitVector x_, y_;
    std::uint64_t iterations_ = 0;
    std::uint64_t evaluations_ = 0;
    double tau_low_, tau_high_;
};

RunResult run_sig_cga(const Objective& f, const SigCgaConfig& cfg, std::uint64_t max_evals,
                      std::uint64_t seed);

// ---- scGA ------------------------------------------------------------------

struct ScgaParams {
    double rho = 0.0; // step size
    double a = 0.0;   // extra decrease applied when moving toward 1/2
    double d = 0.0;   // commit border: reaching [d, 1] locks the frequency at 1
};

/// rho = 1/(2 ln n), a = rho/2, d = 5/6.
ScgaParams default_scga_params(std::size_t n);

/// One position update given the winner bit x and loser bit y; branch
/// conditions use the pre-update frequency. Results are clamped to [0, 1];
/// 0 and 1 are absorbing because both offspring then sample equal bits.
double scga_update_position(double tau, bool x_bit, bool y_bit, const ScgaParams& p);

class Scga {
public:
    Scga(const Objective& f, const ScgaParams& p, std::uint64_t seed);

    bool step();

    const std::vector<double>& frequencies() const { return freq_; }
    std::uint64_t iterations() const { return iterations_; }
    std::uint64_t evaluations() const { return evaluations_; }
    /// First iteration (1-based) after which some frequency was outside
    /// (1-d, d); empty while all frequencies are still inside.
    std::optional<std::uint64_t> first_boundary_exit() const { return first_boundary_exit_; }

private:
    const Objective* f_;
    std::size_t n_;
    ScgaParams params_;
    std::vector<double> freq_;
    RunRng rng_;
    BitVector x_, y_;
    std::uint64_t iterations_ = 0;
    std::uint64_t evaluations_ = 0;
    std::optional<std::uint64_t> first_boundary_exit_;
};

RunResult run_scga(const Objective& f, const ScgaParams& p, std::uint64_t max_evals,
                   std::uint64_t seed);

// ---- classic cGA -----------------------------------------------------------

/// tau + rho * (x - y), clamped to [1/n, 1-1/n].
double cga_update_position(double tau, bool x_bit, bool y_bit, double rho, std::size_t n);

/// 1/(sqrt(n) ln n); at this step size the n log n regime is reachable.
double default_cga_rho(std::size_t n);

class Cga {
public:
    Cga(const Objective& f, double rho, std::uint64_t seed);

    bool step();

    const std::vector<double>& frequencies() const { return freq_; }
    std::uint64_t iterations() const { return iterations_; }
    std::uint64_t evaluations() const { return evaluations_; }

private:
    const Objective* f_;
    std::size_t n_;
    double rho_;
    std::vector<double> freq_;
    RunRng rng_;
    BitVector x_, y_;
    std::uint64_t iterations_ = 0;
    std::uint64_t evaluations_ = 0;
};

RunResult run_cga(const Objective& f, double rho, std::uint64_t max_evals, std::uint64_t seed);

// ---- convex search ----------------------------------------------------------

/// ceil(8 * log2(4 n^2 + n)).
std::size_t csa_default_mu(std::size_t n);

struct CsaParams {
    std::size_t mu = 0;
    bool restart = false;
    std::uint64_t max_iterations = 0; // 0 = no cap
};

/// Population search over the convex hull of the reduced parent
/// population: positions where the survivors agree are fixed, the rest are
/// resampled uniformly.
class Csa {
public:
    enum class StepOutcome {
        advanced, // sampled a fresh offspring population (mu evaluations)
        plateau,  // all fitness values equal but individuals differ; population unchanged
        terminal  // population collapsed to copies of one individual
    };

    Csa(const Objective& f, std::size_t mu, std::uint64_t seed);
    /// Starts from a given population (primarily for tests); counts its
    /// evaluation like a sampled generation.
    Csa(const Objective& f, std::vector<BitVector> population, std::uint64_t seed);

    StepOutcome step();

    /// Fresh random population, evaluated; used by the restart strategy.
    void reinitialize();

    const std::vector<BitVector>& population() const { return pop_; }
    const BitVector& terminal_individual() const;
    bool optimum_sampled() const { return optimum_sampled_; }
    std::uint64_t evaluations() const { return evaluations_; }
    std::uint64_t generations() const { return generations_; }

private:
    void sample_random_population();
    void note_sampled(const BitVector& ind);

    const Objective* f_;
    std::size_t n_;
    std::size_t mu_;
    Substream stream_;
    std::vector<BitVector> pop_;
    std::optional<BitVector> terminal_;
    bool optimum_sampled_ = false;
    std::uint64_t evaluations_ = 0;
    std::uint64_t generations_ = 0;
};

/// Runs until an optimum is sampled, the population collapses to a
/// non-optimum (restart or report wrong_fixation), or a budget/iteration
/// cap is hit. Evaluations accumulate across restarts.
RunResult run_csa(const Objective& f, const CsaParams& p, std::uint64_t max_evals,
                  std::uint64_t seed);

} // namespace edalab
