#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "weylcdma/sequences.hpp"
#include "weylcdma/types.hpp"

namespace weylcdma {

enum class PhaseMode { zero, uniform };
enum class OffsetMode { uniform, fixed };

/// Settings for chip-synchronous BER runs. Each point simulates
/// `symbols_per_user` reference-user bits against K - 1 interferers with
/// random data bits, per-mode carrier phase, and per-mode chip offset.
/// `users` and `ebn0_db` are sweep axes; run_ber takes one point.
struct SimConfig {
    Family family = Family::weyl;
    int n = 63;            // spreading factor N (Weyl; Gold derives it from the degree)
    double sigma = 0.0;    // Weyl irrational offset, 0 <= sigma < 1
    GoldParams gold{};     // Gold family parameters; taps/seed 0 means the built-in pair
    std::vector<int> users{10};
    std::vector<double> ebn0_db{10.0};  // +inf means noiseless
    std::int64_t symbols_per_user = 10000;
    std::uint64_t rng_seed = 1;
    PhaseMode phase_mode = PhaseMode::zero;
    OffsetMode offset_mode = OffsetMode::uniform;
    std::vector<int> fixed_offsets;  // one per interferer when offset_mode is fixed
};

struct BerResult {
    Family family = Family::weyl;
    int n = 0;
    int users = 0;
    double ebn0_db = 0.0;
    std::int64_t bits_simulated = 0;
    std::int64_t bit_errors = 0;
    double ber = 0.0;
    double ci95 = 0.0;  // normal-approximation half width; rule of three at zero errors
};

/// Despreading correlations of every interferer against the reference user,
/// precomputed for all chip offsets and all four (previous, current) bit
/// combinations. Lets the symbol loop replace O(N) correlation work per
/// interferer with a table lookup.
class InterferenceTable {
   public:
    /// sequences[0] is the reference user; the rest are interferers. All
    /// must share the same length.
    explicit InterferenceTable(const std::vector<ComplexVector>& sequences);

    /// Correlation of interferer `user` (1-based position in the sequence
    /// list) against the reference at chip offset `gap` in [0, N).
    Complex value(int user, int gap, BitPair bits) const;

    int users() const { return users_; }
    int length() const { return length_; }

   private:
    int users_ = 0;
    int length_ = 0;
    std::vector<Complex> table_;
};

/// Output-SNR floor for N-chip spreading with K equal-power users at linear
/// energy ratio Eb/N0 = e_over_n0:
///   1 / sqrt((K-1)/(6N) + 1/(2 e_over_n0)).
/// Pass +inf for the noiseless limit sqrt(6N/(K-1)); K = 1 noiseless is
/// unbounded and returns +inf.
double snr_lower_bound(int users, int length, double e_over_n0);

/// Simulates one (users, Eb/N0-in-dB) point. Every symbol draws from its
/// own counter-derived random stream keyed on (seed, users, ebn0, symbol),
/// so the result is independent of scheduling and of the other points in a
/// sweep.
BerResult run_ber(const SimConfig& cfg, int users, double ebn0_db);

using ProgressFn = std::function<void(const BerResult&)>;

/// Full grid over cfg.users x cfg.ebn0_db, in that nesting order.
/// `on_point`, when set, fires after each completed point.
std::vector<BerResult> sweep(const SimConfig& cfg, const ProgressFn& on_point = nullptr);

/// Reads `key = value` lines (# comments, blank lines allowed) into a
/// SimConfig. Keys mirror the SimConfig fields: family, n, sigma, k,
/// ebn0_db, symbols_per_user, rng_seed, phase_mode, offsets_mode,
/// fixed_offsets, gold_degree, gold_taps_a, gold_taps_b, gold_seed_a,
/// gold_seed_b. `k` and `ebn0_db` accept comma-separated sweep lists.
/// Unknown keys and malformed values throw std::invalid_argument.
SimConfig parse_sim_config(std::istream& in);
SimConfig load_sim_config(const std::string& path);

}  // namespace weylcdma
