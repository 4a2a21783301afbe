#pragma once

#include "satlink/sim_engine.hpp"

#include <cstdint>
#include <vector>

namespace satlink {

/// Expected per-bin pair count and its binomial standard deviation.
struct BinMoments {
    double bin_start = 0.0;
    double bin_width = 1.0;
    std::vector<double> mu;
    std::vector<double> sigma;

    std::size_t bins() const { return mu.size(); }
};

enum class Series { leg_a, leg_b };

/// Walks the round schedule of `config` and sums, per confirmation bin, N_eff q and
/// N_eff q (1 - q) with q = eta p_bsm and N_eff the latch-eligible photons of the round.
BinMoments predict_bin_moments(const SimConfig& config, Series series = Series::leg_a);

struct BinCheck {
    double bin_start = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    std::int64_t count = 0;
    double z = 0.0; ///< +-inf when sigma == 0 and count != mu
    bool evaluated = false;
};

struct ValidationReport {
    std::vector<BinCheck> bins;
    std::size_t bins_evaluated = 0;
    double fraction_within_2sigma = 1.0;
    double total_mu = 0.0;
    double total_sigma = 0.0;
    std::int64_t total_count = 0;
    double z_total = 0.0;
    bool verdict = true;
};

inline constexpr double kBinZLimit = 2.0;
inline constexpr double kRequiredFraction = 0.90;
inline constexpr double kTotalZLimit = 3.0;

/// Per-bin z-scores of `counts` against `moments`. Verdict: at least 90% of evaluated bins
/// with |z| <= 2 and |z_total| <= 3. Bins with mu == 0 and count == 0 are not evaluated.
ValidationReport compare(const std::vector<std::int64_t>& counts, const BinMoments& moments);
ValidationReport compare(const SimResult& sim, const BinMoments& moments, Series series = Series::leg_a);

/// Pools several runs of the same configuration: every (run, bin) pair is one evaluated
/// bin and the total is taken over all runs.
ValidationReport compare_ensemble(const std::vector<std::vector<std::int64_t>>& runs,
                                  const BinMoments& moments);

} // namespace satlink
