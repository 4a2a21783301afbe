#include "satlink/validation.hpp"

#include "satlink/errors.hpp"

#include <cmath>
#include <limits>

namespace satlink {

namespace {

double zscore(double count, double mu, double sigma) {
    if (sigma > 0.0) {
        return (count - mu) / sigma;
    }
    if (std::abs(count - mu) <= 1e-9 * std::max(1.0, std::abs(mu))) {
        return 0.0;
    }
    return count > mu ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
}

void accumulate(ValidationReport& report, const std::vector<std::int64_t>& counts,
                const BinMoments& moments, double& variance, std::size_t& within) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
        BinCheck c;
        c.bin_start = moments.bin_start + static_cast<double>(i) * moments.bin_width;
        c.mu = moments.mu[i];
        c.sigma = moments.sigma[i];
        c.count = counts[i];
        c.evaluated = !(c.mu == 0.0 && c.count == 0);
        c.z = zscore(static_cast<double>(c.count), c.mu, c.sigma);
        if (c.evaluated) {
            ++report.bins_evaluated;
            within += std::abs(c.z) <= kBinZLimit ? 1 : 0;
        }
        report.total_mu += c.mu;
        report.total_count += c.count;
        variance += c.sigma * c.sigma;
        report.bins.push_back(c);
    }
}

void finish(ValidationReport& report, double variance, std::size_t within) {
    report.total_sigma = std::sqrt(variance);
    report.z_total = zscore(static_cast<double>(report.total_count), report.total_mu, report.total_sigma);
    if (report.bins_evaluated == 0) {
        report.fraction_within_2sigma = 1.0;
        report.verdict = true;
        return;
    }
    report.fraction_within_2sigma =
        static_cast<double>(within) / static_cast<double>(report.bins_evaluated);
    report.verdict = report.fraction_within_2sigma >= kRequiredFraction &&
                     std::abs(report.z_total) <= kTotalZLimit;
}

} // namespace

BinMoments predict_bin_moments(const SimConfig& config, Series series) {
    config.validate();
    const int wanted = series == Series::leg_a ? 0 : 1;
    if (wanted >= static_cast<int>(config.profiles.size())) {
        throw ConfigError("predict_bin_moments: configuration has no leg B");
    }
    const PassProfile& ref = config.profiles.front();
    BinMoments m;
    m.bin_start = ref.start_time();
    m.bin_width = config.bin_width;
    const auto bins = static_cast<std::size_t>(
        std::max(1.0, std::ceil((ref.horizon() - m.bin_start) / config.bin_width - 1e-9)));
    m.mu.assign(bins, 0.0);
    std::vector<double> variance(bins, 0.0);

    const LinkParams& params = config.legs[static_cast<std::size_t>(wanted)];
    for (const Round& r : plan_rounds(config)) {
        if (r.leg != wanted) {
            continue;
        }
        const double q = r.eta * params.p_bsm;
        const double n_eff = r.latch_eligible;
        auto bin = static_cast<std::size_t>(std::max(0.0, std::floor((r.confirm_time - m.bin_start) / m.bin_width)));
        bin = std::min(bin, bins - 1);
        m.mu[bin] += n_eff * q;
        variance[bin] += n_eff * q * (1.0 - q);
    }
    m.sigma.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        m.sigma[i] = std::sqrt(variance[i]);
    }
    return m;
}

ValidationReport compare(const std::vector<std::int64_t>& counts, const BinMoments& moments) {
    if (counts.size() != moments.bins()) {
        throw AlignmentError("compare: " + std::to_string(counts.size()) + " simulated bins vs " +
                             std::to_string(moments.bins()) + " predicted bins");
    }
    ValidationReport report;
    double variance = 0.0;
    std::size_t within = 0;
    accumulate(report, counts, moments, variance, within);
    finish(report, variance, within);
    return report;
}

ValidationReport compare(const SimResult& sim, const BinMoments& moments, Series series) {
    if (std::abs(sim.bin_start - moments.bin_start) > 1e-9 ||
        std::abs(sim.bin_width - moments.bin_width) > 1e-12) {
        throw AlignmentError("compare: simulated and predicted bin grids differ");
    }
    return compare(series == Series::leg_a ? sim.pairs_leg_a : sim.pairs_leg_b, moments);
}

ValidationReport compare_ensemble(const std::vector<std::vector<std::int64_t>>& runs,
                                  const BinMoments& moments) {
    ValidationReport report;
    double variance = 0.0;
    std::size_t within = 0;
    for (const auto& counts : runs) {
        if (counts.size() != moments.bins()) {
            throw AlignmentError("compare_ensemble: run bin count differs from prediction");
        }
        accumulate(report, counts, moments, variance, within);
    }
    finish(report, variance, within);
    return report;
}

} // namespace satlink
