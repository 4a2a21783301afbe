#pragma once

#include "satlink/pass_model.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace satlink {

/// Protocol and hardware constants of one satellite-ground leg.
struct LinkParams {
    double emission_period = 1e-6;     ///< T_em, s
    double acceptance_window = 1.5e-9; ///< w_i, s
    double p_bsm = 0.5;                ///< latching BSM success probability
    int m_sat = 10;                    ///< satellite memory slots m_S
    int m_ground = 10;                 ///< ground memory slots m_G (>= m_S)
    double processing_delay = 0.0;     ///< added to every round trip, s
    double light_speed = 299792458.0;

    void validate() const;
};

/// Channel state frozen over one round.
struct LinkState {
    double eta = 0.0;
    double t_rt = 0.0;
    double v_r = 0.0;
};

inline constexpr std::int64_t kUnboundedTrain = std::numeric_limits<std::int64_t>::max();

/// Per-photon arrival drift v_r T_em / c (signed).
double differential_shift(double v_r, const LinkParams& params);

/// Real-valued train bound w_i c / (|v_r| T_em); +inf when v_r == 0.
double train_length_bound(double v_r, const LinkParams& params);

/// Floor of train_length_bound, or kUnboundedTrain when the satellite has no range rate.
std::int64_t max_train_length(double v_r, const LinkParams& params);

/// p_bsm eta N / t_rt.
double single_link_rate(const LinkState& state, std::int64_t train_length, const LinkParams& params);

/// p_bsm (eta / t_rt) min(m_S, w_i c / (|v_r| T_em)).
double corrected_rate(const LinkState& state, const LinkParams& params);

/// 2 L / c plus the processing delay.
double round_trip_time(double distance_m, const LinkParams& params);

LinkState state_at(const PassSample& sample, const LinkParams& params);

/// Swapped rate of two legs holding m_a and m_b satellite slots: the smaller single-link rate.
double dual_rate(const LinkState& a, const LinkState& b, double m_a, double m_b,
                 const LinkParams& params_a, const LinkParams& params_b);

struct RealSplit {
    double m_a = 0.0;
    double m_b = 0.0;
};

struct IntSplit {
    int m_a = 0;
    int m_b = 0;

    bool operator==(const IntSplit&) const = default;
};

/// Real split equalising both legs: m_a = m_S x / (x + y) with x = t_rt/eta per leg.
RealSplit allocate_real(const LinkState& a, const LinkState& b, int m_sat);
/// As above with per-leg BSM probabilities folded into the cost, x = t_rt / (p_bsm eta).
/// Identical to the three-argument form when both legs share p_bsm.
RealSplit allocate_real(const LinkState& a, const LinkState& b, int m_sat,
                        const LinkParams& params_a, const LinkParams& params_b);

/// Integer split m_a = ceil((m_S - 1) x / (x + y)), m_b = m_S - m_a. Requires m_S >= 2.
IntSplit allocate_int(const LinkState& a, const LinkState& b, int m_sat);
IntSplit allocate_int(const LinkState& a, const LinkState& b, int m_sat,
                      const LinkParams& params_a, const LinkParams& params_b);

/// Throws ConfigError unless both profiles share epoch, step and sample times.
void check_aligned(const PassProfile& a, const PassProfile& b);

/// Fixed split chosen among the integer allocations of the co-visible samples: the one
/// with the most pairs over the whole pass. Ties resolve to the smallest m_a.
/// Throws NoOverlapError without a co-visible sample.
IntSplit best_static_split(const PassProfile& a, const PassProfile& b, int m_sat,
                           const LinkParams& params_a, const LinkParams& params_b);

/// Time series of analytic rates. `m_a`/`m_b` are filled only for two-leg series.
struct RateSeries {
    std::vector<double> t;
    std::vector<double> rate;
    std::vector<double> m_a;
    std::vector<double> m_b;
};

enum class DualPolicy { dynamic_real, dynamic_int, fixed };

/// Single-leg series with N = m_S; `corrected` applies the differential-latency cap.
RateSeries single_rate_series(const PassProfile& profile, const LinkParams& params, bool corrected);

/// Two-leg swapped-rate series. `fixed_split` is used only with DualPolicy::fixed.
RateSeries dual_rate_series(const PassProfile& a, const PassProfile& b, int m_sat, DualPolicy policy,
                            const LinkParams& params_a, const LinkParams& params_b,
                            IntSplit fixed_split = {});

/// Split used where the legs are not both visible: a lone visible leg gets every slot,
/// otherwise the symmetric integer split.
IntSplit fallback_split(bool a_visible, bool b_visible, int m_sat);

/// Per-sample allocations and rate envelopes for a two-leg pass.
struct AllocationResult {
    int m_sat = 0;
    std::vector<double> t;
    std::vector<double> m_A_real;
    std::vector<double> m_B_real;
    std::vector<int> m_A_int;
    std::vector<int> m_B_int;
    std::vector<double> rate_real;
    std::vector<double> rate_int;
    IntSplit static_split;
    std::vector<double> static_rate;
};

AllocationResult allocate_series(const PassProfile& a, const PassProfile& b, int m_sat,
                                 const LinkParams& params_a, const LinkParams& params_b);

/// Sum of rate x step over the series.
double integrated_pairs(const RateSeries& series, double step);
double integrated_pairs(const std::vector<double>& rate, double step);

} // namespace satlink
