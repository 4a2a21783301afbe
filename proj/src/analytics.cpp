#include "satlink/analytics.hpp"

#include "satlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace satlink {

namespace {

void check_round_trip(const LinkState& s) {
    if (!(s.t_rt > 0.0)) {
        throw DomainError("round-trip time must be > 0");
    }
}

double leg_cost(const LinkState& s, double p_bsm) {
    check_round_trip(s);
    if (!(s.eta > 0.0)) {
        throw NoVisibilityError("memory allocation needs eta > 0 on both legs");
    }
    return s.t_rt / (p_bsm * s.eta);
}

RealSplit split_real(double x, double y, int m_sat) {
    if (m_sat < 1) {
        throw ContractError("allocate_real: m_S must be >= 1");
    }
    RealSplit r;
    r.m_a = m_sat * x / (x + y);
    r.m_b = m_sat - r.m_a;
    return r;
}

IntSplit split_int(double x, double y, int m_sat) {
    if (m_sat < 2) {
        throw ContractError("allocate_int: m_S must be >= 2");
    }
    IntSplit r;
    r.m_a = static_cast<int>(std::ceil((m_sat - 1) * x / (x + y)));
    r.m_b = m_sat - r.m_a;
    return r;
}

void check_no_visibility(const LinkState& a, const LinkState& b) {
    if (!(a.eta > 0.0) || !(b.eta > 0.0)) {
        throw NoVisibilityError("memory allocation needs eta > 0 on both legs");
    }
}

} // namespace

void LinkParams::validate() const {
    if (!(emission_period > 0.0)) {
        throw ConfigError("link: emission period must be > 0");
    }
    if (!(acceptance_window > 0.0)) {
        throw ConfigError("link: acceptance window must be > 0");
    }
    if (!(p_bsm > 0.0 && p_bsm <= 1.0)) {
        throw ConfigError("link: p_bsm must lie in (0, 1]");
    }
    if (m_sat < 1 || m_ground < 1) {
        throw ConfigError("link: memory sizes must be >= 1");
    }
    if (m_sat > m_ground) {
        throw ConfigError("link: satellite memory must not exceed ground memory (m_S <= m_G)");
    }
    if (!(processing_delay >= 0.0)) {
        throw ConfigError("link: processing delay must be >= 0");
    }
    if (!(light_speed > 0.0)) {
        throw ConfigError("link: light speed must be > 0");
    }
}

double differential_shift(double v_r, const LinkParams& params) {
    return v_r * params.emission_period / params.light_speed;
}

double train_length_bound(double v_r, const LinkParams& params) {
    if (v_r == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return params.acceptance_window * params.light_speed / (std::abs(v_r) * params.emission_period);
}

std::int64_t max_train_length(double v_r, const LinkParams& params) {
    const double bound = train_length_bound(v_r, params);
    if (!(bound < 9.0e18)) {
        return kUnboundedTrain;
    }
    return static_cast<std::int64_t>(std::floor(bound));
}

double single_link_rate(const LinkState& state, std::int64_t train_length, const LinkParams& params) {
    check_round_trip(state);
    if (train_length < 1) {
        throw DomainError("single_link_rate: train length must be >= 1");
    }
    return params.p_bsm * state.eta * static_cast<double>(train_length) / state.t_rt;
}

double corrected_rate(const LinkState& state, const LinkParams& params) {
    check_round_trip(state);
    const double useful = std::min(static_cast<double>(params.m_sat),
                                   train_length_bound(state.v_r, params));
    return params.p_bsm * state.eta * useful / state.t_rt;
}

double round_trip_time(double distance_m, const LinkParams& params) {
    if (!(distance_m > 0.0)) {
        throw DomainError("round_trip_time: distance must be > 0");
    }
    return 2.0 * distance_m / params.light_speed + params.processing_delay;
}

LinkState state_at(const PassSample& sample, const LinkParams& params) {
    return LinkState{sample.eta, round_trip_time(sample.distance_m, params),
                     sample.radial_velocity_mps};
}

double dual_rate(const LinkState& a, const LinkState& b, double m_a, double m_b,
                 const LinkParams& params_a, const LinkParams& params_b) {
    check_round_trip(a);
    check_round_trip(b);
    if (!(m_a >= 0.0) || !(m_b >= 0.0)) {
        throw DomainError("dual_rate: memory allocations must be >= 0");
    }
    return std::min(params_a.p_bsm * m_a * a.eta / a.t_rt, params_b.p_bsm * m_b * b.eta / b.t_rt);
}

RealSplit allocate_real(const LinkState& a, const LinkState& b, int m_sat) {
    check_no_visibility(a, b);
    return split_real(leg_cost(a, 1.0), leg_cost(b, 1.0), m_sat);
}

RealSplit allocate_real(const LinkState& a, const LinkState& b, int m_sat,
                        const LinkParams& params_a, const LinkParams& params_b) {
    check_no_visibility(a, b);
    return split_real(leg_cost(a, params_a.p_bsm), leg_cost(b, params_b.p_bsm), m_sat);
}

IntSplit allocate_int(const LinkState& a, const LinkState& b, int m_sat) {
    check_no_visibility(a, b);
    return split_int(leg_cost(a, 1.0), leg_cost(b, 1.0), m_sat);
}

IntSplit allocate_int(const LinkState& a, const LinkState& b, int m_sat,
                      const LinkParams& params_a, const LinkParams& params_b) {
    check_no_visibility(a, b);
    return split_int(leg_cost(a, params_a.p_bsm), leg_cost(b, params_b.p_bsm), m_sat);
}

void check_aligned(const PassProfile& a, const PassProfile& b) {
    if (a.epoch != b.epoch) {
        throw ConfigError("profiles " + a.station + " and " + b.station + " have different epochs");
    }
    if (a.size() != b.size() || std::abs(a.sample_step - b.sample_step) > 1e-9) {
        throw ConfigError("profiles " + a.station + " and " + b.station + " have different sampling");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.samples[i].t - b.samples[i].t) > 1e-6) {
            throw ConfigError("profiles " + a.station + " and " + b.station +
                              " differ in sample time at index " + std::to_string(i));
        }
    }
}

IntSplit best_static_split(const PassProfile& a, const PassProfile& b, int m_sat,
                           const LinkParams& params_a, const LinkParams& params_b) {
    check_aligned(a, b);
    // Candidates are the per-sample integer allocations; the winner is the one whose
    // fixed-split rate integrated over the pass is largest.
    std::vector<int> candidates;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const PassSample& sa = a.samples[i];
        const PassSample& sb = b.samples[i];
        if (!sa.visible || !sb.visible || !(sa.eta > 0.0) || !(sb.eta > 0.0)) {
            continue;
        }
        candidates.push_back(
            allocate_int(state_at(sa, params_a), state_at(sb, params_b), m_sat, params_a, params_b).m_a);
    }
    if (candidates.empty()) {
        throw NoOverlapError("profiles " + a.station + " and " + b.station +
                             " have no co-visible sample");
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    IntSplit best;
    double best_pairs = -1.0;
    for (int m_a : candidates) {
        const IntSplit split{m_a, m_sat - m_a};
        const double pairs = integrated_pairs(
            dual_rate_series(a, b, m_sat, DualPolicy::fixed, params_a, params_b, split).rate, a.sample_step);
        if (pairs > best_pairs) { // ascending order keeps the smallest m_a on ties
            best_pairs = pairs;
            best = split;
        }
    }
    return best;
}

RateSeries single_rate_series(const PassProfile& profile, const LinkParams& params, bool corrected) {
    RateSeries out;
    out.t.reserve(profile.size());
    out.rate.reserve(profile.size());
    for (const PassSample& s : profile.samples) {
        out.t.push_back(s.t);
        if (!s.visible) {
            out.rate.push_back(0.0);
            continue;
        }
        const LinkState state = state_at(s, params);
        out.rate.push_back(corrected ? corrected_rate(state, params)
                                     : single_link_rate(state, params.m_sat, params));
    }
    return out;
}

IntSplit fallback_split(bool a_visible, bool b_visible, int m_sat) {
    if (a_visible && !b_visible) {
        return {m_sat, 0};
    }
    if (b_visible && !a_visible) {
        return {0, m_sat};
    }
    const int m_a = m_sat / 2;
    return {m_a, m_sat - m_a};
}

RateSeries dual_rate_series(const PassProfile& a, const PassProfile& b, int m_sat, DualPolicy policy,
                            const LinkParams& params_a, const LinkParams& params_b,
                            IntSplit fixed_split) {
    check_aligned(a, b);
    if (policy == DualPolicy::fixed && fixed_split.m_a + fixed_split.m_b != m_sat) {
        throw ConfigError("static split must sum to m_S");
    }
    RateSeries out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const PassSample& sa = a.samples[i];
        const PassSample& sb = b.samples[i];
        out.t.push_back(sa.t);
        const bool both = sa.visible && sb.visible && sa.eta > 0.0 && sb.eta > 0.0;
        if (!both) {
            const IntSplit f = policy == DualPolicy::fixed ? fixed_split
                                                           : fallback_split(sa.visible, sb.visible, m_sat);
            out.rate.push_back(0.0);
            out.m_a.push_back(f.m_a);
            out.m_b.push_back(f.m_b);
            continue;
        }
        const LinkState la = state_at(sa, params_a);
        const LinkState lb = state_at(sb, params_b);
        double m_a = 0.0, m_b = 0.0;
        switch (policy) {
        case DualPolicy::dynamic_real: {
            const RealSplit r = allocate_real(la, lb, m_sat, params_a, params_b);
            m_a = r.m_a;
            m_b = r.m_b;
            break;
        }
        case DualPolicy::dynamic_int: {
            const IntSplit r = allocate_int(la, lb, m_sat, params_a, params_b);
            m_a = r.m_a;
            m_b = r.m_b;
            break;
        }
        case DualPolicy::fixed:
            m_a = fixed_split.m_a;
            m_b = fixed_split.m_b;
            break;
        }
        out.rate.push_back(dual_rate(la, lb, m_a, m_b, params_a, params_b));
        out.m_a.push_back(m_a);
        out.m_b.push_back(m_b);
    }
    return out;
}

AllocationResult allocate_series(const PassProfile& a, const PassProfile& b, int m_sat,
                                 const LinkParams& params_a, const LinkParams& params_b) {
    const RateSeries real = dual_rate_series(a, b, m_sat, DualPolicy::dynamic_real, params_a, params_b);
    const RateSeries integer = dual_rate_series(a, b, m_sat, DualPolicy::dynamic_int, params_a, params_b);
    AllocationResult out;
    out.m_sat = m_sat;
    out.t = real.t;
    out.m_A_real = real.m_a;
    out.m_B_real = real.m_b;
    out.rate_real = real.rate;
    out.rate_int = integer.rate;
    for (std::size_t i = 0; i < integer.m_a.size(); ++i) {
        out.m_A_int.push_back(static_cast<int>(integer.m_a[i]));
        out.m_B_int.push_back(static_cast<int>(integer.m_b[i]));
    }
    out.static_split = best_static_split(a, b, m_sat, params_a, params_b);
    out.static_rate =
        dual_rate_series(a, b, m_sat, DualPolicy::fixed, params_a, params_b, out.static_split).rate;
    return out;
}

double integrated_pairs(const std::vector<double>& rate, double step) {
    return std::accumulate(rate.begin(), rate.end(), 0.0) * step;
}

double integrated_pairs(const RateSeries& series, double step) {
    return integrated_pairs(series.rate, step);
}

} // namespace satlink
