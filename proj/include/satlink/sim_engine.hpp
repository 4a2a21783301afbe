#pragma once

#include "satlink/analytics.hpp"
#include "satlink/pass_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satlink {

inline constexpr const char* kEngineVersion = "satlink-sim/1";

/// Default lifetime of a confirmed pair waiting aboard for its swap partner, s.
inline constexpr double kDefaultPairCutoff = 1.0;

enum class PolicyKind { single, fixed, dynamic_int };

struct AllocationPolicy {
    PolicyKind kind = PolicyKind::single;
    IntSplit split; ///< satellite slots per leg, PolicyKind::fixed only
};

enum class DriftModel { off, on };

struct SimConfig {
    std::vector<PassProfile> profiles; ///< one per leg; leg A first
    std::vector<LinkParams> legs;      ///< same length as profiles
    AllocationPolicy policy;
    std::uint64_t rng_seed = 1;
    double bin_width = 1.0;
    DriftModel drift = DriftModel::on;
    /// Two-leg runs only. Buffered pairs older than this are discarded before swapping,
    /// standing in for the finite memory lifetime. Unset means an unbounded buffer.
    std::optional<double> pair_cutoff_s = kDefaultPairCutoff;
    bool record_rounds = true;

    void validate() const;
    int satellite_memory() const { return legs.front().m_sat; }
    bool dual() const { return profiles.size() == 2; }
};

enum class PhotonOutcome : std::uint8_t { lost, drifted_out, bsm_failed, latched };

char outcome_code(PhotonOutcome o);
PhotonOutcome outcome_from_code(char c);

/// One emission round: a train of N photons followed by a classical round trip.
struct Round {
    int leg = 0;
    double start_time = 0.0;
    int train_length = 0;
    double v_r_at_start = 0.0;
    double eta = 0.0;
    double t_rt = 0.0;
    double confirm_time = 0.0;
    int latch_eligible = 0;
    int successes = 0;
    std::vector<PhotonOutcome> outcomes; ///< empty when the run does not record rounds

    bool operator==(const Round&) const = default;
};

/// Slot accounting for one memory. Confirmed pairs leave the pool, so
/// free_slots + in_flight == capacity always holds.
struct MemoryPool {
    int capacity = 0;
    int free_slots = 0;
    int in_flight = 0;
    std::int64_t entangled_buffer = 0;

    explicit MemoryPool(int cap = 0) : capacity(cap), free_slots(cap) {}
    bool consistent() const {
        return free_slots >= 0 && in_flight >= 0 && entangled_buffer >= 0 &&
               free_slots + in_flight == capacity;
    }
};

struct SimResult {
    std::string engine_version = kEngineVersion;
    std::uint64_t seed = 0;
    double bin_start = 0.0;
    double bin_width = 1.0;
    std::vector<std::int64_t> pairs_leg_a;
    std::vector<std::int64_t> pairs_leg_b;
    std::vector<std::int64_t> pairs_end_to_end;
    std::int64_t total_leg_a = 0;
    std::int64_t total_leg_b = 0;
    std::int64_t total_end_to_end = 0;
    std::int64_t round_count = 0;
    std::vector<Round> rounds; ///< in start order; empty unless record_rounds

    std::size_t bins() const { return pairs_leg_a.size(); }
};

/// Number of photons k in [0, N) with k |delta t_DL| <= w_i; N when drift is off.
int latch_eligible(int train_length, double v_r, const LinkParams& params, DriftModel drift);

/// Single-leg run of the SenderReceiver protocol over the profile.
SimResult run_single(const SimConfig& config);

/// Two legs sharing the satellite memory; buffered pairs are swapped as soon as both
/// legs hold one.
SimResult run_dual(const SimConfig& config);

/// Dispatches on the number of profiles.
SimResult run(const SimConfig& config);

/// Round schedule the engine would follow for `config`, without any random draws.
/// Slot recycling does not depend on outcomes, so this matches every seeded run.
std::vector<Round> plan_rounds(const SimConfig& config);

struct RoundLog {
    std::string engine_version;
    std::uint64_t seed = 0;
    std::vector<Round> rounds;
};

/// Rebuilds a result from recorded outcomes. Throws ReplayError on a version or schedule mismatch.
SimResult replay(const SimConfig& config, const RoundLog& log);

} // namespace satlink
