#include "satlink/sim_engine.hpp"

#include "satlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <random>

namespace satlink {

namespace {

// Draws one uniform in [0, 1) from the top 53 bits of a 64-bit Mersenne Twister output.
// std::mt19937_64's sequence is fixed by the standard; the conversion is spelled out here
// because std::uniform_real_distribution is implementation-defined.
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

class OutcomeSource {
public:
    virtual ~OutcomeSource() = default;
    /// Fills the outcomes (and success count) of a freshly scheduled round.
    virtual void fill(Round& round, const LinkParams& params, bool record) = 0;
};

class RandomOutcomes final : public OutcomeSource {
public:
    explicit RandomOutcomes(std::uint64_t seed) : gen_(seed) {}

    void fill(Round& round, const LinkParams& params, bool record) override {
        int successes = 0;
        if (record) {
            round.outcomes.resize(static_cast<std::size_t>(round.train_length));
        }
        // Every photon consumes exactly two draws, transport then latch.
        for (int k = 0; k < round.train_length; ++k) {
            const double transport = uniform01(gen_);
            const double latch = uniform01(gen_);
            PhotonOutcome o;
            if (k >= round.latch_eligible) {
                o = PhotonOutcome::drifted_out;
            } else if (!(transport < round.eta)) {
                o = PhotonOutcome::lost;
            } else if (!(latch < params.p_bsm)) {
                o = PhotonOutcome::bsm_failed;
            } else {
                o = PhotonOutcome::latched;
                ++successes;
            }
            if (record) {
                round.outcomes[static_cast<std::size_t>(k)] = o;
            }
        }
        round.successes = successes;
    }

private:
    std::mt19937_64 gen_;
};

class NoOutcomes final : public OutcomeSource {
public:
    void fill(Round& round, const LinkParams&, bool) override { round.successes = 0; }
};

class LoggedOutcomes final : public OutcomeSource {
public:
    explicit LoggedOutcomes(const std::vector<Round>& log) : log_(log) {}

    void fill(Round& round, const LinkParams&, bool record) override {
        if (next_ >= log_.size()) {
            throw ReplayError("round log ends before the schedule (round " + std::to_string(next_ + 1) + ")");
        }
        const Round& logged = log_[next_];
        const std::string where = "round " + std::to_string(next_ + 1);
        ++next_;
        if (logged.leg != round.leg || logged.start_time != round.start_time ||
            logged.train_length != round.train_length || logged.confirm_time != round.confirm_time) {
            throw ReplayError(where + " does not match the schedule implied by the configuration");
        }
        if (logged.outcomes.size() != static_cast<std::size_t>(round.train_length)) {
            throw ReplayError(where + " has " + std::to_string(logged.outcomes.size()) +
                              " outcomes for a train of " + std::to_string(round.train_length));
        }
        int successes = 0;
        for (std::size_t k = 0; k < logged.outcomes.size(); ++k) {
            const bool drifted = static_cast<int>(k) >= round.latch_eligible;
            if (drifted != (logged.outcomes[k] == PhotonOutcome::drifted_out)) {
                throw ReplayError(where + " photon " + std::to_string(k) + " contradicts the drift model");
            }
            successes += logged.outcomes[k] == PhotonOutcome::latched ? 1 : 0;
        }
        round.successes = successes;
        if (record) {
            round.outcomes = logged.outcomes;
        }
    }

    bool exhausted() const { return next_ == log_.size(); }

private:
    const std::vector<Round>& log_;
    std::size_t next_ = 0;
};

enum class EventType { round_start, confirm };

struct Event {
    double time;
    int leg;
    std::uint64_t seq;
    EventType type;
    std::uint64_t token;
};

struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) {
            return a.time > b.time;
        }
        if (a.leg != b.leg) {
            return a.leg > b.leg;
        }
        return a.seq > b.seq;
    }
};

enum class LegPhase { waiting, in_flight, done };

struct Leg {
    const PassProfile* profile = nullptr;
    const LinkParams* params = nullptr;
    MemoryPool ground;
    LegPhase phase = LegPhase::waiting;
    bool blocked = false;
    std::uint64_t token = 0;
    Round current;
    std::deque<std::pair<double, std::int64_t>> buffer; // (confirm time, pairs)
    std::int64_t buffered = 0;
};

class Engine {
public:
    Engine(const SimConfig& config, OutcomeSource& source, bool record)
        : config_(config), source_(source), record_(record),
          satellite_(config.satellite_memory()) {
        config_.validate();
        const std::size_t n = config.profiles.size();
        legs_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            legs_[i].profile = &config.profiles[i];
            legs_[i].params = &config.legs[i];
            legs_[i].ground = MemoryPool(config.legs[i].m_ground);
        }
        const PassProfile& ref = config.profiles.front();
        start_ = ref.start_time();
        horizon_ = ref.horizon();
        const auto bins = static_cast<std::size_t>(
            std::max(1.0, std::ceil((horizon_ - start_) / config.bin_width - 1e-9)));
        result_.seed = config.rng_seed;
        result_.bin_start = start_;
        result_.bin_width = config.bin_width;
        result_.pairs_leg_a.assign(bins, 0);
        result_.pairs_leg_b.assign(bins, 0);
        result_.pairs_end_to_end.assign(bins, 0);
        if (config.policy.kind == PolicyKind::dynamic_int) {
            precompute_dynamic_quotas();
        }
    }

    SimResult run() {
        for (std::size_t i = 0; i < legs_.size(); ++i) {
            schedule_start(static_cast<int>(i), start_);
        }
        while (!queue_.empty()) {
            const Event ev = queue_.top();
            queue_.pop();
            Leg& leg = legs_[static_cast<std::size_t>(ev.leg)];
            if (ev.type == EventType::confirm) {
                on_confirm(ev.leg, ev.time);
            } else if (ev.token == leg.token && leg.phase == LegPhase::waiting) {
                on_round_start(ev.leg, ev.time);
            }
            check_invariants();
        }
        result_.total_leg_a = sum(result_.pairs_leg_a);
        result_.total_leg_b = sum(result_.pairs_leg_b);
        result_.total_end_to_end = sum(result_.pairs_end_to_end);
        return std::move(result_);
    }

private:
    static std::int64_t sum(const std::vector<std::int64_t>& v) {
        std::int64_t s = 0;
        for (auto x : v) {
            s += x;
        }
        return s;
    }

    void push(double time, int leg, EventType type, std::uint64_t token) {
        queue_.push(Event{time, leg, seq_++, type, token});
    }

    void schedule_start(int leg, double time) {
        Leg& l = legs_[static_cast<std::size_t>(leg)];
        push(time, leg, EventType::round_start, ++l.token);
    }

    void precompute_dynamic_quotas() {
        const PassProfile& a = config_.profiles[0];
        const PassProfile& b = config_.profiles[1];
        const int m_sat = config_.satellite_memory();
        quotas_.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const PassSample& sa = a.samples[i];
            const PassSample& sb = b.samples[i];
            if (sa.visible && sb.visible && sa.eta > 0.0 && sb.eta > 0.0) {
                quotas_.push_back(allocate_int(state_at(sa, config_.legs[0]), state_at(sb, config_.legs[1]),
                                               m_sat, config_.legs[0], config_.legs[1]));
            } else {
                quotas_.push_back(fallback_split(sa.visible, sb.visible, m_sat));
            }
        }
    }

    int quota(int leg, std::size_t sample) const {
        switch (config_.policy.kind) {
        case PolicyKind::single:
            return config_.satellite_memory();
        case PolicyKind::fixed:
            return leg == 0 ? config_.policy.split.m_a : config_.policy.split.m_b;
        case PolicyKind::dynamic_int:
            return leg == 0 ? quotas_[sample].m_a : quotas_[sample].m_b;
        }
        return 0;
    }

    // First visible sample strictly after `index`, if any.
    std::optional<std::size_t> next_visible(const PassProfile& p, std::size_t index) const {
        for (std::size_t j = index + 1; j < p.size(); ++j) {
            if (p.samples[j].visible) {
                return j;
            }
        }
        return std::nullopt;
    }

    void wait_for_visibility(int leg, std::size_t after) {
        Leg& l = legs_[static_cast<std::size_t>(leg)];
        if (auto j = next_visible(*l.profile, after)) {
            schedule_start(leg, l.profile->samples[*j].t);
        } else {
            l.phase = LegPhase::done;
        }
    }

    void on_round_start(int leg, double now) {
        Leg& l = legs_[static_cast<std::size_t>(leg)];
        const PassProfile& p = *l.profile;
        const LinkParams& params = *l.params;
        l.blocked = false;
        if (!(now < horizon_)) {
            l.phase = LegPhase::done;
            return;
        }
        const std::size_t i = p.index_at(now);
        const PassSample& s = p.samples[i];
        if (!s.visible) {
            wait_for_visibility(leg, i);
            return;
        }
        const int n = std::min({quota(leg, i), satellite_.free_slots, l.ground.free_slots});
        if (n <= 0) {
            // Slots held by the other leg; retry on its confirmation or at the next sample.
            l.blocked = true;
            if (i + 1 < p.size()) {
                schedule_start(leg, p.samples[i + 1].t);
            }
            return;
        }
        const double last_emission = now + (n - 1) * params.emission_period;
        const std::size_t j = p.index_at(last_emission);
        if (!p.samples[j].visible) {
            wait_for_visibility(leg, j);
            return;
        }
        const double t_rt = round_trip_time(s.distance_m, params);
        const double confirm = last_emission + t_rt;
        if (!(confirm < horizon_)) {
            l.phase = LegPhase::done;
            return;
        }

        Round r;
        r.leg = leg;
        r.start_time = now;
        r.train_length = n;
        r.v_r_at_start = s.radial_velocity_mps;
        r.eta = s.eta;
        r.t_rt = t_rt;
        r.confirm_time = confirm;
        r.latch_eligible = latch_eligible(n, s.radial_velocity_mps, params, config_.drift);
        source_.fill(r, params, record_);

        satellite_.free_slots -= n;
        satellite_.in_flight += n;
        l.ground.free_slots -= n;
        l.ground.in_flight += n;
        l.phase = LegPhase::in_flight;
        if (record_) {
            result_.rounds.push_back(r); // start order, the order outcomes are drawn in
        }
        l.current = std::move(r);
        push(confirm, leg, EventType::confirm, 0);
    }

    std::size_t bin_of(double t) const {
        const auto b = static_cast<std::size_t>(std::max(0.0, std::floor((t - start_) / config_.bin_width)));
        return std::min(b, result_.pairs_leg_a.size() - 1);
    }

    void on_confirm(int leg, double now) {
        Leg& l = legs_[static_cast<std::size_t>(leg)];
        Round& r = l.current;
        satellite_.free_slots += r.train_length;
        satellite_.in_flight -= r.train_length;
        l.ground.free_slots += r.train_length;
        l.ground.in_flight -= r.train_length;

        const std::size_t bin = bin_of(now);
        (leg == 0 ? result_.pairs_leg_a : result_.pairs_leg_b)[bin] += r.successes;
        if (config_.dual() && r.successes > 0) {
            l.buffer.emplace_back(now, r.successes);
            l.buffered += r.successes;
        }
        ++result_.round_count;
        l.current = Round{};
        l.phase = LegPhase::waiting;

        if (config_.dual()) {
            swap(now, bin);
        }
        schedule_start(leg, now);
        for (std::size_t other = 0; other < legs_.size(); ++other) {
            if (static_cast<int>(other) != leg && legs_[other].blocked &&
                legs_[other].phase == LegPhase::waiting) {
                schedule_start(static_cast<int>(other), now);
            }
        }
    }

    static void consume(Leg& l, std::int64_t count) {
        while (count > 0) {
            auto& front = l.buffer.front();
            const std::int64_t take = std::min(count, front.second);
            front.second -= take;
            count -= take;
            l.buffered -= take;
            if (front.second == 0) {
                l.buffer.pop_front();
            }
        }
    }

    static void expire(Leg& l, double now, double cutoff) {
        while (!l.buffer.empty() && now - l.buffer.front().first > cutoff) {
            l.buffered -= l.buffer.front().second;
            l.buffer.pop_front();
        }
    }

    void swap(double now, std::size_t bin) {
        Leg& a = legs_[0];
        Leg& b = legs_[1];
        if (config_.pair_cutoff_s) {
            expire(a, now, *config_.pair_cutoff_s);
            expire(b, now, *config_.pair_cutoff_s);
        }
        const std::int64_t swaps = std::min(a.buffered, b.buffered);
        if (swaps > 0) {
            consume(a, swaps);
            consume(b, swaps);
            result_.pairs_end_to_end[bin] += swaps;
        }
        satellite_.entangled_buffer = a.buffered + b.buffered;
    }

    void check_invariants() const {
        bool ok = satellite_.consistent() && satellite_.capacity == config_.satellite_memory();
        for (const Leg& l : legs_) {
            ok = ok && l.ground.consistent();
        }
        if (!ok) {
            throw std::logic_error("slot conservation violated");
        }
    }

    const SimConfig& config_;
    OutcomeSource& source_;
    bool record_;
    MemoryPool satellite_;
    std::vector<Leg> legs_;
    std::vector<IntSplit> quotas_;
    std::priority_queue<Event, std::vector<Event>, EventLater> queue_;
    std::uint64_t seq_ = 0;
    double start_ = 0.0;
    double horizon_ = 0.0;
    SimResult result_;
};

} // namespace

char outcome_code(PhotonOutcome o) {
    switch (o) {
    case PhotonOutcome::lost:
        return 'L';
    case PhotonOutcome::drifted_out:
        return 'D';
    case PhotonOutcome::bsm_failed:
        return 'F';
    case PhotonOutcome::latched:
        return 'S';
    }
    return '?';
}

PhotonOutcome outcome_from_code(char c) {
    switch (c) {
    case 'L':
        return PhotonOutcome::lost;
    case 'D':
        return PhotonOutcome::drifted_out;
    case 'F':
        return PhotonOutcome::bsm_failed;
    case 'S':
        return PhotonOutcome::latched;
    default:
        throw ReplayError(std::string("unknown photon outcome code '") + c + "'");
    }
}

void SimConfig::validate() const {
    if (profiles.empty() || profiles.size() > 2) {
        throw ConfigError("simulation needs one or two profiles");
    }
    if (legs.size() != profiles.size()) {
        throw ConfigError("simulation needs one set of link parameters per profile");
    }
    for (const PassProfile& p : profiles) {
        p.validate();
    }
    for (const LinkParams& l : legs) {
        l.validate();
    }
    if (!(bin_width > 0.0)) {
        throw ConfigError("bin width must be > 0");
    }
    if (pair_cutoff_s && !(*pair_cutoff_s > 0.0)) {
        throw ConfigError("pair cutoff must be > 0");
    }
    if (profiles.size() == 1) {
        if (policy.kind != PolicyKind::single) {
            throw ConfigError("a single-leg run requires the 'single' allocation policy");
        }
        return;
    }
    if (policy.kind == PolicyKind::single) {
        throw ConfigError("a two-leg run requires the 'static' or 'dynamic' allocation policy");
    }
    if (legs[0].m_sat != legs[1].m_sat) {
        throw ConfigError("both legs must describe the same satellite memory size");
    }
    check_aligned(profiles[0], profiles[1]);
    if (policy.kind == PolicyKind::fixed) {
        const IntSplit s = policy.split;
        if (s.m_a < 0 || s.m_b < 0 || s.m_a + s.m_b != legs[0].m_sat) {
            throw ConfigError("static split must be non-negative and sum to m_S");
        }
        if (s.m_a > legs[0].m_ground || s.m_b > legs[1].m_ground) {
            throw ConfigError("static split exceeds a ground station's memory");
        }
    }
}

int latch_eligible(int train_length, double v_r, const LinkParams& params, DriftModel drift) {
    if (drift == DriftModel::off || v_r == 0.0 || train_length <= 0) {
        return std::max(train_length, 0);
    }
    const double shift = std::abs(differential_shift(v_r, params));
    const double window = params.acceptance_window;
    const double guess = std::floor(window / shift);
    if (!(guess < static_cast<double>(train_length))) {
        return train_length;
    }
    // Largest k with k * shift <= window, checked with the same comparison the
    // per-photon rule uses.
    auto last = static_cast<int>(guess);
    while (last > 0 && last * shift > window) {
        --last;
    }
    while ((last + 1) * shift <= window) {
        ++last;
    }
    return std::min(train_length, last + 1);
}

SimResult run_single(const SimConfig& config) {
    if (config.profiles.size() != 1) {
        throw ConfigError("run_single requires exactly one profile");
    }
    RandomOutcomes source(config.rng_seed);
    return Engine(config, source, config.record_rounds).run();
}

SimResult run_dual(const SimConfig& config) {
    if (config.profiles.size() != 2) {
        throw ConfigError("run_dual requires two profiles");
    }
    RandomOutcomes source(config.rng_seed);
    return Engine(config, source, config.record_rounds).run();
}

SimResult run(const SimConfig& config) {
    return config.dual() ? run_dual(config) : run_single(config);
}

std::vector<Round> plan_rounds(const SimConfig& config) {
    NoOutcomes source;
    return Engine(config, source, true).run().rounds;
}

SimResult replay(const SimConfig& config, const RoundLog& log) {
    if (log.engine_version != kEngineVersion) {
        throw ReplayError("round log was produced by '" + log.engine_version + "', this engine is '" +
                          kEngineVersion + "'");
    }
    LoggedOutcomes source(log.rounds);
    SimResult result = Engine(config, source, config.record_rounds).run();
    if (!source.exhausted()) {
        throw ReplayError("round log holds more rounds than the schedule");
    }
    result.seed = log.seed;
    return result;
}

} // namespace satlink
