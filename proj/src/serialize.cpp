#include "satlink/serialize.hpp"

#include "satlink/errors.hpp"
#include "satlink/format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace satlink {

using nlohmann::json;

namespace {

const char* policy_name(PolicyKind k) {
    switch (k) {
    case PolicyKind::single:
        return "single";
    case PolicyKind::fixed:
        return "static";
    case PolicyKind::dynamic_int:
        return "dynamic";
    }
    return "?";
}

std::int64_t parse_int(std::string_view text, std::size_t row, const char* column) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("simulation CSV row " + std::to_string(row) + ", column " + column +
                             ": not an integer",
                         row, column);
    }
    return v;
}

} // namespace

std::string rate_series_csv(const RateSeries& series) {
    std::ostringstream out;
    const bool dual = !series.m_a.empty();
    out << (dual ? "t_s,rate_pairs_per_s,m_A,m_B\n" : "t_s,rate_pairs_per_s\n");
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        out << format_double(series.t[i]) << ',' << format_double(series.rate[i]);
        if (dual) {
            out << ',' << format_double(series.m_a[i]) << ',' << format_double(series.m_b[i]);
        }
        out << '\n';
    }
    return out.str();
}

json allocation_json(const AllocationResult& r) {
    json j;
    j["m_S"] = r.m_sat;
    j["t"] = r.t;
    j["m_A_real"] = r.m_A_real;
    j["m_B_real"] = r.m_B_real;
    j["m_A_int"] = r.m_A_int;
    j["m_B_int"] = r.m_B_int;
    j["rate_real"] = r.rate_real;
    j["rate_int"] = r.rate_int;
    j["static_split"] = {r.static_split.m_a, r.static_split.m_b};
    j["static_rate"] = r.static_rate;
    return j;
}

std::string sim_result_csv(const SimResult& r) {
    std::ostringstream out;
    out << "bin_start_s,pairs_legA,pairs_legB,pairs_end_to_end\n";
    for (std::size_t i = 0; i < r.bins(); ++i) {
        out << format_double(r.bin_start + static_cast<double>(i) * r.bin_width) << ','
            << r.pairs_leg_a[i] << ',' << r.pairs_leg_b[i] << ',' << r.pairs_end_to_end[i] << '\n';
    }
    return out.str();
}

std::vector<std::int64_t> read_sim_counts(std::istream& in, Series series) {
    std::string line;
    if (!std::getline(in, line) || line != "bin_start_s,pairs_legA,pairs_legB,pairs_end_to_end") {
        throw ParseError("simulation CSV: unexpected header", 0, "");
    }
    std::vector<std::int64_t> counts;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        ++row;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
            fields.push_back(rest.substr(0, pos));
        }
        fields.push_back(rest);
        if (fields.size() != 4) {
            throw ParseError("simulation CSV row " + std::to_string(row) + ": expected 4 fields", row, "");
        }
        counts.push_back(series == Series::leg_a ? parse_int(fields[1], row, "pairs_legA")
                                                 : parse_int(fields[2], row, "pairs_legB"));
    }
    return counts;
}

json link_params_json(const LinkParams& p) {
    return json{{"emission_period_s", p.emission_period},
                {"acceptance_window_s", p.acceptance_window},
                {"p_bsm", p.p_bsm},
                {"m_sat", p.m_sat},
                {"m_ground", p.m_ground},
                {"processing_delay_s", p.processing_delay},
                {"light_speed_mps", p.light_speed}};
}

json sim_config_json(const SimConfig& c) {
    json j;
    j["policy"] = policy_name(c.policy.kind);
    if (c.policy.kind == PolicyKind::fixed) {
        j["static_split"] = {c.policy.split.m_a, c.policy.split.m_b};
    }
    j["rng_seed"] = c.rng_seed;
    j["bin_width_s"] = c.bin_width;
    j["drift"] = c.drift == DriftModel::on ? "on" : "off";
    j["pair_cutoff_s"] = c.pair_cutoff_s ? json(*c.pair_cutoff_s) : json(nullptr);
    j["legs"] = json::array();
    for (std::size_t i = 0; i < c.profiles.size(); ++i) {
        json leg = link_params_json(c.legs[i]);
        leg["station"] = c.profiles[i].station;
        leg["epoch"] = c.profiles[i].epoch;
        leg["sample_step_s"] = c.profiles[i].sample_step;
        j["legs"].push_back(leg);
    }
    return j;
}

json sim_summary_json(const SimResult& r, const SimConfig& c) {
    return json{{"engine_version", r.engine_version},
                {"seed", r.seed},
                {"bins", r.bins()},
                {"bin_width_s", r.bin_width},
                {"rounds", r.round_count},
                {"total_pairs_legA", r.total_leg_a},
                {"total_pairs_legB", r.total_leg_b},
                {"total_pairs_end_to_end", r.total_end_to_end},
                {"config", sim_config_json(c)}};
}

void write_round_log(const SimResult& r, std::ostream& out) {
    out << json{{"engine_version", r.engine_version}, {"seed", r.seed}}.dump() << '\n';
    std::string codes;
    for (const Round& round : r.rounds) {
        codes.clear();
        for (PhotonOutcome o : round.outcomes) {
            codes.push_back(outcome_code(o));
        }
        // Doubles are written by hand so that they round-trip bit-exactly.
        out << "{\"leg\":" << round.leg << ",\"start\":" << format_double(round.start_time)
            << ",\"n\":" << round.train_length << ",\"v_r\":" << format_double(round.v_r_at_start)
            << ",\"eta\":" << format_double(round.eta) << ",\"t_rt\":" << format_double(round.t_rt)
            << ",\"eligible\":" << round.latch_eligible << ",\"confirm\":" << format_double(round.confirm_time)
            << ",\"outcomes\":\"" << codes << "\"}\n";
    }
}

RoundLog read_round_log(std::istream& in) {
    RoundLog log;
    std::string line;
    if (!std::getline(in, line)) {
        throw ReplayError("round log is empty");
    }
    try {
        const json header = json::parse(line);
        log.engine_version = header.at("engine_version").get<std::string>();
        log.seed = header.at("seed").get<std::uint64_t>();
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const json rec = json::parse(line);
            Round r;
            r.leg = rec.at("leg").get<int>();
            r.start_time = rec.at("start").get<double>();
            r.train_length = rec.at("n").get<int>();
            r.v_r_at_start = rec.at("v_r").get<double>();
            r.eta = rec.at("eta").get<double>();
            r.t_rt = rec.at("t_rt").get<double>();
            r.latch_eligible = rec.at("eligible").get<int>();
            r.confirm_time = rec.at("confirm").get<double>();
            for (char c : rec.at("outcomes").get<std::string>()) {
                r.outcomes.push_back(outcome_from_code(c));
                r.successes += r.outcomes.back() == PhotonOutcome::latched ? 1 : 0;
            }
            log.rounds.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ReplayError(std::string("malformed round log: ") + e.what());
    }
    return log;
}

std::string validation_csv(const ValidationReport& report) {
    std::ostringstream out;
    out << "bin_start_s,mu,sigma,count,z\n";
    for (const BinCheck& b : report.bins) {
        out << format_double(b.bin_start) << ',' << format_double(b.mu) << ',' << format_double(b.sigma)
            << ',' << b.count << ',' << format_double(b.z) << '\n';
    }
    return out.str();
}

json validation_json(const ValidationReport& r) {
    return json{{"bins_evaluated", r.bins_evaluated},
                {"fraction_within_2sigma", r.fraction_within_2sigma},
                {"total_mu", r.total_mu},
                {"total_sigma", r.total_sigma},
                {"total_count", r.total_count},
                {"z_total", r.z_total},
                {"thresholds",
                 {{"bin_z", kBinZLimit}, {"fraction", kRequiredFraction}, {"total_z", kTotalZLimit}}},
                {"verdict", r.verdict}};
}

} // namespace satlink
