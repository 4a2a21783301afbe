#pragma once

#include "satlink/analytics.hpp"
#include "satlink/sim_engine.hpp"
#include "satlink/validation.hpp"

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace satlink {

// Rate series: `t_s,rate_pairs_per_s` for one leg, `t_s,rate_pairs_per_s,m_A,m_B` for two.
std::string rate_series_csv(const RateSeries& series);

/// Field names match AllocationResult members.
nlohmann::json allocation_json(const AllocationResult& result);

/// `bin_start_s,pairs_legA,pairs_legB,pairs_end_to_end`
std::string sim_result_csv(const SimResult& result);
std::vector<std::int64_t> read_sim_counts(std::istream& in, Series series);

nlohmann::json link_params_json(const LinkParams& params);
nlohmann::json sim_config_json(const SimConfig& config);
nlohmann::json sim_summary_json(const SimResult& result, const SimConfig& config);

/// Newline-delimited JSON: a header record then one record per round.
void write_round_log(const SimResult& result, std::ostream& out);
RoundLog read_round_log(std::istream& in);

/// `bin_start_s,mu,sigma,count,z`
std::string validation_csv(const ValidationReport& report);
nlohmann::json validation_json(const ValidationReport& report);

} // namespace satlink
