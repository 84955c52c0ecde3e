#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mergecast/types.hpp"

namespace mergecast {

enum class Schema { ngsim, ute };

Schema schema_from_string(const std::string& s);
std::string to_string(Schema s);

// One parsed data row, still in source units (feet for ngsim positions,
// speeds and accelerations; meters for ute).
struct RawRecord {
    Schema schema = Schema::ute;
    std::int64_t vehicle_id = 0;
    double t = 0.0;  // seconds
    double x_raw = 0.0;
    std::optional<double> y_raw;  // lateral; may be missing in ute exports
    double v_raw = 0.0;
    double a_raw = 0.0;
    int lane_id = 1;
    std::optional<std::int64_t> leader_id;
    std::optional<std::int64_t> follower_id;
    std::optional<double> headway_raw;
    int lane_change_flag = 0;
};

struct HarmonizationReport {
    std::size_t records_in = 0;
    std::size_t records_out = 0;
    std::size_t interpolated_gaps = 0;    // maximal missing-lateral runs filled
    std::size_t dropped_trajectories = 0;
    std::optional<double> x_min_applied;  // meters; set when the offset ran
};

// Strict parser for the canonical comma-separated exports. The header must
// match the schema exactly; any unparseable row is an error naming the line.
std::vector<RawRecord> parse_csv(const std::string& path, Schema schema);

// Feet -> meters on positions, speeds and accelerations for ngsim records;
// ute records pass through unchanged.
inline constexpr double kFeetToMeters = 0.3048;
std::vector<RawRecord> convert_units(std::vector<RawRecord> records);

// Snaps each record to the 10 Hz grid: t_grid = round(t*10)/10, frame =
// round(t_grid*10). When several raw records land on one grid point the one
// nearest its raw timestamp is kept, earlier timestamp winning ties. Records
// must belong to a single vehicle and be sorted by t.
std::vector<RawRecord> resample_10hz(std::vector<RawRecord> records);

// Dataset-wide longitudinal offset: when min x < 0, subtracts it from every
// record so the corrected minimum is exactly 0; otherwise a no-op.
void offset_correct(std::vector<RawRecord>& records, std::optional<double>& x_min_applied);

// Fills interior missing-lateral gaps of <= 3 consecutive frames by linear
// interpolation in frame index. Longer gaps, or gaps touching a trajectory
// boundary, reject the whole trajectory (returns nullopt). `gaps_filled`
// counts the maximal runs interpolated.
std::optional<std::vector<RawRecord>> interpolate_lateral(std::vector<RawRecord> traj,
                                                          std::size_t& gaps_filled);

// Full pipeline: parse -> convert_units -> resample -> offset_correct ->
// interpolate_lateral, then assembly into the canonical 10 Hz dataset with
// lane_norm = lane_id / lane_max.
std::pair<Dataset, HarmonizationReport> harmonize(const std::string& path, Schema schema,
                                                  SourceTag tag, int lane_max,
                                                  std::vector<int> merge_lane_ids);

// In-memory variant used by tests and by harmonize() itself.
std::pair<Dataset, HarmonizationReport> harmonize_records(std::vector<RawRecord> records,
                                                          SourceTag tag, int lane_max,
                                                          std::vector<int> merge_lane_ids);

// Writes a harmonized dataset back out in the canonical ute schema (already
// SI / 10 Hz, so a second harmonize pass is the identity).
void write_harmonized_csv(const Dataset& dataset, const std::string& path);

}  // namespace mergecast
